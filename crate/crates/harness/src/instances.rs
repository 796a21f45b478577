//! Seeded instance generators for the lemma-level runners, plus literal
//! cycle and path checks that do not go through the library's validators.

use pancyclic::independence::independence_number;
use pancyclic::io::to_graph6;
use pancyclic::pipelines::p5free::find_p5_within;
use pancyclic::{ChordedPath, ConditionProfile, Graph, OrientedCycle, Path, Result};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::generate::{gnp, random_condition_graph, Target};

/// Distinct vertices, consecutive ones (cyclically) adjacent, at least 3.
pub fn is_cycle_in(g: &Graph, vs: &[usize]) -> bool {
    vs.len() >= 3 && all_distinct(g, vs) && (0..vs.len()).all(|i| g.has_edge(vs[i], vs[(i + 1) % vs.len()]))
}

/// Distinct vertices, consecutive ones adjacent, at least 1.
pub fn is_path_in(g: &Graph, vs: &[usize]) -> bool {
    !vs.is_empty() && all_distinct(g, vs) && vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

fn all_distinct(g: &Graph, vs: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    vs.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
}

/// The cycle as a literal cycle of `g` with exactly `ell` vertices.
pub fn cycle_of_length(g: &Graph, c: &OrientedCycle, ell: usize) -> std::result::Result<(), String> {
    if c.len() != ell {
        return Err(format!("cycle has length {}, want {ell} in {}", c.len(), to_graph6(g)));
    }
    if !is_cycle_in(g, c.vertices()) {
        return Err(format!("{:?} is not a cycle of {}", c.vertices(), to_graph6(g)));
    }
    Ok(())
}

/// Literal chorded-path postconditions: chords are edges between path
/// vertices 2 or 3 apart, closed spans meet in at most an endpoint.
pub fn check_chorded(g: &Graph, cp: &ChordedPath) -> std::result::Result<(), String> {
    let vs = cp.path.vertices();
    if !is_path_in(g, vs) {
        return Err(format!("{vs:?} is not a path"));
    }
    let mut spans = Vec::new();
    for ch in &cp.chords {
        let pa = vs.iter().position(|&v| v == ch.a).ok_or("chord end off the path")?;
        let pb = vs.iter().position(|&v| v == ch.b).ok_or("chord end off the path")?;
        let (lo, hi) = (pa.min(pb), pa.max(pb));
        if !(2..=3).contains(&(hi - lo)) || hi - lo != ch.span || !g.has_edge(ch.a, ch.b) {
            return Err(format!("bad chord {ch:?} on {vs:?}"));
        }
        spans.push((lo, hi));
    }
    spans.sort_unstable();
    if spans.windows(2).any(|w| w[1].0 < w[0].1) {
        return Err(format!("intersecting chords {spans:?}"));
    }
    Ok(())
}

/// Cliques of the given orders on a shuffled vertex set plus `extra`
/// uniform random edges.
pub fn clique_union(sizes: &[usize], extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    let mut base = 0;
    for &s in sizes {
        for i in 0..s {
            for j in i + 1..s {
                edges.push((perm[base + i], perm[base + j]));
            }
        }
        base += s;
    }
    for _ in 0..extra {
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if x != y {
            edges.push((x, y));
        }
    }
    Graph::from_edges(n, edges).expect("pairs in range")
}

/// A graph on at most 60 vertices with `δ > α >= 6`, from six cliques of
/// order 8 to 10 and sparse random edges.
pub fn chorded_instance(rng: &mut ChaCha8Rng) -> Result<(Graph, usize)> {
    loop {
        let sizes: Vec<usize> = (0..6).map(|_| rng.gen_range(8..=10)).collect();
        let n: usize = sizes.iter().sum();
        let g = clique_union(&sizes, rng.gen_range(0..=n / 4), rng);
        let alpha = independence_number(&g)?;
        if alpha >= 6 && g.min_degree() > alpha {
            return Ok((g, alpha));
        }
    }
}

/// Draws per instance before a generator gives up.
const INSTANCE_ATTEMPTS: usize = 64;

/// A graph on `n_min..=n_max` vertices with verified `δ > α >= alpha_min`:
/// either a dense random graph or a union of cliques with random extra edges.
pub fn min_degree_instance(
    rng: &mut ChaCha8Rng,
    n_min: usize,
    n_max: usize,
    alpha_min: usize,
) -> Result<Option<(Graph, ConditionProfile)>> {
    for _ in 0..INSTANCE_ATTEMPTS {
        let out = condition_instance(rng, n_min, n_max, Target::MinDegreeExceedsAlpha)?;
        if let Some(pair) = out.filter(|(_, prof)| prof.alpha >= alpha_min) {
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

/// A graph on `n_min..=n_max` vertices with verified `κ > α`.
pub fn kappa_instance(rng: &mut ChaCha8Rng, n_min: usize, n_max: usize) -> Result<Option<(Graph, ConditionProfile)>> {
    for _ in 0..INSTANCE_ATTEMPTS {
        if let Some(pair) = condition_instance(rng, n_min, n_max, Target::KappaExceedsAlpha)? {
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

fn condition_instance(
    rng: &mut ChaCha8Rng,
    n_min: usize,
    n_max: usize,
    target: Target,
) -> Result<Option<(Graph, ConditionProfile)>> {
    if rng.gen_bool(0.5) {
        let n = rng.gen_range(n_min..=n_max);
        return match random_condition_graph(n, target, rng.gen()) {
            Ok(pair) => Ok(Some(pair)),
            Err(pancyclic::Error::BudgetExceeded { .. }) => Ok(None),
            Err(e) => Err(e),
        };
    }
    let m = rng.gen_range(2..=8usize);
    let mut sizes: Vec<usize> = (0..m).map(|_| rng.gen_range(m + 2..=m + 4)).collect();
    while sizes.iter().sum::<usize>() > n_max && sizes.len() > 1 {
        sizes.pop();
    }
    let n: usize = sizes.iter().sum();
    if n < n_min || n > n_max {
        return Ok(None);
    }
    let g = clique_union(&sizes, rng.gen_range(n / 2..=2 * n), rng);
    let prof = ConditionProfile::compute(&g)?;
    Ok(target.holds(&prof).then_some((g, prof)))
}

/// A connected graph on `1..=max_n` vertices.
pub fn small_connected(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(1..=max_n);
        let g = gnp(n, rng.gen_range(0.2..0.8), rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// A connected P5-free graph on `1..=max_n` vertices.
pub fn small_p5free(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let g = small_connected(rng, max_n);
        if find_p5_within(&g, &g.all_vertices()).is_none() {
            return g;
        }
    }
}

/// A clique on `m` vertices, each block joined to the clique with edge
/// probability `join`. Blocks are placed after the clique in order.
pub fn clique_with_blocks(m: usize, blocks: &[Graph], join: f64, rng: &mut ChaCha8Rng) -> Graph {
    let n = m + blocks.iter().map(Graph::n).sum::<usize>();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            edges.push((i, j));
        }
        for x in m..n {
            if rng.gen_bool(join) {
                edges.push((i, x));
            }
        }
    }
    let mut base = m;
    for b in blocks {
        edges.extend(b.edges().map(|(x, y)| (x + base, y + base)));
        base += b.n();
    }
    Graph::from_edges(n, edges).expect("pairs in range")
}

/// A random Hamilton cycle of the clique `0..m`.
pub fn shuffled_cycle(g: &Graph, m: usize, rng: &mut ChaCha8Rng) -> OrientedCycle {
    let mut vs: Vec<usize> = (0..m).collect();
    vs.shuffle(rng);
    OrientedCycle::new(g, vs).expect("clique cycle")
}

/// A path `0..m` with chords on disjoint stretches, plus its graph.
pub fn random_chorded(rng: &mut ChaCha8Rng) -> (Graph, ChordedPath) {
    let mut pairs = Vec::new();
    let mut pos = 0usize;
    for _ in 0..rng.gen_range(1..12) {
        match rng.gen_range(0u8..4) {
            0 => pos += 1,
            s @ (2 | 3) => {
                pairs.push((pos, pos + s as usize));
                pos += s as usize;
            }
            _ => pos += 2,
        }
    }
    let m = pos + 1;
    let edges = (0..m - 1).map(|i| (i, i + 1)).chain(pairs.iter().copied());
    let g = Graph::from_edges(m.max(2), edges).expect("pairs in range");
    let cp = ChordedPath::new(&g, Path::from_vertices((0..m).collect()), &pairs).expect("disjoint chords");
    (g, cp)
}

/// A rotation configuration: a cycle on `m` shuffled vertices, a bridge on
/// `b` further vertices from `v` to `u`, the predecessor edge the rotation
/// needs, and random extra edges.
#[derive(Debug, Clone)]
pub struct RotationSetup {
    pub g: Graph,
    pub cycle: OrientedCycle,
    pub u: usize,
    pub v: usize,
    pub bridge: Path,
}

/// `skips = (i, j)` adds the edge `v⁻ⁱ u⁻ʲ`; `u` and `v` are at least
/// `min_dist` apart along the cycle in both directions.
pub fn rotation_setup(
    rng: &mut ChaCha8Rng,
    min_m: usize,
    skips: (usize, usize),
    bridge_max: usize,
    min_dist: usize,
) -> RotationSetup {
    let m = rng.gen_range(min_m..24);
    let b = rng.gen_range(1..=bridge_max);
    let pu = rng.gen_range(0..m);
    let pv = pu + rng.gen_range(min_dist..=m - min_dist);
    let mut perm: Vec<usize> = (0..m).collect();
    perm.shuffle(rng);
    let n = m + b;
    let at = |i: usize| perm[i % m];
    let (u, v) = (at(pu), at(pv));
    let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (at(i), at(i + 1))).collect();
    let bridge: Vec<usize> = (m..n).collect();
    edges.extend(bridge.windows(2).map(|w| (w[0], w[1])));
    edges.push((v, bridge[0]));
    edges.push((u, *bridge.last().expect("non-empty bridge")));
    edges.push((at(pv + m - skips.0), at(pu + m - skips.1)));
    for _ in 0..rng.gen_range(0..12) {
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        edges.push((x, y));
    }
    edges.retain(|(x, y)| x != y);
    let g = Graph::from_edges(n, edges).expect("pairs in range");
    let cycle = OrientedCycle::new(&g, (0..m).map(at).collect()).expect("cycle edges present");
    RotationSetup {
        g,
        cycle,
        u,
        v,
        bridge: Path::from_vertices(bridge),
    }
}

/// A path of `len` edges along a Hamilton cycle of `g`, if one is found.
pub fn hamilton_segment(g: &Graph, start: usize, len: usize) -> Option<Path> {
    let c = pancyclic::rotation::ce_hamilton(g).ok()?;
    let n = c.len();
    let u = c.at(start % n);
    let v = c.successor(u, len.min(n - 1)).ok()?;
    c.segment(u, v, pancyclic::Direction::Forward).ok()
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;

    use super::*;

    #[test]
    fn literal_checks() {
        let g = Graph::cycle(5);
        assert!(is_cycle_in(&g, &[0, 1, 2, 3, 4]));
        assert!(!is_cycle_in(&g, &[0, 1, 2, 3]));
        assert!(!is_cycle_in(&g, &[0, 1, 0]));
        assert!(is_path_in(&g, &[3, 4, 0]));
        assert!(!is_path_in(&g, &[0, 2]));
    }

    #[test]
    fn generators_meet_their_conditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (g, alpha) = chorded_instance(&mut rng).unwrap();
        assert!(g.n() <= 60 && alpha >= 6 && g.min_degree() > alpha);
        let g = small_p5free(&mut rng, 7);
        assert!(g.is_connected() && find_p5_within(&g, &g.all_vertices()).is_none());
        let s = rotation_setup(&mut rng, 8, (3, 3), 5, 4);
        assert!(is_cycle_in(&s.g, s.cycle.vertices()));
        let (g, cp) = random_chorded(&mut rng);
        check_chorded(&g, &cp).unwrap();
    }
}
