//! Cycle rewiring: five rotation constructions, single-component extension,
//! and a constructive Hamilton cycle finder built on them.
//!
//! All constructions take the cycle's own orientation; `u⁻` below means the
//! predecessor of `u` along it.

use crate::bitset::VertexSet;
use crate::connectivity::{disjoint_paths, find_edge_in};
use crate::cycle::{validate_cycle, Direction, OrientedCycle, Path};
use crate::error::{Error, Result};
use crate::graph::{ConditionProfile, Graph};
use crate::search::shortest_cycle;

/// Inputs shared by the bridge-based rotations: a cycle, two attachment
/// vertices on it, and an outside `x`–`y` path with `x ~ v` and `y ~ u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationConfig {
    pub cycle: OrientedCycle,
    pub u: usize,
    pub v: usize,
    pub x: usize,
    pub y: usize,
    pub bridge: Path,
}

impl RotationConfig {
    pub fn new(cycle: OrientedCycle, u: usize, v: usize, bridge: Path) -> Self {
        RotationConfig {
            u,
            v,
            x: bridge.first(),
            y: bridge.last(),
            cycle,
            bridge,
        }
    }
}

fn precondition(msg: String) -> Error {
    Error::Precondition(msg)
}

fn require_edge(g: &Graph, a: usize, b: usize, what: &str) -> Result<()> {
    if g.has_edge(a, b) {
        Ok(())
    } else {
        Err(precondition(format!("{what}: {a}-{b} is not an edge")))
    }
}

fn check_config(g: &Graph, cfg: &RotationConfig) -> Result<()> {
    let c = &cfg.cycle;
    validate_cycle(g, c).map_err(Error::InvalidCycle)?;
    for w in [cfg.u, cfg.v] {
        if !c.contains(w) {
            return Err(Error::NotOnHost(w));
        }
    }
    if cfg.u == cfg.v {
        return Err(precondition(format!("u and v coincide at {}", cfg.u)));
    }
    cfg.bridge.validate(g).map_err(Error::InvalidPath)?;
    if cfg.bridge.first() != cfg.x || cfg.bridge.last() != cfg.y {
        return Err(precondition("bridge must run from x to y".into()));
    }
    if let Some(&w) = cfg.bridge.vertices().iter().find(|&&w| c.contains(w)) {
        return Err(precondition(format!("bridge vertex {w} lies on the cycle")));
    }
    require_edge(g, cfg.v, cfg.x, "v must see x")?;
    require_edge(g, cfg.u, cfg.y, "u must see y")
}

/// Walks forward from `u` to `v^{-a}`, jumps to `u^{-b}`, walks backward to
/// `v`, then appends `tail`. Needs `v^{-a} ~ u^{-b}`.
fn splice(
    g: &Graph,
    c: &OrientedCycle,
    u: usize,
    v: usize,
    a: usize,
    b: usize,
    tail: &[usize],
) -> Result<OrientedCycle> {
    let fwd_uv = c.forward_steps(u, v)?;
    let fwd_vu = c.forward_steps(v, u)?;
    if fwd_uv < a || fwd_vu < b {
        return Err(precondition(format!(
            "u={u} and v={v} are too close for a skip of ({a},{b})"
        )));
    }
    let va = c.predecessor(v, a)?;
    let ub = c.predecessor(u, b)?;
    if va != ub {
        require_edge(g, va, ub, "rotation edge")?;
    }
    let mut seq = Vec::with_capacity(c.len() + tail.len());
    for i in 0..=(fwd_uv - a) {
        seq.push(c.successor(u, i)?);
    }
    for i in b..=fwd_vu {
        seq.push(c.predecessor(u, i)?);
    }
    seq.extend_from_slice(tail);
    finish(g, seq)
}

fn finish(g: &Graph, seq: Vec<usize>) -> Result<OrientedCycle> {
    let c = OrientedCycle::from_sequence(seq)?;
    validate_cycle(g, &c).map_err(Error::InvalidCycle)?;
    Ok(c)
}

/// `(u C[u→v⁻] v⁻ u⁻ C[u⁻←v] v x u)`: absorbs one outside vertex `x` seen by
/// both `u` and `v`. Needs `u⁻ ~ v⁻`.
pub fn rotate_c1(g: &Graph, cycle: &OrientedCycle, u: usize, v: usize, x: usize) -> Result<OrientedCycle> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    let cfg = RotationConfig::new(cycle.clone(), u, v, Path::from_vertices(vec![x]));
    check_config(g, &cfg)?;
    let out = splice(g, cycle, u, v, 1, 1, &[x])?;
    debug_assert_eq!(out.len(), cycle.len() + 1);
    Ok(out)
}

/// `(u C[u→v⁻] v⁻ u⁻ C[u⁻←v] v x P y u)`. Needs `u⁻ ~ v⁻`.
pub fn rotate_c2(g: &Graph, cfg: &RotationConfig) -> Result<OrientedCycle> {
    check_config(g, cfg)?;
    splice(g, &cfg.cycle, cfg.u, cfg.v, 1, 1, cfg.bridge.vertices())
}

/// `(v C[v←u] u y P x v)`: keeps the arc from `v` forward to `u` and replaces
/// the interior of the forward `u→v` arc by the bridge.
pub fn rotate_c3(g: &Graph, cycle: &OrientedCycle, u: usize, v: usize, bridge: &Path) -> Result<OrientedCycle> {
    let cfg = RotationConfig::new(cycle.clone(), u, v, bridge.clone());
    check_config(g, &cfg)?;
    let kept = cycle.segment(v, u, Direction::Forward)?;
    let mut seq = kept.into_vertices();
    seq.extend(bridge.vertices().iter().rev());
    finish(g, seq)
}

fn check_far(cfg: &RotationConfig) -> Result<()> {
    let d = cfg.cycle.distance(cfg.u, cfg.v)?;
    if d < 4 {
        return Err(precondition(format!(
            "u={} and v={} are at cycle distance {d} < 4",
            cfg.u, cfg.v
        )));
    }
    Ok(())
}

/// `(u C[u→v⁻³] v⁻³ u⁻ C[u⁻←v] v x P y u)`. Needs `u⁻ ~ v⁻³` and cycle
/// distance at least 4.
pub fn rotate_c4(g: &Graph, cfg: &RotationConfig) -> Result<OrientedCycle> {
    check_config(g, cfg)?;
    check_far(cfg)?;
    splice(g, &cfg.cycle, cfg.u, cfg.v, 3, 1, cfg.bridge.vertices())
}

/// `(u C[u→v⁻³] v⁻³ u⁻³ C[u⁻³←v] v x P y u)`. Needs `u⁻³ ~ v⁻³` and cycle
/// distance at least 4.
pub fn rotate_c5(g: &Graph, cfg: &RotationConfig) -> Result<OrientedCycle> {
    check_config(g, cfg)?;
    check_far(cfg)?;
    splice(g, &cfg.cycle, cfg.u, cfg.v, 3, 3, cfg.bridge.vertices())
}

/// Absorbs a path of the component `h` through `u` (avoiding `v`) into
/// `cycle`, losing at most two cycle edges.
///
/// Tries a direct ear between consecutive cycle vertices first; otherwise
/// takes a maximum fan from `u` to the cycle and rotates on an edge among the
/// predecessors of its ends. If those predecessors together with `u` are
/// independent the returned error carries that set.
pub fn extend_into_component(
    g: &Graph,
    cycle: &OrientedCycle,
    h: &VertexSet,
    u: usize,
    v: usize,
) -> Result<OrientedCycle> {
    if u == v {
        return Err(precondition(format!("u and v coincide at {u}")));
    }
    if !h.contains(v) {
        return Err(precondition(format!("v={v} is not in the component")));
    }
    extend_avoiding(g, cycle, h, u, Some(v))
}

/// [`extend_into_component`] with an optional vertex to avoid.
pub fn extend_avoiding(
    g: &Graph,
    cycle: &OrientedCycle,
    h: &VertexSet,
    u: usize,
    v: Option<usize>,
) -> Result<OrientedCycle> {
    let n = g.n();
    validate_cycle(g, cycle).map_err(Error::InvalidCycle)?;
    if !h.contains(u) {
        return Err(precondition(format!("u={u} is not in the component")));
    }
    let on_cycle = cycle.vertex_set(n);
    let outside = on_cycle.complement();
    if &g.reach_within(u, &outside) != h {
        return Err(precondition("h is not a component of the graph minus the cycle".into()));
    }
    let mut forbidden = VertexSet::new(n);
    if let Some(v) = v {
        forbidden.insert(v);
    }
    let source = VertexSet::singleton(n, u);

    // Direct ear: two disjoint u-paths ending at w and w⁻.
    for w in cycle.vertices().iter().copied() {
        let wm = cycle.predecessor(w, 1)?;
        if !g.neighbors(w).intersects(h) || !g.neighbors(wm).intersects(h) {
            continue;
        }
        let ends = VertexSet::from_iter(n, [w, wm]);
        let mut blocked = on_cycle.difference(&ends);
        blocked.union_with(&forbidden);
        let sys = disjoint_paths(g, &source, &ends, 2, &blocked)?;
        if sys.paths.len() < 2 {
            continue;
        }
        let (to_w, to_wm) = if sys.paths[0].last() == w {
            (&sys.paths[0], &sys.paths[1])
        } else {
            (&sys.paths[1], &sys.paths[0])
        };
        let mut seq = cycle.walk_from(w)?;
        // walk_from(w) ends at w⁻; continue through the ear back to w.
        seq.extend(to_wm.vertices().iter().rev().skip(1));
        seq.extend(&to_w.vertices()[1..to_w.order() - 1]);
        return finish_extension(g, cycle, seq);
    }

    // Fan from u to the cycle.
    let fan = disjoint_paths(g, &source, &on_cycle, cycle.len(), &forbidden)?;
    let mut ends_minus = Vec::with_capacity(fan.paths.len());
    for p in &fan.paths {
        ends_minus.push(cycle.predecessor(p.last(), 1)?);
    }
    let mut s = VertexSet::from_iter(n, ends_minus.iter().copied());
    s.insert(u);
    let Some((a, b)) = find_edge_in(g, &s) else {
        return Err(Error::IndependentSetWitness(s.to_vec()));
    };
    if a == u || b == u {
        return Err(Error::Stall(format!(
            "u={u} sees a fan predecessor but no direct ear was found"
        )));
    }
    let i = ends_minus.iter().position(|&w| w == a).expect("in fan");
    let j = ends_minus.iter().position(|&w| w == b).expect("in fan");
    let (pi, pj) = (&fan.paths[i], &fan.paths[j]);
    // Bridge from a neighbour of w_j to a neighbour of w_i, through u.
    let mut bridge: Vec<usize> = pj.vertices()[..pj.order() - 1].iter().rev().copied().collect();
    bridge.extend(&pi.vertices()[1..pi.order() - 1]);
    let cfg = RotationConfig::new(cycle.clone(), pi.last(), pj.last(), Path::from_vertices(bridge));
    let out = rotate_c2(g, &cfg)?;
    if cycle.edges_missing_from(&out) > 2 {
        return Err(Error::Stall("fan rotation dropped more than two edges".into()));
    }
    Ok(out)
}

fn finish_extension(g: &Graph, cycle: &OrientedCycle, seq: Vec<usize>) -> Result<OrientedCycle> {
    let out = finish(g, seq)?;
    debug_assert!(cycle.edges_missing_from(&out) <= 2);
    Ok(out)
}

/// Hamilton cycle for graphs with `κ ≥ α`, grown by repeated extensions from
/// a triangle (or a shortest cycle when triangle-free).
pub fn ce_hamilton(g: &Graph) -> Result<OrientedCycle> {
    let prof = ConditionProfile::compute(g)?;
    ce_hamilton_with_profile(g, &prof).map(|(c, _)| c)
}

/// As [`ce_hamilton`] with a precomputed profile; also returns the number of
/// extension moves used.
pub fn ce_hamilton_with_profile(g: &Graph, prof: &ConditionProfile) -> Result<(OrientedCycle, usize)> {
    let n = g.n();
    if n < 3 {
        return Err(precondition(format!("need at least 3 vertices, got {n}")));
    }
    if prof.kappa < prof.alpha {
        return Err(precondition(format!(
            "connectivity {} is below independence number {}",
            prof.kappa, prof.alpha
        )));
    }
    let mut c = match g.find_triangle() {
        Some(t) => OrientedCycle::from_sequence(t.to_vec())?,
        None => shortest_cycle(g).ok_or_else(|| precondition("graph is acyclic".into()))?,
    };
    let mut moves = 0;
    while c.len() < n {
        if moves >= n {
            return Err(Error::Stall(format!("move budget spent at cycle {c:?}")));
        }
        let outside = c.vertex_set(n).complement();
        let u = outside.first().expect("cycle is not spanning");
        let h = g.reach_within(u, &outside);
        let next = extend_avoiding(g, &c, &h, u, None)
            .map_err(|e| Error::Stall(format!("no extension of {c:?} into component {h:?} from {u}: {e}")))?;
        if next.len() <= c.len() {
            return Err(Error::Stall(format!("extension of {c:?} did not grow")));
        }
        c = next;
        moves += 1;
    }
    Ok((c, moves))
}
