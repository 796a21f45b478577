//! Cycles of length 3 to 7 in graphs whose minimum degree exceeds their
//! independence number.
//!
//! Each length is attempted through the neighbourhood constructions: a long
//! path inside some `N(u)`, a matching inside `N(u)` combined with largest
//! independent sets `I(v)` of neighbourhoods, and patchwork around a
//! triangle. Every candidate is validated; when all constructions fail the
//! finder runs a bounded exhaustive search and says so.

use crate::bitset::VertexSet;
use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{independence_number, max_independent_set_in};
use crate::search::{find_cycle, SearchOutcome, DEFAULT_SEARCH_BUDGET};

/// Which construction produced a short cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShortCycleRoute {
    /// An edge or path inside a single neighbourhood.
    Neighbourhood,
    /// A matching inside a neighbourhood plus independent-set intersections.
    Matching,
    /// Paths or independent-set patchwork around a triangle.
    Triangle,
    /// Bounded exhaustive search.
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortCycle {
    pub cycle: OrientedCycle,
    pub route: ShortCycleRoute,
}

impl ShortCycle {
    pub fn is_fallback(&self) -> bool {
        self.route == ShortCycleRoute::Fallback
    }
}

/// Cycle of length `ell ∈ 3..=7`; requires `δ(g) > α(g)`.
pub fn find_short_cycle(g: &Graph, ell: usize) -> Result<ShortCycle> {
    let alpha = independence_number(g)?;
    if g.min_degree() <= alpha {
        return Err(Error::Precondition(format!(
            "minimum degree {} does not exceed independence number {alpha}",
            g.min_degree()
        )));
    }
    find_short_cycle_unchecked(g, ell, DEFAULT_SEARCH_BUDGET)
}

/// [`find_short_cycle`] without the degree hypothesis check.
pub fn find_short_cycle_unchecked(g: &Graph, ell: usize, budget: u64) -> Result<ShortCycle> {
    if !(3..=7).contains(&ell) {
        return Err(Error::Precondition(format!("length {ell} is outside 3..=7")));
    }
    let mut ctx = Ctx::new(g);
    let attempt = match ell {
        3 => ctx.three(),
        4 => ctx.four()?,
        5 => ctx.five()?,
        6 => ctx.six()?,
        _ => ctx.seven()?,
    };
    if let Some((seq, route)) = attempt {
        let cycle = OrientedCycle::new(g, seq)?;
        debug_assert_eq!(cycle.len(), ell);
        return Ok(ShortCycle { cycle, route });
    }
    match find_cycle(g, ell, budget) {
        SearchOutcome::Found(cycle) => Ok(ShortCycle {
            cycle,
            route: ShortCycleRoute::Fallback,
        }),
        SearchOutcome::Absent => Err(Error::NotFound(format!(
            "exhaustive search shows no cycle of length {ell}"
        ))),
        SearchOutcome::Unknown => Err(Error::BudgetExceeded {
            what: "short cycle search",
            budget,
        }),
    }
}

type Attempt = Option<(Vec<usize>, ShortCycleRoute)>;

struct Ctx<'a> {
    g: &'a Graph,
    indep: Vec<Option<VertexSet>>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph) -> Self {
        Ctx {
            g,
            indep: vec![None; g.n()],
        }
    }

    /// `I(u)`: a largest independent set inside `N(u)`.
    fn i(&mut self, u: usize) -> Result<VertexSet> {
        if self.indep[u].is_none() {
            self.indep[u] = Some(max_independent_set_in(self.g, self.g.neighbors(u))?);
        }
        Ok(self.indep[u].clone().expect("filled"))
    }

    fn valid(&self, seq: &[usize]) -> bool {
        OrientedCycle::new(self.g, seq.to_vec()).is_ok()
    }

    fn accept(&self, seq: Vec<usize>, route: ShortCycleRoute) -> Attempt {
        self.valid(&seq).then_some((seq, route))
    }

    fn three(&self) -> Attempt {
        for u in 0..self.g.n() {
            if let Some((a, b)) = crate::connectivity::find_edge_in(self.g, self.g.neighbors(u)) {
                return self.accept(vec![u, a, b], ShortCycleRoute::Neighbourhood);
            }
        }
        None
    }

    /// A path on `k` vertices inside some `N(u)` closes into a `(k+1)`-cycle.
    fn neighbourhood_path(&self, k: usize) -> Attempt {
        for u in 0..self.g.n() {
            if let Some(p) = path_in(self.g, self.g.neighbors(u), k, 200_000) {
                let mut seq = vec![u];
                seq.extend(p);
                return self.accept(seq, ShortCycleRoute::Neighbourhood);
            }
        }
        None
    }

    /// Matching of size `k` inside some `N(u)`, as `(v_i, w_i)` pairs.
    fn matchings(&self, k: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
        (0..self.g.n())
            .filter_map(|u| {
                let m = greedy_matching(self.g, self.g.neighbors(u));
                (m.len() >= k).then(|| (u, m[..k].to_vec()))
            })
            .collect()
    }

    fn four(&mut self) -> Result<Attempt> {
        if let Some(a) = self.neighbourhood_path(3) {
            return Ok(Some(a));
        }
        let Some([u, v, w]) = self.g.find_triangle() else {
            return Ok(None);
        };
        let tri = [u, v, w];
        for (a, b, c) in [(u, v, w), (u, w, v), (v, w, u)] {
            let common = self.i(a)?.intersection(&self.i(b)?);
            if let Some(x) = common.iter().find(|&x| !tri.contains(&x)) {
                if let Some(at) = self.accept(vec![a, x, b, c], ShortCycleRoute::Triangle) {
                    return Ok(Some(at));
                }
            }
        }
        for (a, b) in [(u, v), (u, w), (v, w), (v, u), (w, u), (w, v)] {
            let ia = self.i(a)?;
            let ib = self.i(b)?;
            for x in ia.iter().filter(|x| !tri.contains(x)) {
                for y in self.g.neighbors(x).intersection(&ib).iter() {
                    if tri.contains(&y) || y == x {
                        continue;
                    }
                    if let Some(at) = self.accept(vec![a, x, y, b], ShortCycleRoute::Triangle) {
                        return Ok(Some(at));
                    }
                }
            }
        }
        Ok(None)
    }

    fn five(&mut self) -> Result<Attempt> {
        if let Some(a) = self.neighbourhood_path(4) {
            return Ok(Some(a));
        }
        for (u, m) in self.matchings(4) {
            let mut excl: Vec<usize> = m.iter().flat_map(|&(v, w)| [v, w]).collect();
            excl.push(u);
            for i in 0..m.len() {
                for j in 0..m.len() {
                    if i == j {
                        continue;
                    }
                    let (vi, _) = m[i];
                    let (vj, wj) = m[j];
                    let common = self.i(vi)?.intersection(&self.i(vj)?);
                    for x in common.iter().filter(|x| !excl.contains(x)) {
                        if let Some(at) = self.accept(vec![u, vi, x, vj, wj], ShortCycleRoute::Matching) {
                            return Ok(Some(at));
                        }
                    }
                }
            }
            for i in 0..m.len() {
                for j in 0..m.len() {
                    if i == j {
                        continue;
                    }
                    let (vi, vj) = (m[i].0, m[j].0);
                    if let Some((x, y)) = self.cross_edge(vi, vj, &excl)? {
                        if let Some(at) = self.accept(vec![u, vi, x, y, vj], ShortCycleRoute::Matching) {
                            return Ok(Some(at));
                        }
                    }
                }
            }
        }
        let Some(t) = self.g.find_triangle() else {
            return Ok(None);
        };
        for (a, b, c) in rotations(t) {
            if let Some((x, y)) = self.cross_edge(a, b, &t)? {
                if let Some(at) = self.accept(vec![a, x, y, b, c], ShortCycleRoute::Triangle) {
                    return Ok(Some(at));
                }
            }
        }
        let [v1, v2, v3] = t;
        let i12 = self.i(v1)?.intersection(&self.i(v2)?);
        let i23 = self.i(v2)?.intersection(&self.i(v3)?);
        for x in i12.iter().filter(|x| !t.contains(x)) {
            for y in i23.iter().filter(|&y| !t.contains(&y) && y != x) {
                if let Some(at) = self.accept(vec![v1, x, v2, y, v3], ShortCycleRoute::Triangle) {
                    return Ok(Some(at));
                }
            }
        }
        Ok(None)
    }

    /// Edge `xy` with `x ∈ I(a)`, `y ∈ I(b)`, both outside `excl`.
    fn cross_edge(&mut self, a: usize, b: usize, excl: &[usize]) -> Result<Option<(usize, usize)>> {
        let ia = self.i(a)?;
        let ib = self.i(b)?;
        for x in ia.iter().filter(|x| !excl.contains(x)) {
            if let Some(y) = self
                .g
                .neighbors(x)
                .intersection(&ib)
                .iter()
                .find(|y| !excl.contains(y) && *y != x)
            {
                return Ok(Some((x, y)));
            }
        }
        Ok(None)
    }

    fn six(&mut self) -> Result<Attempt> {
        if let Some(a) = self.neighbourhood_path(5) {
            return Ok(Some(a));
        }
        for (u, m) in self.matchings(5) {
            let mut excl: Vec<usize> = m.iter().flat_map(|&(v, w)| [v, w]).collect();
            excl.push(u);
            for i in 0..m.len() {
                for j in 0..m.len() {
                    if i == j {
                        continue;
                    }
                    let (vi, wi) = m[i];
                    let (vj, wj) = m[j];
                    let common = self.i(vi)?.intersection(&self.i(vj)?);
                    for x in common.iter().filter(|x| !excl.contains(x)) {
                        let seq = vec![u, wi, vi, x, vj, wj];
                        if let Some(at) = self.accept(seq, ShortCycleRoute::Matching) {
                            return Ok(Some(at));
                        }
                    }
                    if let Some((x, y)) = self.cross_edge(vi, vj, &excl)? {
                        let seq = vec![u, vi, x, y, vj, wj];
                        if let Some(at) = self.accept(seq, ShortCycleRoute::Matching) {
                            return Ok(Some(at));
                        }
                    }
                }
            }
        }
        let Some(t) = self.g.find_triangle() else {
            return Ok(None);
        };
        let [v1, v2, v3] = t;
        let i1 = self.i(v1)?;
        let i2 = self.i(v2)?;
        let i3 = self.i(v3)?;
        let pick = |s: &VertexSet, used: &[usize]| s.iter().find(|v| !used.contains(v));
        let mut used = t.to_vec();
        if let Some(x) = pick(&i1.intersection(&i2), &used) {
            used.push(x);
            if let Some(y) = pick(&i2.intersection(&i3), &used) {
                used.push(y);
                if let Some(z) = pick(&i3.intersection(&i1), &used) {
                    if let Some(at) = self.accept(vec![v1, x, v2, y, v3, z], ShortCycleRoute::Triangle) {
                        return Ok(Some(at));
                    }
                }
            }
        }
        for (a, b, _) in rotations(t) {
            let ia = self.i(a)?;
            let ib = self.i(b)?;
            let edges = cross_edges(self.g, &ia, &ib, &t);
            for (k, &(x1, y1)) in edges.iter().enumerate() {
                for &(x2, y2) in &edges[k + 1..] {
                    let four = [x1, y1, x2, y2];
                    if (0..4).any(|p| (p + 1..4).any(|q| four[p] == four[q])) {
                        continue;
                    }
                    if let Some(at) = self.accept(vec![a, x1, y1, b, y2, x2], ShortCycleRoute::Triangle) {
                        return Ok(Some(at));
                    }
                }
            }
        }
        Ok(None)
    }

    fn seven(&mut self) -> Result<Attempt> {
        if let Some(a) = self.neighbourhood_path(6) {
            return Ok(Some(a));
        }
        for (u, m) in self.matchings(6) {
            let mut excl: Vec<usize> = m.iter().flat_map(|&(v, w)| [v, w]).collect();
            excl.push(u);
            for i in 0..m.len() {
                for j in 0..m.len() {
                    if i == j {
                        continue;
                    }
                    let (vi, wi) = m[i];
                    let (vj, wj) = m[j];
                    if let Some((x, y)) = self.cross_edge(vi, vj, &excl)? {
                        let seq = vec![u, wi, vi, x, y, vj, wj];
                        if let Some(at) = self.accept(seq, ShortCycleRoute::Matching) {
                            return Ok(Some(at));
                        }
                    }
                }
            }
            for i in 0..m.len() {
                for j in 0..m.len() {
                    if i == j {
                        continue;
                    }
                    let (vi, vj, wj) = (m[i].0, m[j].0, m[j].1);
                    let base = [vi, vj, wj, u];
                    let common = self.i(vi)?.intersection(&self.i(vj)?);
                    let xs: Vec<usize> = common.iter().filter(|x| !base.contains(x)).take(6).collect();
                    for s in 0..xs.len() {
                        for t in 0..xs.len() {
                            if s == t {
                                continue;
                            }
                            let (xa, xb) = (xs[s], xs[t]);
                            let mut ex = base.to_vec();
                            ex.extend([xa, xb]);
                            let both = self.i(xa)?.intersection(&self.i(xb)?);
                            for y in both.iter().filter(|y| !ex.contains(y)) {
                                let seq = vec![u, vi, xa, y, xb, vj, wj];
                                if let Some(at) = self.accept(seq, ShortCycleRoute::Matching) {
                                    return Ok(Some(at));
                                }
                            }
                            if let Some((y, z)) = self.cross_edge(xa, xb, &ex)? {
                                let seq = vec![u, vi, xa, y, z, xb, vj];
                                if let Some(at) = self.accept(seq, ShortCycleRoute::Matching) {
                                    return Ok(Some(at));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(self.seven_triangle())
    }

    /// Short connectors `P_{i,j}` between the corners of a triangle.
    fn seven_triangle(&self) -> Attempt {
        let t = self.g.find_triangle()?;
        let [v1, v2, v3] = t;
        let n = self.g.n();
        let mut used = VertexSet::from_iter(n, t);
        let mut conn = Vec::new();
        for (a, b) in [(v1, v2), (v2, v3), (v1, v3)] {
            let p = short_connector(self.g, a, b, &used)?;
            for &w in &p[1..p.len() - 1] {
                used.insert(w);
            }
            conn.push(p);
        }
        let long: Vec<bool> = conn.iter().map(|p| p.len() == 4).collect();
        let inner = |p: &Vec<usize>| p[1..p.len() - 1].to_vec();
        let seq = match long.iter().filter(|&&b| b).count() {
            2 | 3 => {
                // Two long connectors sharing a corner, closed by the triangle edge.
                let (i, j) = if long[0] && long[1] {
                    (0, 1)
                } else if long[1] && long[2] {
                    (1, 2)
                } else {
                    (0, 2)
                };
                let (p, q) = (&conn[i], &conn[j]);
                let mid = *p.iter().find(|v| q.contains(v)).expect("connectors share a corner");
                let pa = if p[0] == mid { reversed(p) } else { p.clone() };
                let qa = if q[0] == mid { q.clone() } else { reversed(q) };
                let mut s = pa;
                s.extend(&qa[1..]);
                s.pop();
                s.push(*qa.last().expect("non-empty"));
                s
            }
            1 => {
                let mut s = vec![v1];
                s.extend(inner(&conn[0]));
                s.push(v2);
                s.extend(inner(&conn[1]));
                s.push(v3);
                s.extend(inner(&conn[2]).iter().rev());
                s
            }
            _ => {
                let (u1, u2, u3) = (conn[0][1], conn[1][1], conn[2][1]);
                let mut avoid = VertexSet::from_iter(n, [v2, u2, v3, u3]);
                avoid.insert(v1);
                avoid.insert(u1);
                let p = short_connector(self.g, v1, u1, &avoid)?;
                let mut s = p[..p.len() - 1].to_vec();
                if p.len() == 3 {
                    s.extend([u1, v2, u2, v3, u3]);
                } else {
                    s.extend([u1, v2, u2, v3]);
                }
                s
            }
        };
        self.accept(seq, ShortCycleRoute::Triangle)
    }
}

fn reversed(p: &[usize]) -> Vec<usize> {
    p.iter().rev().copied().collect()
}

fn rotations(t: [usize; 3]) -> [(usize, usize, usize); 3] {
    let [a, b, c] = t;
    [(a, b, c), (b, c, a), (a, c, b)]
}

/// Edges `xy` with `x ∈ a`, `y ∈ b`, both outside `excl`.
fn cross_edges(g: &Graph, a: &VertexSet, b: &VertexSet, excl: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in a.iter().filter(|x| !excl.contains(x)) {
        for y in g.neighbors(x).intersection(b).iter() {
            if !excl.contains(&y) && y != x {
                out.push((x, y));
            }
        }
    }
    out
}

/// A path of length 2 or 3 from `a` to `b` whose interior avoids `used`
/// (length 2 preferred).
fn short_connector(g: &Graph, a: usize, b: usize, used: &VertexSet) -> Option<Vec<usize>> {
    let free = used.complement();
    let na = g.neighbors(a).intersection(&free);
    let nb = g.neighbors(b).intersection(&free);
    if let Some(m) = na.intersection(&nb).first() {
        return Some(vec![a, m, b]);
    }
    for x in na.iter() {
        if let Some(y) = g.neighbors(x).intersection(&nb).iter().find(|&y| y != x) {
            return Some(vec![a, x, y, b]);
        }
    }
    None
}

/// Maximal matching of `g[s]`, greedily by smallest vertices.
pub fn greedy_matching(g: &Graph, s: &VertexSet) -> Vec<(usize, usize)> {
    let mut free = s.clone();
    let mut m = Vec::new();
    while let Some(v) = free.first() {
        free.remove(v);
        if let Some(w) = g.neighbors(v).intersection(&free).first() {
            free.remove(w);
            m.push((v, w));
        }
    }
    m
}

/// A path on `k` vertices inside `g[s]`, by bounded depth-first search.
pub fn path_in(g: &Graph, s: &VertexSet, k: usize, budget: u64) -> Option<Vec<usize>> {
    fn go(
        g: &Graph,
        s: &VertexSet,
        k: usize,
        path: &mut Vec<usize>,
        on: &mut VertexSet,
        nodes: &mut u64,
        budget: u64,
    ) -> bool {
        if path.len() == k {
            return true;
        }
        *nodes += 1;
        if *nodes > budget {
            return false;
        }
        let last = *path.last().expect("non-empty");
        let mut next = g.neighbors(last).intersection(s);
        next.difference_with(on);
        for w in next.iter() {
            path.push(w);
            on.insert(w);
            if go(g, s, k, path, on, nodes, budget) {
                return true;
            }
            on.remove(w);
            path.pop();
        }
        false
    }
    if k == 0 || s.len() < k {
        return None;
    }
    let mut nodes = 0;
    for start in s.iter() {
        let mut path = vec![start];
        let mut on = VertexSet::singleton(g.n(), start);
        if go(g, s, k, &mut path, &mut on, &mut nodes, budget) {
            return Some(path);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::validate_cycle;

    #[test]
    fn complete_graph() {
        let g = Graph::complete(5);
        for ell in 3..=5 {
            let s = find_short_cycle(&g, ell);
            // K5 has alpha 1 < delta 4.
            let s = s.unwrap();
            assert_eq!(s.cycle.len(), ell);
            validate_cycle(&g, &s.cycle).unwrap();
        }
    }

    #[test]
    fn cocktail_party_seven() {
        let g = Graph::cocktail_party(12);
        let s = find_short_cycle(&g, 7).unwrap();
        assert_eq!(s.cycle.len(), 7);
        validate_cycle(&g, &s.cycle).unwrap();
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(find_short_cycle(&Graph::complete(9), 8).is_err());
        assert!(matches!(
            find_short_cycle(&Graph::cycle(5), 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn triangle_patchwork_for_seven() {
        let g = Graph::cocktail_party(10);
        let ctx = Ctx::new(&g);
        let (seq, route) = ctx.seven_triangle().unwrap();
        assert_eq!(route, ShortCycleRoute::Triangle);
        assert_eq!(seq.len(), 7);
    }
}
