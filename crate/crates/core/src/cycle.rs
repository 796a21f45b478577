//! Paths, oriented cycles, chords and chord contraction.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// First problem found while validating a path or cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    Duplicate { vertex: usize },
    NonEdge { u: usize, v: usize },
    TooShort { order: usize, min: usize },
    OutOfRange { vertex: usize, n: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Duplicate { vertex } => write!(f, "vertex {vertex} appears twice"),
            Violation::NonEdge { u, v } => write!(f, "({u},{v}) is not an edge"),
            Violation::TooShort { order, min } => {
                write!(f, "{order} vertices, at least {min} required")
            }
            Violation::OutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} outside a graph on {n} vertices")
            }
        }
    }
}

fn check_sequence(g: &Graph, vs: &[usize], closed: bool, min: usize) -> std::result::Result<(), Violation> {
    if vs.len() < min {
        return Err(Violation::TooShort { order: vs.len(), min });
    }
    let mut seen = VertexSet::new(g.n());
    for &v in vs {
        if v >= g.n() {
            return Err(Violation::OutOfRange { vertex: v, n: g.n() });
        }
        if seen.contains(v) {
            return Err(Violation::Duplicate { vertex: v });
        }
        seen.insert(v);
    }
    for w in vs.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Violation::NonEdge { u: w[0], v: w[1] });
        }
    }
    if closed {
        let (a, b) = (vs[vs.len() - 1], vs[0]);
        if !g.has_edge(a, b) {
            return Err(Violation::NonEdge { u: a, v: b });
        }
    }
    Ok(())
}

/// An ordered list of distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    /// Wraps a vertex list without checking it; see [`Path::validate`].
    pub fn from_vertices(vertices: Vec<usize>) -> Self {
        Path { vertices }
    }

    /// Wraps and validates against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let p = Path { vertices };
        p.validate(g).map_err(Error::InvalidPath)?;
        Ok(p)
    }

    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Violation> {
        check_sequence(g, &self.vertices, false, 1)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("non-empty path")
    }

    pub fn interior(&self) -> &[usize] {
        match self.vertices.len() {
            0..=2 => &[],
            l => &self.vertices[1..l - 1],
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.vertices.clone();
        v.reverse();
        Path { vertices: v }
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.vertices.iter().copied())
    }

    pub fn interior_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.interior().iter().copied())
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Concatenate, identifying `self.last()` with `other.first()`.
    pub fn join(&self, other: &Path) -> Result<Path> {
        if self.last() != other.first() {
            return Err(Error::Precondition(format!(
                "cannot join a path ending at {} to one starting at {}",
                self.last(),
                other.first()
            )));
        }
        let mut v = self.vertices.clone();
        v.extend_from_slice(&other.vertices[1..]);
        Ok(Path { vertices: v })
    }

    /// Sub-path between positions `i..=j` (either order).
    pub fn subpath(&self, i: usize, j: usize) -> Path {
        if i <= j {
            Path::from_vertices(self.vertices[i..=j].to_vec())
        } else {
            let mut v = self.vertices[j..=i].to_vec();
            v.reverse();
            Path::from_vertices(v)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

/// A cycle with a fixed orientation, stored from its smallest vertex.
#[derive(Clone, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct OrientedCycle {
    vertices: Vec<usize>,
    #[serde(skip)]
    pos: HashMap<usize, usize>,
}

impl PartialEq for OrientedCycle {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for OrientedCycle {}

impl std::hash::Hash for OrientedCycle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
    }
}

impl fmt::Debug for OrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.vertices)
    }
}

impl From<OrientedCycle> for Vec<usize> {
    fn from(c: OrientedCycle) -> Vec<usize> {
        c.vertices
    }
}

impl TryFrom<Vec<usize>> for OrientedCycle {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        OrientedCycle::from_sequence(v)
    }
}

impl OrientedCycle {
    /// Build from a cyclic sequence of distinct vertices (at least three).
    /// Adjacency is not checked; see [`validate_cycle`].
    pub fn from_sequence(mut vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(Violation::TooShort {
                order: vertices.len(),
                min: 3,
            }));
        }
        let mut pos = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if pos.insert(v, i).is_some() {
                return Err(Error::InvalidCycle(Violation::Duplicate { vertex: v }));
            }
        }
        let start = (0..vertices.len()).min_by_key(|&i| vertices[i]).expect("non-empty");
        vertices.rotate_left(start);
        for (i, &v) in vertices.iter().enumerate() {
            pos.insert(v, i);
        }
        Ok(OrientedCycle { vertices, pos })
    }

    /// Build and validate against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let c = Self::from_sequence(vertices)?;
        validate_cycle(g, &c).map_err(Error::InvalidCycle)?;
        Ok(c)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.pos.contains_key(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.pos.get(&v).copied()
    }

    fn pos_of(&self, v: usize) -> Result<usize> {
        self.position(v).ok_or(Error::NotOnHost(v))
    }

    /// Vertex `i` steps against the orientation.
    pub fn predecessor(&self, u: usize, i: usize) -> Result<usize> {
        let l = self.len();
        let p = self.pos_of(u)?;
        Ok(self.vertices[(p + l - i % l) % l])
    }

    /// Vertex `i` steps along the orientation.
    pub fn successor(&self, u: usize, i: usize) -> Result<usize> {
        let l = self.len();
        let p = self.pos_of(u)?;
        Ok(self.vertices[(p + i) % l])
    }

    /// Vertex at cyclic offset `i` from the stored start.
    pub fn at(&self, i: usize) -> usize {
        self.vertices[i % self.len()]
    }

    /// Steps needed to walk forward from `u` to `v`.
    pub fn forward_steps(&self, u: usize, v: usize) -> Result<usize> {
        let l = self.len();
        Ok((self.pos_of(v)? + l - self.pos_of(u)?) % l)
    }

    /// Length of the shorter arc between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        let d = self.forward_steps(u, v)?;
        Ok(d.min(self.len() - d))
    }

    /// The subpath from `u` to `v`, walking in `dir` (with or against the
    /// orientation).
    pub fn segment(&self, u: usize, v: usize, dir: Direction) -> Result<Path> {
        let pu = self.pos_of(u)?;
        self.pos_of(v)?;
        if u == v {
            return Err(Error::Precondition(format!("segment endpoints coincide at {u}")));
        }
        let l = self.len();
        let mut out = Vec::new();
        let mut i = pu;
        loop {
            let w = self.vertices[i];
            out.push(w);
            if w == v {
                break;
            }
            i = match dir {
                Direction::Forward => (i + 1) % l,
                Direction::Backward => (i + l - 1) % l,
            };
        }
        Ok(Path::from_vertices(out))
    }

    /// Cycle traversed in the opposite direction.
    pub fn reversed(&self) -> OrientedCycle {
        let mut v = self.vertices.clone();
        v.reverse();
        OrientedCycle::from_sequence(v).expect("already valid")
    }

    /// Edges `(c_i, c_{i+1})` including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let l = self.len();
        (0..l).map(move |i| (self.vertices[i], self.vertices[(i + 1) % l]))
    }

    /// True when `uv` is an edge of the cycle (either direction).
    pub fn has_cycle_edge(&self, u: usize, v: usize) -> bool {
        match (self.position(u), self.position(v)) {
            (Some(a), Some(b)) => {
                let l = self.len();
                (a + 1) % l == b || (b + 1) % l == a
            }
            _ => false,
        }
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.vertices.iter().copied())
    }

    /// Sequence starting at `u` and following the orientation.
    pub fn walk_from(&self, u: usize) -> Result<Vec<usize>> {
        let p = self.pos_of(u)?;
        let mut v = self.vertices[p..].to_vec();
        v.extend_from_slice(&self.vertices[..p]);
        Ok(v)
    }

    /// True when `p` appears as a contiguous stretch of the cycle (either
    /// direction).
    pub fn contains_path(&self, p: &Path) -> bool {
        let vs = p.vertices();
        if vs.len() > self.len() || !vs.iter().all(|&v| self.contains(v)) {
            return false;
        }
        if vs.len() <= 1 {
            return true;
        }
        let fwd = vs.windows(2).all(|w| self.successor(w[0], 1).ok() == Some(w[1]));
        let bwd = vs.windows(2).all(|w| self.predecessor(w[0], 1).ok() == Some(w[1]));
        fwd || bwd
    }

    /// Number of cycle edges of `self` absent from `other`.
    pub fn edges_missing_from(&self, other: &OrientedCycle) -> usize {
        self.edges().filter(|&(a, b)| !other.has_cycle_edge(a, b)).count()
    }
}

/// Checks distinctness, adjacency of consecutive vertices and the closing edge.
pub fn validate_cycle(g: &Graph, c: &OrientedCycle) -> std::result::Result<(), Violation> {
    check_sequence(g, c.vertices(), true, 3)
}

/// An edge between two vertices at distance 2 or 3 along a host path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chord {
    /// Endpoint closer to the start of the host.
    pub a: usize,
    pub b: usize,
    pub span: usize,
}

impl Chord {
    /// Builds a chord of `path`, checking adjacency and span.
    pub fn on_path(g: &Graph, path: &Path, u: usize, v: usize) -> Result<Chord> {
        let pu = path.position(u).ok_or(Error::NotOnHost(u))?;
        let pv = path.position(v).ok_or(Error::NotOnHost(v))?;
        let (a, b, pa, pb) = if pu < pv { (u, v, pu, pv) } else { (v, u, pv, pu) };
        let span = pb - pa;
        if !(2..=3).contains(&span) {
            return Err(Error::Precondition(format!(
                "chord {a}-{b} has span {span}, expected 2 or 3"
            )));
        }
        if !g.has_edge(a, b) {
            return Err(Error::Precondition(format!("chord {a}-{b} is not an edge")));
        }
        Ok(Chord { a, b, span })
    }
}

/// Closed position intervals overlap beyond a shared endpoint.
fn spans_overlap(x: (usize, usize), y: (usize, usize)) -> bool {
    x.0.max(y.0) < x.1.min(y.1)
}

/// Open position intervals share a vertex.
fn interiors_meet(x: (usize, usize), y: (usize, usize)) -> bool {
    x.0.max(y.0) + 1 < x.1.min(y.1)
}

/// A path together with span-2/3 chords whose spanned stretches overlap in
/// at most an endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordedPath {
    pub path: Path,
    pub chords: Vec<Chord>,
}

impl ChordedPath {
    /// Checks the path, each chord, and pairwise non-intersection.
    pub fn new(g: &Graph, path: Path, pairs: &[(usize, usize)]) -> Result<Self> {
        path.validate(g).map_err(Error::InvalidPath)?;
        let mut chords = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            chords.push(Chord::on_path(g, &path, u, v)?);
        }
        let cp = ChordedPath { path, chords }.sort_chords();
        if let Some((x, y)) = cp.first_overlap() {
            return Err(Error::Precondition(format!("chords {:?} and {:?} intersect", x, y)));
        }
        Ok(cp)
    }

    fn sort_chords(&self) -> Self {
        let mut c = self.clone();
        c.chords.sort_by_key(|ch| self.path.position(ch.a));
        c
    }

    /// Position interval of a chord on the host path.
    pub fn interval(&self, ch: &Chord) -> (usize, usize) {
        let a = self.path.position(ch.a).expect("chord on path");
        (a, a + ch.span)
    }

    fn first_overlap(&self) -> Option<(Chord, Chord)> {
        for (i, x) in self.chords.iter().enumerate() {
            for y in &self.chords[i + 1..] {
                if spans_overlap(self.interval(x), self.interval(y)) {
                    return Some((*x, *y));
                }
            }
        }
        None
    }

    /// Pairwise disjointness of the chords' skipped interiors.
    pub fn interiors_pairwise_disjoint(&self) -> bool {
        self.chords.iter().enumerate().all(|(i, x)| {
            self.chords[i + 1..]
                .iter()
                .all(|y| !interiors_meet(self.interval(x), self.interval(y)))
        })
    }

    /// Counts of span-2 and span-3 chords.
    pub fn span_counts(&self) -> (usize, usize) {
        let a = self.chords.iter().filter(|c| c.span == 2).count();
        (a, self.chords.len() - a)
    }

    /// Largest `k'` for which [`contract_chords`] succeeds.
    pub fn max_contraction(&self) -> usize {
        let (a, b) = self.span_counts();
        a + 2 * b
    }

    /// Checks every invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.path.validate(g).map_err(Error::InvalidPath)?;
        for ch in &self.chords {
            let again = Chord::on_path(g, &self.path, ch.a, ch.b)?;
            if again != *ch {
                return Err(Error::Precondition(format!("stale chord {ch:?}")));
            }
        }
        if let Some((x, y)) = self.first_overlap() {
            return Err(Error::Precondition(format!("chords {x:?} and {y:?} intersect")));
        }
        Ok(())
    }
}

/// Shortens `cp.path` by exactly `k_prime` vertices by routing through chords:
/// `b' = min(k'/2, b)` span-3 chords and `a' = k' - 2b'` span-2 chords, the
/// earliest of each kind along the path.
pub fn contract_chords(cp: &ChordedPath, k_prime: usize) -> Result<Path> {
    let (a, b) = cp.span_counts();
    if k_prime > a + 2 * b {
        return Err(Error::Infeasible(format!(
            "cannot remove {k_prime} vertices with {a} span-2 and {b} span-3 chords"
        )));
    }
    if a == 0 && k_prime % 2 == 1 {
        return Err(Error::Infeasible(format!(
            "odd reduction {k_prime} needs a span-2 chord"
        )));
    }
    let b_use = (k_prime / 2).min(b);
    let a_use = k_prime - 2 * b_use;
    let mut skips: Vec<(usize, usize)> = Vec::new();
    skips.extend(
        cp.chords
            .iter()
            .filter(|c| c.span == 3)
            .take(b_use)
            .map(|c| cp.interval(c)),
    );
    skips.extend(
        cp.chords
            .iter()
            .filter(|c| c.span == 2)
            .take(a_use)
            .map(|c| cp.interval(c)),
    );
    let vs = cp.path.vertices();
    let mut drop = vec![false; vs.len()];
    for (s, e) in skips {
        for d in drop.iter_mut().take(e).skip(s + 1) {
            *d = true;
        }
    }
    Ok(Path::from_vertices(
        vs.iter().zip(drop).filter(|(_, d)| !d).map(|(&v, _)| v).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(vs: &[usize]) -> OrientedCycle {
        OrientedCycle::from_sequence(vs.to_vec()).unwrap()
    }

    #[test]
    fn predecessors() {
        let cy = c(&[0, 1, 2, 3, 4]);
        assert_eq!(cy.predecessor(3, 1).unwrap(), 2);
        assert_eq!(cy.predecessor(0, 3).unwrap(), 2);
        assert_eq!(cy.predecessor(4, 0).unwrap(), 4);
        assert_eq!(cy.predecessor(9, 1), Err(Error::NotOnHost(9)));
    }

    #[test]
    fn canonical_rotation() {
        let cy = c(&[3, 4, 0, 1, 2]);
        assert_eq!(cy.vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(cy, c(&[0, 1, 2, 3, 4]));
        assert_eq!(cy.reversed().vertices(), &[0, 4, 3, 2, 1]);
    }

    #[test]
    fn segments() {
        let cy = c(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(cy.segment(1, 4, Direction::Forward).unwrap().vertices(), &[1, 2, 3, 4]);
        assert_eq!(cy.segment(1, 4, Direction::Backward).unwrap().vertices(), &[1, 0, 5, 4]);
        assert_eq!(cy.segment(0, 1, Direction::Forward).unwrap().vertices(), &[0, 1]);
        assert!(cy.segment(2, 2, Direction::Forward).is_err());
        assert!(cy.segment(2, 7, Direction::Forward).is_err());
    }

    #[test]
    fn validation() {
        let k4 = Graph::complete(4);
        assert_eq!(validate_cycle(&k4, &c(&[0, 1, 2])), Ok(()));
        let c5 = Graph::cycle(5);
        assert_eq!(
            validate_cycle(&c5, &c(&[0, 1, 3])),
            Err(Violation::NonEdge { u: 1, v: 3 })
        );
        assert!(matches!(
            OrientedCycle::from_sequence(vec![0, 1, 0]),
            Err(Error::InvalidCycle(Violation::Duplicate { vertex: 0 }))
        ));
    }

    fn path_with_chords(n: usize, chords: &[(usize, usize)]) -> (Graph, ChordedPath) {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        edges.extend_from_slice(chords);
        let g = Graph::from_edges(n, edges).unwrap();
        let p = Path::new(&g, (0..n).collect()).unwrap();
        let cp = ChordedPath::new(&g, p, chords).unwrap();
        (g, cp)
    }

    #[test]
    fn contraction_examples() {
        let (g, cp) = path_with_chords(5, &[(0, 2)]);
        assert_eq!(contract_chords(&cp, 1).unwrap().vertices(), &[0, 2, 3, 4]);
        assert_eq!(contract_chords(&cp, 0).unwrap(), cp.path);

        let (g2, cp2) = path_with_chords(7, &[(0, 2), (3, 6)]);
        let p = contract_chords(&cp2, 3).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!((p.first(), p.last()), (0, 6));
        p.validate(&g2).unwrap();
        assert!(contract_chords(&cp2, 4).is_err());
        let _ = g;
    }

    #[test]
    fn contraction_parity() {
        let (_, cp) = path_with_chords(7, &[(0, 3), (3, 6)]);
        assert!(matches!(contract_chords(&cp, 1), Err(Error::Infeasible(_))));
        assert_eq!(contract_chords(&cp, 2).unwrap().order(), 5);
        assert_eq!(contract_chords(&cp, 4).unwrap().vertices(), &[0, 3, 6]);
    }

    #[test]
    fn overlapping_chords_rejected() {
        let g = Graph::complete(6);
        let p = Path::new(&g, (0..6).collect()).unwrap();
        assert!(ChordedPath::new(&g, p.clone(), &[(0, 2), (1, 3)]).is_err());
        assert!(ChordedPath::new(&g, p.clone(), &[(0, 2), (2, 4)]).is_ok());
        assert!(ChordedPath::new(&g, p, &[(0, 4)]).is_err());
    }

    #[test]
    fn cycle_json_is_canonical_array() {
        let cy = c(&[2, 0, 1]);
        assert_eq!(serde_json::to_string(&cy).unwrap(), "[0,1,2]");
        let back: OrientedCycle = serde_json::from_str("[1,2,0]").unwrap();
        assert_eq!(back, cy);
    }
}
