//! Span-2/3 chords of a cycle and shortening a cycle through them.

use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A chord `c[start]–c[start + span]` of a cycle, positions taken mod `|C|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleChord {
    pub start: usize,
    pub span: usize,
}

/// Every span-2 and span-3 chord of `c` (span 3 only when `|C| >= 6`).
pub fn cycle_chords(g: &Graph, c: &OrientedCycle) -> Vec<CycleChord> {
    let len = c.len();
    let mut out = Vec::new();
    for span in [2, 3] {
        if len < 2 * span {
            continue;
        }
        for start in 0..len {
            // A span-3 chord of a hexagon is found from both ends.
            if 2 * span == len && start >= span {
                continue;
            }
            if g.has_edge(c.at(start), c.at((start + span) % len)) {
                out.push(CycleChord { start, span });
            }
        }
    }
    out
}

/// Greedy earliest-end selection after cutting the cycle at `cut`. `gap` is 0
/// when selected stretches may share an endpoint and 2 when only their
/// interiors must be disjoint (they may then overlap in two vertices).
fn schedule(chords: &[CycleChord], len: usize, cut: usize, literal: bool) -> Vec<CycleChord> {
    let mut iv: Vec<(usize, usize, CycleChord)> = chords
        .iter()
        .filter_map(|ch| {
            let s = (ch.start + len - cut) % len;
            (s + ch.span <= len).then_some((s, s + ch.span, *ch))
        })
        .collect();
    iv.sort_by_key(|&(s, e, _)| (e, s));
    let mut chosen = Vec::new();
    let mut last_end: Option<usize> = None;
    for (s, e, ch) in iv {
        let ok = match last_end {
            None => true,
            // Interiors s+1..e-1 against the previous e'-1.
            Some(le) if literal => s + 1 > le - 1,
            Some(le) => s >= le,
        };
        if ok {
            chosen.push(ch);
            last_end = Some(e);
        }
    }
    chosen
}

fn best_schedule(chords: &[CycleChord], len: usize, literal: bool) -> Vec<CycleChord> {
    let mut cuts: Vec<usize> = chords.iter().map(|c| c.start).collect();
    cuts.sort_unstable();
    cuts.dedup();
    if cuts.is_empty() {
        return Vec::new();
    }
    cuts.iter()
        .map(|&cut| schedule(chords, len, cut, literal))
        .max_by_key(Vec::len)
        .unwrap_or_default()
}

/// Many span-2/3 chords of `c` whose spanned stretches share at most an
/// endpoint (a lower bound on the maximum).
pub fn strict_chords(g: &Graph, c: &OrientedCycle, spans: &[usize]) -> Vec<CycleChord> {
    let all: Vec<CycleChord> = cycle_chords(g, c)
        .into_iter()
        .filter(|ch| spans.contains(&ch.span))
        .collect();
    best_schedule(&all, c.len(), false)
}

/// Many span-2/3 chords of `c` with pairwise disjoint skipped interiors (a
/// lower bound on the maximum).
pub fn literal_chords(g: &Graph, c: &OrientedCycle) -> Vec<CycleChord> {
    best_schedule(&cycle_chords(g, c), c.len(), true)
}

/// Removes exactly `d` vertices from `c` by routing through strictly
/// non-intersecting span-2/3 chords, chosen by a reachability table over the
/// positions after each possible cut.
pub fn shorten_cycle_by(g: &Graph, c: &OrientedCycle, d: usize) -> Result<OrientedCycle> {
    if d == 0 {
        return Ok(c.clone());
    }
    let len = c.len();
    if d + 3 > len {
        return Err(Error::Precondition(format!("cannot shorten a {len}-cycle by {d}")));
    }
    let all = cycle_chords(g, c);
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); len];
    for ch in &all {
        at[ch.start].push(ch.span);
    }
    let mut cuts: Vec<usize> = all.iter().map(|ch| ch.start).collect();
    cuts.sort_unstable();
    cuts.dedup();
    for cut in cuts {
        // reach[p][r]: positions 0..p consumed with r vertices removed;
        // back[p][r] records the step taken into that state.
        let mut reach = vec![vec![false; d + 1]; len + 1];
        let mut back = vec![vec![(0usize, 0usize); d + 1]; len + 1];
        reach[0][0] = true;
        for p in 0..len {
            for r in 0..=d {
                if !reach[p][r] {
                    continue;
                }
                if !reach[p + 1][r] {
                    reach[p + 1][r] = true;
                    back[p + 1][r] = (p, r);
                }
                for &span in &at[(p + cut) % len] {
                    let (q, r2) = (p + span, r + span - 1);
                    if q <= len && r2 <= d && !reach[q][r2] {
                        reach[q][r2] = true;
                        back[q][r2] = (p, r);
                    }
                }
            }
        }
        if !reach[len][d] {
            continue;
        }
        let mut drop = vec![false; len];
        let (mut p, mut r) = (len, d);
        while p > 0 {
            let (pp, pr) = back[p][r];
            if pr != r {
                for k in pp + 1..p {
                    drop[(k + cut) % len] = true;
                }
            }
            (p, r) = (pp, pr);
        }
        let seq: Vec<usize> = (0..len).filter(|&i| !drop[i]).map(|i| c.at(i)).collect();
        let out = OrientedCycle::new(g, seq)?;
        debug_assert_eq!(out.len(), len - d);
        return Ok(out);
    }
    Err(Error::Stall(format!(
        "no chord combination removes exactly {d} vertices from a {len}-cycle"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_chords() {
        let g = Graph::complete(12);
        let c = OrientedCycle::new(&g, (0..12).collect()).unwrap();
        assert_eq!(strict_chords(&g, &c, &[2]).len(), 6);
        assert!(literal_chords(&g, &c).len() >= 11);
        for d in 0..=8 {
            assert_eq!(shorten_cycle_by(&g, &c, d).unwrap().len(), 12 - d);
        }
        assert!(shorten_cycle_by(&g, &c, 9).is_err());
    }

    #[test]
    fn chordless_cycle() {
        let g = Graph::cycle(8);
        let c = OrientedCycle::new(&g, (0..8).collect()).unwrap();
        assert!(cycle_chords(&g, &c).is_empty());
        assert!(matches!(shorten_cycle_by(&g, &c, 1), Err(Error::Stall(_))));
    }

    #[test]
    fn hexagon_long_chords_once() {
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let g = Graph::from_edges(6, edges).unwrap();
        let c = OrientedCycle::new(&g, (0..6).collect()).unwrap();
        assert_eq!(cycle_chords(&g, &c), vec![CycleChord { start: 0, span: 3 }]);
        assert_eq!(shorten_cycle_by(&g, &c, 2).unwrap().len(), 4);
    }
}
