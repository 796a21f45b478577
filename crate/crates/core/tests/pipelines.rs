mod common;

use common::{arb_dense_graph, has_cycle, has_p5_within};
use pancyclic::cycle::validate_cycle;
use pancyclic::pipelines::long::{chord_target, jump_bound};
use pancyclic::pipelines::shortening::{indep_window, mindeg_window};
use pancyclic::pipelines::{
    certify_pancyclic, lemma_long, lower_range_faithful, mid_range_extend, middle_range_faithful, shorten_path_indep,
    shorten_path_mindeg, upper_range_faithful, Pipeline, PipelineParams, Windows,
};
use pancyclic::rotation::ce_hamilton;
use pancyclic::{ConditionProfile, Direction, Graph, OrientedCycle, Path};
use proptest::prelude::*;
use proptest::test_runner::Config;

fn config(cases: u32) -> Config {
    Config {
        cases,
        max_global_rejects: 100_000,
        ..Config::default()
    }
}

fn same_ends(a: &Path, b: &Path) -> bool {
    a.first() == b.first() && a.last() == b.last()
}

/// Span-2 chords whose closed spans share at most an endpoint, maximised
/// over the starting offset of a greedy sweep.
fn span2_chords(g: &Graph, c: &OrientedCycle) -> usize {
    let m = c.len();
    let hit: Vec<bool> = (0..m).map(|i| g.has_edge(c.at(i), c.at((i + 2) % m))).collect();
    (0..m)
        .map(|start| {
            let (mut count, mut i) = (0, 0);
            while i + 2 <= m {
                if hit[(start + i) % m] {
                    count += 1;
                    i += 2;
                } else {
                    i += 1;
                }
            }
            count
        })
        .max()
        .unwrap_or(0)
}

/// A path of `len` edges along a Hamilton cycle of `g`.
fn hamilton_segment(g: &Graph, start: usize, len: usize) -> Option<Path> {
    let c = ce_hamilton(g).ok()?;
    let n = c.len();
    let u = c.at(start % n);
    let v = c.successor(u, len.min(n - 1)).ok()?;
    c.segment(u, v, Direction::Forward).ok()
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn ranges_hit_exact_length(g in arb_dense_graph(8, 22, 75), pick in 0usize..100) {
        let prof = ConditionProfile::compute(&g).unwrap();
        prop_assume!(prof.kappa > prof.alpha);
        let ell = 3 + pick % (g.n() - 2);
        let params = PipelineParams::default();
        let runs = [
            (Pipeline::UpperRange, upper_range_faithful(&g, &prof, ell, &params)),
            (Pipeline::MiddleRange, middle_range_faithful(&g, &prof, ell, &params)),
            (Pipeline::LowerRange, lower_range_faithful(&g, &prof, ell, &params)),
        ];
        for (p, out) in runs {
            if let Ok(rc) = out {
                prop_assert_eq!(rc.cycle.len(), ell);
                prop_assert!(validate_cycle(&g, &rc.cycle).is_ok());
                prop_assert_eq!(rc.provenance.pipeline, p);
            }
        }
    }

    #[test]
    fn certificates_hold_only_validated_cycles(g in arb_dense_graph(4, 11, 55)) {
        let cert = certify_pancyclic(&g, &PipelineParams::default()).unwrap();
        for (&ell, c) in &cert.cycles {
            prop_assert_eq!(c.len(), ell);
            prop_assert!(validate_cycle(&g, c).is_ok());
        }
        for &ell in &cert.missing {
            prop_assert!(!cert.cycles.contains_key(&ell));
            prop_assert!(!has_cycle(&g, ell), "missing {} though a cycle exists", ell);
        }
        let keys: Vec<usize> = cert.cycles.keys().chain(&cert.missing).copied().collect();
        prop_assert_eq!(keys.len(), g.n().saturating_sub(2));
    }

    #[test]
    fn lemma_long_meets_its_properties(g in arb_dense_graph(14, 28, 60), pick in 0usize..100) {
        let prof = ConditionProfile::compute(&g).unwrap();
        let params = PipelineParams { delta: 0.3, eta: 0.6, ..Default::default() };
        prop_assume!(prof.kappa > prof.alpha && params.delta * prof.alpha as f64 >= 1.0);
        let t = g.find_triangle().unwrap();
        let c0 = OrientedCycle::new(&g, t.to_vec()).unwrap();
        let p0 = Path::new(&g, vec![t[0], t[1]]).unwrap();
        let ell = 3 + pick % (g.n() - 2);
        if let Ok(c) = lemma_long(&g, &c0, &p0, ell, &params) {
            prop_assert!(validate_cycle(&g, &c).is_ok());
            prop_assert!(c.len() <= ell + jump_bound(g.n(), prof.alpha, params.delta));
            if c.len() < ell {
                let rest: Vec<usize> = (0..g.n()).filter(|&v| !c.contains(v)).collect();
                prop_assert!(!has_p5_within(&g, &rest));
            }
            prop_assert!(c.contains_path(&p0) || span2_chords(&g, &c) >= chord_target(prof.alpha, params.delta));
        }
    }

    #[test]
    fn shortening_stays_in_window(g in arb_dense_graph(10, 24, 65), start in 0usize..24, len in 3usize..24) {
        let Some(p) = hamilton_segment(&g, start, len) else { return Ok(()) };
        if let Ok(q) = shorten_path_mindeg(&g, &p) {
            prop_assert!(q.validate(&g).is_ok() && same_ends(&p, &q));
            prop_assert!(q.order() < p.order());
            prop_assert!(p.order() - q.order() <= mindeg_window(g.n(), g.min_degree()).unwrap());
        }
        let alpha = pancyclic::independence::independence_number(&g).unwrap();
        if p.order() > 4 * alpha {
            if let Ok(q) = shorten_path_indep(&g, &p, alpha) {
                prop_assert!(q.validate(&g).is_ok() && same_ends(&p, &q));
                prop_assert!(q.order() < p.order());
                prop_assert!(p.order() - q.order() <= indep_window(alpha, p.order()));
            }
        }
    }

    #[test]
    fn mid_range_extension_in_window(g in arb_dense_graph(24, 44, 50), start in 0usize..44, len in 3usize..22, rr in 0usize..100) {
        let len = len.min(g.n() / 2);
        let Some(p) = hamilton_segment(&g, start, len) else { return Ok(()) };
        prop_assume!(2 * p.length() >= 6);
        let r = 6 + rr % (2 * p.length() - 5);
        let alpha = pancyclic::independence::independence_number(&g).unwrap();
        if let Ok(q) = mid_range_extend(&g, &p, r, alpha) {
            prop_assert!(q.validate(&g).is_ok() && same_ends(&p, &q));
            prop_assert!(p.length() < q.length() && q.length() <= p.length() + r);
        }
    }
}

proptest! {
    #![proptest_config(config(2000))]

    #[test]
    fn window_gap_count_matches_scan(n in 3usize..2000, a in 1usize..2000) {
        let alpha = 1 + a % n;
        let w = Windows::new(n, alpha, 0.01);
        let brute = (3..=n).filter(|&l| w.accepting(l).is_empty()).count();
        prop_assert_eq!(w.gap_count(), brute);
    }
}
