use std::collections::BTreeMap;

use pcgroup::classify::{is_atomic, is_triangle_built, is_triangle_free};
use pcgroup::{
    decide_universal_equivalence, deflation_triangle_sentence_holds, discriminating_retraction, DecideOptions,
    EqOutcome, PcGroup, SimplicialGraph,
};
use pcgroup_testkit::{all_graphs_up_to, random_graph, random_word, rng, RewriteOracle};
use itertools::Itertools;
use rand::Rng;

fn covered(g: &SimplicialGraph) -> bool {
    is_atomic(g) || deflation_triangle_sentence_holds(g) || is_triangle_built(g)
}

#[test]
fn sentence_is_triangle_free_deflation() {
    for g in all_graphs_up_to(5) {
        assert_eq!(deflation_triangle_sentence_holds(&g), is_triangle_free(&g.deflation()));
    }
}

#[test]
fn self_equivalence_at_radius_zero() {
    for g in all_graphs_up_to(4) {
        let v = decide_universal_equivalence(&g, &g, &DecideOptions::with_cap(0)).unwrap();
        if covered(&g) {
            assert_eq!(v.outcome, EqOutcome::Equivalent, "{}", g.to_json());
        }
        if let Some((a, b)) = &v.detail {
            assert!(a.validate() && b.validate());
        }
    }
}

#[test]
fn equivalence_is_symmetric() {
    let mut r = rng(19);
    let mut checked = 0;
    while checked < 20 {
        let (n, m) = (r.gen_range(1..=4), r.gen_range(1..=4));
        let d = random_graph(&mut r, n, 0.5);
        let g = random_graph(&mut r, m, 0.5);
        if !(covered(&d) && covered(&g)) {
            continue;
        }
        let opts = DecideOptions::with_cap(1);
        let there = decide_universal_equivalence(&d, &g, &opts).unwrap();
        let back = decide_universal_equivalence(&g, &d, &opts).unwrap();
        if there.outcome != EqOutcome::Inconclusive && back.outcome != EqOutcome::Inconclusive {
            assert_eq!(there.outcome, back.outcome);
        }
        for v in [&there, &back] {
            if v.outcome == EqOutcome::Equivalent {
                if let Some((a, b)) = &v.detail {
                    assert!(a.validate() && b.validate());
                }
            }
        }
        checked += 1;
    }
}

#[test]
fn retractions_are_homomorphisms_and_discriminate() {
    let p3 = SimplicialGraph::path(3);
    let infl = PcGroup::new(p3.inflation(2).unwrap());
    let mut r = rng(23);
    let mut found = 0;
    while found < 100 {
        let w = random_word(&mut r, 6, 6);
        if infl.is_trivial(&w).unwrap() {
            continue;
        }
        let mut oracle = RewriteOracle::new(&p3);
        let mut ok = false;
        for exps in (0..6).map(|_| 1..=8i64).multi_cartesian_product() {
            let map: BTreeMap<(usize, usize), i64> =
                exps.iter().enumerate().map(|(i, &s)| ((i / 2, i % 2 + 1), s)).collect();
            let ret = discriminating_retraction(&p3, 2, &map).unwrap();
            assert!(ret.check_homomorphism());
            let image = ret.apply(&w).unwrap();
            assert_eq!(image.is_empty(), oracle.is_trivial(&image));
            if !image.is_empty() {
                ok = true;
                break;
            }
        }
        assert!(ok, "{}", infl.format_word(&w));
        found += 1;
    }
}
