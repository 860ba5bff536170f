use std::collections::BTreeSet;

use pcgroup::{PcGroup, SimplicialGraph, Word};
use pcgroup_testkit::{conjugate_by_orbit, random_graph, random_word, rng};
use proptest::prelude::*;
use rand::Rng;

fn setup(seed: u64, max_n: usize, max_len: usize, count: usize) -> (PcGroup, Vec<Word>) {
    let mut r = rng(seed);
    let n = r.gen_range(1..=max_n);
    let g = random_graph(&mut r, n, 0.5);
    let words = (0..count).map(|_| random_word(&mut r, n, max_len)).collect();
    (PcGroup::new(g), words)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn decomposition_reassembles(seed in any::<u64>()) {
        let (g, ws) = setup(seed, 5, 12, 1);
        let d = g.block_decomposition(&ws[0]).unwrap();
        prop_assert!(g.equal(&d.reassemble(), &ws[0]).unwrap());
    }

    #[test]
    fn blocks_commute_with_disjoint_connected_alphabets(seed in any::<u64>()) {
        let (g, ws) = setup(seed, 5, 12, 1);
        let d = g.block_decomposition(&ws[0]).unwrap();
        let co = g.graph().complement();
        let alphabets: Vec<BTreeSet<usize>> =
            d.blocks.iter().map(|b| g.alphabet_of(&b.root).unwrap()).collect();
        for (i, a) in alphabets.iter().enumerate() {
            let verts: Vec<usize> = a.iter().copied().collect();
            prop_assert!(co.induced_subgraph(&verts).unwrap().is_connected());
            for (j, b) in alphabets.iter().enumerate().skip(i + 1) {
                prop_assert!(a.is_disjoint(b));
                prop_assert!(g.commutes(&d.blocks[i].root, &d.blocks[j].root).unwrap());
            }
        }
    }

    #[test]
    fn roots_are_not_proper_powers(seed in any::<u64>()) {
        let (g, ws) = setup(seed, 5, 12, 1);
        prop_assume!(!g.is_trivial(&ws[0]).unwrap());
        let (root, k) = g.least_root(&ws[0]).unwrap();
        prop_assert!(g.equal(&root.pow(k as i64), &ws[0]).unwrap());
        prop_assert_eq!(g.least_root(&root).unwrap(), (root.clone(), 1));
        for b in g.block_decomposition(&ws[0]).unwrap().blocks {
            prop_assert_eq!(g.least_root(&b.root).unwrap(), (g.normal_form(&b.root).unwrap(), 1));
        }
    }

    #[test]
    fn powers_recover_their_root(seed in any::<u64>()) {
        let mut r = rng(seed ^ 0x5eed);
        let (g, ws) = setup(seed, 5, 6, 1);
        prop_assume!(!g.is_trivial(&ws[0]).unwrap());
        let (root, _) = g.least_root(&ws[0]).unwrap();
        let k = r.gen_range(1..=4u64);
        let (again, m) = g.least_root(&root.pow(k as i64)).unwrap();
        prop_assert_eq!(again, root);
        prop_assert_eq!(m, k);
    }

    #[test]
    fn centralizer_elements_commute(seed in any::<u64>()) {
        let (g, ws) = setup(seed, 5, 10, 1);
        prop_assume!(!g.is_trivial(&ws[0]).unwrap());
        let basis = g.centralizer_basis(&ws[0]).unwrap();
        for c in basis.cyclic_parts.iter().chain(&basis.abelian_part) {
            prop_assert!(g.commutes(c, &ws[0]).unwrap());
        }
    }

    #[test]
    fn conjugacy_matches_orbit_oracle(seed in any::<u64>()) {
        let (g, ws) = setup(seed, 4, 6, 2);
        let fast = g.is_conjugate(&ws[0], &ws[1]).unwrap();
        prop_assert_eq!(fast, conjugate_by_orbit(g.graph(), &ws[0], &ws[1]));
        // rotations are conjugate; a rotation with one letter inverted usually is not
        let mut letters = ws[0].letters().to_vec();
        prop_assume!(!letters.is_empty());
        let k = (seed as usize) % letters.len();
        letters.rotate_left(k);
        let rotated = Word::new(letters.clone());
        prop_assert!(g.is_conjugate(&ws[0], &rotated).unwrap());
        letters[0] = letters[0].inv();
        let flipped = Word::new(letters);
        prop_assert_eq!(
            g.is_conjugate(&ws[0], &flipped).unwrap(),
            conjugate_by_orbit(g.graph(), &ws[0], &flipped)
        );
    }

    #[test]
    fn conjugates_are_conjugate(seed in any::<u64>()) {
        let (g, ws) = setup(seed, 5, 8, 3);
        let c = ws[0].conjugate_by(&ws[1]);
        prop_assert!(g.is_conjugate(&ws[0], &c).unwrap());
        prop_assert!(g.is_conjugate(&c, &ws[0]).unwrap());
        prop_assert!(g.is_conjugate(&ws[0], &ws[0]).unwrap());
        let cc = c.conjugate_by(&ws[2]);
        prop_assert!(g.is_conjugate(&ws[0], &cc).unwrap());
        prop_assert_eq!(g.is_conjugate(&ws[0], &ws[2]).unwrap(), g.is_conjugate(&ws[2], &ws[0]).unwrap());
    }
}

#[test]
fn centralizer_of_a_in_p3() {
    let p3 = SimplicialGraph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
    let g = PcGroup::new(p3);
    let basis = g.centralizer_basis(&g.parse_word("a").unwrap()).unwrap();
    let show = |ws: &[Word]| ws.iter().map(|w| g.format_word(w)).collect::<Vec<_>>();
    assert_eq!(show(&basis.cyclic_parts), ["a"]);
    assert_eq!(show(&basis.abelian_part), ["b"]);
}
