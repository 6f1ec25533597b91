mod common;

use common::*;
use mpartition::{enumerate_digraphs, Digraph};
use proptest::prelude::*;

#[test]
fn labeled_three_vertex_digraphs_collapse_to_sixteen_keys() {
    let keys: std::collections::BTreeSet<String> = labeled(3).map(|g| g.canonical_key()).collect();
    assert_eq!(labeled(3).count(), 64);
    assert_eq!(keys.len(), 16);
    // same classes as the brute-force minimum over all six relabelings
    assert_eq!(keys.into_iter().collect::<Vec<_>>(), brute_classes(3));
}

#[test]
fn brute_force_class_counts() {
    // oracle numbers for the isomorph-free generator
    assert_eq!(brute_classes(1).len(), 1);
    assert_eq!(brute_classes(2).len(), 3);
    assert_eq!(brute_classes(3).len(), 16);
    assert_eq!(brute_classes(4).len(), 218);
}

#[test]
fn canonical_matches_brute_force_on_sampled_five_vertex_digraphs() {
    let perms = permutations(5);
    for g in labeled(5).step_by(997) {
        assert_eq!(g.canonical_key(), brute_canonical_key(&g, &perms), "{g}");
    }
}

#[test]
fn isomorphism_examples() {
    assert!(d("3:>.>").is_isomorphic(&d("3:<.<")));
    assert!(brute_isomorphic(&d("3:>.>"), &d("3:<.<")));
    assert!(!d("2:>").is_isomorphic(&d("2:=")));
    assert!(!d("2:.").is_isomorphic(&d("2:.").complement()));
    assert!(!d("2:.").is_isomorphic(&d("3:...")));
}

#[test]
fn isomorphism_agrees_with_permutation_search_at_n4() {
    let reps = enumerate_digraphs(4).unwrap();
    let sample: Vec<Digraph> = labeled(4).step_by(37).collect();
    for a in &sample {
        for b in reps.iter().step_by(11) {
            assert_eq!(a.is_isomorphic(b), brute_isomorphic(a, b), "{a} {b}");
        }
    }
}

#[test]
fn involutions_and_commutation_exhaustive_to_n4() {
    for n in 0..=4 {
        for g in labeled(n) {
            assert_eq!(g.complement().complement(), g);
            assert_eq!(g.reverse().reverse(), g);
            assert_eq!(g.complement().reverse(), g.reverse().complement());
        }
    }
}

#[test]
fn canonical_invariant_under_every_relabeling_to_n4() {
    for n in 1..=4 {
        let perms = permutations(n);
        for g in labeled(n) {
            let key = g.canonical_key();
            for perm in &perms {
                assert_eq!(g.permute(perm).unwrap().canonical_key(), key);
            }
        }
    }
}

#[test]
fn reverse_involution_over_n4_classes() {
    let reps = enumerate_digraphs(4).unwrap();
    assert_eq!(reps.len(), 218);
    for g in &reps {
        assert_eq!(g.reverse().reverse(), *g);
    }
    let n3 = enumerate_digraphs(3).unwrap();
    assert_eq!(n3.len(), 16);
    for g in &n3 {
        assert_eq!(g.complement().complement(), *g);
    }
}

#[test]
fn odd_cycle_inputs_at_the_vertex_cap() {
    let c11 = Digraph::from_arcs(11, &(0..11).map(|v| (v, (v + 1) % 11)).collect::<Vec<_>>()).unwrap();
    let rotated = c11.permute(&(0..11).map(|v| (v + 4) % 11).collect::<Vec<_>>()).unwrap();
    assert_eq!(c11.canonical_key(), rotated.canonical_key());
    assert!(!c11.is_isomorphic(&c11.reverse().complement()));
}

fn digraph_strategy(min: usize, max: usize) -> impl Strategy<Value = Digraph> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(0usize..4, n * n.saturating_sub(1) / 2).prop_map(move |codes| {
            let states: Vec<_> = codes.into_iter().map(|c| mpartition::ArcState::ALL[c]).collect();
            Digraph::from_states(n, &states).unwrap()
        })
    })
}

fn digraph_and_perm(min: usize, max: usize) -> impl Strategy<Value = (Digraph, Vec<usize>)> {
    digraph_strategy(min, max).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn involutions_hold_beyond_n4(g in digraph_strategy(5, 8)) {
        prop_assert_eq!(g.complement().complement(), g);
        prop_assert_eq!(g.reverse().reverse(), g);
        prop_assert_eq!(g.complement().reverse(), g.reverse().complement());
    }

    #[test]
    fn canonical_is_relabeling_invariant((g, perm) in digraph_and_perm(2, 10)) {
        let c = g.canonical();
        prop_assert_eq!(g.permute(&c.witness).unwrap(), c.digraph);
        prop_assert_eq!(g.permute(&perm).unwrap().canonical().digraph, c.digraph);
    }

    #[test]
    fn render_parse_round_trip(g in digraph_strategy(0, 12)) {
        prop_assert_eq!(g.to_string().parse::<Digraph>().unwrap(), g);
    }

    #[test]
    fn induced_composes(g in digraph_strategy(3, 8), s_mask in 0u32..256, t_mask in 0u32..256) {
        let n = g.order();
        let s: Vec<usize> = (0..n).filter(|&v| s_mask >> v & 1 == 1).collect();
        let t: Vec<usize> = (0..s.len()).filter(|&v| t_mask >> v & 1 == 1).collect();
        let image: Vec<usize> = t.iter().map(|&i| s[i]).collect();
        let lhs = g.induced(&s).unwrap().induced(&t).unwrap();
        prop_assert_eq!(lhs, g.induced(&image).unwrap());
    }
}
