use proptest::prelude::*;
use tdgame_core::enumerate::{all_graphs, isolate_free_graphs};
use tdgame_core::invariants::{is_open_open_irredundant, minimal_total_dominating_sets};
use tdgame_core::{upper_gamma_t, Graph, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Proper-subset minimality, straight from the definition.
fn minimal_by_subsets(g: &Graph, set: VertexSet) -> bool {
    let bits = set.bits();
    let mut sub = bits;
    while sub != 0 {
        sub = (sub - 1) & bits;
        if g.is_total_dominating(VertexSet::from_bits(sub)) {
            return false;
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn private_neighborhood_splits(g in graph_strategy(8), mask in any::<u32>()) {
        let set = VertexSet::from_bits(mask) & g.vertices();
        for v in set {
            let p = g.private_neighborhoods(set, v).unwrap();
            // definition scan over all vertices
            let scan: VertexSet = g
                .vertices()
                .iter()
                .filter(|&w| g.neighbors(w) & set == VertexSet::singleton(v))
                .collect();
            prop_assert_eq!(p.pn, scan);
            prop_assert_eq!(p.epn | p.ipn, p.pn);
            prop_assert!(p.epn.is_disjoint(p.ipn));
            prop_assert!(p.ipn.is_subset(set) && p.epn.is_disjoint(set));
        }
    }

    #[test]
    fn removal_minimality_agrees(g in graph_strategy(9), mask in any::<u32>()) {
        let set = g.vertices() & VertexSet::from_bits(mask);
        if g.is_total_dominating(set) {
            prop_assert_eq!(
                g.is_minimal_total_dominating(set).unwrap(),
                g.is_minimal_total_dominating_by_removal(set).unwrap()
            );
        }
    }
}

#[test]
fn minimality_tests_agree_exhaustively() {
    for n in 2..=8 {
        for g in isolate_free_graphs(n).unwrap() {
            for bits in 0u32..1 << n {
                let set = VertexSet::from_bits(bits);
                if !g.is_total_dominating(set) {
                    assert!(g.is_minimal_total_dominating(set).is_err());
                    continue;
                }
                let lemma = g.is_minimal_total_dominating(set).unwrap();
                assert_eq!(lemma, minimal_by_subsets(&g, set), "{g:?} {set}");
            }
        }
    }
}

#[test]
fn minimal_td_sets_are_open_open_irredundant() {
    for n in 2..=7 {
        for g in isolate_free_graphs(n).unwrap() {
            let sets = minimal_total_dominating_sets(&g);
            assert!(sets.iter().all(|&s| is_open_open_irredundant(&g, s)), "{g:?}");
            let max = sets.iter().map(|s| s.len()).max().unwrap();
            assert_eq!(max, upper_gamma_t(&g).unwrap().value);
        }
    }
}

#[test]
fn isolates_are_rejected() {
    for g in all_graphs(5).unwrap().into_iter().filter(|g| !g.is_isolate_free()) {
        assert!(upper_gamma_t(&g).is_err());
        assert!(tdgame_core::gti(&g, VertexSet::EMPTY).is_err());
    }
}
