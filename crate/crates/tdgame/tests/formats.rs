use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdgame::format::split_payloads;
use tdgame::{parse_graph, serialize_graph, GraphFormat, GraphText};
use tdgame_core::enumerate::{canonical_code, random_graph};
use tdgame_core::{family, Graph};

/// All graphs on four vertices with their edge lists, as produced by a
/// reference graph6 codec.
const ORDER4: [(&str, &[(usize, usize)]); 11] = [
    ("C?", &[]),
    ("C@", &[(2, 3)]),
    ("CB", &[(1, 3), (2, 3)]),
    ("C`", &[(0, 1), (2, 3)]),
    ("CJ", &[(1, 2), (1, 3), (2, 3)]),
    ("CF", &[(0, 3), (1, 3), (2, 3)]),
    ("Ck", &[(0, 1), (0, 3), (1, 2)]),
    ("CN", &[(0, 3), (1, 2), (1, 3), (2, 3)]),
    ("Cl", &[(0, 1), (0, 3), (1, 2), (2, 3)]),
    ("C|", &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
    ("C~", &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
];

#[test]
fn reference_order4_corpus() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/all_order4.g6"))
        .unwrap();
    let payloads = split_payloads(&text, GraphFormat::Graph6);
    assert_eq!(payloads.len(), 11);
    let mut codes = BTreeSet::new();
    for (payload, (want_payload, want_edges)) in payloads.iter().zip(ORDER4) {
        assert_eq!(payload, want_payload);
        let g = parse_graph(&GraphText::new(GraphFormat::Graph6, payload.as_str())).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), want_edges, "{payload}");
        assert_eq!(serialize_graph(&g, GraphFormat::Graph6).payload, *payload);
        codes.insert(canonical_code(&g));
    }
    assert_eq!(codes.len(), 11, "pairwise non-isomorphic");
}

#[test]
fn reference_payloads() {
    let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(serialize_graph(&p3, GraphFormat::Graph6).payload, "Bg");
    let petersen = parse_graph(&GraphText::new(GraphFormat::Graph6, "IheA@GUAo")).unwrap();
    assert_eq!(
        petersen.edges(),
        [
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 6),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 9),
            (5, 7),
            (5, 8),
            (6, 8),
            (6, 9),
            (7, 9)
        ]
    );
}

#[test]
fn family_payloads() {
    let g1 = family(&"gk:1".parse().unwrap()).unwrap();
    let text = serialize_graph(&g1, GraphFormat::Graph6);
    let back = parse_graph(&text).unwrap();
    assert_eq!((back.order(), back.edge_count()), (8, 22));
    let el = serialize_graph(&g1, GraphFormat::EdgeList).payload;
    assert_eq!(el.lines().count(), 23);
    assert!(el.starts_with("8\n"));
}

#[test]
fn seeded_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for _ in 0..100 {
        let n = rng.gen_range(0..=26);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(n, p, &mut rng).unwrap();
        for format in [GraphFormat::EdgeList, GraphFormat::Graph6] {
            let text = serialize_graph(&g, format);
            let h = parse_graph(&text).unwrap();
            assert_eq!(h, g);
            assert_eq!(serialize_graph(&h, format), text, "serialization is canonical");
        }
    }
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (0usize..=12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn parse_inverts_serialize(g in graph_strategy()) {
        for format in [GraphFormat::EdgeList, GraphFormat::Graph6] {
            prop_assert_eq!(&parse_graph(&serialize_graph(&g, format)).unwrap(), &g);
        }
    }

    #[test]
    fn edge_list_canonicalization_is_idempotent(g in graph_strategy(), seed in any::<u64>()) {
        // Shuffled, duplicated and reversed lines all canonicalize alike.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut lines: Vec<String> = g
            .edges()
            .into_iter()
            .flat_map(|(u, v)| [format!("{u} {v}"), format!("{v} {u}  # again")])
            .collect();
        rand::seq::SliceRandom::shuffle(&mut lines[..], &mut rng);
        let messy = format!("# header\n{}\n{}\n", g.order(), lines.join("\n"));
        let once = serialize_graph(&parse_graph(&GraphText::new(GraphFormat::EdgeList, messy)).unwrap(), GraphFormat::EdgeList);
        let twice = serialize_graph(&parse_graph(&once).unwrap(), GraphFormat::EdgeList);
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once, serialize_graph(&g, GraphFormat::EdgeList));
    }
}
