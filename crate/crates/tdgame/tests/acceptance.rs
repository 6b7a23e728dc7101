//! One line per acceptance criterion. Every comparison is exact integer
//! equality or the stated inequality; there are no floating tolerances.
//!
//! Criterion 11 (declared-set monotonicity of gti) is false: the exact
//! solver and an independent unmemoized search agree on counterexamples
//! from n = 4 on. It is reported as FAIL and its failure pattern is pinned.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdgame::suite::CONTINUATION_SEED;
use tdgame::{run_paper_suite, SuiteReport};
use tdgame_core::enumerate::{isolate_free_graphs, random_isolate_free_graph};
use tdgame_core::verify::{check_continuation, ContinuationMode};
use tdgame_core::{Graph, VertexSet};

const NAMES: [&str; 15] = [
    "paths",
    "cycle powers",
    "Gk family",
    "Fk family",
    "Bk family",
    "Jk family",
    "once-subdivided stars",
    "thrice-subdivided star",
    "coronas of K_k",
    "leaf/support trees",
    "continuation",
    "inequality lattice",
    "grundy/perfect matching",
    "strategy certification",
    "property-based",
];

/// Violating pairs over all isolate-free graphs of order n = 2..=5.
const CONTINUATION_EXHAUSTIVE: [usize; 4] = [0, 0, 1, 20];

/// Plain game-tree search with no memo, sharing nothing with the solver.
fn gti_oracle(g: &Graph, dominated: VertexSet) -> usize {
    if dominated == g.vertices() {
        return 0;
    }
    (g.vertices() - dominated)
        .iter()
        .map(|v| g.neighbors(v).iter().map(|u| 1 + gti_oracle(g, dominated | g.neighbors(u))).max().unwrap())
        .min()
        .unwrap()
}

fn oracle_violations(g: &Graph) -> usize {
    let full = g.vertices().bits();
    let mut count = 0;
    for a in 0..=full {
        for b in 0..=a {
            if b & !a == 0 {
                let va = gti_oracle(g, VertexSet::from_bits(a));
                count += usize::from(va > gti_oracle(g, VertexSet::from_bits(b)));
            }
        }
    }
    count
}

fn line(report: &SuiteReport, c: u8) -> (bool, String) {
    let rows: Vec<_> = report.criterion(c).collect();
    let ok = rows.iter().filter(|r| r.passed).count();
    let pass = !rows.is_empty() && ok == rows.len();
    let verdict = if pass { "PASS" } else { "FAIL" };
    let mut text =
        format!("criterion {c:>2} [{}]: {verdict} ({ok}/{} rows, exact)", NAMES[c as usize - 1], rows.len());
    if let Some(note) = rows.iter().find(|r| !r.passed).and_then(|r| r.note.as_ref()) {
        text.push_str(&format!("; {note}"));
    }
    (pass, text)
}

#[test]
fn acceptance() {
    let report = run_paper_suite();
    let mut unexpected = Vec::new();
    for c in 1..=15u8 {
        let (pass, text) = line(&report, c);
        println!("{text}");
        if c == 11 {
            assert!(!pass, "criterion 11 was expected to fail on known counterexamples");
        } else if !pass {
            unexpected.push(text);
        }
    }
    assert!(unexpected.is_empty(), "{unexpected:#?}");
    continuation_failure_is_the_known_one(&report);
}

/// Every violation counted by the suite is confirmed by the oracle, and the
/// counts match the frozen values.
fn continuation_failure_is_the_known_one(report: &SuiteReport) {
    let rows: Vec<_> = report.criterion(11).collect();
    assert_eq!(rows.len(), CONTINUATION_EXHAUSTIVE.len() + 1);
    for (n, (row, &frozen)) in (2..).zip(rows.iter().zip(&CONTINUATION_EXHAUSTIVE)) {
        let oracle: usize = isolate_free_graphs(n).unwrap().iter().map(oracle_violations).sum();
        assert_eq!(oracle, frozen, "oracle count at n={n}");
        assert_eq!(row.computed.as_deref(), Some(&[frozen][..]), "suite count at n={n}");
    }

    // Replays the sampled row's corpus and re-solves each violation.
    let sampled = rows.last().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(CONTINUATION_SEED);
    let mut confirmed = 0;
    for i in 0..30 {
        let n = rng.gen_range(2..=7);
        let (g, _) = random_isolate_free_graph(n, 0.5, &mut rng, 10_000).unwrap();
        let r = check_continuation(&g, ContinuationMode::Sampled { count: 500, seed: CONTINUATION_SEED + i })
            .unwrap();
        for v in &r.violations {
            assert_eq!(gti_oracle(&g, v.a), v.value_a);
            assert_eq!(gti_oracle(&g, v.b), v.value_b);
            assert!(v.b.is_subset(v.a) && v.value_a > v.value_b);
            confirmed += 1;
        }
    }
    assert!(confirmed > 0);
    assert_eq!(sampled.computed.as_deref(), Some(&[confirmed][..]));
    println!(
        "criterion 11 detail: exhaustive violating pairs n=2..5 {CONTINUATION_EXHAUSTIVE:?}, \
         sampled {confirmed}; all confirmed by an unmemoized search; recorded as unattainable"
    );
}
