//! Cross-checks between the solvers: the inequality chain relating all seven
//! invariants, monotonicity of the indicated game in the declared set, and
//! observational probes over trees.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{enumerate_trees, MAX_TREE_ORDER};
use crate::error::{Error, Result};
use crate::game::{grundy_t, gtg, IndicatedSolver};
use crate::graph::Graph;
use crate::invariants::{gamma_t, induced_matching_number, max_induced_matching_where, ooir, upper_gamma_t};
use crate::vertex_set::VertexSet;

/// All seven invariants of one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    pub gt: usize,
    pub ugt: usize,
    pub gti: usize,
    pub gtg: usize,
    pub grt: usize,
    pub ooir: usize,
    pub nui: usize,
    pub bipartite: bool,
}

/// The known relations between the invariants, by name.
pub const CHAIN_CHECKS: [&str; 9] = [
    "gt<=ugt",
    "ugt<=gti",
    "gti<=grt",
    "ugt<=ooir",
    "ooir<=grt",
    "gt<=gtg",
    "gtg<=grt",
    "2nui<=ooir",
    "bipartite=>2nui=ooir",
];

impl InvariantProfile {
    pub fn compute(g: &Graph) -> Result<Self> {
        Ok(InvariantProfile {
            gt: gamma_t(g)?.value,
            ugt: upper_gamma_t(g)?.value,
            gti: IndicatedSolver::new(g)?.value(VertexSet::EMPTY)?,
            gtg: gtg(g)?,
            grt: grundy_t(g)?,
            ooir: ooir(g)?.value,
            nui: induced_matching_number(g)?.value,
            bipartite: g.is_bipartite(),
        })
    }

    fn holds(&self, check: &str) -> bool {
        let p = self;
        match check {
            "gt<=ugt" => p.gt <= p.ugt,
            "ugt<=gti" => p.ugt <= p.gti,
            "gti<=grt" => p.gti <= p.grt,
            "ugt<=ooir" => p.ugt <= p.ooir,
            "ooir<=grt" => p.ooir <= p.grt,
            "gt<=gtg" => p.gt <= p.gtg,
            "gtg<=grt" => p.gtg <= p.grt,
            "2nui<=ooir" => 2 * p.nui <= p.ooir,
            "bipartite=>2nui=ooir" => !p.bipartite || 2 * p.nui == p.ooir,
            _ => unreachable!("unknown chain check {check}"),
        }
    }

    /// Names of the failed chain checks, in [`CHAIN_CHECKS`] order.
    pub fn violations(&self) -> Vec<&'static str> {
        CHAIN_CHECKS.iter().copied().filter(|c| !self.holds(c)).collect()
    }
}

/// One graph's line in a survey.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub graph: String,
    pub n: usize,
    pub profile: InvariantProfile,
    pub violations: Vec<&'static str>,
}

impl SurveyRow {
    pub fn compute(graph: impl Into<String>, g: &Graph) -> Result<Self> {
        let profile = InvariantProfile::compute(g)?;
        Ok(SurveyRow { graph: graph.into(), n: g.order(), violations: profile.violations(), profile })
    }

    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// How [`check_continuation`] chooses pairs `B ⊆ A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContinuationMode {
    /// Every pair; needs `n <= MAX_CONTINUATION_EXHAUSTIVE`.
    Exhaustive,
    /// `count` pairs from a seeded generator.
    Sampled { count: usize, seed: u64 },
}

pub const MAX_CONTINUATION_EXHAUSTIVE: usize = 7;

/// A pair with `B ⊆ A` but `gti(G|A) > gti(G|B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContinuationViolation {
    pub a: VertexSet,
    pub b: VertexSet,
    pub value_a: usize,
    pub value_b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuationReport {
    pub pairs: usize,
    pub violations: Vec<ContinuationViolation>,
}

impl ContinuationReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `gti(G|A) <= gti(G|B)` for pairs `B ⊆ A ⊆ V`.
pub fn check_continuation(g: &Graph, mode: ContinuationMode) -> Result<ContinuationReport> {
    let mut solver = IndicatedSolver::new(g)?;
    let n = g.order();
    let mut report = ContinuationReport { pairs: 0, violations: Vec::new() };
    let mut check = |solver: &mut IndicatedSolver<'_>, a: VertexSet, b: VertexSet| -> Result<()> {
        let (value_a, value_b) = (solver.value(a)?, solver.value(b)?);
        report.pairs += 1;
        if value_a > value_b {
            report.violations.push(ContinuationViolation { a, b, value_a, value_b });
        }
        Ok(())
    };
    match mode {
        ContinuationMode::Exhaustive => {
            if n > MAX_CONTINUATION_EXHAUSTIVE {
                return Err(Error::OrderOutOfRange { order: n, min: 0, max: MAX_CONTINUATION_EXHAUSTIVE });
            }
            for a in 0..1u32 << n {
                // every submask of `a`, including `a` and the empty set
                let mut b = a;
                loop {
                    check(&mut solver, VertexSet::from_bits(a), VertexSet::from_bits(b))?;
                    if b == 0 {
                        break;
                    }
                    b = (b - 1) & a;
                }
            }
        }
        ContinuationMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let full = g.vertices().bits();
            for _ in 0..count {
                let a = rng.gen::<u32>() & full;
                let b = rng.gen::<u32>() & a;
                check(&mut solver, VertexSet::from_bits(a), VertexSet::from_bits(b))?;
            }
        }
    }
    Ok(report)
}

/// `n=4 [0-1 1-2 2-3]`
pub fn describe(g: &Graph) -> String {
    let mut s = format!("n={} [", g.order());
    for (i, (a, b)) in g.edges().into_iter().enumerate() {
        let sep = if i == 0 { "" } else { " " };
        let _ = write!(s, "{sep}{a}-{b}");
    }
    s.push(']');
    s
}

/// One tree in an [`explore_trees`] run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeProbeRow {
    pub tree: Graph,
    pub ugt: usize,
    pub gti: usize,
    pub nui: usize,
    /// Some maximum induced matching has a leaf on every edge.
    pub leaf_matching: bool,
}

impl TreeProbeRow {
    pub fn ugt_equals_gti(&self) -> bool {
        self.ugt == self.gti
    }

    pub fn gti_within_twice_nui(&self) -> bool {
        self.gti <= 2 * self.nui
    }

    /// Trees with a leaf-anchored maximum induced matching must satisfy
    /// `gti <= 2 nu_I`; `false` here is a genuine failure.
    pub fn restricted_claim_holds(&self) -> bool {
        !self.leaf_matching || self.gti_within_twice_nui()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeProbeReport {
    pub n_max: usize,
    pub rows: Vec<TreeProbeRow>,
}

impl TreeProbeReport {
    fn finding(&self, fails: impl Fn(&TreeProbeRow) -> bool) -> String {
        match self.rows.iter().find(|r| fails(r)) {
            Some(r) => format!("counterexample: {}", describe(&r.tree)),
            None => format!("no counterexample found up to n={}", self.n_max),
        }
    }

    /// Whether every tree seen has `Gamma_t = gti`.
    pub fn ugt_vs_gti(&self) -> String {
        self.finding(|r| !r.ugt_equals_gti())
    }

    /// Whether every tree seen has `gti <= 2 nu_I`.
    pub fn gti_vs_matching(&self) -> String {
        self.finding(|r| !r.gti_within_twice_nui())
    }

    pub fn qualifying(&self) -> usize {
        self.rows.iter().filter(|r| r.leaf_matching).count()
    }

    pub fn restricted_failures(&self) -> Vec<&TreeProbeRow> {
        self.rows.iter().filter(|r| !r.restricted_claim_holds()).collect()
    }
}

/// Solves every tree of order `2..=n_max`.
pub fn explore_trees(n_max: usize) -> Result<TreeProbeReport> {
    if n_max > MAX_TREE_ORDER {
        return Err(Error::OrderOutOfRange { order: n_max, min: 2, max: MAX_TREE_ORDER });
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for tree in enumerate_trees(n)? {
            let leaves = tree.leaves();
            let nui = induced_matching_number(&tree)?.value;
            let anchored = max_induced_matching_where(&tree, |a, b| leaves.contains(a) || leaves.contains(b));
            rows.push(TreeProbeRow {
                ugt: upper_gamma_t(&tree)?.value,
                gti: IndicatedSolver::new(&tree)?.value(VertexSet::EMPTY)?,
                nui,
                leaf_matching: anchored.len() == nui,
                tree,
            });
        }
    }
    Ok(TreeProbeReport { n_max, rows })
}
