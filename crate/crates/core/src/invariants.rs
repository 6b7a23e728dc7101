//! Exact values of the non-game invariants: total domination number, upper
//! total domination number, open-open irredundance, induced matching number,
//! and perfect matchings.
//!
//! All searches are exhaustive with safe pruning only. Among optimal
//! witnesses the lexicographically smallest (by sorted vertex indices, or by
//! sorted edge list) is returned.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    GammaT,
    UpperGammaT,
    Ooir,
    InducedMatching,
    PerfectMatching,
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantKind::GammaT => "gamma_t",
            InvariantKind::UpperGammaT => "Gamma_t",
            InvariantKind::Ooir => "oo_ir",
            InvariantKind::InducedMatching => "nu_I",
            InvariantKind::PerfectMatching => "perfect_matching",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vertices(VertexSet),
    Edges(Vec<(usize, usize)>),
    None,
}

/// An invariant value together with the object that realizes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantValue {
    pub kind: InvariantKind,
    /// The count, or `0`/`1` for [`InvariantKind::PerfectMatching`].
    pub value: usize,
    pub witness: Witness,
}

impl InvariantValue {
    /// For boolean invariants.
    pub fn holds(&self) -> bool {
        self.value != 0
    }

    /// Re-checks the witness against the graph with the defining predicate.
    pub fn certifies(&self, g: &Graph) -> bool {
        match (&self.kind, &self.witness) {
            (InvariantKind::GammaT, Witness::Vertices(s)) => {
                s.len() == self.value && g.is_total_dominating(*s)
            }
            (InvariantKind::UpperGammaT, Witness::Vertices(s)) => {
                s.len() == self.value && g.is_minimal_total_dominating(*s) == Ok(true)
            }
            (InvariantKind::Ooir, Witness::Vertices(s)) => {
                s.len() == self.value && is_open_open_irredundant(g, *s)
            }
            (InvariantKind::InducedMatching, Witness::Edges(es)) => {
                es.len() == self.value && is_induced_matching(g, es)
            }
            (InvariantKind::PerfectMatching, Witness::Edges(es)) => {
                self.holds() && is_perfect_matching(g, es)
            }
            (InvariantKind::PerfectMatching, Witness::None) => !self.holds(),
            _ => false,
        }
    }

    fn checked(self, g: &Graph) -> Self {
        assert!(self.certifies(g), "{} witness failed revalidation: {self:?}", self.kind);
        self
    }
}

/// `N(v) \ N(S \ {v})` is nonempty for every `v ∈ S`.
pub fn is_open_open_irredundant(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|v| !(g.neighbors(v) - g.neighborhood_of_set(set.without(v))).is_empty())
}

/// Edges of `g`, pairwise vertex-disjoint, with no edge of `g` joining two of
/// them.
pub fn is_induced_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut covered = VertexSet::EMPTY;
    for &(a, b) in edges {
        if a >= g.order() || b >= g.order() || !g.has_edge(a, b) {
            return false;
        }
        covered = covered.with(a).with(b);
    }
    // In the induced subgraph every covered vertex must have degree exactly one.
    covered.len() == 2 * edges.len() && covered.iter().all(|v| (g.neighbors(v) & covered).len() == 1)
}

pub fn is_perfect_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut covered = VertexSet::EMPTY;
    for &(a, b) in edges {
        if a >= g.order() || b >= g.order() || !g.has_edge(a, b) {
            return false;
        }
        if covered.contains(a) || covered.contains(b) {
            return false;
        }
        covered = covered.with(a).with(b);
    }
    covered == g.vertices()
}

/// Minimum cardinality of a total dominating set.
pub fn gamma_t(g: &Graph) -> Result<InvariantValue> {
    g.require_isolate_free()?;
    let n = g.order();
    for size in 0..=n {
        if let Some(s) = smallest_td_set_of_size(g, size) {
            let value =
                InvariantValue { kind: InvariantKind::GammaT, value: size, witness: Witness::Vertices(s) };
            return Ok(value.checked(g));
        }
    }
    unreachable!("V(G) totally dominates an isolate-free graph")
}

/// Lexicographically first TD-set with exactly `size` members, if any.
fn smallest_td_set_of_size(g: &Graph, size: usize) -> Option<VertexSet> {
    fn go(g: &Graph, next: usize, left: usize, chosen: VertexSet, covered: VertexSet) -> Option<VertexSet> {
        let all = g.vertices();
        if left == 0 {
            return (covered == all).then_some(chosen);
        }
        if next + left > g.order() {
            return None;
        }
        // The lowest undominated vertex needs a neighbor among the candidates
        // still available.
        if let Some(w) = (all - covered).first() {
            let candidates = VertexSet::full(g.order()) - VertexSet::full(next);
            if (g.neighbors(w) & candidates).is_empty() {
                return None;
            }
        }
        for v in next..g.order() {
            if v + left > g.order() {
                break;
            }
            if let Some(s) = go(g, v + 1, left - 1, chosen.with(v), covered | g.neighbors(v)) {
                return Some(s);
            }
        }
        None
    }
    go(g, 0, size, VertexSet::EMPTY, VertexSet::EMPTY)
}

/// Maximum cardinality of a minimal total dominating set.
pub fn upper_gamma_t(g: &Graph) -> Result<InvariantValue> {
    g.require_isolate_free()?;
    for size in (0..=g.order()).rev() {
        let mut found = None;
        for_each_subset_of_size(g.order(), size, |s| {
            if is_minimal_td_set(g, s) {
                found = Some(s);
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            let value = InvariantValue {
                kind: InvariantKind::UpperGammaT,
                value: size,
                witness: Witness::Vertices(s),
            };
            return Ok(value.checked(g));
        }
    }
    unreachable!("an isolate-free graph has a minimal TD-set")
}

#[inline]
fn is_minimal_td_set(g: &Graph, s: VertexSet) -> bool {
    g.is_total_dominating(s) && s.iter().all(|v| !g.private_neighbors(s, v).is_empty())
}

/// Every minimal total dominating set, in increasing mask order.
pub fn minimal_total_dominating_sets(g: &Graph) -> Vec<VertexSet> {
    (0..1u32 << g.order()).map(VertexSet::from_bits).filter(|&s| is_minimal_td_set(g, s)).collect()
}

/// Visits the `size`-subsets of `0..n` in lexicographic order of their
/// sorted members until `visit` returns `true`.
fn for_each_subset_of_size(n: usize, size: usize, mut visit: impl FnMut(VertexSet) -> bool) {
    fn go(
        n: usize,
        next: usize,
        left: usize,
        cur: VertexSet,
        visit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        if left == 0 {
            return visit(cur);
        }
        let mut v = next;
        while v + left <= n {
            if go(n, v + 1, left - 1, cur.with(v), visit) {
                return true;
            }
            v += 1;
        }
        false
    }
    go(n, 0, size, VertexSet::EMPTY, &mut visit);
}

/// Maximum cardinality of an open-open irredundant set.
///
/// Open-open irredundance is hereditary, so any branch whose partial set
/// already fails the test is cut.
pub fn ooir(g: &Graph) -> Result<InvariantValue> {
    struct Search<'a> {
        g: &'a Graph,
        best: VertexSet,
    }
    impl Search<'_> {
        fn go(&mut self, next: usize, cur: VertexSet) {
            let n = self.g.order();
            if cur.len() > self.best.len() {
                self.best = cur;
            }
            if next >= n || cur.len() + (n - next) <= self.best.len() {
                return;
            }
            let with = cur.with(next);
            if is_open_open_irredundant(self.g, with) {
                self.go(next + 1, with);
            }
            self.go(next + 1, cur);
        }
    }
    let mut search = Search { g, best: VertexSet::EMPTY };
    search.go(0, VertexSet::EMPTY);
    let value = InvariantValue {
        kind: InvariantKind::Ooir,
        value: search.best.len(),
        witness: Witness::Vertices(search.best),
    };
    Ok(value.checked(g))
}

/// Maximum induced matching, restricted to edges accepted by `allow`.
pub(crate) fn max_induced_matching_where(
    g: &Graph,
    allow: impl Fn(usize, usize) -> bool,
) -> Vec<(usize, usize)> {
    struct Search<'a> {
        g: &'a Graph,
        edges: Vec<(usize, usize)>,
        cur: Vec<(usize, usize)>,
        best: Vec<(usize, usize)>,
    }
    impl Search<'_> {
        fn go(&mut self, next: usize, blocked: VertexSet) {
            if self.cur.len() > self.best.len() {
                self.best = self.cur.clone();
            }
            // Each further edge consumes two unblocked vertices.
            let free = (self.g.vertices() - blocked).len();
            if next >= self.edges.len() || self.cur.len() + free / 2 <= self.best.len() {
                return;
            }
            let (a, b) = self.edges[next];
            if !blocked.contains(a) && !blocked.contains(b) {
                self.cur.push((a, b));
                let closed = self.g.closed_neighbors(a) | self.g.closed_neighbors(b);
                self.go(next + 1, blocked | closed);
                self.cur.pop();
            }
            self.go(next + 1, blocked);
        }
    }
    let edges = g.edges().into_iter().filter(|&(a, b)| allow(a, b)).collect();
    let mut search = Search { g, edges, cur: Vec::new(), best: Vec::new() };
    search.go(0, VertexSet::EMPTY);
    search.best
}

/// Maximum number of edges in an induced matching.
pub fn induced_matching_number(g: &Graph) -> Result<InvariantValue> {
    let best = max_induced_matching_where(g, |_, _| true);
    let value = InvariantValue {
        kind: InvariantKind::InducedMatching,
        value: best.len(),
        witness: Witness::Edges(best),
    };
    Ok(value.checked(g))
}

pub fn has_perfect_matching(g: &Graph) -> Result<InvariantValue> {
    fn go(g: &Graph, unmatched: VertexSet, acc: &mut Vec<(usize, usize)>) -> bool {
        let Some(v) = unmatched.first() else {
            return true;
        };
        for u in g.neighbors(v) & unmatched {
            acc.push((v, u));
            if go(g, unmatched.without(v).without(u), acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut matching = Vec::new();
    let found = g.order().is_multiple_of(2) && go(g, g.vertices(), &mut matching);
    let value = InvariantValue {
        kind: InvariantKind::PerfectMatching,
        value: found as usize,
        witness: if found { Witness::Edges(matching) } else { Witness::None },
    };
    Ok(value.checked(g))
}
