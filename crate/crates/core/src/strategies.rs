//! Scripted policies for the indicated game, certified with
//! [`best_response_length`](crate::game::best_response_length).

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::game::{GameState, Policy, Role};
use crate::graph::Graph;
use crate::invariants::{upper_gamma_t, Witness};
use crate::vertex_set::VertexSet;

/// A minimal TD-set `S = {v_1, ..., v_p}` with a partition `V_1, ..., V_p`
/// of the vertices such that `pn(v_i, S) ⊆ V_i ⊆ N(v_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionWitness {
    pub set: VertexSet,
    /// `parts[i]` belongs to the `i`-th smallest member of `set`.
    pub parts: Vec<VertexSet>,
}

impl PartitionWitness {
    /// Private neighbors go to their unique owner; every other vertex goes
    /// to the smallest-index member of `set` adjacent to it.
    pub fn build(g: &Graph, set: VertexSet) -> Result<Self> {
        if !g.is_minimal_total_dominating(set)? {
            return Err(Error::Precondition(format!("{set} is not a minimal TD-set")));
        }
        let members: Vec<usize> = set.iter().collect();
        let mut parts: Vec<VertexSet> = members.iter().map(|&v| g.private_neighbors(set, v)).collect();
        let mut assigned = parts.iter().fold(VertexSet::EMPTY, |a, &p| a | p);
        for w in g.vertices() - assigned {
            let i = members
                .iter()
                .position(|&v| g.has_edge(v, w))
                .ok_or_else(|| Error::Precondition(format!("vertex {w} has no neighbor in {set}")))?;
            parts[i].insert(w);
            assigned.insert(w);
        }
        let witness = PartitionWitness { set, parts };
        if !witness.is_valid(g) {
            return Err(Error::Precondition(format!("partition construction failed for {set}")));
        }
        Ok(witness)
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.parts.len() != self.set.len() {
            return false;
        }
        let mut union = VertexSet::EMPTY;
        for (v, &part) in self.set.iter().zip(&self.parts) {
            if !union.is_disjoint(part)
                || !g.private_neighbors(self.set, v).is_subset(part)
                || !part.is_subset(g.neighbors(v))
            {
                return false;
            }
            union = union | part;
        }
        union == g.vertices()
    }

    /// The member of `set` whose part contains `w`.
    pub fn owner(&self, w: usize) -> Option<usize> {
        self.set.iter().zip(&self.parts).find(|(_, p)| p.contains(w)).map(|(v, _)| v)
    }
}

/// Staller answers every indication with the owner of the indicated vertex
/// in a partition built around a `Γ_t`-set, so every member of that set
/// ends up played.
#[derive(Clone, Debug)]
pub struct StallerPartitionPolicy {
    witness: PartitionWitness,
    owner: Vec<usize>,
}

impl StallerPartitionPolicy {
    pub fn new(g: &Graph) -> Result<Self> {
        let Witness::Vertices(set) = upper_gamma_t(g)?.witness else {
            unreachable!("upper_gamma_t returns a vertex witness")
        };
        Self::with_set(g, set)
    }

    /// Uses the given minimal TD-set instead of a `Γ_t`-set.
    pub fn with_set(g: &Graph, set: VertexSet) -> Result<Self> {
        let witness = PartitionWitness::build(g, set)?;
        let owner =
            (0..g.order()).map(|w| witness.owner(w).expect("partition covers every vertex")).collect();
        Ok(StallerPartitionPolicy { witness, owner })
    }

    pub fn witness(&self) -> &PartitionWitness {
        &self.witness
    }
}

impl Policy for StallerPartitionPolicy {
    fn role(&self) -> Role {
        Role::Staller
    }

    fn choose(&self, _state: &GameState<'_>, indicated: Option<usize>) -> usize {
        let v = indicated.expect("Staller is always told the indicated vertex");
        self.owner[v]
    }
}

/// Smallest undominated vertex. Staller must answer it with a neighbor, so
/// each such round dominates at least one new vertex.
fn cleanup(state: &GameState<'_>) -> usize {
    state.undominated().first().unwrap_or(usize::MAX)
}

/// Dominator's strategy on the path `v_1 ... v_n` (vertex `i` is `v_{i+1}`).
///
/// Opening: on round `i` indicate `v_{3i+1}`, for `i = 0..k` when
/// `n = 3k+1` and for `i = 0..k-1` when `n = 3k` or `n = 3k+2`. Afterwards,
/// indicate the smallest-index vertex not yet totally dominated.
#[derive(Clone, Debug)]
pub struct DominatorPathPolicy {
    n: usize,
    opening: Vec<usize>,
}

impl DominatorPathPolicy {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("path policy needs n >= 2, got {n}")));
        }
        let rounds = if n % 3 == 1 { (n - 1) / 3 + 1 } else { n / 3 };
        let opening = (0..rounds).map(|i| 3 * i).collect();
        Ok(DominatorPathPolicy { n, opening })
    }

    /// Checks that `g` is the path `0 - 1 - ... - (n-1)` first.
    pub fn for_graph(g: &Graph) -> Result<Self> {
        let n = g.order();
        let is_path = n >= 2 && g.edge_count() == n - 1 && (1..n).all(|i| g.has_edge(i - 1, i));
        if !is_path {
            return Err(Error::Precondition("path policy needs the path 0-1-...-(n-1)".into()));
        }
        Self::new(n)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn opening(&self) -> &[usize] {
        &self.opening
    }
}

impl Policy for DominatorPathPolicy {
    fn role(&self) -> Role {
        Role::Dominator
    }

    fn choose(&self, state: &GameState<'_>, _: Option<usize>) -> usize {
        match self.opening.get(state.moves) {
            Some(&v) if !state.dominated.contains(v) => v,
            _ => cleanup(state),
        }
    }
}

/// Dominator's strategy on a tree whose every vertex is a leaf or a support
/// vertex: indicate one leaf per support vertex, supports in index order,
/// forcing Staller to play each support.
#[derive(Clone, Debug)]
pub struct DominatorLeafPolicy {
    /// `(support, designated leaf)`, by support index.
    targets: Vec<(usize, usize)>,
}

impl DominatorLeafPolicy {
    pub fn new(tree: &Graph) -> Result<Self> {
        if !tree.is_tree() || tree.order() < 2 {
            return Err(Error::Precondition("leaf policy needs a nontrivial tree".into()));
        }
        let leaves = tree.leaves();
        let supports = tree.supports();
        if let Some(v) = (tree.vertices() - leaves - supports).first() {
            return Err(Error::Precondition(format!("vertex {v} is neither a leaf nor a support vertex")));
        }
        let targets = supports
            .iter()
            .map(|s| (s, (tree.neighbors(s) & leaves).first().expect("support has a leaf")))
            .collect();
        Ok(DominatorLeafPolicy { targets })
    }

    pub fn supports(&self) -> VertexSet {
        self.targets.iter().map(|&(s, _)| s).collect()
    }
}

impl Policy for DominatorLeafPolicy {
    fn role(&self) -> Role {
        Role::Dominator
    }

    fn choose(&self, state: &GameState<'_>, _: Option<usize>) -> usize {
        self.targets
            .iter()
            .map(|&(_, leaf)| leaf)
            .find(|&leaf| !state.dominated.contains(leaf))
            .unwrap_or_else(|| cleanup(state))
    }
}
