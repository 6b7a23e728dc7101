//! Simple undirected graphs with bit-mask adjacency, plus the private
//! neighborhood machinery used by the total domination invariants.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::SOLVER_CAP;

/// Returned by [`Graph::distance`] for vertices in different components.
pub const UNREACHABLE: usize = usize::MAX;

/// An immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    label: Option<String>,
    vertex_labels: Vec<String>,
}

/// The open `S`-private neighborhood of a vertex and its two halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrivateNeighborhoods {
    /// Vertices whose only neighbor in `S` is the given vertex.
    pub pn: VertexSet,
    /// `pn \ S`
    pub epn: VertexSet,
    /// `pn ∩ S`
    pub ipn: VertexSet,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > SOLVER_CAP {
            return Err(Error::Capacity { order: n, cap: SOLVER_CAP });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, label: None, vertex_labels: Vec::new() })
    }

    /// Builds a graph from per-vertex neighborhoods, checking symmetry and
    /// loop-freeness.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > SOLVER_CAP {
            return Err(Error::Capacity { order: n, cap: SOLVER_CAP });
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if let Some(w) = (nb - all).first() {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
            if let Some(w) = nb.iter().find(|&w| !adj[w].contains(v)) {
                return Err(Error::Precondition(alloc::format!(
                    "adjacency is not symmetric: {w} in N({v}) but {v} not in N({w})"
                )));
            }
        }
        Ok(Graph { adj, label: None, vertex_labels: Vec::new() })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Attaches cosmetic per-vertex names. Ignored unless there is exactly one
    /// name per vertex.
    pub fn with_vertex_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.order() {
            self.vertex_labels = labels;
        }
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn vertex_label(&self, v: usize) -> Option<&str> {
        self.vertex_labels.get(v).map(String::as_str)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|nb| nb.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// `N(S)`, the union of the open neighborhoods of the members of `set`.
    #[inline]
    pub fn neighborhood_of_set(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// Open `S`-private neighborhood of `v`, split into its external and
    /// internal parts.
    pub fn private_neighborhoods(&self, set: VertexSet, v: usize) -> Result<PrivateNeighborhoods> {
        if !set.contains(v) {
            return Err(Error::NotInSet(v));
        }
        let pn = self.private_neighbors(set, v);
        Ok(PrivateNeighborhoods { pn, epn: pn - set, ipn: pn & set })
    }

    /// `{w : N(w) ∩ S = {v}}`. Only neighbors of `v` can qualify.
    #[inline]
    pub(crate) fn private_neighbors(&self, set: VertexSet, v: usize) -> VertexSet {
        let only_v = VertexSet::singleton(v);
        self.adj[v].iter().filter(|&w| self.adj[w] & set == only_v).collect()
    }

    #[inline]
    pub fn is_total_dominating(&self, set: VertexSet) -> bool {
        self.neighborhood_of_set(set) == self.vertices()
    }

    /// Minimality of a TD-set via the private neighbor characterization:
    /// every member must have a nonempty open private neighborhood.
    pub fn is_minimal_total_dominating(&self, set: VertexSet) -> Result<bool> {
        if !self.is_total_dominating(set) {
            return Err(Error::NotTotalDominating(set));
        }
        Ok(set.iter().all(|v| !self.private_neighbors(set, v).is_empty()))
    }

    /// Minimality of a TD-set straight from the definition. Supersets of
    /// TD-sets are TD-sets, so it suffices to try dropping single members.
    pub fn is_minimal_total_dominating_by_removal(&self, set: VertexSet) -> Result<bool> {
        if !self.is_total_dominating(set) {
            return Err(Error::NotTotalDominating(set));
        }
        Ok(set.iter().all(|v| !self.is_total_dominating(set.without(v))))
    }

    /// Hop distance, or [`UNREACHABLE`].
    pub fn distance(&self, u: usize, v: usize) -> usize {
        if u == v {
            return 0;
        }
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            frontier = self.neighborhood_of_set(frontier) - seen;
            if frontier.contains(v) {
                return d;
            }
            seen = seen | frontier;
        }
        UNREACHABLE
    }

    /// Vertices within distance `k` of `v`, excluding `v`.
    pub fn ball(&self, v: usize, k: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        for _ in 0..k {
            frontier = self.neighborhood_of_set(frontier) - seen;
            if frontier.is_empty() {
                break;
            }
            seen = seen | frontier;
        }
        seen.without(v)
    }

    pub fn first_isolated(&self) -> Option<usize> {
        self.adj.iter().position(|nb| nb.is_empty())
    }

    pub fn is_isolate_free(&self) -> bool {
        self.first_isolated().is_none()
    }

    /// Entry check shared by every solver.
    pub fn require_isolate_free(&self) -> Result<()> {
        match self.first_isolated() {
            Some(v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                frontier = self.neighborhood_of_set(frontier) - comp;
                comp = comp | frontier;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.edge_count() + 1 == self.order()
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// One color class of a proper 2-coloring, if the graph is bipartite.
    pub fn two_coloring(&self) -> Option<VertexSet> {
        let mut black = VertexSet::EMPTY;
        for comp in self.components() {
            let mut side = VertexSet::singleton(comp.first().unwrap_or(0));
            let mut seen = side;
            let mut frontier = side;
            let mut parity = false;
            while !frontier.is_empty() {
                frontier = self.neighborhood_of_set(frontier) - seen;
                seen = seen | frontier;
                parity = !parity;
                if !parity {
                    side = side | frontier;
                }
            }
            for v in side {
                if !(self.adj[v] & side).is_empty() {
                    return None;
                }
            }
            let other = comp - side;
            for v in other {
                if !(self.adj[v] & other).is_empty() {
                    return None;
                }
            }
            black = black | side;
        }
        Some(black)
    }

    /// Degree-one vertices.
    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Neighbors of leaves.
    pub fn supports(&self) -> VertexSet {
        self.neighborhood_of_set(self.leaves())
    }

    /// The subgraph induced by `set`, with vertices renumbered in increasing
    /// order of their original index.
    pub fn induced_subgraph(&self, set: VertexSet) -> Graph {
        let members: Vec<usize> = set.iter().collect();
        let mut index = [usize::MAX; 32];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let adj = members.iter().map(|&v| (self.adj[v] & set).iter().map(|w| index[w]).collect()).collect();
        Graph { adj, label: None, vertex_labels: Vec::new() }
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut s = f.debug_struct("Graph");
        if let Some(label) = &self.label {
            s.field("label", label);
        }
        s.field("n", &self.order()).field("edges", &self.edges()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn build_small_graphs() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.neighbors(0), set(&[1]));
        assert_eq!(path(3).degree_sequence(), [1, 2, 1]);
        let dup = Graph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(dup, path(3));
        assert_eq!(dup.edge_count(), 2);
    }

    #[test]
    fn build_errors() {
        assert_eq!(Graph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, order: 2 }));
        assert_eq!(Graph::new(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::new(27, core::iter::empty()), Err(Error::Capacity { order: 27, cap: 26 }));
        let asym = alloc::vec![set(&[1]), VertexSet::EMPTY];
        assert!(matches!(Graph::from_adjacency(asym), Err(Error::Precondition(_))));
    }

    #[test]
    fn neighborhood_of_sets() {
        assert_eq!(path(3).neighborhood_of_set(set(&[1])), set(&[0, 2]));
        assert_eq!(path(3).neighborhood_of_set(VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(path(4).neighborhood_of_set(set(&[1, 2])), set(&[0, 1, 2, 3]));
    }

    #[test]
    fn private_neighborhood_examples() {
        let p = path(4).private_neighborhoods(set(&[1, 2]), 1).unwrap();
        assert_eq!((p.pn, p.epn, p.ipn), (set(&[0, 2]), set(&[0]), set(&[2])));

        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let p = k2.private_neighborhoods(set(&[0, 1]), 0).unwrap();
        assert_eq!((p.pn, p.epn, p.ipn), (set(&[1]), VertexSet::EMPTY, set(&[1])));

        let c4 = cycle(4);
        assert!(c4.private_neighborhoods(c4.vertices(), 0).unwrap().pn.is_empty());

        assert_eq!(path(4).private_neighborhoods(set(&[1]), 2), Err(Error::NotInSet(2)));
    }

    #[test]
    fn total_domination_predicates() {
        let p4 = path(4);
        assert!(p4.is_total_dominating(set(&[1, 2])));
        assert!(!p4.is_total_dominating(set(&[0, 3])));
        assert!(!p4.is_total_dominating(VertexSet::EMPTY));
        assert_eq!(p4.is_minimal_total_dominating(set(&[1, 2])), Ok(true));
        assert_eq!(p4.is_minimal_total_dominating(set(&[0, 1, 2])), Ok(false));
        assert_eq!(
            p4.is_minimal_total_dominating(set(&[0, 3])),
            Err(Error::NotTotalDominating(set(&[0, 3])))
        );
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.is_minimal_total_dominating(k2.vertices()), Ok(true));
    }

    #[test]
    fn distances() {
        assert_eq!(path(4).distance(0, 3), 3);
        assert_eq!(path(4).distance(2, 2), 0);
        assert_eq!(cycle(7).distance(0, 4), 3);
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.distance(0, 3), UNREACHABLE);
        assert_eq!(cycle(7).ball(0, 2), set(&[1, 2, 5, 6]));
    }

    #[test]
    fn structure_queries() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(path(5).is_tree());
        assert!(!cycle(5).is_tree());
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components(), [set(&[0, 1]), set(&[2, 3])]);
        assert!(two_k2.is_bipartite());
        assert_eq!(path(5).leaves(), set(&[0, 4]));
        assert_eq!(path(5).supports(), set(&[1, 3]));
        let star_with_isolate = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(star_with_isolate.require_isolate_free(), Err(Error::IsolatedVertex(2)));
        assert_eq!(cycle(6).induced_subgraph(set(&[1, 2, 3])), path(3));
    }
}
