//! Graph corpora: all graphs of a small order up to isomorphism, free trees,
//! and seeded random graphs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order for exhaustive graph enumeration.
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;
/// Largest order for free tree enumeration.
pub const MAX_TREE_ORDER: usize = 12;

/// Upper-triangle adjacency bits of `g` under the vertex order `perm`,
/// most significant bit first.
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | g.has_edge(perm[i], perm[j]) as u64;
        }
    }
    code
}

/// Color refinement: iterate `color(v) <- (color(v), sorted neighbor colors)`
/// until the partition is stable. Colors are ranks, so they are isomorphism
/// invariant.
fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> =
            signatures.iter().collect::<BTreeSet<_>>().into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = signatures.iter().map(|s| ranks[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

/// A canonical code for `g`: two graphs of the same order get the same
/// code exactly when they are isomorphic.
///
/// The code is the largest adjacency code over all vertex orders that list
/// color-refinement classes in class order; within a class every ordering
/// is tried. Supports orders up to 11.
pub fn canonical_code(g: &Graph) -> u64 {
    canonical_order(g).1
}

fn canonical_order(g: &Graph) -> (Vec<usize>, u64) {
    let n = g.order();
    assert!(n <= 11, "canonical codes need n(n-1)/2 <= 64");
    let colors = refined_colors(g);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();

    let mut best: Option<(Vec<usize>, u64)> = None;
    let mut perm = Vec::with_capacity(n);
    fn go(
        g: &Graph,
        cells: &[Vec<usize>],
        cell: usize,
        used: VertexSet,
        perm: &mut Vec<usize>,
        best: &mut Option<(Vec<usize>, u64)>,
    ) {
        if cell == cells.len() {
            let code = code_under(g, perm);
            if best.as_ref().is_none_or(|(_, b)| code > *b) {
                *best = Some((perm.clone(), code));
            }
            return;
        }
        let members = &cells[cell];
        let placed = members.iter().filter(|&&v| used.contains(v)).count();
        if placed == members.len() {
            return go(g, cells, cell + 1, used, perm, best);
        }
        for &v in members {
            if !used.contains(v) {
                perm.push(v);
                go(g, cells, cell, used.with(v), perm, best);
                perm.pop();
            }
        }
    }
    go(g, &cells, 0, VertexSet::EMPTY, &mut perm, &mut best);
    best.unwrap_or((Vec::new(), 0))
}

/// The graph relabeled into its canonical vertex order.
pub fn canonical_form(g: &Graph) -> Graph {
    let (perm, _) = canonical_order(g);
    let mut position = vec![0; g.order()];
    for (i, &v) in perm.iter().enumerate() {
        position[v] = i;
    }
    Graph::new(g.order(), g.edges().into_iter().map(|(a, b)| (position[a], position[b])))
        .expect("relabeling preserves validity")
}

/// All graphs on `n` vertices up to isomorphism, in canonical form, sorted
/// by canonical code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::OrderOutOfRange { order: n, min: 0, max: MAX_EXHAUSTIVE_ORDER });
    }
    let mut level: BTreeMap<u64, Graph> = BTreeMap::new();
    level.insert(0, Graph::new(0, []).expect("empty graph"));
    for order in 1..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            // Every graph on `order` vertices arises by adding a vertex to some
            // graph on `order - 1` vertices.
            for nbrs in 0..1u32 << (order - 1) {
                let mut edges = g.edges();
                edges.extend(VertexSet::from_bits(nbrs).iter().map(|u| (u, order - 1)));
                let h = Graph::new(order, edges)?;
                let code = canonical_code(&h);
                next.entry(code).or_insert_with(|| canonical_form(&h));
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// All isolate-free graphs on `n` vertices up to isomorphism.
pub fn isolate_free_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_isolate_free).collect())
}

/// Rooted canonical string: `(` + sorted child strings + `)`.
fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> =
        g.neighbors(v).iter().filter(|&w| Some(w) != parent).map(|w| rooted_code(g, w, Some(v))).collect();
    children.sort_unstable();
    let mut s = String::from("(");
    for c in children {
        s.push_str(&c);
    }
    s.push(')');
    s
}

/// One or two central vertices, found by peeling leaves.
fn tree_centers(g: &Graph) -> VertexSet {
    let mut alive = g.vertices();
    while alive.len() > 2 {
        let leaves: VertexSet = alive.iter().filter(|&v| (g.neighbors(v) & alive).len() <= 1).collect();
        alive = alive - leaves;
    }
    alive
}

/// Canonical string of a free tree: the smallest rooted code over its
/// centers.
pub fn tree_code(g: &Graph) -> String {
    tree_centers(g).iter().map(|c| rooted_code(g, c, None)).min().unwrap_or_default()
}

/// Builds the tree whose rooted code is `code`, numbering vertices in
/// preorder from the root.
fn tree_from_code(code: &str) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for c in code.chars() {
        match c {
            '(' => {
                if let Some(&parent) = stack.last() {
                    edges.push((parent, next));
                }
                stack.push(next);
                next += 1;
            }
            _ => {
                stack.pop();
            }
        }
    }
    Graph::new(next, edges).expect("tree code describes a valid tree")
}

/// Every free tree on `n` vertices exactly once, sorted by canonical
/// string. Vertex 0 is a center and vertices are in preorder.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(2..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange { order: n, min: 2, max: MAX_TREE_ORDER });
    }
    let mut level: BTreeSet<String> = BTreeSet::new();
    level.insert(String::from("(())"));
    for order in 3..=n {
        let mut next = BTreeSet::new();
        for code in &level {
            let t = tree_from_code(code);
            for v in 0..order - 1 {
                let mut edges = t.edges();
                edges.push((v, order - 1));
                next.insert(tree_code(&Graph::new(order, edges)?));
            }
        }
        level = next;
    }
    Ok(level.iter().map(|c| tree_from_code(c)).collect())
}

/// `G(n, p)`: each pair independently an edge with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Draws from `G(n, p)` until a graph without isolated vertices appears.
/// Returns the graph and the number of rejected draws.
pub fn random_isolate_free_graph<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    rng: &mut R,
    max_draws: usize,
) -> Result<(Graph, usize)> {
    for rejected in 0..max_draws {
        let g = random_graph(n, p, rng)?;
        if g.is_isolate_free() {
            return Ok((g, rejected));
        }
    }
    Err(Error::Precondition(alloc::format!("no isolate-free draw from G({n}, {p}) in {max_draws} attempts")))
}

/// Uniform labeled tree on `n >= 2` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    if n < 2 {
        return Err(Error::OrderOutOfRange { order: n, min: 2, max: crate::SOLVER_CAP });
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::new(n, prufer_edges(n, &seq))
}

/// Decodes a Prüfer sequence of length `n - 2`.
pub fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// A random tree of order at most `max_n` in which every vertex is a leaf or
/// a support vertex: a random tree on the supports, each given at least one
/// pendant leaf (at least two when there is a single support, so the result
/// is a star rather than `K_2`). Vertex labels are shuffled.
pub fn random_leaf_support_tree<R: Rng + ?Sized>(max_n: usize, rng: &mut R) -> Result<(Graph, usize)> {
    if max_n < 3 {
        return Err(Error::OrderOutOfRange { order: max_n, min: 3, max: crate::SOLVER_CAP });
    }
    let supports = rng.gen_range(1..=max_n / 2);
    let mut edges = if supports >= 2 { random_tree(supports, rng)?.edges() } else { Vec::new() };
    let min_leaves = if supports == 1 { 2 } else { supports };
    let leaves = rng.gen_range(min_leaves..=max_n - supports);
    for i in 0..leaves {
        // the first `supports` leaves give each support one
        let s = if i < supports { i } else { rng.gen_range(0..supports) };
        edges.push((s, supports + i));
    }
    let n = supports + leaves;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let g = Graph::new(n, edges.into_iter().map(|(a, b)| (perm[a], perm[b])))?;
    Ok((g, supports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn graph_counts() {
        // OEIS A000088 and its first differences (isolate-free graphs).
        let all: Vec<usize> = (0..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(all, [1, 1, 2, 4, 11, 34, 156]);
        let free: Vec<usize> = (1..=6).map(|n| isolate_free_graphs(n).unwrap().len()).collect();
        assert_eq!(free, [0, 1, 2, 7, 23, 122]);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_graph(7, 0.4, &mut rng).unwrap();
            let mut perm: Vec<usize> = (0..7).collect();
            perm.shuffle(&mut rng);
            let h = Graph::new(7, g.edges().into_iter().map(|(a, b)| (perm[a], perm[b]))).unwrap();
            assert_eq!(canonical_code(&g), canonical_code(&h));
            assert_eq!(canonical_form(&g), canonical_form(&h));
        }
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let two_c3 = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&two_c3));
    }

    #[test]
    fn small_tree_counts() {
        let counts: Vec<usize> = (2..=8).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 6, 11, 23]);
        assert!(enumerate_trees(1).is_err());
        assert!(enumerate_trees(13).is_err());
        assert_eq!(enumerate_trees(2).unwrap()[0].edges(), [(0, 1)]);
    }

    #[test]
    fn random_leaf_support_trees_qualify() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let (t, s) = random_leaf_support_tree(12, &mut rng).unwrap();
            assert!(t.is_tree() && t.order() <= 12);
            assert_eq!(t.supports().len(), s);
            assert_eq!(t.leaves() | t.supports(), t.vertices());
        }
    }

    #[test]
    fn random_corpora_are_seed_reproducible() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..5).map(|_| random_isolate_free_graph(8, 0.3, &mut rng, 1000).unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(draw(42), draw(42));
        assert_ne!(draw(42), draw(43));
    }
}
