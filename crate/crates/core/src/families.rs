//! Deterministic generators for the graph families used throughout the crate.
//!
//! Vertex numbering is fixed per family so that tests and scripted policies
//! can refer to vertices by index:
//!
//! | family | numbering |
//! |---|---|
//! | `path:n` | `v1 .. vn` along the path |
//! | `cycle:n` | around the cycle |
//! | `star:k` | hub `0`, leaves `1..=k` |
//! | `cyclepower:n,k` | around the base cycle |
//! | `gk:k` | copy `i` occupies `8i..8i+8` as `u,v,w,x` of the first path then of the second |
//! | `fk:k` | `u1..uk` are `0..k`, `v1..vk` are `k..2k` |
//! | `bk:k` | hub `v = 0`, pendant `u = 1`, triangle `i` adds `2+2i, 3+2i` |
//! | `jk:k` | hub `v = 0`, pendant `u = 1`, 4-cycle `i` adds `a_i, v_i, b_i` at `2+3i..5+3i` with `v_i` opposite the hub |
//! | `substar:k,t` | hub `0`, branch `i` is the path `1+i(t+1) ..= (i+1)(t+1)` walking outward |
//! | `corona:G` | the vertices of `G`, then the pendant of vertex `v` at `n + v` |
//! | `join:A+B`, `union:A+B` | the vertices of `A`, then those of `B` |

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::SOLVER_CAP;

/// A named graph family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,k}`
    Star(usize),
    /// `C_n^k`
    CyclePower {
        n: usize,
        k: usize,
    },
    Join(Vec<FamilySpec>),
    Corona(Box<FamilySpec>),
    /// `k` copies of `P4 ⊕ P4` joined in a ring.
    Gk(usize),
    /// `(K_k □ K_2) - u_k v_k`
    Fk(usize),
    /// `k` triangles sharing a hub, plus a pendant at the hub.
    Bk(usize),
    /// `k` four-cycles sharing a hub, plus a pendant at the hub.
    Jk(usize),
    /// `K_{1,k}` with every edge subdivided `t` times.
    SubdividedStar {
        k: usize,
        t: usize,
    },
    DisjointUnion(Vec<FamilySpec>),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn check_order(n: usize) -> Result<()> {
    if n > SOLVER_CAP {
        Err(Error::Capacity { order: n, cap: SOLVER_CAP })
    } else {
        Ok(())
    }
}

/// Small edge-list builder that keeps vertex role names alongside.
struct Builder {
    edges: Vec<(usize, usize)>,
    names: Vec<String>,
}

impl Builder {
    fn new() -> Self {
        Builder { edges: Vec::new(), names: Vec::new() }
    }

    fn vertex(&mut self, name: String) -> usize {
        self.names.push(name);
        self.names.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    fn finish(self) -> Result<Graph> {
        check_order(self.names.len())?;
        Ok(Graph::new(self.names.len(), self.edges)?.with_vertex_labels(self.names))
    }
}

fn path_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("path needs n >= 2, got {n}")));
    }
    let mut b = Builder::new();
    for i in 0..n {
        b.vertex(format!("v{}", i + 1));
    }
    for i in 1..n {
        b.edge(i - 1, i);
    }
    b.finish()
}

fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let mut b = Builder::new();
    for i in 0..n {
        b.vertex(format!("v{}", i + 1));
    }
    for i in 0..n {
        b.edge(i, (i + 1) % n);
    }
    b.finish()
}

fn complete_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let mut b = Builder::new();
    let vs: Vec<usize> = (0..n).map(|i| b.vertex(format!("v{}", i + 1))).collect();
    b.clique(&vs);
    b.finish()
}

fn star_graph(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(invalid("star needs k >= 1"));
    }
    subdivided_star_unchecked(k, 0)
}

fn gk_graph(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(invalid("gk needs k >= 1"));
    }
    check_order(8 * k)?;
    let mut b = Builder::new();
    // w_{i,1} and w_{i,2} of each copy, for the ring edges.
    let mut ws = Vec::with_capacity(k);
    for i in 1..=k {
        let mut halves = [[0usize; 4]; 2];
        for (j, half) in halves.iter_mut().enumerate() {
            for (slot, role) in half.iter_mut().zip(["u", "v", "w", "x"]) {
                *slot = b.vertex(format!("{role}_{{{i},{}}}", j + 1));
            }
            b.edge(half[0], half[1]);
            b.edge(half[1], half[2]);
            b.edge(half[2], half[3]);
        }
        for &a in &halves[0] {
            for &c in &halves[1] {
                b.edge(a, c);
            }
        }
        ws.push((halves[0][2], halves[1][2]));
    }
    // G_1 is a single copy of H; the ring edges w_{i,2} w_{i+1,1} only
    // appear from k = 2 on.
    if k >= 2 {
        for i in 0..k {
            b.edge(ws[i].1, ws[(i + 1) % k].0);
        }
    }
    b.finish()
}

fn fk_graph(k: usize) -> Result<Graph> {
    if k < 5 {
        return Err(invalid(format!("fk needs k >= 5, got {k}")));
    }
    check_order(2 * k)?;
    let mut b = Builder::new();
    let us: Vec<usize> = (1..=k).map(|i| b.vertex(format!("u{i}"))).collect();
    let vs: Vec<usize> = (1..=k).map(|i| b.vertex(format!("v{i}"))).collect();
    b.clique(&us);
    b.clique(&vs);
    for i in 0..k - 1 {
        b.edge(us[i], vs[i]);
    }
    b.finish()
}

fn bk_graph(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(invalid("bk needs k >= 1"));
    }
    check_order(2 * k + 2)?;
    let mut b = Builder::new();
    let hub = b.vertex("v".into());
    let pendant = b.vertex("u".into());
    b.edge(hub, pendant);
    for i in 1..=k {
        let a = b.vertex(format!("a{i}"));
        let c = b.vertex(format!("b{i}"));
        b.clique(&[hub, a, c]);
    }
    b.finish()
}

fn jk_graph(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(invalid("jk needs k >= 1"));
    }
    check_order(3 * k + 2)?;
    let mut b = Builder::new();
    let hub = b.vertex("v".into());
    let pendant = b.vertex("u".into());
    b.edge(hub, pendant);
    for i in 1..=k {
        let a = b.vertex(format!("a{i}"));
        let far = b.vertex(format!("v{i}"));
        let c = b.vertex(format!("b{i}"));
        b.edge(hub, a);
        b.edge(a, far);
        b.edge(far, c);
        b.edge(c, hub);
    }
    b.finish()
}

fn subdivided_star_unchecked(k: usize, t: usize) -> Result<Graph> {
    check_order(k * (t + 1) + 1)?;
    let mut b = Builder::new();
    let hub = b.vertex("v".into());
    for i in 1..=k {
        let mut prev = hub;
        for depth in 1..=t + 1 {
            let v = b.vertex(format!("p{i}_{depth}"));
            b.edge(prev, v);
            prev = v;
        }
    }
    b.finish()
}

fn subdivided_star(k: usize, t: usize) -> Result<Graph> {
    if k < 3 || t < 1 {
        return Err(invalid(format!("substar needs k >= 3 and t >= 1, got k={k}, t={t}")));
    }
    subdivided_star_unchecked(k, t)
}

/// `G ⊕ H`: disjoint union plus every edge between the two sides.
pub fn graph_join(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.order();
    check_order(n + h.order())?;
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(a, b)| (a + n, b + n)));
    for u in 0..n {
        for v in 0..h.order() {
            edges.push((u, n + v));
        }
    }
    Graph::new(n + h.order(), edges)
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.order();
    check_order(n + h.order())?;
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(a, b)| (a + n, b + n)));
    Graph::new(n + h.order(), edges)
}

/// Attaches one new pendant vertex to every vertex of `g`.
pub fn corona(g: &Graph) -> Result<Graph> {
    let n = g.order();
    check_order(2 * n)?;
    let mut edges = g.edges();
    edges.extend((0..n).map(|v| (v, n + v)));
    Graph::new(2 * n, edges)
}

/// `G^k`: same vertices, adjacent when at distance at most `k` in `G`.
pub fn graph_power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Precondition("graph power needs k >= 1".into()));
    }
    let adj = (0..g.order()).map(|v| g.ball(v, k)).collect();
    Graph::from_adjacency(adj)
}

/// Builds the graph described by `spec`, labelled with its canonical text.
pub fn family(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    let g = match spec {
        Path(n) => path_graph(*n)?,
        Cycle(n) => cycle_graph(*n)?,
        Complete(n) => complete_graph(*n)?,
        Star(k) => star_graph(*k)?,
        CyclePower { n, k } => {
            if *k < 1 {
                return Err(invalid("cyclepower needs k >= 1"));
            }
            graph_power(&cycle_graph(*n)?, *k)?
        }
        Join(parts) => fold_parts(parts, graph_join)?,
        DisjointUnion(parts) => fold_parts(parts, disjoint_union)?,
        Corona(base) => corona(&family(base)?)?,
        Gk(k) => gk_graph(*k)?,
        Fk(k) => fk_graph(*k)?,
        Bk(k) => bk_graph(*k)?,
        Jk(k) => jk_graph(*k)?,
        SubdividedStar { k, t } => subdivided_star(*k, *t)?,
    };
    Ok(g.with_label(spec.to_string()))
}

fn fold_parts(parts: &[FamilySpec], op: fn(&Graph, &Graph) -> Result<Graph>) -> Result<Graph> {
    let (first, rest) =
        parts.split_first().ok_or_else(|| invalid("join/union needs at least one operand"))?;
    let mut acc = family(first)?;
    for part in rest {
        acc = op(&acc, &family(part)?)?;
    }
    Ok(acc)
}

impl FamilySpec {
    fn name(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path(_) => "path",
            Cycle(_) => "cycle",
            Complete(_) => "complete",
            Star(_) => "star",
            CyclePower { .. } => "cyclepower",
            Join(_) => "join",
            Corona(_) => "corona",
            Gk(_) => "gk",
            Fk(_) => "fk",
            Bk(_) => "bk",
            Jk(_) => "jk",
            SubdividedStar { .. } => "substar",
            DisjointUnion(_) => "union",
        }
    }

    fn is_compound(&self) -> bool {
        matches!(self, FamilySpec::Join(_) | FamilySpec::DisjointUnion(_) | FamilySpec::Corona(_))
    }

    /// Writes the operand form: `path4`, `cyclepower7,2`, `(join:...)`.
    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_compound() {
            write!(f, "({self})")
        } else {
            f.write_str(self.name())?;
            self.fmt_args(f)
        }
    }

    fn fmt_args(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) | Cycle(n) | Complete(n) | Star(n) | Gk(n) | Fk(n) | Bk(n) | Jk(n) => {
                write!(f, "{n}")
            }
            CyclePower { n, k } => write!(f, "{n},{k}"),
            SubdividedStar { k, t } => write!(f, "{k},{t}"),
            Corona(base) => base.fmt_operand(f),
            Join(parts) | DisjointUnion(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    p.fmt_operand(f)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.name())?;
        self.fmt_args(f)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the canonical text form, e.g. `path:7`, `cyclepower:7,2`,
    /// `join:path4+path4`, `corona:complete3`. The colon after the kind is
    /// optional; compound operands may be parenthesized.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = SpecParser { src: s.trim(), pos: 0 };
        let spec = p.spec()?;
        if p.pos != p.src.len() {
            return Err(invalid(format!("trailing input in family spec {s:?}")));
        }
        Ok(spec)
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, c: char) -> bool {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> String {
        let len = self.rest().find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(self.rest().len());
        let word = self.rest()[..len].to_ascii_lowercase();
        self.pos += len;
        word
    }

    fn number(&mut self) -> Result<usize> {
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            return Err(invalid(format!("expected a number at {:?}", self.rest())));
        }
        let n = self.rest()[..len]
            .parse()
            .map_err(|_| invalid(format!("number too large at {:?}", self.rest())))?;
        self.pos += len;
        Ok(n)
    }

    fn numbers<const N: usize>(&mut self) -> Result<[usize; N]> {
        let mut out = [0; N];
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 && !self.eat(',') {
                return Err(invalid(format!("expected {N} comma-separated parameters")));
            }
            *slot = self.number()?;
        }
        Ok(out)
    }

    fn operand(&mut self) -> Result<FamilySpec> {
        if self.eat('(') {
            let spec = self.spec()?;
            if !self.eat(')') {
                return Err(invalid("unbalanced parenthesis in family spec"));
            }
            Ok(spec)
        } else {
            self.spec()
        }
    }

    fn operands(&mut self) -> Result<Vec<FamilySpec>> {
        let mut parts = alloc::vec![self.operand()?];
        while self.eat('+') {
            parts.push(self.operand()?);
        }
        Ok(parts)
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        use FamilySpec::*;
        let kind = self.ident();
        self.eat(':');
        Ok(match kind.as_str() {
            "path" => Path(self.number()?),
            "cycle" => Cycle(self.number()?),
            "complete" => Complete(self.number()?),
            "star" => Star(self.number()?),
            "gk" => Gk(self.number()?),
            "fk" => Fk(self.number()?),
            "bk" => Bk(self.number()?),
            "jk" => Jk(self.number()?),
            "cyclepower" => {
                let [n, k] = self.numbers()?;
                CyclePower { n, k }
            }
            "substar" => {
                let [k, t] = self.numbers()?;
                SubdividedStar { k, t }
            }
            "corona" => Corona(Box::new(self.operand()?)),
            "join" => Join(self.operands()?),
            "union" => DisjointUnion(self.operands()?),
            other => return Err(invalid(format!("unknown family {other:?}"))),
        })
    }
}

/// Two-colors by BFS depth; used by the family tests and exposed for callers
/// that want the side of a vertex without recomputing.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    g.two_coloring().map(|black| (black, g.vertices() - black))
}
