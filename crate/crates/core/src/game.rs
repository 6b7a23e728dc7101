//! Exact minimax values for the three sequential invariants.
//!
//! * [`gti`]: the indicated total domination game, optionally on a partially
//!   total dominated graph `G|S`.
//! * [`gtg`]: the total domination game with Dominator moving first.
//! * [`grundy_t`]: the longest total dominating sequence.
//!
//! Every solver is memoized on the set `M` of vertices already totally
//! dominated. For the indicated game that is enough: the legal indications
//! are the vertices outside `M`, the legal selections for an indicated `v`
//! are all of `N(v)`, and each round adds one new vertex to the played set,
//! so the move count never has to be stored.

use core::cell::RefCell;
use core::fmt;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Dominator,
    Staller,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Dominator => "Dominator",
            Role::Staller => "Staller",
        })
    }
}

/// A position of the indicated total domination game on `G|S`.
#[derive(Clone, Copy, Debug)]
pub struct GameState<'g> {
    pub graph: &'g Graph,
    /// Vertices declared totally dominated before play started.
    pub declared: VertexSet,
    /// The set `D` built by Staller so far.
    pub played: VertexSet,
    /// Always `declared ∪ N(played)`.
    pub dominated: VertexSet,
    pub moves: usize,
}

impl<'g> GameState<'g> {
    pub fn new(graph: &'g Graph, declared: VertexSet) -> Self {
        GameState { graph, declared, played: VertexSet::EMPTY, dominated: declared, moves: 0 }
    }

    pub fn is_terminal(&self) -> bool {
        self.dominated == self.graph.vertices()
    }

    /// Vertices Dominator may still indicate.
    pub fn undominated(&self) -> VertexSet {
        self.graph.vertices() - self.dominated
    }

    /// The state after Staller selects `u`.
    pub fn select(&self, u: usize) -> Self {
        GameState {
            played: self.played.with(u),
            dominated: self.dominated | self.graph.neighbors(u),
            moves: self.moves + 1,
            ..*self
        }
    }
}

/// A deterministic move rule for one side of the indicated game.
///
/// A policy must be a function of the state: `best_response_length` caches
/// positions by the played set.
pub trait Policy {
    fn role(&self) -> Role;

    /// Dominator policies receive `indicated = None` and return a vertex to
    /// indicate. Staller policies receive the indicated vertex and return a
    /// neighbor of it to select.
    fn choose(&self, state: &GameState<'_>, indicated: Option<usize>) -> usize;
}

fn check_declared(g: &Graph, declared: VertexSet) -> Result<()> {
    match (declared - g.vertices()).first() {
        Some(v) => Err(Error::VertexOutOfRange { vertex: v, order: g.order() }),
        None => Ok(()),
    }
}

/// Memoized minimax for the indicated total domination game on one graph.
///
/// The table is keyed on the dominated set alone, so one solver answers
/// `gti(G|S)` for every declared set `S`.
#[derive(Clone, Debug)]
pub struct IndicatedSolver<'g> {
    graph: &'g Graph,
    memo: HashMap<u32, u8>,
}

impl<'g> IndicatedSolver<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        graph.require_isolate_free()?;
        Ok(IndicatedSolver { graph, memo: HashMap::new() })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// `gti(G|declared)`.
    pub fn value(&mut self, declared: VertexSet) -> Result<usize> {
        check_declared(self.graph, declared)?;
        Ok(self.eval(declared) as usize)
    }

    /// Number of distinct positions evaluated so far.
    pub fn positions(&self) -> usize {
        self.memo.len()
    }

    fn eval(&mut self, dominated: VertexSet) -> u8 {
        let all = self.graph.vertices();
        if dominated == all {
            return 0;
        }
        if let Some(&v) = self.memo.get(&dominated.bits()) {
            return v;
        }
        let mut best = u8::MAX;
        for v in all - dominated {
            let worst = self.worst_selection(dominated, v).1;
            best = best.min(worst + 1);
        }
        self.memo.insert(dominated.bits(), best);
        best
    }

    /// Staller's best reply to `v`: smallest-index maximizer and its value.
    ///
    /// Every neighbor of `v` is a legal selection. A neighbor `u` already in
    /// the played set is impossible, since it would have dominated `v`.
    fn worst_selection(&mut self, dominated: VertexSet, v: usize) -> (usize, u8) {
        let mut best = (usize::MAX, 0u8);
        for u in self.graph.neighbors(v) {
            let val = self.eval(dominated | self.graph.neighbors(u));
            if best.0 == usize::MAX || val > best.1 {
                best = (u, val);
            }
        }
        best
    }

    /// Dominator's optimal indication from `dominated`, smallest index among
    /// ties. `None` once the game is over.
    pub fn optimal_indication(&mut self, dominated: VertexSet) -> Option<usize> {
        let mut best: Option<(usize, u8)> = None;
        for v in self.graph.vertices() - dominated {
            let val = self.worst_selection(dominated, v).1 + 1;
            if best.is_none_or(|(_, b)| val < b) {
                best = Some((v, val));
            }
        }
        best.map(|(v, _)| v)
    }

    /// Staller's optimal selection when `v` is indicated, smallest index
    /// among ties.
    pub fn optimal_selection(&mut self, dominated: VertexSet, v: usize) -> usize {
        self.worst_selection(dominated, v).0
    }
}

/// The indicated total domination number of `G|declared`.
pub fn gti(g: &Graph, declared: VertexSet) -> Result<usize> {
    IndicatedSolver::new(g)?.value(declared)
}

/// Both sides of the indicated game played optimally from the solver's table.
pub struct OptimalPolicy<'g> {
    role: Role,
    solver: RefCell<IndicatedSolver<'g>>,
}

impl<'g> OptimalPolicy<'g> {
    pub fn new(graph: &'g Graph, role: Role) -> Result<Self> {
        Ok(OptimalPolicy { role, solver: RefCell::new(IndicatedSolver::new(graph)?) })
    }
}

impl Policy for OptimalPolicy<'_> {
    fn role(&self) -> Role {
        self.role
    }

    fn choose(&self, state: &GameState<'_>, indicated: Option<usize>) -> usize {
        let mut solver = self.solver.borrow_mut();
        match indicated {
            None => solver.optimal_indication(state.dominated).unwrap_or(usize::MAX),
            Some(v) => solver.optimal_selection(state.dominated, v),
        }
    }
}

/// Game length when `fixed` plays one side and the other side plays
/// optimally against it.
pub fn best_response_length(g: &Graph, declared: VertexSet, fixed: &dyn Policy) -> Result<usize> {
    g.require_isolate_free()?;
    check_declared(g, declared)?;

    struct Search<'a> {
        fixed: &'a dyn Policy,
        memo: HashMap<u32, u8>,
        all: VertexSet,
    }

    impl Search<'_> {
        fn illegal(&self, state: &GameState<'_>, vertex: usize) -> Error {
            Error::IllegalMove {
                role: self.fixed.role(),
                vertex,
                played: state.played,
                dominated: state.dominated,
            }
        }

        fn after(&mut self, state: &GameState<'_>, u: usize) -> Result<u8> {
            // A played `u` would already have dominated the indicated vertex.
            assert!(!state.played.contains(u), "selected vertex {u} was already played");
            Ok(1 + self.go(&state.select(u))?)
        }

        fn go(&mut self, state: &GameState<'_>) -> Result<u8> {
            if state.dominated == self.all {
                return Ok(0);
            }
            if let Some(&v) = self.memo.get(&state.played.bits()) {
                return Ok(v);
            }
            let g = state.graph;
            let value = match self.fixed.role() {
                Role::Dominator => {
                    let v = self.fixed.choose(state, None);
                    if v >= g.order() || state.dominated.contains(v) {
                        return Err(self.illegal(state, v));
                    }
                    let mut worst = 0;
                    for u in g.neighbors(v) {
                        worst = worst.max(self.after(state, u)?);
                    }
                    worst
                }
                Role::Staller => {
                    let mut best = u8::MAX;
                    for v in state.undominated() {
                        let u = self.fixed.choose(state, Some(v));
                        if u >= g.order() || !g.has_edge(u, v) {
                            return Err(self.illegal(state, u));
                        }
                        best = best.min(self.after(state, u)?);
                    }
                    best
                }
            };
            self.memo.insert(state.played.bits(), value);
            Ok(value)
        }
    }

    let mut search = Search { fixed, memo: HashMap::new(), all: g.vertices() };
    Ok(search.go(&GameState::new(g, declared))? as usize)
}

/// Memoized minimax for the total domination game (Dominator starts).
#[derive(Clone, Debug)]
pub struct TotalGameSolver<'g> {
    graph: &'g Graph,
    memo: HashMap<u32, u8>,
}

const STALLER_TO_MOVE: u32 = 1 << 31;

impl<'g> TotalGameSolver<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        graph.require_isolate_free()?;
        Ok(TotalGameSolver { graph, memo: HashMap::new() })
    }

    /// Optimal remaining length from `dominated` with `mover` to play.
    pub fn value(&mut self, dominated: VertexSet, mover: Role) -> usize {
        self.eval(dominated, mover) as usize
    }

    fn eval(&mut self, dominated: VertexSet, mover: Role) -> u8 {
        let g = self.graph;
        if dominated == g.vertices() {
            return 0;
        }
        let key = dominated.bits() | if mover == Role::Staller { STALLER_TO_MOVE } else { 0 };
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let next = match mover {
            Role::Dominator => Role::Staller,
            Role::Staller => Role::Dominator,
        };
        let mut best: Option<u8> = None;
        for v in 0..g.order() {
            // legal: totally dominates something new
            if g.neighbors(v).is_subset(dominated) {
                continue;
            }
            let val = 1 + self.eval(dominated | g.neighbors(v), next);
            best = Some(match (best, mover) {
                (None, _) => val,
                (Some(b), Role::Dominator) => b.min(val),
                (Some(b), Role::Staller) => b.max(val),
            });
        }
        let best = best.expect("an isolate-free graph always has a legal move until dominated");
        self.memo.insert(key, best);
        best
    }
}

/// The game total domination number (D-game).
pub fn gtg(g: &Graph) -> Result<usize> {
    Ok(TotalGameSolver::new(g)?.value(VertexSet::EMPTY, Role::Dominator))
}

/// Memoized longest total dominating sequence.
#[derive(Clone, Debug)]
pub struct GrundySolver<'g> {
    graph: &'g Graph,
    memo: HashMap<u32, u8>,
}

impl<'g> GrundySolver<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        graph.require_isolate_free()?;
        Ok(GrundySolver { graph, memo: HashMap::new() })
    }

    fn eval(&mut self, dominated: VertexSet) -> u8 {
        let g = self.graph;
        if dominated == g.vertices() {
            return 0;
        }
        if let Some(&v) = self.memo.get(&dominated.bits()) {
            return v;
        }
        let best = (0..g.order())
            .filter(|&v| !g.neighbors(v).is_subset(dominated))
            .map(|v| 1 + self.eval(dominated | g.neighbors(v)))
            .max()
            .expect("an isolate-free graph always has a legal move until dominated");
        self.memo.insert(dominated.bits(), best);
        best
    }

    pub fn value(&mut self) -> usize {
        self.eval(VertexSet::EMPTY) as usize
    }

    /// A longest total dominating sequence, choosing the smallest index at
    /// each step among optimal continuations.
    pub fn sequence(&mut self) -> alloc::vec::Vec<usize> {
        let g = self.graph;
        let mut out = alloc::vec::Vec::new();
        let mut dominated = VertexSet::EMPTY;
        while dominated != g.vertices() {
            let target = self.eval(dominated);
            let v = (0..g.order())
                .find(|&v| {
                    !g.neighbors(v).is_subset(dominated)
                        && 1 + self.eval(dominated | g.neighbors(v)) == target
                })
                .expect("memo value is realized by some move");
            out.push(v);
            dominated = dominated | g.neighbors(v);
        }
        out
    }
}

/// The Grundy total domination number.
pub fn grundy_t(g: &Graph) -> Result<usize> {
    Ok(GrundySolver::new(g)?.value())
}

impl fmt::Display for GameState<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D={} M={} after {} moves", self.played, self.dominated, self.moves)
    }
}
