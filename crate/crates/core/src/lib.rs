//! Exact solvers for the indicated total domination game on small graphs.
//!
//! Everything here works over [`Graph`]s of at most [`SOLVER_CAP`] vertices,
//! with vertex sets stored as single-word bit masks. The crate is `no_std`
//! (it needs `alloc`); file formats, reports and the command-line front end
//! live in the `tdgame` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod enumerate;
pub mod error;
pub mod families;
pub mod game;
pub mod graph;
pub mod invariants;
pub mod strategies;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use families::{family, graph_join, graph_power, FamilySpec};
pub use game::{best_response_length, grundy_t, gtg, gti, GameState, IndicatedSolver, Policy, Role};
pub use graph::{Graph, PrivateNeighborhoods, UNREACHABLE};
pub use invariants::{
    gamma_t, has_perfect_matching, induced_matching_number, ooir, upper_gamma_t, InvariantKind,
    InvariantValue, Witness,
};
pub use vertex_set::VertexSet;

/// Largest graph order accepted anywhere in the crate.
///
/// Vertex sets are `u32` masks; 26 leaves headroom for the memo keys and
/// covers every family instance the acceptance checks need.
pub const SOLVER_CAP: usize = 26;
