//! Exact solver and verification workbench for the domination, total
//! domination, Z-, L- and LL-domination games on small graphs.

pub mod census;
pub mod classic;
pub mod closed_forms;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod game;
pub mod graph;
pub mod io;
pub mod structure;
pub mod verifier;
pub mod vertex_set;

pub use error::{Error, Result};
pub use game::{game_value, profile, GameState, InvariantProfile, Player, Solver, Variant};
pub use graph::{Graph, Nbhd};
pub use vertex_set::{VertexSet, MAX_VERTICES};
