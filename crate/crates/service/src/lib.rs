//! Human-vs-engine play over HTTP.
//!
//! Boards are rows of cells; the engine reasons about the multiset of empty
//! runs and maps its chosen move back onto the leftmost matching run.

pub mod audit;
pub mod board;
pub mod http;
pub mod store;

pub use board::{BoardError, BoardState, Cell, Placement, Run, Status};
pub use http::{router, serve, AppState};
pub use store::{
    analyse, engine_placement, Analysis, GameSession, MoveAnalysis, MoveResponse, ServiceError,
    SessionStore, SessionView,
};
