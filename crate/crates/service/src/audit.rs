//! Adversarial audit of the engine: plays out every human line on a board
//! and checks that the engine converts every won position it is handed.
//!
//! Each ply also re-derives the position from the abstract move that the
//! placement stands for and compares it with the board's projection.

use std::collections::HashMap;

use kayles::{Oracle, OracleError, Player, Position};
use thiserror::Error;

use crate::board::{BoardError, BoardState, Status};
use crate::store::engine_placement;

#[derive(Debug, Error)]
pub enum AuditError {
    #[error(transparent)]
    Board(#[from] BoardError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("board {board}: projection {projection} differs from tracked position {tracked}")]
    Projection {
        board: String,
        projection: Position,
        tracked: Position,
    },
    #[error("board {board}: engine ({engine}) was winning but can lose")]
    EngineLost { board: String, engine: Player },
    #[error("board {board}: engine had no placement")]
    NoEngineMove { board: String },
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct AuditStats {
    /// Distinct board states reached.
    pub states: usize,
    /// Engine-to-move states that the oracle scores as engine wins.
    pub won_engine_states: usize,
}

const LEFT_WINS: u8 = 1;
const RIGHT_WINS: u8 = 2;

fn mask(p: Player) -> u8 {
    match p {
        Player::Left => LEFT_WINS,
        Player::Right => RIGHT_WINS,
    }
}

struct Explorer<'a> {
    oracle: &'a Oracle,
    engine: Player,
    seen: HashMap<(Vec<String>, Player), u8>,
    stats: AuditStats,
}

impl Explorer<'_> {
    /// Returns the set of possible winners from `board` over all human lines.
    fn explore(&mut self, board: &BoardState, tracked: &Position) -> Result<u8, AuditError> {
        let projection = board.projection();
        if &projection != tracked {
            return Err(AuditError::Projection {
                board: board.to_string(),
                projection,
                tracked: tracked.clone(),
            });
        }
        let key = (board.row_strings(), board.to_move());
        if let Some(&m) = self.seen.get(&key) {
            return Ok(m);
        }
        self.stats.states += 1;
        let winners = match board.status() {
            Status::Finished { winner } => mask(winner),
            Status::InProgress if board.to_move() == self.engine => {
                let won = self.oracle.wins_moving_first(&projection, self.engine)?;
                let pl = engine_placement(board).ok_or_else(|| AuditError::NoEngineMove {
                    board: board.to_string(),
                })?;
                let m = self.step(board, tracked, pl)?;
                if won {
                    self.stats.won_engine_states += 1;
                    if m != mask(self.engine) {
                        return Err(AuditError::EngineLost {
                            board: board.to_string(),
                            engine: self.engine,
                        });
                    }
                }
                m
            }
            Status::InProgress => {
                let mut m = 0;
                for pl in board.legal_placements() {
                    m |= self.step(board, tracked, pl)?;
                }
                m
            }
        };
        self.seen.insert(key, winners);
        Ok(winners)
    }

    fn step(
        &mut self,
        board: &BoardState,
        tracked: &Position,
        pl: crate::board::Placement,
    ) -> Result<u8, AuditError> {
        let mv = board
            .abstract_move(&pl)
            .expect("legal placement lies in an empty run");
        let next_tracked = tracked.apply_move(&mv).expect("abstract move is legal");
        let mut next = board.clone();
        next.place(pl)?;
        self.explore(&next, &next_tracked)
    }
}

/// Explores every human line on a fresh board with the given rows.
pub fn audit_board(
    oracle: &Oracle,
    rows: &[u32],
    human: Player,
    first: Player,
) -> Result<AuditStats, AuditError> {
    let board = BoardState::new(rows, first)?;
    let mut explorer = Explorer {
        oracle,
        engine: human.other(),
        seen: HashMap::new(),
        stats: AuditStats::default(),
    };
    let tracked = board.projection();
    explorer.explore(&board, &tracked)?;
    Ok(explorer.stats)
}
