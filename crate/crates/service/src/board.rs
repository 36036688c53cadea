//! Concrete boards: rows of cells with pieces placed on them.

use std::fmt;

use kayles::{Move, Player, Position};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MAX_ROWS: usize = 16;
pub const MAX_ROW_LEN: u32 = 60;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoardError {
    #[error("a board needs 1 to {MAX_ROWS} rows of 1 to {MAX_ROW_LEN} cells")]
    InvalidDimensions,
    #[error("it is {expected}'s turn")]
    WrongTurn { expected: Player },
    #[error("row {row}, cell {cell} is outside the board for a {player} piece")]
    OutOfRange { row: usize, cell: usize, player: Player },
    #[error("row {row}, cell {cell} is already occupied")]
    Occupied { row: usize, cell: usize },
    #[error("the game is over")]
    Finished,
    #[error("history does not replay to the stored board")]
    Inconsistent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Empty,
    Left,
    Right,
}

impl Cell {
    fn symbol(self) -> char {
        match self {
            Cell::Empty => '.',
            Cell::Left => 'L',
            Cell::Right => 'R',
        }
    }

    fn from_symbol(c: char) -> Option<Cell> {
        match c {
            '.' => Some(Cell::Empty),
            'L' => Some(Cell::Left),
            'R' => Some(Cell::Right),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Placement {
    pub row: usize,
    /// Leftmost covered cell; Right also covers `cell + 1`.
    pub cell: usize,
    pub player: Player,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "state")]
pub enum Status {
    InProgress,
    Finished { winner: Player },
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::InProgress => "in-progress",
            Status::Finished { .. } => "finished",
        }
    }

    pub fn winner(self) -> Option<Player> {
        match self {
            Status::InProgress => None,
            Status::Finished { winner } => Some(winner),
        }
    }
}

/// A maximal run of empty cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub row: usize,
    pub start: usize,
    pub len: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BoardWire", into = "BoardWire")]
pub struct BoardState {
    rows: Vec<Vec<Cell>>,
    first: Player,
    to_move: Player,
    history: Vec<Placement>,
    status: Status,
}

impl BoardState {
    pub fn new(lengths: &[u32], first: Player) -> Result<Self, BoardError> {
        if lengths.is_empty()
            || lengths.len() > MAX_ROWS
            || lengths.iter().any(|&n| n == 0 || n > MAX_ROW_LEN)
        {
            return Err(BoardError::InvalidDimensions);
        }
        let mut board = BoardState {
            rows: lengths.iter().map(|&n| vec![Cell::Empty; n as usize]).collect(),
            first,
            to_move: first,
            history: Vec::new(),
            status: Status::InProgress,
        };
        board.update_status();
        Ok(board)
    }

    /// Rebuilds a board by playing `history` from an empty board.
    pub fn replay(lengths: &[u32], first: Player, history: &[Placement]) -> Result<Self, BoardError> {
        let mut board = BoardState::new(lengths, first)?;
        for pl in history {
            board.place(*pl)?;
        }
        Ok(board)
    }

    pub fn row_lengths(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    pub fn first(&self) -> Player {
        self.first
    }

    pub fn to_move(&self) -> Player {
        self.to_move
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn history(&self) -> &[Placement] {
        &self.history
    }

    pub fn cell(&self, row: usize, cell: usize) -> Option<Cell> {
        self.rows.get(row).and_then(|r| r.get(cell)).copied()
    }

    /// Rows in wire form: `.` empty, `L` square, `RR` domino.
    pub fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|c| c.symbol()).collect())
            .collect()
    }

    /// Maximal empty runs in row-major order.
    pub fn runs(&self) -> Vec<Run> {
        let mut out = Vec::new();
        for (row, cells) in self.rows.iter().enumerate() {
            let mut start = None;
            for (i, &c) in cells.iter().chain(std::iter::once(&Cell::Left)).enumerate() {
                match (c, start) {
                    (Cell::Empty, None) => start = Some(i),
                    (Cell::Empty, Some(_)) => {}
                    (_, Some(s)) => {
                        out.push(Run {
                            row,
                            start: s,
                            len: (i - s) as u32,
                        });
                        start = None;
                    }
                    (_, None) => {}
                }
            }
        }
        out
    }

    /// The position formed by the empty runs.
    pub fn projection(&self) -> Position {
        Position::new(self.runs().into_iter().map(|r| r.len))
    }

    pub fn check(&self, pl: &Placement) -> Result<(), BoardError> {
        if let Status::Finished { .. } = self.status {
            return Err(BoardError::Finished);
        }
        if pl.player != self.to_move {
            return Err(BoardError::WrongTurn {
                expected: self.to_move,
            });
        }
        let width = pl.player.piece_len() as usize;
        let row = self.rows.get(pl.row).ok_or(BoardError::OutOfRange {
            row: pl.row,
            cell: pl.cell,
            player: pl.player,
        })?;
        if pl.cell + width > row.len() {
            return Err(BoardError::OutOfRange {
                row: pl.row,
                cell: pl.cell,
                player: pl.player,
            });
        }
        if let Some(i) = (pl.cell..pl.cell + width).find(|&i| row[i] != Cell::Empty) {
            return Err(BoardError::Occupied { row: pl.row, cell: i });
        }
        Ok(())
    }

    pub fn place(&mut self, pl: Placement) -> Result<(), BoardError> {
        self.check(&pl)?;
        let (cell, width) = match pl.player {
            Player::Left => (Cell::Left, 1),
            Player::Right => (Cell::Right, 2),
        };
        for c in &mut self.rows[pl.row][pl.cell..pl.cell + width] {
            *c = cell;
        }
        self.history.push(pl);
        self.to_move = self.to_move.other();
        self.update_status();
        Ok(())
    }

    /// A player who cannot move wins: the opponent made the last placement.
    fn update_status(&mut self) {
        self.status = if self.projection().has_move(self.to_move) {
            Status::InProgress
        } else {
            Status::Finished {
                winner: self.to_move,
            }
        };
    }

    pub fn legal_placements(&self) -> Vec<Placement> {
        if self.status != Status::InProgress {
            return Vec::new();
        }
        let player = self.to_move;
        let width = player.piece_len();
        let mut out = Vec::new();
        for run in self.runs() {
            if run.len < width {
                continue;
            }
            for offset in 0..=(run.len - width) as usize {
                out.push(Placement {
                    row: run.row,
                    cell: run.start + offset,
                    player,
                });
            }
        }
        out
    }

    /// The abstract move a legal placement corresponds to in [`projection`](Self::projection).
    pub fn abstract_move(&self, pl: &Placement) -> Option<Move> {
        let run = self
            .runs()
            .into_iter()
            .find(|r| r.row == pl.row && r.start <= pl.cell && pl.cell < r.start + r.len as usize)?;
        let projection = self.projection();
        let component_index = projection.components().iter().position(|&n| n == run.len)?;
        Some(Move {
            player: pl.player,
            component_index,
            offset: (pl.cell - run.start) as u32,
        })
    }

    /// Realizes an abstract move on the leftmost (row-major) run of the
    /// matching length.
    pub fn realize(&self, mv: &Move) -> Option<Placement> {
        let n = *self.projection().components().get(mv.component_index)?;
        let run = self.runs().into_iter().find(|r| r.len == n)?;
        Some(Placement {
            row: run.row,
            cell: run.start + mv.offset as usize,
            player: mv.player,
        })
    }
}

impl fmt::Display for BoardState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.row_strings().join("/"))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct BoardWire {
    rows: Vec<String>,
    first: Player,
    to_move: Player,
    history: Vec<Placement>,
    status: Status,
}

impl From<BoardState> for BoardWire {
    fn from(b: BoardState) -> Self {
        BoardWire {
            rows: b.row_strings(),
            first: b.first,
            to_move: b.to_move,
            history: b.history,
            status: b.status,
        }
    }
}

impl TryFrom<BoardWire> for BoardState {
    type Error = BoardError;

    /// Accepts a stored board only if its history replays to the same cells.
    fn try_from(w: BoardWire) -> Result<Self, BoardError> {
        let mut rows = Vec::with_capacity(w.rows.len());
        for r in &w.rows {
            let cells: Option<Vec<Cell>> = r.chars().map(Cell::from_symbol).collect();
            rows.push(cells.ok_or(BoardError::Inconsistent)?);
        }
        let lengths: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        let replayed = BoardState::replay(&lengths, w.first, &w.history)?;
        if replayed.rows != rows || replayed.to_move != w.to_move || replayed.status != w.status {
            return Err(BoardError::Inconsistent);
        }
        Ok(replayed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left(row: usize, cell: usize) -> Placement {
        Placement {
            row,
            cell,
            player: Player::Left,
        }
    }

    fn right(row: usize, cell: usize) -> Placement {
        Placement {
            row,
            cell,
            player: Player::Right,
        }
    }

    #[test]
    fn fresh_board() {
        let b = BoardState::new(&[6], Player::Left).unwrap();
        assert_eq!(b.row_strings(), ["......"]);
        assert_eq!(b.to_move(), Player::Left);
        assert_eq!(b.status(), Status::InProgress);
        assert!(BoardState::new(&[], Player::Left).is_err());
        assert!(BoardState::new(&[0], Player::Left).is_err());
        assert!(BoardState::new(&[61], Player::Left).is_err());
        assert!(BoardState::new(&[1; 17], Player::Left).is_err());
    }

    #[test]
    fn placements_split_runs() {
        let mut b = BoardState::new(&[6], Player::Left).unwrap();
        b.place(left(0, 2)).unwrap();
        assert_eq!(b.row_strings(), ["..L..."]);
        assert_eq!(b.projection(), "2+3".parse().unwrap());
        assert_eq!(
            b.check(&right(0, 5)),
            Err(BoardError::OutOfRange {
                row: 0,
                cell: 5,
                player: Player::Right
            })
        );
        assert_eq!(b.check(&right(0, 1)), Err(BoardError::Occupied { row: 0, cell: 2 }));
        b.place(right(0, 3)).unwrap();
        assert_eq!(b.row_strings(), ["..LRR."]);
        assert_eq!(b.projection(), "2+1".parse().unwrap());
    }

    #[test]
    fn turn_and_finish() {
        let mut b = BoardState::new(&[2], Player::Left).unwrap();
        assert_eq!(b.check(&right(0, 0)), Err(BoardError::WrongTurn { expected: Player::Left }));
        b.place(left(0, 0)).unwrap();
        // Right cannot fit a domino, so Right wins
        assert_eq!(b.status(), Status::Finished { winner: Player::Right });
        assert_eq!(b.check(&left(0, 1)), Err(BoardError::Finished));
        assert!(b.legal_placements().is_empty());

        let b = BoardState::new(&[1], Player::Right).unwrap();
        assert_eq!(b.status(), Status::Finished { winner: Player::Right });
    }

    #[test]
    fn realize_uses_leftmost_matching_run() {
        let mut b = BoardState::new(&[3, 5, 3], Player::Left).unwrap();
        b.place(left(1, 0)).unwrap();
        // runs: 3 (row 0), 4 (row 1), 3 (row 2); projection 4+3+3
        let mv = Move {
            player: Player::Right,
            component_index: 1,
            offset: 1,
        };
        assert_eq!(b.realize(&mv), Some(right(0, 1)));
        let back = b.abstract_move(&right(2, 0)).unwrap();
        assert_eq!(back.component_index, 1);
        assert_eq!(back.offset, 0);
    }

    #[test]
    fn wire_form_round_trips_and_rejects_tampering() {
        let mut b = BoardState::new(&[4, 2], Player::Left).unwrap();
        b.place(left(0, 1)).unwrap();
        b.place(right(1, 0)).unwrap();
        let json = serde_json::to_string(&b).unwrap();
        let back: BoardState = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b);
        let tampered = json.replace("\".L..\"", "\"..L.\"");
        assert!(serde_json::from_str::<BoardState>(&tampered).is_err());
    }
}
