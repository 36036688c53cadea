//! In-memory session store with optional JSON snapshots.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::{Arc, Mutex, RwLock};
use std::time::{SystemTime, UNIX_EPOCH};

use kayles::{best_move, fast_outcome, monoid_value, Outcome, Player};
use log::warn;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::board::{BoardError, BoardState, Placement, Status};

const SNAPSHOT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("unknown game `{0}`")]
    UnknownSession(String),
    #[error("{0}")]
    Board(#[from] BoardError),
    #[error("it is the engine's turn")]
    EngineTurn,
    #[error("it is the human's turn")]
    HumanTurn,
    #[error("snapshot i/o failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("snapshot encoding failed: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GameSession {
    pub id: String,
    pub board: BoardState,
    pub human: Player,
    pub engine: Player,
    /// Milliseconds since the Unix epoch.
    pub created_at: u64,
    pub updated_at: u64,
}

/// Session as returned by the API.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SessionView {
    pub id: String,
    pub board: Vec<String>,
    pub to_move: Player,
    pub status: String,
    pub winner: Option<Player>,
    pub human: Player,
    pub engine: Player,
    pub first: Player,
    pub history: Vec<Placement>,
    pub created_at: u64,
    pub updated_at: u64,
}

impl From<&GameSession> for SessionView {
    fn from(s: &GameSession) -> Self {
        SessionView {
            id: s.id.clone(),
            board: s.board.row_strings(),
            to_move: s.board.to_move(),
            status: s.board.status().label().to_string(),
            winner: s.board.status().winner(),
            human: s.human,
            engine: s.engine,
            first: s.board.first(),
            history: s.board.history().to_vec(),
            created_at: s.created_at,
            updated_at: s.updated_at,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MoveResponse {
    pub applied: Vec<Placement>,
    pub board: Vec<String>,
    pub to_move: Player,
    pub status: String,
    pub winner: Option<Player>,
}

impl MoveResponse {
    fn new(applied: Vec<Placement>, board: &BoardState) -> Self {
        MoveResponse {
            applied,
            board: board.row_strings(),
            to_move: board.to_move(),
            status: board.status().label().to_string(),
            winner: board.status().winner(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MoveAnalysis {
    pub row: usize,
    pub cell: usize,
    pub player: Player,
    pub result_outcome: Outcome,
    pub winning: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Analysis {
    pub position: String,
    pub value: i64,
    pub outcome: Outcome,
    pub to_move: Player,
    pub status: String,
    pub winner: Option<Player>,
    pub moves: Vec<MoveAnalysis>,
}

/// The engine's placement for the side to move, if the game is still on.
pub fn engine_placement(board: &BoardState) -> Option<Placement> {
    if board.status() != Status::InProgress {
        return None;
    }
    let p = board.projection();
    let advice = best_move(&p, board.to_move());
    let (mv, _) = advice.chosen_move()?;
    board.realize(mv)
}

/// Every legal placement for the side to move, annotated with the
/// outcome it leads to.
pub fn analyse(board: &BoardState) -> Analysis {
    let p = board.projection();
    let mover = board.to_move();
    let moves = board
        .legal_placements()
        .into_iter()
        .map(|pl| {
            let mut next = board.clone();
            next.place(pl).expect("legal placement");
            let result_outcome = fast_outcome(&next.projection());
            MoveAnalysis {
                row: pl.row,
                cell: pl.cell,
                player: pl.player,
                result_outcome,
                winning: !result_outcome.wins_moving_first(mover.other()),
            }
        })
        .collect();
    Analysis {
        position: p.to_string(),
        value: monoid_value(&p).0,
        outcome: fast_outcome(&p),
        to_move: mover,
        status: board.status().label().to_string(),
        winner: board.status().winner(),
        moves,
    }
}

fn now_millis() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

#[derive(Serialize, Deserialize)]
struct Snapshot {
    v: u32,
    sessions: BTreeMap<String, GameSession>,
}

/// Sessions keyed by id. Each session has its own lock, so updates to one
/// game are serialized while other games proceed.
#[derive(Debug, Default)]
pub struct SessionStore {
    sessions: RwLock<HashMap<String, Arc<Mutex<GameSession>>>>,
}

impl SessionStore {
    pub fn new() -> Self {
        SessionStore::default()
    }

    pub fn len(&self) -> usize {
        self.sessions.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn session(&self, id: &str) -> Result<Arc<Mutex<GameSession>>, ServiceError> {
        self.sessions
            .read()
            .unwrap()
            .get(id)
            .cloned()
            .ok_or_else(|| ServiceError::UnknownSession(id.to_string()))
    }

    pub fn create_game(
        &self,
        rows: &[u32],
        human: Player,
        first: Player,
    ) -> Result<SessionView, ServiceError> {
        let mut board = BoardState::new(rows, first)?;
        let engine = human.other();
        if board.to_move() == engine {
            if let Some(pl) = engine_placement(&board) {
                board.place(pl)?;
            }
        }
        let now = now_millis();
        let session = GameSession {
            id: uuid::Uuid::new_v4().simple().to_string(),
            board,
            human,
            engine,
            created_at: now,
            updated_at: now,
        };
        let view = SessionView::from(&session);
        self.sessions
            .write()
            .unwrap()
            .insert(session.id.clone(), Arc::new(Mutex::new(session)));
        Ok(view)
    }

    pub fn get_state(&self, id: &str) -> Result<SessionView, ServiceError> {
        let session = self.session(id)?;
        let guard = session.lock().unwrap();
        Ok(SessionView::from(&*guard))
    }

    pub fn session_snapshot(&self, id: &str) -> Result<GameSession, ServiceError> {
        let session = self.session(id)?;
        let guard = session.lock().unwrap();
        Ok(guard.clone())
    }

    /// Applies the human's placement and, if the game goes on, the engine's reply.
    pub fn apply_placement(&self, id: &str, pl: Placement) -> Result<MoveResponse, ServiceError> {
        let session = self.session(id)?;
        let mut s = session.lock().unwrap();
        if s.board.status() == Status::InProgress && s.board.to_move() == s.engine {
            return Err(ServiceError::EngineTurn);
        }
        s.board.place(pl)?;
        let mut applied = vec![pl];
        if let Some(reply) = (s.board.to_move() == s.engine)
            .then(|| engine_placement(&s.board))
            .flatten()
        {
            s.board.place(reply)?;
            applied.push(reply);
        }
        s.updated_at = now_millis();
        Ok(MoveResponse::new(applied, &s.board))
    }

    pub fn engine_move(&self, id: &str) -> Result<MoveResponse, ServiceError> {
        let session = self.session(id)?;
        let mut s = session.lock().unwrap();
        if s.board.status() != Status::InProgress {
            return Err(BoardError::Finished.into());
        }
        if s.board.to_move() != s.engine {
            return Err(ServiceError::HumanTurn);
        }
        let pl = engine_placement(&s.board).ok_or(BoardError::Finished)?;
        s.board.place(pl)?;
        s.updated_at = now_millis();
        Ok(MoveResponse::new(vec![pl], &s.board))
    }

    pub fn analysis(&self, id: &str) -> Result<Analysis, ServiceError> {
        let session = self.session(id)?;
        let s = session.lock().unwrap();
        Ok(analyse(&s.board))
    }

    pub fn snapshot_json(&self) -> Result<String, ServiceError> {
        let sessions = self
            .sessions
            .read()
            .unwrap()
            .iter()
            .map(|(id, s)| (id.clone(), s.lock().unwrap().clone()))
            .collect();
        let snap = Snapshot {
            v: SNAPSHOT_VERSION,
            sessions,
        };
        Ok(serde_json::to_string_pretty(&snap)?)
    }

    /// Writes the snapshot to a sibling temp file, then renames it into place.
    pub fn snapshot(&self, path: &Path) -> Result<(), ServiceError> {
        let json = self.snapshot_json()?;
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, json)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    fn from_json(text: &str) -> Result<SessionStore, String> {
        let snap: Snapshot = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if snap.v != SNAPSHOT_VERSION {
            return Err(format!("unsupported snapshot version {}", snap.v));
        }
        let mut sessions = HashMap::new();
        for (id, s) in snap.sessions {
            if id != s.id {
                return Err(format!("session key `{id}` does not match id `{}`", s.id));
            }
            sessions.insert(id, Arc::new(Mutex::new(s)));
        }
        Ok(SessionStore {
            sessions: RwLock::new(sessions),
        })
    }

    /// Loads a snapshot. A missing file gives an empty store; an unreadable
    /// or corrupt one also gives an empty store, with a warning.
    pub fn restore(path: &Path) -> SessionStore {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return SessionStore::new(),
            Err(e) => {
                warn!("cannot read snapshot {}: {e}; starting empty", path.display());
                return SessionStore::new();
            }
        };
        SessionStore::from_json(&text).unwrap_or_else(|e| {
            warn!("corrupt snapshot {}: {e}; starting empty", path.display());
            SessionStore::new()
        })
    }

    pub fn sessions(&self) -> BTreeMap<String, GameSession> {
        self.sessions
            .read()
            .unwrap()
            .iter()
            .map(|(id, s)| (id.clone(), s.lock().unwrap().clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_first_places_a_domino() {
        let store = SessionStore::new();
        let view = store.create_game(&[6], Player::Left, Player::Right).unwrap();
        assert_eq!(view.board, ["....RR"]);
        assert_eq!(view.to_move, Player::Left);
        let human_first = store.create_game(&[6], Player::Left, Player::Left).unwrap();
        assert_eq!(human_first.board, ["......"]);
        assert!(matches!(
            store.create_game(&[], Player::Left, Player::Left),
            Err(ServiceError::Board(BoardError::InvalidDimensions))
        ));
    }

    #[test]
    fn placement_gets_an_engine_reply() {
        let store = SessionStore::new();
        let id = store.create_game(&[6], Player::Left, Player::Left).unwrap().id;
        let resp = store
            .apply_placement(
                &id,
                Placement {
                    row: 0,
                    cell: 2,
                    player: Player::Left,
                },
            )
            .unwrap();
        assert_eq!(resp.applied.len(), 2);
        assert_eq!(resp.applied[1].player, Player::Right);
        assert_eq!(resp.to_move, Player::Left);
        let err = store.apply_placement(
            &id,
            Placement {
                row: 0,
                cell: 2,
                player: Player::Left,
            },
        );
        assert!(matches!(err, Err(ServiceError::Board(BoardError::Occupied { .. }))));
        assert!(matches!(
            store.apply_placement("nope", resp.applied[0]),
            Err(ServiceError::UnknownSession(_))
        ));
        assert!(matches!(store.engine_move(&id), Err(ServiceError::HumanTurn)));
    }

    #[test]
    fn analysis_of_fresh_boards() {
        let store = SessionStore::new();
        let id = store.create_game(&[6], Player::Left, Player::Left).unwrap().id;
        let a = store.analysis(&id).unwrap();
        assert_eq!((a.position.as_str(), a.value, a.outcome), ("6", 0, Outcome::N));
        assert_eq!(a.moves.len(), 6);
        // cells 0, 2, 3, 5 leave value -1 (P); cells 1, 4 leave 1+4 (R)
        let winning: Vec<usize> = a.moves.iter().filter(|m| m.winning).map(|m| m.cell).collect();
        assert_eq!(winning, [0, 2, 3, 5]);

        let id4 = store.create_game(&[4], Player::Left, Player::Left).unwrap().id;
        let a = store.analysis(&id4).unwrap();
        assert_eq!((a.value, a.outcome), (1, Outcome::R));
        assert!(a.moves.iter().all(|m| !m.winning));
    }

    #[test]
    fn finished_game_analysis_is_empty() {
        let store = SessionStore::new();
        let id = store.create_game(&[1], Player::Left, Player::Left).unwrap().id;
        let resp = store
            .apply_placement(
                &id,
                Placement {
                    row: 0,
                    cell: 0,
                    player: Player::Left,
                },
            )
            .unwrap();
        // Right cannot move after Left takes the last pin, so Right wins
        assert_eq!(resp.status, "finished");
        assert_eq!(resp.winner, Some(Player::Right));
        let a = store.analysis(&id).unwrap();
        assert!(a.moves.is_empty());
        assert_eq!(a.winner, Some(Player::Right));
    }
}
