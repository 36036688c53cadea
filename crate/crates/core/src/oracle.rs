//! Exhaustive misere solver.
//!
//! Ground truth for everything else in the crate: outcomes are computed by
//! walking the full game tree with a shared memo keyed on
//! `(position, player to move)`. No pruning beyond the memo.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::positions_up_to;
use crate::position::{Player, Position};

/// Default limit on the pins of a position handed to the oracle.
pub const DEFAULT_ORACLE_BOUND: u32 = 30;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(
        "position has {pins} pins, above the oracle bound of {bound}; use the closed-form outcome instead"
    )]
    BoundExceeded { pins: u64, bound: u32 },
}

/// Misere outcome class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// Left wins whoever starts.
    L,
    /// Right wins whoever starts.
    R,
    /// The player to move wins.
    N,
    /// The player to move loses.
    P,
}

impl Outcome {
    pub fn from_first_player_wins(left_wins: bool, right_wins: bool) -> Outcome {
        match (left_wins, right_wins) {
            (true, true) => Outcome::N,
            (true, false) => Outcome::L,
            (false, true) => Outcome::R,
            (false, false) => Outcome::P,
        }
    }

    /// Whether `who` wins when moving first in a position of this class.
    pub fn wins_moving_first(self, who: Player) -> bool {
        match who {
            Player::Left => matches!(self, Outcome::L | Outcome::N),
            Player::Right => matches!(self, Outcome::R | Outcome::N),
        }
    }

    /// Left-favourable order: `L` on top, `R` at the bottom, `N` and `P`
    /// incomparable.
    pub fn geq(self, other: Outcome) -> bool {
        self == other || self == Outcome::L || other == Outcome::R
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Outcome::L => "L",
            Outcome::R => "R",
            Outcome::N => "N",
            Outcome::P => "P",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Outcome {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "L" => Ok(Outcome::L),
            "R" => Ok(Outcome::R),
            "N" => Ok(Outcome::N),
            "P" => Ok(Outcome::P),
            other => Err(format!("unknown outcome `{other}`")),
        }
    }
}

type Key = (Position, Player);

/// Memoized exhaustive solver. Cheap to share behind an `Arc`; concurrent
/// callers may duplicate work on the same key, which is harmless since every
/// entry is a pure function of its key.
#[derive(Debug)]
pub struct Oracle {
    bound: u32,
    memo: RwLock<HashMap<Key, bool>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(DEFAULT_ORACLE_BOUND)
    }
}

struct Frame {
    key: Key,
    options: Vec<Position>,
    next: usize,
}

impl Oracle {
    pub fn new(bound: u32) -> Self {
        Oracle {
            bound,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn check_bound(&self, p: &Position) -> Result<(), OracleError> {
        let pins = p.total_pins();
        if pins > u64::from(self.bound) {
            return Err(OracleError::BoundExceeded {
                pins,
                bound: self.bound,
            });
        }
        Ok(())
    }

    fn lookup(&self, key: &Key) -> Option<bool> {
        self.memo.read().unwrap().get(key).copied()
    }

    fn record(&self, key: Key, wins: bool) {
        self.memo.write().unwrap().insert(key, wins);
    }

    /// Whether `who`, moving first in `p`, can force a win under misere
    /// play. A player with no legal move wins.
    pub fn wins_moving_first(&self, p: &Position, who: Player) -> Result<bool, OracleError> {
        self.check_bound(p)?;
        Ok(self.solve((p.clone(), who)))
    }

    fn frame(key: Key) -> Frame {
        let options = key.0.moves(key.1).into_iter().map(|(_, r)| r).collect();
        Frame {
            key,
            options,
            next: 0,
        }
    }

    /// Depth-first search with an explicit stack; depth is bounded by the
    /// pin count but never touches the call stack.
    fn solve(&self, root: Key) -> bool {
        if let Some(w) = self.lookup(&root) {
            return w;
        }
        let mut stack = vec![Self::frame(root.clone())];
        while let Some(top) = stack.last_mut() {
            let mover = top.key.1;
            let mut verdict = None;
            let mut descend = None;
            while top.next < top.options.len() {
                let child = (top.options[top.next].clone(), mover.other());
                match self.lookup(&child) {
                    // opponent loses from here: winning option
                    Some(false) => {
                        verdict = Some(true);
                        break;
                    }
                    Some(true) => top.next += 1,
                    None => {
                        descend = Some(child);
                        break;
                    }
                }
            }
            if let Some(child) = descend {
                stack.push(Self::frame(child));
                continue;
            }
            // an empty option list means no legal move, which is a win
            let wins = verdict.unwrap_or(top.options.is_empty());
            let frame = stack.pop().expect("non-empty stack");
            self.record(frame.key, wins);
        }
        self.lookup(&root).expect("root solved")
    }

    pub fn misere_outcome(&self, p: &Position) -> Result<Outcome, OracleError> {
        self.check_bound(p)?;
        let left = self.solve((p.clone(), Player::Left));
        let right = self.solve((p.clone(), Player::Right));
        Ok(Outcome::from_first_player_wins(left, right))
    }

    /// Outcomes of every position with at most `max_pins` pins.
    pub fn outcome_table(&self, max_pins: u32) -> Result<OutcomeTable, OracleError> {
        if max_pins > self.bound {
            return Err(OracleError::BoundExceeded {
                pins: u64::from(max_pins),
                bound: self.bound,
            });
        }
        let mut entries = IndexMap::new();
        for p in positions_up_to(max_pins) {
            let o = self.misere_outcome(&p)?;
            entries.insert(p, o);
        }
        Ok(OutcomeTable { max_pins, entries })
    }
}

/// Outcomes of all positions up to a pin bound, in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeTable {
    pub max_pins: u32,
    pub entries: IndexMap<Position, Outcome>,
}

impl OutcomeTable {
    pub fn get(&self, p: &Position) -> Option<Outcome> {
        self.entries.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One `<position>\t<outcome>` line per entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (p, o) in &self.entries {
            out.push_str(&format!("{p}\t{o}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<OutcomeTable, String> {
        let mut entries = IndexMap::new();
        let mut max_pins = 0;
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (p, o) = line
                .split_once('\t')
                .ok_or_else(|| format!("line {}: missing tab", lineno + 1))?;
            let p: Position = p.parse().map_err(|e| format!("line {}: {e}", lineno + 1))?;
            let o: Outcome = o.parse().map_err(|e| format!("line {}: {e}", lineno + 1))?;
            max_pins = max_pins.max(p.total_pins() as u32);
            entries.insert(p, o);
        }
        Ok(OutcomeTable { max_pins, entries })
    }
}
