//! Optimal move selection.
//!
//! Left plays at the end of a strip of length 1 mod 3 if there is one, else
//! at the end of a strip of length 2 mod 3. Right plays at the end of a
//! strip of length 2 mod 3 if there is one, else one cell in from the end of
//! a strip of length 1 mod 3. Positions whose strips are all multiples of 3
//! are covered by playing at the end of such a strip. Each chosen move is
//! checked against the closed-form outcome before it is returned; if the
//! check fails the options are scanned instead and the discrepancy is logged.

use std::fmt;

use log::warn;

use crate::algebra::fast_outcome;
use crate::oracle::Outcome;
use crate::position::{Move, Player, Position};

/// Which rule produced a winning move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// Left, end of a strip ≡ 1 (mod 3).
    LeftEndOfOne,
    /// Left, end of a strip ≡ 2 (mod 3).
    LeftEndOfTwo,
    /// Left, end of a strip ≡ 0 (mod 3).
    LeftEndOfZero,
    /// Right, end of a strip ≡ 2 (mod 3).
    RightEndOfTwo,
    /// Right, one cell in from the end of a strip ≡ 1 (mod 3), length ≥ 4.
    RightNearEndOfOne,
    /// Right, end of a strip ≡ 0 (mod 3).
    RightEndOfZero,
    /// No rule applied; found by scanning all options.
    Scan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveAdvice {
    Winning {
        mv: Move,
        result: Position,
        outcome: Outcome,
        rule: Rule,
    },
    /// The mover loses against best play. `fallback` is the first legal
    /// move so a playing engine always has something to do.
    NoWinningMove {
        outcome: Outcome,
        fallback: (Move, Position),
    },
    /// The mover has no legal move and therefore wins.
    NoLegalMove,
}

impl MoveAdvice {
    pub fn chosen_move(&self) -> Option<(&Move, &Position)> {
        match self {
            MoveAdvice::Winning { mv, result, .. } => Some((mv, result)),
            MoveAdvice::NoWinningMove { fallback, .. } => Some((&fallback.0, &fallback.1)),
            MoveAdvice::NoLegalMove => None,
        }
    }

    pub fn is_winning(&self) -> bool {
        matches!(self, MoveAdvice::Winning { .. })
    }
}

/// Human-readable description of a move in terms of the strip it is played in.
pub fn describe_move(p: &Position, mv: &Move) -> String {
    let n = p.components()[mv.component_index];
    let piece = match mv.player {
        Player::Left => "square",
        Player::Right => "domino",
    };
    let last = n - mv.player.piece_len();
    let place = if mv.offset == 0 || mv.offset == last {
        "at end of".to_string()
    } else if mv.offset == 1 || mv.offset + 1 == last {
        "one away from the end of".to_string()
    } else {
        format!("at offset {} of", mv.offset)
    };
    format!("play {piece} {place} strip {n}")
}

impl MoveAdvice {
    pub fn describe(&self, p: &Position) -> String {
        match self {
            MoveAdvice::Winning {
                mv,
                result,
                outcome,
                ..
            } => format!("{} → {result} ({outcome})", describe_move(p, mv)),
            MoveAdvice::NoWinningMove { outcome, fallback } => format!(
                "no winning move ({outcome}); fallback: {} → {}",
                describe_move(p, &fallback.0),
                fallback.1
            ),
            MoveAdvice::NoLegalMove => "no legal move — immediate win".to_string(),
        }
    }
}

/// Whether moving to `result` leaves `opponent` unable to win moving first.
fn leaves_opponent_lost(result: &Position, opponent: Player) -> bool {
    !fast_outcome(result).wins_moving_first(opponent)
}

fn first_with_residue(p: &Position, residue: u32, min_len: u32) -> Option<(usize, u32)> {
    // components are sorted descending, so the first hit is the longest
    p.components()
        .iter()
        .enumerate()
        .find(|&(_, &n)| n % 3 == residue && n >= min_len)
        .map(|(i, &n)| (i, n))
}

/// The move the closed-form rules pick, before validation.
fn rule_move(p: &Position, who: Player) -> Option<(Move, Rule)> {
    let mv = |component_index, offset| Move {
        player: who,
        component_index,
        offset,
    };
    match who {
        Player::Left => {
            let rules = [
                (1, Rule::LeftEndOfOne),
                (2, Rule::LeftEndOfTwo),
                (0, Rule::LeftEndOfZero),
            ];
            rules.into_iter().find_map(|(residue, rule)| {
                first_with_residue(p, residue, 1).map(|(i, _)| (mv(i, 0), rule))
            })
        }
        Player::Right => {
            if let Some((i, n)) = first_with_residue(p, 2, 2) {
                return Some((mv(i, n - 2), Rule::RightEndOfTwo));
            }
            if let Some((i, _)) = first_with_residue(p, 1, 4) {
                return Some((mv(i, 1), Rule::RightNearEndOfOne));
            }
            first_with_residue(p, 0, 3).map(|(i, n)| (mv(i, n - 2), Rule::RightEndOfZero))
        }
    }
}

pub fn best_move(p: &Position, who: Player) -> MoveAdvice {
    let options = p.moves(who);
    let Some(first) = options.first().cloned() else {
        return MoveAdvice::NoLegalMove;
    };
    let outcome = fast_outcome(p);
    if !outcome.wins_moving_first(who) {
        return MoveAdvice::NoWinningMove {
            outcome,
            fallback: first,
        };
    }
    if let Some((mv, rule)) = rule_move(p, who) {
        let result = p.apply_move(&mv).expect("rule moves are legal");
        if leaves_opponent_lost(&result, who.other()) {
            return MoveAdvice::Winning {
                outcome: fast_outcome(&result),
                mv,
                result,
                rule,
            };
        }
        warn!("rule move {mv:?} in {p} failed validation; scanning options");
    } else {
        warn!("no rule move for {who} in {p}; scanning options");
    }
    match options
        .into_iter()
        .find(|(_, r)| leaves_opponent_lost(r, who.other()))
    {
        Some((mv, result)) => MoveAdvice::Winning {
            outcome: fast_outcome(&result),
            mv,
            result,
            rule: Rule::Scan,
        },
        None => MoveAdvice::NoWinningMove {
            outcome,
            fallback: first,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedMove {
    pub mv: Move,
    pub result: Position,
    pub outcome: Outcome,
    pub winning: bool,
}

impl fmt::Display for AnnotatedMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}){}",
            self.result,
            self.outcome,
            if self.winning { " winning" } else { "" }
        )
    }
}

/// Every distinct option for `who`, with its outcome and whether it wins.
pub fn winning_moves(p: &Position, who: Player) -> Vec<AnnotatedMove> {
    p.moves(who)
        .into_iter()
        .map(|(mv, result)| {
            let outcome = fast_outcome(&result);
            AnnotatedMove {
                winning: !outcome.wins_moving_first(who.other()),
                mv,
                result,
                outcome,
            }
        })
        .collect()
}
