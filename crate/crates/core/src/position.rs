//! Positions, players and moves.
//!
//! A position is a disjunctive sum of strips. Left fills a single cell of a
//! strip, Right fills two adjacent cells. Either move splits the strip into
//! at most two shorter strips.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Longest strip accepted by the parser.
pub const MAX_STRIP_LEN: u32 = 1_000_000;
/// Largest number of components accepted by the parser.
pub const MAX_COMPONENTS: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid token `{0}`: expected a non-negative integer")]
    NotAnInteger(String),
    #[error("strip length `{0}` exceeds the maximum of {MAX_STRIP_LEN}")]
    StripTooLong(String),
    #[error("too many components ({0}); at most {MAX_COMPONENTS} allowed")]
    TooManyComponents(usize),
    #[error("invalid player `{0}`: expected L or R")]
    Player(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("component index {index} out of range for a position with {len} components")]
    NoSuchComponent { index: usize, len: usize },
    #[error("offset {offset} is not a legal {player} move in a strip of length {strip}")]
    BadOffset {
        player: Player,
        offset: u32,
        strip: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    /// Places single squares.
    #[serde(rename = "L")]
    Left,
    /// Places dominoes.
    #[serde(rename = "R")]
    Right,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }

    /// Number of cells one piece of this player covers.
    pub fn piece_len(self) -> u32 {
        match self {
            Player::Left => 1,
            Player::Right => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Player::Left => 'L',
            Player::Right => 'R',
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Player {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "l" | "left" => Ok(Player::Left),
            "r" | "right" => Ok(Player::Right),
            _ => Err(ParseError::Player(s.to_string())),
        }
    }
}

/// A sum of strips, stored as the multiset of strip lengths sorted
/// descending with zero-length strips removed. Equal multisets give equal
/// (and equally hashed) positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Position(Vec<u32>);

impl Position {
    /// The empty sum.
    pub fn zero() -> Self {
        Position(Vec::new())
    }

    pub fn new(components: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = components.into_iter().filter(|&n| n > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Position(parts)
    }

    /// A single strip of length `n`.
    pub fn strip(n: u32) -> Self {
        Position::new([n])
    }

    /// `ones` single squares plus `twos` strips of length two.
    pub fn ones_and_twos(ones: u32, twos: u32) -> Self {
        let mut parts = vec![2; twos as usize];
        parts.extend(std::iter::repeat_n(1, ones as usize));
        Position(parts)
    }

    /// Internal constructor for vectors already in canonical order.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&n| n > 0));
        Position(parts)
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_pins(&self) -> u64 {
        self.0.iter().map(|&n| u64::from(n)).sum()
    }

    /// Disjunctive sum (multiset union).
    pub fn sum(&self, other: &Position) -> Position {
        let mut parts = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => parts.extend(a.by_ref()),
                (None, Some(_)) => parts.extend(b.by_ref()),
                (None, None) => break,
            }
        }
        Position(parts)
    }

    /// Replaces the component at `index` by the (up to two) pieces left over.
    fn split(&self, index: usize, left: u32, right: u32) -> Position {
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.extend(self.0[..index].iter().copied());
        parts.extend(self.0[index + 1..].iter().copied());
        for piece in [left, right] {
            if piece > 0 {
                let at = parts.partition_point(|&n| n >= piece);
                parts.insert(at, piece);
            }
        }
        Position(parts)
    }

    /// Every distinct option for `who`, each with one witnessing move.
    /// Symmetric offsets and equal components are collapsed.
    pub fn moves(&self, who: Player) -> Vec<(Move, Position)> {
        let piece = who.piece_len();
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut prev = None;
        for (index, &n) in self.0.iter().enumerate() {
            if prev == Some(n) || n < piece {
                prev = Some(n);
                continue;
            }
            prev = Some(n);
            // offsets past the midpoint mirror earlier ones
            let last = (n - piece) / 2;
            for offset in 0..=last {
                let result = self.split(index, offset, n - piece - offset);
                if seen.insert(result.clone()) {
                    out.push((
                        Move {
                            player: who,
                            component_index: index,
                            offset,
                        },
                        result,
                    ));
                }
            }
        }
        out
    }

    pub fn has_move(&self, who: Player) -> bool {
        match who {
            Player::Left => !self.0.is_empty(),
            Player::Right => self.0.first().is_some_and(|&n| n >= 2),
        }
    }

    pub fn apply_move(&self, m: &Move) -> Result<Position, MoveError> {
        let &n = self.0.get(m.component_index).ok_or(MoveError::NoSuchComponent {
            index: m.component_index,
            len: self.0.len(),
        })?;
        let piece = m.player.piece_len();
        if n < piece || m.offset > n - piece {
            return Err(MoveError::BadOffset {
                player: m.player,
                offset: m.offset,
                strip: n,
            });
        }
        Ok(self.split(m.component_index, m.offset, n - piece - m.offset))
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for Position {
    type Err = ParseError;

    /// Accepts integers separated by `+`, `,` or whitespace. Zeros are
    /// dropped, so `""`, `"0"` and `"0+0"` all denote the empty sum.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut parts = Vec::new();
        for token in text
            .split(|c: char| c == '+' || c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            if !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseError::NotAnInteger(token.to_string()));
            }
            let n: u32 = match token.parse() {
                Ok(n) if n <= MAX_STRIP_LEN => n,
                _ => return Err(ParseError::StripTooLong(token.to_string())),
            };
            if n > 0 {
                parts.push(n);
                if parts.len() > MAX_COMPONENTS {
                    return Err(ParseError::TooManyComponents(parts.len()));
                }
            }
        }
        Ok(Position::new(parts))
    }
}

impl Serialize for Position {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Position {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub fn parse_position(text: &str) -> Result<Position, ParseError> {
    text.parse()
}

/// A piece placement in a strip of a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub player: Player,
    /// Index into the position's descending component list.
    pub component_index: usize,
    /// First cell covered by the piece, counted from the strip's start.
    pub offset: u32,
}
