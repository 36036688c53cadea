//! Enumeration of positions by total pin count.
//!
//! Every position with `m` pins is an integer partition of `m`. Partitions
//! are produced in descending-lexicographic order, e.g. for 4:
//! `4, 3+1, 2+2, 2+1+1, 1+1+1+1`.

use crate::position::Position;

/// Iterator over the partitions of a fixed integer.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Position;

    fn next(&mut self) -> Option<Position> {
        let parts = self.current.take()?;
        let out = Position::from_sorted(parts.clone());
        self.current = successor(parts);
        Some(out)
    }
}

/// Next partition in descending-lexicographic order, or `None` after `1+1+...+1`.
fn successor(mut parts: Vec<u32>) -> Option<Vec<u32>> {
    // strip trailing ones and remember how many pins they held
    let mut freed = 0;
    while parts.last() == Some(&1) {
        parts.pop();
        freed += 1;
    }
    let last = parts.pop()?;
    let part = last - 1;
    freed += 1;
    parts.push(part);
    while freed > 0 {
        let take = freed.min(part);
        parts.push(take);
        freed -= take;
    }
    Some(parts)
}

pub fn partitions(m: u32) -> Partitions {
    let first = if m == 0 { Vec::new() } else { vec![m] };
    Partitions {
        current: Some(first),
    }
}

/// All positions with at most `max_pins` pins, ordered by pin count and then
/// descending-lexicographically.
pub fn positions_up_to(max_pins: u32) -> impl Iterator<Item = Position> {
    (0..=max_pins).flat_map(partitions)
}
