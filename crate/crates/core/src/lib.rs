//! Exact analysis of misère Partizan Kayles.
//!
//! Left removes one pin from a row, Right removes two adjacent pins, and the
//! player who takes the last pin loses. The crate provides:
//!
//! - [`position`]: sums of strips and move generation,
//! - [`oracle`]: a memoized exhaustive solver used as ground truth,
//! - [`algebra`]: strip reduction, the integer value of a position and
//!   constant-time outcomes, plus bounded equivalence testing,
//! - [`strategy`]: winning-move selection,
//! - [`verify`]: exhaustive checks of the structural results at small sizes.

pub mod algebra;
pub mod oracle;
pub mod partition;
pub mod position;
pub mod strategy;
pub mod verify;

pub use algebra::{
    fast_outcome, fast_outcome_kj, geq_bounded, indistinguishable_bounded, monoid_value,
    outcome_from_value, outcome_geq, reduce_position, reduce_strip, ComponentCensus,
    DistinguishVerdict, MonoidValue, ReducedForm, Relation, Witness,
};
pub use oracle::{Oracle, OracleError, Outcome, OutcomeTable, DEFAULT_ORACLE_BOUND};
pub use partition::{partitions, positions_up_to};
pub use position::{parse_position, Move, MoveError, ParseError, Player, Position};
pub use strategy::{best_move, winning_moves, AnnotatedMove, MoveAdvice, Rule};
pub use verify::{run_suite, Bounds, ClaimReport, ClaimStatus, VerifyError};
