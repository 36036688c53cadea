//! Closed forms for the misere quotient of Kayles sums.
//!
//! Every strip reduces to a sum of single squares (`S1`) and dominoes
//! (`S2`). Since `S1 + S2` is equivalent to zero, a position is summarised
//! by one integer, the surplus of `S1` over `S2`, and that integer alone
//! determines the outcome.
//!
//! The bounded testers at the bottom of the module compare positions
//! against every summand up to a pin bound using the [`Oracle`]; they can
//! refute an equivalence but only confirm it up to the bound.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::oracle::{Oracle, OracleError, Outcome};
use crate::partition::positions_up_to;
use crate::position::Position;

/// `k1` single squares plus `k2` dominoes, without cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ReducedForm {
    pub k1: u64,
    pub k2: u64,
}

impl ReducedForm {
    pub fn value(self) -> MonoidValue {
        MonoidValue(self.k1 as i64 - self.k2 as i64)
    }

    /// The reduced form written out as a position of ones and twos.
    pub fn to_position(self) -> Position {
        Position::ones_and_twos(self.k1 as u32, self.k2 as u32)
    }
}

impl Add for ReducedForm {
    type Output = ReducedForm;

    fn add(self, rhs: ReducedForm) -> ReducedForm {
        ReducedForm {
            k1: self.k1 + rhs.k1,
            k2: self.k2 + rhs.k2,
        }
    }
}

impl fmt::Display for ReducedForm {
    /// `1×S1 + 2×S2`, or `0` for the empty form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if self.k1 > 0 {
            terms.push(format!("{}×S1", self.k1));
        }
        if self.k2 > 0 {
            terms.push(format!("{}×S2", self.k2));
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Image of a position in the quotient group, which is isomorphic to the
/// integers: `S1` maps to `+1`, `S2` to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct MonoidValue(pub i64);

impl Add for MonoidValue {
    type Output = MonoidValue;

    fn add(self, rhs: MonoidValue) -> MonoidValue {
        MonoidValue(self.0 + rhs.0)
    }
}

impl fmt::Display for MonoidValue {
    /// Negative values use U+2212 MINUS SIGN.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 0 {
            write!(f, "\u{2212}{}", self.0.unsigned_abs())
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Counts of components congruent to 1 and to 2 modulo 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ComponentCensus {
    pub x: u64,
    pub y: u64,
}

impl ComponentCensus {
    pub fn of(p: &Position) -> Self {
        let mut census = ComponentCensus::default();
        for &n in p.components() {
            match n % 3 {
                1 => census.x += 1,
                2 => census.y += 1,
                _ => {}
            }
        }
        census
    }
}

pub fn reduce_strip(n: u32) -> ReducedForm {
    let k = u64::from(n / 3);
    match n % 3 {
        0 => ReducedForm { k1: k, k2: k },
        1 => ReducedForm { k1: k + 1, k2: k },
        _ => ReducedForm { k1: k, k2: k + 1 },
    }
}

pub fn reduce_position(p: &Position) -> ReducedForm {
    p.components()
        .iter()
        .map(|&n| reduce_strip(n))
        .fold(ReducedForm::default(), Add::add)
}

pub fn monoid_value(p: &Position) -> MonoidValue {
    reduce_position(p).value()
}

pub fn outcome_from_value(v: MonoidValue) -> Outcome {
    match v.0 {
        v if v >= 0 => {
            if v == 0 {
                Outcome::N
            } else {
                Outcome::R
            }
        }
        v => match v.unsigned_abs() % 3 {
            0 => Outcome::N,
            1 => Outcome::P,
            _ => Outcome::R,
        },
    }
}

/// Outcome of `k` single squares plus `j` dominoes.
pub fn fast_outcome_kj(k: u64, j: u64) -> Outcome {
    use std::cmp::Ordering::*;
    match k.cmp(&j) {
        Equal => Outcome::N,
        Greater => Outcome::R,
        Less => match (k + 2 * j) % 3 {
            0 => Outcome::N,
            1 => Outcome::R,
            _ => Outcome::P,
        },
    }
}

/// Outcome read off the residues of the component lengths, without reducing.
pub fn fast_outcome(p: &Position) -> Outcome {
    let ComponentCensus { x, y } = ComponentCensus::of(p);
    fast_outcome_kj(x, y)
}

pub fn outcome_geq(a: Outcome, b: Outcome) -> bool {
    a.geq(b)
}

/// A summand `x` together with the outcomes of `g + x` and `h + x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: Position,
    pub g_outcome: Outcome,
    pub h_outcome: Outcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Equivalent,
    Geq,
}

/// Result of a bounded comparison of `g` and `h`.
///
/// `witness` is the first summand (in enumeration order) that violates the
/// relation; `None` means no violation among summands of at most `bound`
/// pins. For [`Relation::Geq`], `strict_witness` is the first summand on
/// which the two outcomes differ at all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishVerdict {
    pub relation: Relation,
    pub g: Position,
    pub h: Position,
    pub bound: u32,
    pub witness: Option<Witness>,
    pub strict_witness: Option<Witness>,
}

impl DistinguishVerdict {
    /// No counterexample up to the bound.
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    /// `g ≥ h` held up to the bound and some summand separates them.
    pub fn is_strict(&self) -> bool {
        self.holds() && self.strict_witness.is_some()
    }

    pub fn claim(&self) -> String {
        match self.relation {
            Relation::Equivalent => format!("{} == {}", self.g, self.h),
            Relation::Geq => format!("{} >= {}", self.g, self.h),
        }
    }

    /// Structured text record, one `key=value` per line.
    pub fn record(&self) -> String {
        let mut out = format!("claim={}\nbound={}\n", self.claim(), self.bound);
        match &self.witness {
            Some(w) => {
                out.push_str(&format!("witness={}\n", w.x));
                out.push_str(&format!("outcomes={},{}\n", w.g_outcome, w.h_outcome));
            }
            None => {
                out.push_str("witness=none\n");
                out.push_str("outcomes=none\n");
            }
        }
        if self.relation == Relation::Geq {
            match &self.strict_witness {
                Some(w) => out.push_str(&format!(
                    "strict_witness={}\nstrict_outcomes={},{}\n",
                    w.x, w.g_outcome, w.h_outcome
                )),
                None => out.push_str("strict_witness=none\n"),
            }
        }
        out
    }
}

impl fmt::Display for DistinguishVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.witness, self.relation) {
            (Some(w), Relation::Equivalent) => write!(
                f,
                "distinguished by X={}: {} vs {}",
                w.x, w.g_outcome, w.h_outcome
            ),
            (Some(w), Relation::Geq) => write!(
                f,
                "refuted by X={}: {} is not >= {}",
                w.x, w.g_outcome, w.h_outcome
            ),
            (None, Relation::Equivalent) => {
                write!(f, "indistinguishable up to B={}", self.bound)
            }
            (None, Relation::Geq) => {
                write!(f, "no counterexample up to B={}", self.bound)?;
                if let Some(w) = &self.strict_witness {
                    write!(
                        f,
                        "; strict, separated by X={}: {} vs {}",
                        w.x, w.g_outcome, w.h_outcome
                    )?;
                }
                Ok(())
            }
        }
    }
}

fn compare_bounded(
    oracle: &Oracle,
    g: &Position,
    h: &Position,
    bound: u32,
    relation: Relation,
) -> Result<DistinguishVerdict, OracleError> {
    let extra = u64::from(bound);
    for p in [g, h] {
        let pins = p.total_pins() + extra;
        if pins > u64::from(oracle.bound()) {
            return Err(OracleError::BoundExceeded {
                pins,
                bound: oracle.bound(),
            });
        }
    }
    let mut witness = None;
    let mut strict_witness = None;
    for x in positions_up_to(bound) {
        let g_outcome = oracle.misere_outcome(&g.sum(&x))?;
        let h_outcome = oracle.misere_outcome(&h.sum(&x))?;
        if g_outcome == h_outcome {
            continue;
        }
        let found = Witness {
            x,
            g_outcome,
            h_outcome,
        };
        if strict_witness.is_none() {
            strict_witness = Some(found.clone());
        }
        let violates = match relation {
            Relation::Equivalent => true,
            Relation::Geq => !g_outcome.geq(h_outcome),
        };
        if violates {
            witness = Some(found);
            break;
        }
    }
    if relation == Relation::Equivalent {
        strict_witness = None;
    }
    Ok(DistinguishVerdict {
        relation,
        g: g.clone(),
        h: h.clone(),
        bound,
        witness,
        strict_witness,
    })
}

/// Looks for a summand `x` with at most `bound` pins such that `g + x` and
/// `h + x` have different outcomes.
pub fn indistinguishable_bounded(
    oracle: &Oracle,
    g: &Position,
    h: &Position,
    bound: u32,
) -> Result<DistinguishVerdict, OracleError> {
    compare_bounded(oracle, g, h, bound, Relation::Equivalent)
}

/// Looks for a summand `x` with at most `bound` pins such that the outcome
/// of `g + x` is not at least that of `h + x`.
pub fn geq_bounded(
    oracle: &Oracle,
    g: &Position,
    h: &Position,
    bound: u32,
) -> Result<DistinguishVerdict, OracleError> {
    compare_bounded(oracle, g, h, bound, Relation::Geq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Outcome::*;

    fn pos(s: &str) -> Position {
        s.parse().unwrap()
    }

    #[test]
    fn strip_reductions() {
        assert_eq!(reduce_strip(3), ReducedForm { k1: 1, k2: 1 });
        assert_eq!(reduce_strip(4), ReducedForm { k1: 2, k2: 1 });
        assert_eq!(reduce_strip(5), ReducedForm { k1: 1, k2: 2 });
        assert_eq!(reduce_strip(0), ReducedForm { k1: 0, k2: 0 });
        assert_eq!(reduce_strip(1), ReducedForm { k1: 1, k2: 0 });
        assert_eq!(reduce_strip(2), ReducedForm { k1: 0, k2: 1 });
    }

    #[test]
    fn position_reductions() {
        assert_eq!(reduce_position(&pos("4+5")), ReducedForm { k1: 3, k2: 3 });
        assert_eq!(reduce_position(&Position::zero()), ReducedForm::default());
        assert_eq!(reduce_position(&pos("6")), ReducedForm { k1: 2, k2: 2 });
    }

    #[test]
    fn values() {
        assert_eq!(monoid_value(&pos("1+2")), MonoidValue(0));
        assert_eq!(monoid_value(&pos("3")), MonoidValue(0));
        assert_eq!(monoid_value(&pos("4+4+5")), MonoidValue(1));
        assert_eq!(MonoidValue(-1).to_string(), "\u{2212}1");
        assert_eq!(reduce_strip(5).to_string(), "1×S1 + 2×S2");
        assert_eq!(ReducedForm::default().to_string(), "0");
    }

    #[test]
    fn outcome_partition() {
        assert_eq!(outcome_from_value(MonoidValue(0)), N);
        assert_eq!(outcome_from_value(MonoidValue(-1)), P);
        assert_eq!(outcome_from_value(MonoidValue(7)), R);
        assert_eq!(outcome_from_value(MonoidValue(-6)), N);
        assert_eq!(outcome_from_value(MonoidValue(-2)), R);
        for v in -40..=40 {
            assert_ne!(outcome_from_value(MonoidValue(v)), L);
        }
    }

    #[test]
    fn kj_table() {
        assert_eq!(fast_outcome_kj(2, 2), N);
        assert_eq!(fast_outcome_kj(3, 1), R);
        assert_eq!(fast_outcome_kj(1, 3), R);
        assert_eq!(fast_outcome_kj(0, 1), P);
        assert_eq!(fast_outcome_kj(0, 0), N);
        assert_eq!(fast_outcome_kj(4, 0), R);
    }

    #[test]
    fn census_outcomes() {
        assert_eq!(fast_outcome(&pos("4+5")), N);
        // x=0, y=2, x+2y=4 ≡ 1: the oracle agrees (checked below)
        assert_eq!(fast_outcome(&pos("5+5")), R);
        assert_eq!(fast_outcome(&pos("1")), R);
        assert_eq!(fast_outcome(&pos("3+3+3")), N);
        let oracle = Oracle::default();
        assert_eq!(oracle.misere_outcome(&pos("5+5")).unwrap(), R);
    }

    #[test]
    fn outcome_geq_examples() {
        assert!(outcome_geq(L, P));
        assert!(!outcome_geq(N, P));
        assert!(!outcome_geq(P, N));
        assert!(outcome_geq(P, R));
    }

    #[test]
    fn bounded_equivalence_examples() {
        let oracle = Oracle::default();
        for b in [0, 3, 6] {
            let v = indistinguishable_bounded(&oracle, &pos("2"), &pos("1+1"), b).unwrap();
            let w = v.witness.unwrap();
            assert_eq!(w.x, Position::zero());
            assert_eq!((w.g_outcome, w.h_outcome), (P, R));
        }
        let v = indistinguishable_bounded(&oracle, &pos("3"), &pos("1+2"), 10).unwrap();
        assert!(v.holds());
        assert_eq!(v.bound, 10);
        let v = indistinguishable_bounded(&oracle, &pos("6"), &Position::zero(), 10).unwrap();
        assert!(v.holds());
    }

    #[test]
    fn bounded_inequality_examples() {
        let oracle = Oracle::default();
        let v = geq_bounded(&oracle, &pos("2"), &pos("1+1"), 9).unwrap();
        assert!(v.holds());
        assert!(v.is_strict());
        assert_eq!(v.strict_witness.as_ref().unwrap().x, Position::zero());
        let v = geq_bounded(&oracle, &pos("1+1"), &pos("2"), 0).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.x, Position::zero());
        assert_eq!((w.g_outcome, w.h_outcome), (R, P));
        for g in ["0", "4+1", "7"] {
            let v = geq_bounded(&oracle, &pos(g), &pos(g), 5).unwrap();
            assert!(v.holds() && !v.is_strict());
        }
    }

    #[test]
    fn tester_respects_oracle_bound() {
        let oracle = Oracle::new(12);
        let err = indistinguishable_bounded(&oracle, &pos("6"), &pos("3"), 7).unwrap_err();
        assert_eq!(err, OracleError::BoundExceeded { pins: 13, bound: 12 });
    }

    #[test]
    fn verdict_records() {
        let oracle = Oracle::default();
        let v = indistinguishable_bounded(&oracle, &pos("2"), &pos("1+1"), 6).unwrap();
        assert_eq!(v.to_string(), "distinguished by X=0: P vs R");
        assert_eq!(
            v.record(),
            "claim=2 == 1+1\nbound=6\nwitness=0\noutcomes=P,R\n"
        );
        let v = indistinguishable_bounded(&oracle, &pos("3"), &pos("2+1"), 4).unwrap();
        assert_eq!(v.to_string(), "indistinguishable up to B=4");
        assert!(v.record().contains("witness=none\n"));
    }
}
