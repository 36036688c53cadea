//! Exhaustive re-checking of the structural results on Kayles sums.
//!
//! Each claim is a row in [`CLAIMS`]: an id, a one-line statement, the
//! oracle capacity it needs and a checker. A checker walks every instance in
//! bounds and stops at the first counterexample, which it reports as a
//! concrete position that can be fed back to the oracle.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    fast_outcome, fast_outcome_kj, geq_bounded, indistinguishable_bounded, monoid_value,
    outcome_from_value, reduce_strip,
};
use crate::oracle::{Oracle, OracleError, Outcome, DEFAULT_ORACLE_BOUND};
use crate::partition::positions_up_to;
use crate::position::{Player, Position};
use crate::strategy::{best_move, MoveAdvice, Rule};

/// Claims needing a larger oracle than this are skipped.
pub const ORACLE_CAPACITY: u32 = 40;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Instance bounds for a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest position checked by the outcome-exhaustive claims.
    pub max_pins: u32,
    /// Largest summand `X` in the universe-quantified claims.
    pub x_bound: u32,
    /// Strip lengths checked against their reduced forms.
    pub reduce_n: u32,
    /// Largest `G` in the Left-option domination claim.
    pub kstrat_g: u32,
    /// Largest `X` in the Left-option domination claim.
    pub kstrat_x: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds::new(18, 15)
    }
}

impl Bounds {
    /// Derives the per-claim caps from the two headline bounds.
    pub fn new(max_pins: u32, x_bound: u32) -> Self {
        Bounds {
            max_pins,
            x_bound,
            reduce_n: 20,
            kstrat_g: max_pins.min(10),
            kstrat_x: x_bound.min(8),
        }
    }

    fn reduce_x(&self) -> u32 {
        self.x_bound.min(12)
    }

    fn lemma_kj(&self) -> u32 {
        self.max_pins.min(12)
    }

    fn lemma_x(&self) -> u32 {
        self.x_bound.min(8)
    }

    fn cor211_x(&self) -> u32 {
        self.x_bound.min(9)
    }

    fn multiple3_x(&self) -> u32 {
        self.x_bound.min(9)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ClaimStatus {
    Confirmed,
    Refuted { witness: Position, detail: String },
    Skipped { reason: String },
}

impl ClaimStatus {
    pub fn label(&self) -> &'static str {
        match self {
            ClaimStatus::Confirmed => "confirmed",
            ClaimStatus::Refuted { .. } => "refuted",
            ClaimStatus::Skipped { .. } => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub id: &'static str,
    pub params: Vec<(&'static str, u32)>,
    pub status: ClaimStatus,
    pub instances: u64,
    pub millis: u128,
}

impl ClaimReport {
    pub fn is_confirmed(&self) -> bool {
        self.status == ClaimStatus::Confirmed
    }

    fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// One JSON object per claim: id, params, status, witness, count, millis.
    pub fn to_json(&self) -> serde_json::Value {
        let params: serde_json::Map<String, serde_json::Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.to_string(), (*v).into()))
            .collect();
        let (witness, detail) = match &self.status {
            ClaimStatus::Refuted { witness, detail } => {
                (Some(witness.to_string()), Some(detail.clone()))
            }
            ClaimStatus::Skipped { reason } => (None, Some(reason.clone())),
            ClaimStatus::Confirmed => (None, None),
        };
        serde_json::json!({
            "id": self.id,
            "params": params,
            "status": self.status.label(),
            "witness": witness,
            "detail": detail,
            "count": self.instances,
            "millis": self.millis as u64,
        })
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<9} {:<22} {} instances={} {}ms",
            self.status.label(),
            self.id,
            self.params_text(),
            self.instances,
            self.millis
        )?;
        match &self.status {
            ClaimStatus::Refuted { witness, detail } => {
                write!(f, " witness={witness} ({detail})")
            }
            ClaimStatus::Skipped { reason } => write!(f, " ({reason})"),
            ClaimStatus::Confirmed => Ok(()),
        }
    }
}

/// What a checker found.
struct Tally {
    instances: u64,
    refutation: Option<(Position, String)>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            instances: 0,
            refutation: None,
        }
    }

    /// Counts one instance; records the first failure. Returns `false` once
    /// a counterexample is known so callers can stop early.
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> (Position, String)) -> bool {
        self.instances += 1;
        if !ok && self.refutation.is_none() {
            self.refutation = Some(witness());
        }
        self.refutation.is_none()
    }
}

type Checker = fn(&Oracle, &Bounds) -> Result<Tally, OracleError>;

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    params: fn(&Bounds) -> Vec<(&'static str, u32)>,
    /// Largest position the checker hands to the oracle.
    oracle_pins: fn(&Bounds) -> u32,
    check: Checker,
}

pub static CLAIMS: &[Claim] = &[
    Claim {
        id: "lemma-noleft",
        statement: "no position is a Left win; outcome classes follow pins mod 3",
        params: |b| vec![("max_pins", b.max_pins)],
        oracle_pins: |b| b.max_pins,
        check: check_noleft,
    },
    Claim {
        id: "lemma-kstrat",
        statement: "G >= G^L + S1 for every Left option G^L",
        params: |b| vec![("g_pins", b.kstrat_g), ("x_bound", b.kstrat_x)],
        oracle_pins: |b| b.kstrat_g + b.kstrat_x,
        check: check_kstrat,
    },
    Claim {
        id: "cor-leftprefers",
        statement: "if Left wins G + S1 moving first, moving to G wins",
        params: |b| vec![("max_pins", b.max_pins)],
        oracle_pins: |b| b.max_pins,
        check: check_leftprefers,
    },
    Claim {
        id: "cor-211",
        statement: "S2 > S1 + S1 strictly",
        params: |b| vec![("x_bound", b.cor211_x())],
        oracle_pins: |b| b.cor211_x() + 2,
        check: check_211,
    },
    Claim {
        id: "lemma-reduce",
        statement: "kS1 + jS2 == {(k-1)S1 + jS2 | kS1 + (j-1)S2}",
        params: |b| vec![("kj_pins", b.lemma_kj()), ("x_bound", b.lemma_x())],
        oracle_pins: |b| b.lemma_kj() + b.lemma_x(),
        check: check_reducelemma,
    },
    Claim {
        id: "thm-kreduce",
        statement: "S_n is equivalent to its reduced form in S1 and S2",
        params: |b| vec![("max_n", b.reduce_n), ("x_bound", b.reduce_x())],
        oracle_pins: |b| b.reduce_n + b.reduce_x(),
        check: check_kreduce,
    },
    Claim {
        id: "thm-12outcome",
        statement: "outcome of kS1 + jS2 by cases on k, j and k+2j mod 3",
        params: |b| vec![("max_pins", b.max_pins)],
        oracle_pins: |b| b.max_pins,
        check: check_12outcome,
    },
    Claim {
        id: "cor-zerocor",
        statement: "S1 + S2 == 0",
        params: |b| vec![("x_bound", b.x_bound)],
        oracle_pins: |b| b.x_bound + 3,
        check: check_zerocor,
    },
    Claim {
        id: "cor-multiple3",
        statement: "S_n == 0 when n is a multiple of 3",
        params: |b| vec![("max_n", 9), ("x_bound", b.multiple3_x())],
        oracle_pins: |b| 9 + b.multiple3_x(),
        check: check_multiple3,
    },
    Claim {
        id: "monoid-partition",
        statement: "the value group and its outcome partition, with no Left wins",
        params: |b| vec![("max_pins", b.max_pins)],
        oracle_pins: |b| b.max_pins,
        check: check_partition,
    },
    Claim {
        id: "thm-xy",
        statement: "outcome from the census of strips 1 and 2 mod 3",
        params: |b| vec![("max_pins", b.max_pins)],
        oracle_pins: |b| b.max_pins,
        check: check_xy,
    },
    Claim {
        id: "thm-howtowin",
        statement: "the end-of-strip moves win whenever a win exists",
        params: |b| vec![("max_pins", b.max_pins)],
        oracle_pins: |b| b.max_pins,
        check: check_howtowin,
    },
    Claim {
        id: "inverse-asymmetry",
        statement: "S1 in R and its inverse S2 in P, with S1 + S2 == 0",
        params: |b| vec![("x_bound", b.x_bound)],
        oracle_pins: |b| b.x_bound + 3,
        check: check_inverse_pair,
    },
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

fn find_claim(id: &str) -> Result<&'static Claim, VerifyError> {
    CLAIMS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VerifyError::UnknownClaim(id.to_string()))
}

/// Resolves `all` and removes duplicates, keeping first occurrence order.
fn select(suite: &[&str]) -> Result<Vec<&'static Claim>, VerifyError> {
    let mut out: Vec<&'static Claim> = Vec::new();
    for &id in suite {
        let chosen: Vec<&'static Claim> = if id == "all" {
            CLAIMS.iter().collect()
        } else {
            vec![find_claim(id)?]
        };
        for c in chosen {
            if !out.iter().any(|o| o.id == c.id) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// Runs the requested claims (or `all`) and returns one report per claim in
/// request order.
pub fn run_suite(suite: &[&str], bounds: &Bounds) -> Result<Vec<ClaimReport>, VerifyError> {
    let claims = select(suite)?;
    let needed = claims
        .iter()
        .map(|c| (c.oracle_pins)(bounds))
        .filter(|&pins| pins <= ORACLE_CAPACITY)
        .max()
        .unwrap_or(0);
    let oracle = Oracle::new(needed.max(DEFAULT_ORACLE_BOUND));
    claims
        .into_iter()
        .map(|c| run_claim(c, &oracle, bounds))
        .collect()
}

fn run_claim(claim: &Claim, oracle: &Oracle, bounds: &Bounds) -> Result<ClaimReport, VerifyError> {
    let params = (claim.params)(bounds);
    let pins = (claim.oracle_pins)(bounds);
    let start = Instant::now();
    if pins > oracle.bound() {
        return Ok(ClaimReport {
            id: claim.id,
            params,
            status: ClaimStatus::Skipped {
                reason: format!("needs {pins} pins, oracle capacity is {ORACLE_CAPACITY}"),
            },
            instances: 0,
            millis: 0,
        });
    }
    let tally = (claim.check)(oracle, bounds)?;
    let status = match tally.refutation {
        None => ClaimStatus::Confirmed,
        Some((witness, detail)) => ClaimStatus::Refuted { witness, detail },
    };
    Ok(ClaimReport {
        id: claim.id,
        params,
        status,
        instances: tally.instances,
        millis: start.elapsed().as_millis(),
    })
}

/// Outcome class forced by the pin count alone.
fn allowed_by_pins(m: u64, o: Outcome) -> bool {
    match m % 3 {
        1 => o == Outcome::R,
        2 => matches!(o, Outcome::R | Outcome::P),
        _ => matches!(o, Outcome::R | Outcome::N),
    }
}

fn check_noleft(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    for p in positions_up_to(b.max_pins) {
        let o = oracle.misere_outcome(&p)?;
        let ok = o != Outcome::L && allowed_by_pins(p.total_pins(), o);
        if !t.check(ok, || (p.clone(), format!("outcome {o} with {} pins", p.total_pins()))) {
            break;
        }
    }
    Ok(t)
}

fn check_kstrat(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    let one = Position::strip(1);
    for g in positions_up_to(b.kstrat_g) {
        for (_, gl) in g.moves(Player::Left) {
            let dominated = gl.sum(&one);
            for x in positions_up_to(b.kstrat_x) {
                let lhs = oracle.misere_outcome(&g.sum(&x))?;
                let rhs = oracle.misere_outcome(&dominated.sum(&x))?;
                let ok = lhs.geq(rhs);
                if !t.check(ok, || {
                    (x.clone(), format!("G={g}, G^L={gl}: {lhs} is not >= {rhs}"))
                }) {
                    return Ok(t);
                }
            }
        }
    }
    Ok(t)
}

fn check_leftprefers(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    let Some(max_g) = b.max_pins.checked_sub(1) else {
        return Ok(t);
    };
    let one = Position::strip(1);
    for g in positions_up_to(max_g) {
        let with_one = g.sum(&one);
        if !oracle.wins_moving_first(&with_one, Player::Left)? {
            continue;
        }
        let ok = !oracle.wins_moving_first(&g, Player::Right)?;
        if !t.check(ok, || (with_one.clone(), format!("removing the single square loses; G={g}"))) {
            break;
        }
    }
    Ok(t)
}

fn check_211(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    let two = Position::strip(2);
    let ones = Position::ones_and_twos(2, 0);
    let forward = geq_bounded(oracle, &two, &ones, b.cor211_x())?;
    let strict_at_zero = forward
        .strict_witness
        .as_ref()
        .is_some_and(|w| w.x.is_zero());
    if let Some(w) = &forward.witness {
        t.check(false, || (w.x.clone(), format!("S2 >= 2S1 fails: {} vs {}", w.g_outcome, w.h_outcome)));
        return Ok(t);
    }
    t.check(strict_at_zero, || (Position::zero(), "S2 and 2S1 agree at X=0".into()));
    let backward = geq_bounded(oracle, &ones, &two, 0)?;
    let refuted_at_zero = backward.witness.as_ref().is_some_and(|w| w.x.is_zero());
    t.check(refuted_at_zero, || (Position::zero(), "2S1 >= S2 was not refuted".into()));
    t.instances = positions_up_to(b.cor211_x()).count() as u64 + 1;
    Ok(t)
}

/// Misere play on `{left_opt | right_opt} + x` where the first component
/// is given only by its options. Memoized per `(x, mover)`.
struct FormalSum<'a> {
    oracle: &'a Oracle,
    left_opt: Option<Position>,
    right_opt: Option<Position>,
    memo: HashMap<(Position, Player), bool>,
}

impl FormalSum<'_> {
    fn wins_moving_first(&mut self, x: &Position, who: Player) -> Result<bool, OracleError> {
        if let Some(&w) = self.memo.get(&(x.clone(), who)) {
            return Ok(w);
        }
        let own = match who {
            Player::Left => self.left_opt.clone(),
            Player::Right => self.right_opt.clone(),
        };
        let x_moves = x.moves(who);
        let mut wins = own.is_none() && x_moves.is_empty();
        if !wins {
            if let Some(opt) = own {
                wins = !self.oracle.wins_moving_first(&opt.sum(x), who.other())?;
            }
        }
        if !wins {
            for (_, x2) in x_moves {
                if !self.wins_moving_first(&x2, who.other())? {
                    wins = true;
                    break;
                }
            }
        }
        self.memo.insert((x.clone(), who), wins);
        Ok(wins)
    }

    fn outcome(&mut self, x: &Position) -> Result<Outcome, OracleError> {
        let l = self.wins_moving_first(x, Player::Left)?;
        let r = self.wins_moving_first(x, Player::Right)?;
        Ok(Outcome::from_first_player_wins(l, r))
    }
}

fn check_reducelemma(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    let cap = b.lemma_kj();
    for j in 0..=cap / 2 {
        for k in 1..=cap - 2 * j {
            let sum = Position::ones_and_twos(k, j);
            let mut formal = FormalSum {
                oracle,
                left_opt: Some(Position::ones_and_twos(k - 1, j)),
                right_opt: j.checked_sub(1).map(|j1| Position::ones_and_twos(k, j1)),
                memo: HashMap::new(),
            };
            for x in positions_up_to(b.lemma_x()) {
                let actual = oracle.misere_outcome(&sum.sum(&x))?;
                let claimed = formal.outcome(&x)?;
                if !t.check(actual == claimed, || {
                    (x.clone(), format!("k={k}, j={j}: {actual} vs {claimed}"))
                }) {
                    return Ok(t);
                }
            }
        }
    }
    Ok(t)
}

fn check_kreduce(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    for n in 0..=b.reduce_n {
        let reduced = reduce_strip(n).to_position();
        let v = indistinguishable_bounded(oracle, &Position::strip(n), &reduced, b.reduce_x())?;
        let ok = v.holds();
        if !t.check(ok, || {
            let w = v.witness.clone().expect("witness");
            (w.x, format!("S{n} vs {reduced}: {} vs {}", w.g_outcome, w.h_outcome))
        }) {
            break;
        }
    }
    Ok(t)
}

fn check_12outcome(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    for j in 0..=b.max_pins / 2 {
        for k in 0..=b.max_pins - 2 * j {
            let p = Position::ones_and_twos(k, j);
            let expected = oracle.misere_outcome(&p)?;
            let formula = fast_outcome_kj(u64::from(k), u64::from(j));
            if !t.check(formula == expected, || {
                (p.clone(), format!("formula {formula}, oracle {expected}"))
            }) {
                return Ok(t);
            }
        }
    }
    Ok(t)
}

fn check_identity(
    oracle: &Oracle,
    t: &mut Tally,
    zero_like: &Position,
    x_bound: u32,
) -> Result<bool, OracleError> {
    for x in positions_up_to(x_bound) {
        let with = oracle.misere_outcome(&zero_like.sum(&x))?;
        let without = oracle.misere_outcome(&x)?;
        if !t.check(with == without, || {
            (x.clone(), format!("{zero_like} + X is {with}, X is {without}"))
        }) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_zerocor(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    check_identity(oracle, &mut t, &Position::new([1, 2]), b.x_bound)?;
    Ok(t)
}

fn check_multiple3(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    for n in [3, 6, 9] {
        if !check_identity(oracle, &mut t, &Position::strip(n), b.multiple3_x())? {
            break;
        }
    }
    Ok(t)
}

fn check_partition(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    for p in positions_up_to(b.max_pins) {
        let v = monoid_value(&p);
        let from_value = outcome_from_value(v);
        let expected = oracle.misere_outcome(&p)?;
        let ok = from_value == expected && from_value != Outcome::L;
        if !t.check(ok, || (p.clone(), format!("value {v} gives {from_value}, oracle {expected}"))) {
            break;
        }
    }
    Ok(t)
}

fn check_xy(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    for p in positions_up_to(b.max_pins) {
        let fast = fast_outcome(&p);
        let expected = oracle.misere_outcome(&p)?;
        if !t.check(fast == expected, || (p.clone(), format!("census {fast}, oracle {expected}"))) {
            break;
        }
    }
    Ok(t)
}

fn check_howtowin(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    for p in positions_up_to(b.max_pins) {
        for who in [Player::Left, Player::Right] {
            let wins = oracle.wins_moving_first(&p, who)?;
            let advice = best_move(&p, who);
            let (ok, detail) = match &advice {
                MoveAdvice::NoLegalMove => (wins, format!("{who} has no move but oracle says loss")),
                MoveAdvice::NoWinningMove { .. } => {
                    (!wins, format!("{who} can win but no winning move returned"))
                }
                MoveAdvice::Winning { result, rule, .. } => {
                    let sound = wins && !oracle.wins_moving_first(result, who.other())?;
                    (
                        sound && *rule != Rule::Scan,
                        format!("{who} move to {result} via {rule:?} is not an oracle win"),
                    )
                }
            };
            if !t.check(ok, || (p.clone(), detail)) {
                return Ok(t);
            }
        }
    }
    Ok(t)
}

fn check_inverse_pair(oracle: &Oracle, b: &Bounds) -> Result<Tally, OracleError> {
    let mut t = Tally::new();
    let expected = [
        (Position::strip(1), Outcome::R),
        (Position::strip(2), Outcome::P),
        (Position::new([1, 2]), Outcome::N),
        (Position::zero(), Outcome::N),
    ];
    for (p, want) in expected {
        let got = oracle.misere_outcome(&p)?;
        if !t.check(got == want, || (p.clone(), format!("expected {want}, got {got}"))) {
            return Ok(t);
        }
    }
    check_identity(oracle, &mut t, &Position::new([1, 2]), b.x_bound)?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noleft_counts_every_partition() {
        let reports = run_suite(&["lemma-noleft"], &Bounds::default()).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].is_confirmed(), "{}", reports[0]);
        assert_eq!(reports[0].instances, 1597);
    }

    #[test]
    fn kj_grid_size() {
        let reports = run_suite(&["thm-12outcome"], &Bounds::default()).unwrap();
        assert!(reports[0].is_confirmed());
        // pairs (k, j) with k + 2j <= 18
        let grid = (0..=9u64).map(|j| 18 - 2 * j + 1).sum::<u64>();
        assert_eq!(reports[0].instances, grid);
    }

    #[test]
    fn unknown_claim_is_an_error() {
        assert!(matches!(
            run_suite(&["lemma-nope"], &Bounds::default()),
            Err(VerifyError::UnknownClaim(id)) if id == "lemma-nope"
        ));
    }

    #[test]
    fn duplicates_and_all_are_resolved_in_order() {
        let ids: Vec<_> = select(&["cor-211", "all", "cor-211"])
            .unwrap()
            .iter()
            .map(|c| c.id)
            .collect();
        assert_eq!(ids[0], "cor-211");
        assert_eq!(ids.len(), CLAIMS.len());
    }

    #[test]
    fn oversized_claims_are_skipped() {
        let reports = run_suite(&["cor-zerocor"], &Bounds::new(18, 45)).unwrap();
        assert!(matches!(reports[0].status, ClaimStatus::Skipped { .. }));
    }

    #[test]
    fn formal_sum_detects_a_wrong_left_option() {
        // the left option written with S2 in place of S1 is not equivalent
        let oracle = Oracle::default();
        let (k, j) = (2, 1);
        let mut formal = FormalSum {
            oracle: &oracle,
            left_opt: Some(Position::ones_and_twos(0, k - 1 + j)),
            right_opt: Some(Position::ones_and_twos(k, j - 1)),
            memo: HashMap::new(),
        };
        let sum = Position::ones_and_twos(k, j);
        let differs = positions_up_to(6).any(|x| {
            oracle.misere_outcome(&sum.sum(&x)).unwrap() != formal.outcome(&x).unwrap()
        });
        assert!(differs);
    }

    #[test]
    fn report_formats() {
        let r = ClaimReport {
            id: "thm-xy",
            params: vec![("max_pins", 3)],
            status: ClaimStatus::Refuted {
                witness: Position::new([2, 1]),
                detail: "demo".into(),
            },
            instances: 4,
            millis: 1,
        };
        assert_eq!(
            r.to_string(),
            "refuted   thm-xy                 max_pins=3 instances=4 1ms witness=2+1 (demo)"
        );
        let json = r.to_json();
        assert_eq!(json["witness"], "2+1");
        assert_eq!(json["params"]["max_pins"], 3);
        assert_eq!(json["status"], "refuted");
    }
}
