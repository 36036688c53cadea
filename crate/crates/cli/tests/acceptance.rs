//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Every criterion is exact (no tolerance) and carries a wall-clock budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kayles::{
    best_move, fast_outcome, geq_bounded, monoid_value, outcome_from_value, positions_up_to,
    MoveAdvice, Oracle, Outcome, Player, Position,
};
use kayles_service::audit::audit_board;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = fn() -> Result<String, String>;

struct Criterion {
    name: &'static str,
    budget: Duration,
    check: Check,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn outcome_formula() -> Result<String, String> {
    let oracle = Oracle::default();
    let mut n = 0;
    for p in positions_up_to(18) {
        let expected = oracle.misere_outcome(&p).map_err(|e| e.to_string())?;
        let fast = fast_outcome(&p);
        if fast != expected {
            return Err(format!("{p}: formula {fast}, oracle {expected}"));
        }
        n += 1;
    }
    if n != 1597 {
        return Err(format!("expected 1597 positions, enumerated {n}"));
    }
    Ok(format!("{n}/{n} positions agree"))
}

fn no_left_wins() -> Result<String, String> {
    let oracle = Oracle::default();
    let mut n = 0;
    for p in positions_up_to(18) {
        let o = oracle.misere_outcome(&p).map_err(|e| e.to_string())?;
        let m = p.total_pins();
        let ok = o != Outcome::L
            && match m % 3 {
                1 => o == Outcome::R,
                2 => matches!(o, Outcome::R | Outcome::P),
                _ => matches!(o, Outcome::R | Outcome::N),
            };
        if !ok {
            return Err(format!("{p} ({m} pins) is {o}"));
        }
        n += 1;
    }
    Ok(format!("{n} positions, none L, residues respected"))
}

fn zero_element() -> Result<String, String> {
    let oracle = Oracle::default();
    let out = |p: &Position| oracle.misere_outcome(p).map_err(|e| e.to_string());
    let mut n = 0;
    let pair = Position::new([1, 2]);
    for x in positions_up_to(15) {
        if out(&pair.sum(&x))? != out(&x)? {
            return Err(format!("1+2 + {x} differs from {x}"));
        }
        n += 1;
    }
    for len in [3, 6, 9] {
        let strip = Position::strip(len);
        for x in positions_up_to(9) {
            if out(&strip.sum(&x))? != out(&x)? {
                return Err(format!("{len} + {x} differs from {x}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} summands checked"))
}

fn corollary_211() -> Result<String, String> {
    let oracle = Oracle::default();
    let two = Position::strip(2);
    let ones = Position::new([1, 1]);
    let fwd = geq_bounded(&oracle, &two, &ones, 9).map_err(|e| e.to_string())?;
    if !fwd.holds() {
        return Err(format!("2 >= 1+1 refuted: {fwd}"));
    }
    match &fwd.strict_witness {
        Some(w) if w.x.is_zero() && (w.g_outcome, w.h_outcome) == (Outcome::P, Outcome::R) => {}
        other => return Err(format!("strictness witness {other:?}")),
    }
    let back = geq_bounded(&oracle, &ones, &two, 0).map_err(|e| e.to_string())?;
    match &back.witness {
        Some(w) if w.x.is_zero() => {}
        other => return Err(format!("1+1 >= 2 not refuted at X=0: {other:?}")),
    }
    Ok("2 >= 1+1 up to B=9, strict at X=0 (P vs R); converse refuted at X=0".into())
}

fn left_option_domination() -> Result<String, String> {
    let oracle = Oracle::default();
    let out = |p: &Position| oracle.misere_outcome(p).map_err(|e| e.to_string());
    let one = Position::strip(1);
    let xs: Vec<Position> = positions_up_to(8).collect();
    let mut n = 0;
    for g in positions_up_to(10) {
        for (_, gl) in g.moves(Player::Left) {
            let dominated = gl.sum(&one);
            for x in &xs {
                let (a, b) = (out(&g.sum(x))?, out(&dominated.sum(x))?);
                if !a.geq(b) {
                    return Err(format!("G={g}, G^L={gl}, X={x}: {a} not >= {b}"));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} (G, G^L, X) triples"))
}

fn strategy_soundness() -> Result<String, String> {
    let oracle = Oracle::default();
    let wins = |p: &Position, who| oracle.wins_moving_first(p, who).map_err(|e| e.to_string());
    let mut n = 0;
    for p in positions_up_to(18) {
        for who in [Player::Left, Player::Right] {
            let mover_wins = wins(&p, who)?;
            let ok = match best_move(&p, who) {
                MoveAdvice::Winning { result, .. } => {
                    mover_wins && !wins(&result, who.other())?
                }
                MoveAdvice::NoWinningMove { .. } => !mover_wins,
                MoveAdvice::NoLegalMove => mover_wins && !p.has_move(who),
            };
            if !ok {
                return Err(format!("{p} with {who} to move"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} (position, mover) pairs"))
}

fn monoid_laws() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(0x6b61796c6573);
    let random_position = |rng: &mut StdRng| {
        let parts = rng.random_range(0..12);
        Position::new((0..parts).map(|_| rng.random_range(0..=200u32)))
    };
    for _ in 0..10_000 {
        let p = random_position(&mut rng);
        let q = random_position(&mut rng);
        if monoid_value(&p.sum(&q)) != monoid_value(&p) + monoid_value(&q) {
            return Err(format!("value not additive on {p} and {q}"));
        }
    }
    let mut n = 0;
    for p in positions_up_to(18) {
        if outcome_from_value(monoid_value(&p)) != fast_outcome(&p) {
            return Err(format!("partition disagrees on {p}"));
        }
        n += 1;
    }
    Ok(format!("10000 random pairs additive; partition agrees on {n} positions"))
}

fn inverse_pair() -> Result<String, String> {
    let oracle = Oracle::default();
    let out = |s: &str| oracle.misere_outcome(&s.parse().unwrap()).unwrap();
    let got = [out("1"), out("2"), out("1+2"), out("0")];
    if got != [Outcome::R, Outcome::P, Outcome::N, Outcome::N] {
        return Err(format!("outcomes of 1, 2, 1+2, 0 were {got:?}"));
    }
    Ok("1 is R, 2 is P, 1+2 is N = 0".into())
}

fn service_contract() -> Result<String, String> {
    let oracle = Oracle::default();
    let mut boards = 0;
    let mut states = 0;
    let mut won = 0;
    for p in positions_up_to(12).filter(|p| !p.is_zero()) {
        let desc = p.components().to_vec();
        let mut asc = desc.clone();
        asc.reverse();
        let layouts = if asc == desc { vec![desc] } else { vec![desc, asc] };
        for rows in layouts {
            for human in [Player::Left, Player::Right] {
                for first in [Player::Left, Player::Right] {
                    let stats = audit_board(&oracle, &rows, human, first)
                        .map_err(|e| format!("rows {rows:?}, human {human}, first {first}: {e}"))?;
                    boards += 1;
                    states += stats.states;
                    won += stats.won_engine_states;
                }
            }
        }
    }
    Ok(format!("{boards} setups, {states} board states, {won} won engine turns converted"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "outcome-formula-equivalence", budget: secs(5), check: outcome_formula },
        Criterion { name: "no-left-wins-mod3", budget: secs(5), check: no_left_wins },
        Criterion { name: "zero-element", budget: secs(30), check: zero_element },
        Criterion { name: "corollary-211", budget: secs(30), check: corollary_211 },
        Criterion { name: "left-option-domination", budget: secs(60), check: left_option_domination },
        Criterion { name: "strategy-soundness", budget: secs(30), check: strategy_soundness },
        Criterion { name: "monoid-law-and-partition", budget: secs(30), check: monoid_laws },
        Criterion { name: "inverse-pair-asymmetry", budget: secs(5), check: inverse_pair },
        Criterion { name: "service-contract", budget: secs(60), check: service_contract },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let (verdict, detail) = match result {
            Ok(d) if elapsed <= c.budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.2?}, budget {:?}", c.budget)),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("{verdict} {:<30} {:>9.2?}  {detail}", c.name, elapsed);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
