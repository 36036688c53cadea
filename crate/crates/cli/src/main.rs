use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kayles::{
    best_move, fast_outcome, geq_bounded, indistinguishable_bounded, monoid_value,
    reduce_position, run_suite, Bounds, MoveAdvice, Oracle, Player, Position,
    DEFAULT_ORACLE_BOUND,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "kayles", version, about = "Misère Partizan Kayles solver")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest position (in pins) handed to the exhaustive solver.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BOUND,
          value_parser = clap::value_parser!(u32).range(1..=40))]
    oracle_bound: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Misère outcome of a position, e.g. `outcome "4+5"`.
    Outcome { position: String },
    /// Reduced form in single squares and dominoes, with its value.
    Reduce { position: String },
    /// Winning move for a player (L or R).
    BestMove { position: String, player: String },
    /// Bounded equivalence (or inequality with --geq) test of two positions.
    Equiv {
        a: String,
        b: String,
        /// Largest summand tried, in pins.
        #[arg(long, default_value_t = 6)]
        bound: u32,
        /// Test A >= B instead of equivalence.
        #[arg(long)]
        geq: bool,
    },
    /// Re-check the structural claims exhaustively.
    Verify {
        /// Comma-separated claim ids, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 18, value_parser = clap::value_parser!(u32).range(1..))]
        max_pins: u32,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..))]
        x_bound: u32,
        /// Also write one JSON record per claim to this file.
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Run the HTTP game service.
    Serve {
        #[arg(long, default_value_t = 8080, value_parser = clap::value_parser!(u16).range(1..))]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
        /// Session snapshot file, restored on start and written on shutdown.
        #[arg(long)]
        snapshot: Option<PathBuf>,
    },
}

fn parse(text: &str) -> Result<Position, ExitCode> {
    text.parse().map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn kv(pairs: &[(&str, String)]) {
    for (k, v) in pairs {
        println!("{k}={v}");
    }
}

fn cmd_outcome(cli: &Cli, text: &str) -> Result<ExitCode, ExitCode> {
    let p = parse(text)?;
    let fast = fast_outcome(&p);
    let oracle = Oracle::new(cli.oracle_bound);
    let checked = oracle.misere_outcome(&p).ok();
    let agree = checked.is_none_or(|o| o == fast);
    match cli.format {
        Format::Text => match checked {
            Some(o) if o != fast => println!("formula {fast}, oracle {o}: DISAGREE"),
            Some(_) => println!("{fast}"),
            None => println!(
                "{fast} (formula only: {} pins exceed oracle bound {})",
                p.total_pins(),
                cli.oracle_bound
            ),
        },
        Format::Structured => kv(&[
            ("position", p.to_string()),
            ("outcome", fast.to_string()),
            ("oracle", checked.map_or("skipped".into(), |o| o.to_string())),
            ("agree", agree.to_string()),
        ]),
    }
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn cmd_reduce(cli: &Cli, text: &str) -> Result<ExitCode, ExitCode> {
    let p = parse(text)?;
    let form = reduce_position(&p);
    let value = monoid_value(&p);
    match cli.format {
        Format::Text => println!("{form} (value {value})"),
        Format::Structured => kv(&[
            ("position", p.to_string()),
            ("k1", form.k1.to_string()),
            ("k2", form.k2.to_string()),
            ("value", value.0.to_string()),
        ]),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_best_move(cli: &Cli, text: &str, player: &str) -> Result<ExitCode, ExitCode> {
    let p = parse(text)?;
    let who: Player = player.parse().map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })?;
    let advice = best_move(&p, who);
    match cli.format {
        Format::Text => println!("{}", advice.describe(&p)),
        Format::Structured => {
            let mut pairs = vec![("position", p.to_string()), ("player", who.to_string())];
            let kind = match &advice {
                MoveAdvice::Winning { .. } => "winning",
                MoveAdvice::NoWinningMove { .. } => "losing",
                MoveAdvice::NoLegalMove => "no-move",
            };
            pairs.push(("advice", kind.to_string()));
            if let Some((mv, result)) = advice.chosen_move() {
                pairs.push(("strip", p.components()[mv.component_index].to_string()));
                pairs.push(("offset", mv.offset.to_string()));
                pairs.push(("result", result.to_string()));
                pairs.push(("result_outcome", fast_outcome(result).to_string()));
            }
            if let MoveAdvice::Winning { rule, .. } = &advice {
                pairs.push(("rule", format!("{rule:?}")));
            }
            kv(&pairs);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_equiv(cli: &Cli, a: &str, b: &str, bound: u32, geq: bool) -> Result<ExitCode, ExitCode> {
    let (g, h) = (parse(a)?, parse(b)?);
    let oracle = Oracle::new(cli.oracle_bound);
    let verdict = if geq {
        geq_bounded(&oracle, &g, &h, bound)
    } else {
        indistinguishable_bounded(&oracle, &g, &h, bound)
    }
    .map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })?;
    match cli.format {
        Format::Text => println!("{verdict}"),
        Format::Structured => print!("{}", verdict.record()),
    }
    Ok(if verdict.holds() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_verify(
    cli: &Cli,
    suite: &[String],
    bounds: Bounds,
    json_out: Option<&PathBuf>,
) -> Result<ExitCode, ExitCode> {
    let ids: Vec<&str> = suite.iter().map(String::as_str).collect();
    let reports = run_suite(&ids, &bounds).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })?;
    let records: Vec<String> = reports.iter().map(|r| r.to_json().to_string()).collect();
    match cli.format {
        Format::Text => {
            for r in &reports {
                println!("{r}");
            }
            let confirmed = reports.iter().filter(|r| r.is_confirmed()).count();
            println!("{confirmed}/{} claims confirmed", reports.len());
        }
        Format::Structured => {
            for line in &records {
                println!("{line}");
            }
        }
    }
    if let Some(path) = json_out {
        let mut body = records.join("\n");
        body.push('\n');
        std::fs::write(path, body).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            ExitCode::from(2)
        })?;
    }
    Ok(if reports.iter().all(|r| r.is_confirmed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_serve(host: IpAddr, port: u16, snapshot: Option<PathBuf>) -> Result<ExitCode, ExitCode> {
    let runtime = tokio::runtime::Runtime::new().map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })?;
    runtime
        .block_on(kayles_service::serve(SocketAddr::new(host, port), snapshot))
        .map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(2)
        })?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Outcome { position } => cmd_outcome(&cli, position),
        Command::Reduce { position } => cmd_reduce(&cli, position),
        Command::BestMove { position, player } => cmd_best_move(&cli, position, player),
        Command::Equiv { a, b, bound, geq } => cmd_equiv(&cli, a, b, *bound, *geq),
        Command::Verify {
            suite,
            max_pins,
            x_bound,
            json_out,
        } => cmd_verify(&cli, suite, Bounds::new(*max_pins, *x_bound), json_out.as_ref()),
        Command::Serve {
            port,
            host,
            snapshot,
        } => cmd_serve(*host, *port, snapshot.clone()),
    };
    result.unwrap_or_else(|code| code)
}
