//! Command-line front end: counting queries, classification, advice,
//! verification sweeps and interactive play.
//!
//! Exit codes: 0 success or clean sweep, 1 usage error, 2 range or budget
//! error, 3 verification mismatch.
//!
//! Structured output is one record per line of space-separated `key=value`
//! pairs. Keys:
//!
//! - count: `command subject args value`
//! - classify: `command position rules outcome rule`
//! - advise: `command position rules outcome move`, plus `pile count` for a
//!   removal or `from to count` for a transfer (1-based pile numbers)
//! - verify: the sweep report records (`sweep bound cases mismatches status`,
//!   then `mismatch` and `note` detail lines)

pub mod play;

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use sharenim::bitops::BitValue;
use sharenim::enumeration as count;
use sharenim::oracle::Sweep;
use sharenim::solver::DEFAULT_BUDGET;
use sharenim::{Error, Move, Outcome, Position, Result, Rule, Ruleset, Solver};

use crate::play::{Finish, Seat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RANGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sharenim",
    version,
    about = "Nim and Sharing Nim: counting, solving and play"
)]
struct Cli {
    /// Ruleset; defaults to sharing for three piles and classic otherwise
    #[arg(long, global = true, value_enum)]
    rules: Option<RulesArg>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Maximum number of positions the solver may memoize
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RulesArg {
    Classic,
    Sharing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact counts
    Count {
        #[command(subcommand)]
        subject: CountSubject,
    },
    /// P or N outcome of a position, with the rule that decided it
    Classify {
        #[arg(required = true, num_args = 1..)]
        piles: Vec<String>,
    },
    /// A winning move, if one exists
    Advise {
        #[arg(required = true, num_args = 1..)]
        piles: Vec<String>,
    },
    /// Play against the engine on standard input and output
    Play {
        #[arg(required = true, num_args = 1..)]
        piles: Vec<String>,
        /// Whether the engine moves first or second
        #[arg(long, value_enum, default_value_t = SeatArg::First)]
        engine: SeatArg,
    },
    /// Compare a formula or theorem against brute force up to a bound
    Verify {
        /// One of: pairs, zero-nim-sum, zero-nim-upto, absum, followers,
        /// connectivity, two-pile-equiv, classic-nim-theorem, transfer-parity,
        /// nim-inside-nim, complexity
        sweep: String,
        bound: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeatArg {
    First,
    Second,
}

#[derive(Debug, Subcommand)]
enum CountSubject {
    /// Unordered pairs {a, b} with a + b = S and a xor b = X
    Pairs { sum: String, xor: String },
    /// Three-pile zero-nim positions with total S
    ZeroNimSum { total: String },
    /// Three-pile zero-nim positions with total at most K
    ZeroNimUpto { limit: String },
    /// a, b, a+b positions whose larger piles have exactly k binary digits
    AbsumExact { digits: String },
    /// a, b, a+b positions whose larger piles have at most k binary digits
    AbsumUpto { digits: String },
    /// Zero-nim positions reachable by one transfer from a zero-nim a b c
    Followers { a: String, b: String, c: String },
    /// Number of zero-nim positions with total S
    SequenceLength { total: String },
}

impl CountSubject {
    fn name(&self) -> &'static str {
        match self {
            CountSubject::Pairs { .. } => "pairs",
            CountSubject::ZeroNimSum { .. } => "zero-nim-sum",
            CountSubject::ZeroNimUpto { .. } => "zero-nim-upto",
            CountSubject::AbsumExact { .. } => "absum-exact",
            CountSubject::AbsumUpto { .. } => "absum-upto",
            CountSubject::Followers { .. } => "followers",
            CountSubject::SequenceLength { .. } => "sequence-length",
        }
    }
}

fn value(s: &str) -> Result<u64> {
    s.parse::<BitValue>().map(BitValue::get)
}

fn digits(s: &str) -> Result<u32> {
    let v = value(s)?;
    u32::try_from(v).map_err(|_| Error::OutOfRange {
        value: v as u128,
        max: u32::MAX as u64,
    })
}

fn position(words: &[String]) -> Result<Position> {
    let p: Position = words.join(" ").parse()?;
    Position::starting(p.piles().to_vec())
}

fn ruleset(arg: Option<RulesArg>, position: &Position) -> Ruleset {
    match arg {
        Some(RulesArg::Classic) => Ruleset::ClassicNim,
        Some(RulesArg::Sharing) => Ruleset::SharingNim,
        None if position.len() == 3 => Ruleset::SharingNim,
        None => Ruleset::ClassicNim,
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_range() {
        EXIT_RANGE
    } else {
        EXIT_USAGE
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T, R, W, E>(args: I, input: R, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    R: BufRead,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            if informational {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    match dispatch(cli, input, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch<R: BufRead, W: Write, E: Write>(cli: Cli, input: R, out: &mut W, err: &mut E) -> Result<i32> {
    let solver = Solver::with_budget(cli.budget);
    let lines = match cli.command {
        Command::Count { subject } => cmd_count(&subject, cli.format)?,
        Command::Classify { piles } => {
            let p = position(&piles)?;
            cmd_classify(&solver, &p, ruleset(cli.rules, &p), cli.format)?
        }
        Command::Advise { piles } => {
            let p = position(&piles)?;
            cmd_advise(&solver, &p, ruleset(cli.rules, &p), cli.format)?
        }
        Command::Play { piles, engine } => {
            let p = position(&piles)?;
            let seat = match engine {
                SeatArg::First => Seat::First,
                SeatArg::Second => Seat::Second,
            };
            let finish = play::play(&solver, p.clone(), ruleset(cli.rules, &p), seat, input, out)?;
            return Ok(match finish {
                Finish::Won(_) | Finish::Abandoned => EXIT_OK,
            });
        }
        Command::Verify { sweep, bound } => {
            let sweep: Sweep = sweep.parse()?;
            let bound = value(&bound)?;
            let started = Instant::now();
            let report = sweep.run(bound)?;
            let _ = writeln!(err, "elapsed: {:.3}s", started.elapsed().as_secs_f64());
            let text = match cli.format {
                Format::Text => report.to_text(20),
                Format::Structured => report.to_records(),
            };
            write_out(out, &text)?;
            return Ok(if report.is_clean() { EXIT_OK } else { EXIT_MISMATCH });
        }
    };
    write_out(out, &lines)?;
    Ok(EXIT_OK)
}

fn write_out<W: Write>(out: &mut W, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Error::Internal(format!("i/o failure: {e}")))
}

fn cmd_count(subject: &CountSubject, format: Format) -> Result<String> {
    let (args, n) = match subject {
        CountSubject::Pairs { sum, xor } => {
            let (s, x) = (value(sum)?, value(xor)?);
            (vec![s, x], count::pair_count(s, x)?)
        }
        CountSubject::ZeroNimSum { total } => {
            let s = value(total)?;
            (vec![s], count::zero_nim_count_by_sum(s)?)
        }
        CountSubject::ZeroNimUpto { limit } => {
            let k = value(limit)?;
            (vec![k], count::zero_nim_count_upto(k)?)
        }
        CountSubject::AbsumExact { digits: d } => {
            let k = digits(d)?;
            (vec![k as u64], count::absum_count_exact_digits(k)?)
        }
        CountSubject::AbsumUpto { digits: d } => {
            let k = digits(d)?;
            (vec![k as u64], count::absum_count_upto_digits(k)?)
        }
        CountSubject::Followers { a, b, c } => {
            let piles = [value(a)?, value(b)?, value(c)?];
            (piles.to_vec(), count::zero_nim_follower_count(&piles)?)
        }
        CountSubject::SequenceLength { total } => {
            let s = value(total)?;
            (vec![s], count::transferable_sequence_size(s)?)
        }
    };
    Ok(match format {
        Format::Text => format!("{n}\n"),
        Format::Structured => {
            let joined: Vec<String> = args.iter().map(u64::to_string).collect();
            format!(
                "command=count subject={} args={} value={n}\n",
                subject.name(),
                joined.join(",")
            )
        }
    })
}

fn cmd_classify(solver: &Solver, p: &Position, rules: Ruleset, format: Format) -> Result<String> {
    let c = solver.classify(p, rules)?;
    Ok(match format {
        Format::Text => {
            let why = match c.rule {
                Rule::NimSum => format!("nim-sum {}", p.nim_sum()),
                Rule::EqualPair => "a-a-b family".to_string(),
                Rule::SumTriple => "a-b-a+b family".to_string(),
                Rule::OneAb => "1-a-b reduction".to_string(),
                Rule::Search => "exhaustive search".to_string(),
            };
            format!("{} ({why})\n", c.outcome)
        }
        Format::Structured => format!(
            "command=classify position={p} rules={} outcome={} rule={}\n",
            rules.name(),
            c.outcome,
            c.rule.tag()
        ),
    })
}

fn cmd_advise(solver: &Solver, p: &Position, rules: Ruleset, format: Format) -> Result<String> {
    let advice = solver.advise(p, rules)?;
    Ok(match (format, advice) {
        (Format::Text, Some(mv)) => format!("{}\n", mv.describe()),
        (Format::Text, None) => "P position: no winning move\n".to_string(),
        (Format::Structured, advice) => {
            let head = format!("command=advise position={p} rules={}", rules.name());
            match advice {
                None => format!("{head} outcome={} move=none\n", Outcome::P),
                Some(Move::Remove { pile, count }) => {
                    format!(
                        "{head} outcome={} move=remove pile={} count={count}\n",
                        Outcome::N,
                        pile + 1
                    )
                }
                Some(Move::Transfer { from, to, count }) => format!(
                    "{head} outcome={} move=transfer from={} to={} count={count}\n",
                    Outcome::N,
                    from + 1,
                    to + 1
                ),
            }
        }
    })
}
