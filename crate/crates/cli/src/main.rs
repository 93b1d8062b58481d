//! `altchar`: eigenvalue multiplicities, invariant vectors and global classes
//! for symmetric and alternating groups.

mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "altchar", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Lift the size guards (n ≤ 30 closed forms, n ≤ 14 tables, n ≤ 11
    /// brute force).
    #[arg(long, global = true)]
    unsafe_bounds: bool,

    /// Include wall-clock time in the output (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Sn,
    An,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TierArg {
    Quick,
    Full,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiplicities of the eigenvalues ζ_m^i of a class element in an irrep.
    Eigmult {
        #[arg(long, value_enum)]
        group: Group,
        /// Partition, with `:+`/`:-` for split alternating irreps.
        #[arg(long)]
        irrep: String,
        /// Cycle type, with `:+`/`:-` for split alternating classes.
        #[arg(long)]
        class: String,
        /// A single exponent instead of the whole vector.
        #[arg(long, allow_hyphen_values = true)]
        i: Option<i64>,
    },
    /// Bias a⁺ − a⁻ between the halves of V_φ(μ) at the `:+` class of μ.
    Bias {
        #[arg(long)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        i: Option<i64>,
    },
    /// Whether elements of a class fix a non-zero vector of an irrep.
    Invariant {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        irrep: String,
        #[arg(long)]
        class: String,
    },
    /// Whether every group element fixes a non-zero vector of an irrep.
    Unisingular {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        irrep: String,
    },
    /// Eigenvalues ζ_n^i missing from an n-cycle, per irrep of S_n.
    Swanson {
        #[arg(long)]
        n: usize,
        /// Show the literal printed reading of the list instead.
        #[arg(long)]
        as_printed: bool,
    },
    /// Whether w^i is conjugate to w in A_n (μ with distinct odd parts).
    PowerConj {
        #[arg(long)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
    },
    /// Whether the class of cycle type μ is global in A_n.
    Global {
        #[arg(long)]
        mu: String,
        /// Also decide by brute force over the centralizer.
        #[arg(long)]
        verify: bool,
    },
    /// Character table of A_n.
    Chartable {
        #[arg(long)]
        n: usize,
    },
    /// Run the built-in verification suite.
    Selftest {
        #[arg(long, value_enum, default_value_t = TierArg::Quick)]
        tier: TierArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let opts = commands::Options {
        unsafe_bounds: cli.unsafe_bounds,
        timing: cli.timing,
    };
    match commands::dispatch(&cli.command, &opts) {
        Ok(outcome) => {
            let mut record = outcome.record;
            if cli.timing {
                record.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            print!("{}", record.render(cli.format));
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, altchar::Error::BoundExceeded { .. }) {
                eprintln!("hint: pass --unsafe-bounds to lift the size guard");
            }
            ExitCode::from(if e.is_internal() { 1 } else { 2 })
        }
    }
}
