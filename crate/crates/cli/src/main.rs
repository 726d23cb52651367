//! `moessner`: run the sieve, inspect the triangle model, and verify the
//! identity registry from the command line.
//!
//! Exit codes: 0 on success, 1 when a check finds a violation, 2 on usage or
//! domain errors.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::{IdentitySelection, TriangleArgs, VerifyArgs};
use crate::output::OutputFormat;

#[derive(Debug, Parser)]
#[command(
    name = "moessner",
    version,
    about = "Moessner's sieve and its triangle identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first elements of the sieved stream for `n`.
    Sieve {
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        take: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Compute M(k,n) by the sieve, by exponentiation, and as A + sum of deltas.
    Value {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print a staircase (f, delta or h) row by row with its sums.
    Triangle {
        #[arg(long, value_enum)]
        kind: commands::Kind,
        #[arg(long)]
        i: Option<u64>,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check identities exactly over a finite grid.
    Verify {
        /// Comma-separated identity ids (I1..I14) or `all`.
        #[arg(long, default_value = "all", value_parser = commands::parse_identities)]
        identities: IdentitySelection,
        /// Defaults to 50 for I1 and 8 otherwise.
        #[arg(long)]
        k_max: Option<u64>,
        /// Defaults to 10 for I1 and 8 otherwise.
        #[arg(long)]
        n_max: Option<u64>,
        /// Defaults to n-max.
        #[arg(long)]
        m_max: Option<u64>,
        /// Defaults to n-max.
        #[arg(long)]
        x_max: Option<u64>,
        /// Defaults to k-max + 1.
        #[arg(long)]
        i_max: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long)]
        fail_fast: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sieve { n, take, format } => commands::sieve(n, take, format),
        Command::Value { k, n, format } => commands::value(k, n, format),
        Command::Triangle { kind, i, n, format } => {
            commands::triangle(TriangleArgs { kind, i, n }, format)
        }
        Command::Verify {
            identities,
            k_max,
            n_max,
            m_max,
            x_max,
            i_max,
            format,
            fail_fast,
        } => commands::verify(
            VerifyArgs {
                identities,
                k_max,
                n_max,
                m_max,
                x_max,
                i_max,
                fail_fast,
            },
            format,
        ),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
