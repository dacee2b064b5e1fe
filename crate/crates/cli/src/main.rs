//! `hvec`: count, list and tabulate h-vectors by length.
//!
//! Exit status is 0 on success, 1 on a runtime failure (arithmetic overflow,
//! a failed bound check) and 2 on a usage error.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hvec_core::enumerate::{count_by_length, enumerate_by_length};
use hvec_core::fib_bound::{check_containment, fib};
use hvec_core::lefschetz::{h_sequence, Condition};
use hvec_core::staircase::{
    distinct_partitions, format_generators, hilbert_from_staircase, is_lex, minimal_generators,
    partition_to_staircase, render_staircase, Partition,
};
use hvec_core::table::{compute_table, Column};
use hvec_core::Error;

use crate::output::BoundsLine;

#[derive(Debug, Parser)]
#[command(
    name = "hvec",
    version,
    about = "Count and list h-vectors of a given length"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of h-vectors of the given length.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        length: u64,
        /// all, unimodal, symmetric, wlp, wlp-filter, wlp-truncate or l<k>
        #[arg(long, value_parser = parse_condition)]
        condition: Option<Condition>,
    },
    /// List the h-vectors of the given length in lexicographic order.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        length: u64,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// One row of counting sequences per length 1..=max-n.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// ell, fib, wlp, unimodal, symmetric, l<k>, tau, distinct_parts
        #[arg(
            long,
            value_delimiter = ',',
            value_parser = parse_column,
            default_value = "ell,wlp,unimodal,symmetric,l2,l3,l4,l5"
        )]
        columns: Vec<Column>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Check distinct_parts(n) <= ell(n) <= fib(n) and L(n) inside B(n).
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
    },
    /// Work with the monomial ideal of a partition in k[x, y].
    Partition {
        /// Parts in weakly decreasing order.
        #[arg(required = true, value_parser = clap::value_parser!(u64).range(1..))]
        parts: Vec<u64>,
        #[arg(long, value_enum)]
        action: PartitionAction,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PartitionAction {
    ToIdeal,
    Hilbert,
    Render,
    IsLex,
}

fn parse_condition(s: &str) -> Result<Condition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_column(s: &str) -> Result<Column, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow(_) => Failure::Runtime(e.to_string()),
            Error::Domain(msg) => Failure::Usage(msg),
        }
    }
}

/// Standard output and whether every check passed.
fn run(command: Command) -> Result<(String, bool), Failure> {
    match command {
        Command::Count { length, condition } => {
            let count = match condition {
                None | Some(Condition::All) => count_by_length(length)?,
                Some(c) => h_sequence(c, length)?,
            };
            Ok((format!("{count}\n"), true))
        }
        Command::Enumerate { length, format } => {
            let census = enumerate_by_length(length)?;
            let text = match format {
                ListFormat::Text => output::vectors_text(census.vectors()),
                ListFormat::Json => output::vectors_json(census.vectors()),
            };
            Ok((text, true))
        }
        Command::Table {
            max_n,
            columns,
            format,
        } => {
            let records = compute_table(max_n, &columns)?;
            let text = match format {
                TableFormat::Csv => {
                    let names: Vec<String> = columns.iter().map(ToString::to_string).collect();
                    output::table_csv(&names, &records)
                }
                TableFormat::Json => output::table_json(&records),
            };
            Ok((text, true))
        }
        Command::Bounds { max_n } => {
            let mut text = String::new();
            let mut all_pass = true;
            for n in 1..=max_n {
                let line = BoundsLine {
                    n,
                    distinct_parts: distinct_partitions(n, 2)?.len() as u64,
                    ell: count_by_length(n)?,
                    fib: fib(n)?,
                    containment: check_containment(n)?,
                };
                all_pass &= line.passes();
                text.push_str(&line.render());
                text.push('\n');
            }
            Ok((text, all_pass))
        }
        Command::Partition { parts, action } => {
            let partition = Partition::new(parts)?;
            let staircase = partition_to_staircase(&partition)?;
            let text = match action {
                PartitionAction::ToIdeal => {
                    format!("{}\n", format_generators(&minimal_generators(&staircase)))
                }
                PartitionAction::Hilbert => {
                    let h = hilbert_from_staircase(&staircase);
                    let parts: Vec<String> = h.entries().iter().map(u64::to_string).collect();
                    format!("{}\n", parts.join(","))
                }
                PartitionAction::Render => render_staircase(&staircase),
                PartitionAction::IsLex => format!("{}\n", is_lex(&staircase)),
            };
            Ok((text, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, passed)) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
