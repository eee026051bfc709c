//! Command-line front end for the `dualbraid` library.
//!
//! [`run`] does all the work and returns the exit code together with the
//! text destined for stdout and stderr, so the binary is a thin wrapper.

pub mod parse;

use std::cmp::Ordering;
use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use dualbraid::verify::run_all;
use dualbraid::{cmp_dehornoy, cmp_rotating, handle_reduce, rnf, sigma_class, splitting, splitting_tree, BandWord};
use thiserror::Error;

pub use parse::{parse_word, ParseError, Word};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_CONTRACT: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "dualbraid", version, about = "Rotating normal form and ordering of the dual braid monoid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the rotating normal form of a positive word.
    Normalize {
        #[arg(long)]
        strands: usize,
        word: String,
    },
    /// Compare two positive words in the rotating ordering and with the oracle.
    Compare {
        #[arg(long)]
        strands: usize,
        left: String,
        right: String,
    },
    /// Print the splitting, highest entry first.
    Split {
        #[arg(long)]
        strands: usize,
        word: String,
    },
    /// Print the iterated splitting tree as nested arrays.
    Tree {
        #[arg(long)]
        strands: usize,
        word: String,
    },
    /// Run the exhaustive checks on every element up to a given length.
    EnumVerify {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        max_len: usize,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Reduce handles and print the sigma-class of a word.
    Oracle {
        #[arg(long)]
        strands: usize,
        word: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
enum Failure {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Contract(String),
    #[error(transparent)]
    Library(#[from] dualbraid::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => EXIT_USAGE,
            Failure::Contract(_) | Failure::Library(_) => EXIT_CONTRACT,
        }
    }
}

fn tag(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

fn positive(text: &str, n: usize) -> Result<BandWord, Failure> {
    parse_word(text, n)?
        .to_band()
        .ok_or_else(|| Failure::Contract(format!("'{text}' is not a positive word")))
}

fn at_least_three(n: usize) -> Result<(), Failure> {
    if n < 3 {
        return Err(dualbraid::Error::StrandCount { n, min: 3 }.into());
    }
    Ok(())
}

/// Runs one command line; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = String::new();
    match execute(cli.command, &mut out) {
        Ok(code) => Outcome { code, stdout: out, stderr: String::new() },
        Err(e) => Outcome { code: e.code(), stdout: out, stderr: format!("error: {e}\n") },
    }
}

fn execute(command: Command, out: &mut String) -> Result<u8, Failure> {
    match command {
        Command::Normalize { strands, word } => {
            let w = positive(&word, strands)?;
            writeln!(out, "{}", rnf(&w)).unwrap();
        }
        Command::Compare { strands, left, right } => {
            let (u, v) = (positive(&left, strands)?, positive(&right, strands)?);
            let rot = cmp_rotating(&u, &v);
            let deh = cmp_dehornoy(&u, &v)?;
            let mismatch = rot != deh;
            writeln!(out, "rotating: {}", tag(rot)).unwrap();
            writeln!(out, "oracle: {}", tag(deh)).unwrap();
            writeln!(out, "mismatch: {}", if mismatch { "yes" } else { "no" }).unwrap();
            if mismatch {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Split { strands, word } => {
            at_least_three(strands)?;
            let w = positive(&word, strands)?;
            writeln!(out, "{}", splitting(&w)?).unwrap();
        }
        Command::Tree { strands, word } => {
            let w = positive(&word, strands)?;
            writeln!(out, "{}", splitting_tree(&w)).unwrap();
        }
        Command::EnumVerify { strands, max_len, jobs } => {
            if strands < 2 {
                return Err(dualbraid::Error::StrandCount { n: strands, min: 2 }.into());
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| Failure::Contract(e.to_string()))?;
            let reports = pool.install(|| run_all(strands, max_len));
            let failed: usize = reports.iter().map(|r| r.failed).sum();
            let checked: usize = reports.iter().map(|r| r.checked).sum();
            for r in &reports {
                writeln!(out, "{r}").unwrap();
            }
            writeln!(out, "total: {checked} checked, {failed} failed").unwrap();
            if failed > 0 {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Oracle { strands, word } => {
            let w = parse_word(&word, strands)?.to_artin();
            let reduced = handle_reduce(&w)?;
            writeln!(out, "class: {}", sigma_class(&reduced)?).unwrap();
            writeln!(out, "reduced: {reduced}").unwrap();
        }
    }
    Ok(EXIT_OK)
}
