//! `autfree` command-line front end.

mod commands;
mod report;

use std::process::ExitCode;

use autfree::verify::Suite;
use autfree::Parallelism;
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "autfree", version, about = "Exact computations for the automorphism group of a free group")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text", env = "AUTFREE_FORMAT")]
    pub format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Run every kernel on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct RankDegree {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub rank: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub degree: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenType {
    #[value(name = "K")]
    K,
    #[value(name = "Kchain")]
    Kchain,
    #[value(name = "L")]
    L,
    #[value(name = "T")]
    T,
    #[value(name = "A")]
    A,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    #[value(name = "J")]
    J,
    #[value(name = "M")]
    M,
    #[value(name = "L")]
    L,
    #[value(name = "T")]
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    R2,
    R3,
    R4,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank of the degree-n part of the free Lie algebra.
    Witt(RankDegree),
    /// Lyndon words of a given length.
    Lyndon {
        #[command(flatten)]
        rd: RankDegree,
        /// Also give the bracketed series.
        #[arg(long)]
        as_series: bool,
        /// Also give the bracketed group word.
        #[arg(long)]
        as_word: bool,
    },
    /// Fox derivative of a word.
    Fox {
        #[arg(long)]
        word: String,
        /// Generator index to differentiate by.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        wrt: u64,
        #[arg(long)]
        rank: Option<usize>,
        /// Also give the Magnus image truncated at this degree.
        #[arg(long)]
        truncate: Option<usize>,
    },
    /// Fox Jacobian of an endomorphism.
    Jacobian {
        /// Images, e.g. "x1->x1*[x1,x2]; x2->x2".
        #[arg(long)]
        map: String,
        #[arg(long)]
        rank: Option<usize>,
        /// Give τ(Dφ) − 1 as series instead of group ring entries.
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        truncate: Option<usize>,
        /// Keep only this graded part (default truncation degree+2).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Degree-n trace of the reduced Jacobian.
    Trace {
        #[arg(long)]
        map: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[arg(long)]
        truncate: Option<usize>,
    },
    /// Whether the degree-n trace is cyclically balanced.
    Bglm {
        #[arg(long)]
        map: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
    },
    /// Images and class Jacobian of a named generator.
    Generator {
        #[arg(long = "type", value_enum)]
        kind: GenType,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated indices.
        #[arg(long, value_delimiter = ',')]
        omega: Vec<usize>,
        /// Word for T, or one of the words a_1..a_n for A (repeat the flag).
        #[arg(long)]
        word: Vec<String>,
    },
    /// Ranks of the bracket span of degree-one classes.
    SpanRank {
        #[command(flatten)]
        rd: RankDegree,
        /// Also compute the trace image.
        #[arg(long)]
        trace_image: bool,
    },
    /// The rank-two degree-four map with balanced trace outside L.
    Counterexample,
    /// Dimension rows for degrees 1..max-degree.
    Dims {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        rank: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
        /// Restrict to one row.
        #[arg(long, value_enum)]
        table: Option<Quantity>,
    },
    /// Irreducible GL_r constituents of a module.
    Decompose {
        #[command(flatten)]
        rd: RankDegree,
        #[arg(long, value_enum)]
        module: Quantity,
        /// Allow the shapes that are only conjectural for n > r.
        #[arg(long)]
        allow_conjectural: bool,
    },
    /// Replicas of the published tables.
    Tables {
        #[arg(long, value_enum, default_value = "r3")]
        which: Which,
    },
    /// Run acceptance criteria.
    Verify {
        /// One of all, tables, r2, fox, generators, spans, bracket, counterexample, characters, rni.
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: autfree::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let par = if cli.sequential { Parallelism::Sequential } else { Parallelism::Parallel };
    match commands::run(&cli, par) {
        Ok((report, ok)) => {
            print!("{}", report.emit(cli.format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(commands::Failure::Usage(msg)) => Cli::command().error(ErrorKind::MissingRequiredArgument, msg).exit(),
        Err(commands::Failure::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
