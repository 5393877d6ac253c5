// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `symcol`: graph transforms, symmetry-breaking colorings, verifiers and
//! exact oracles from the command line. Every subcommand prints one JSON
//! document (CSV for `latin`) on standard output.

mod commands;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use symcol::oracle::ParamKind;

#[derive(Parser)]
#[command(name = "symcol", version, about = "Symmetry-breaking colorings of central, middle and subdivision graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    Subdivision,
    Central,
    Middle,
    Endline,
    Line,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OnGraph {
    Graph,
    Subdivision,
    Central,
    Middle,
    Endline,
    Line,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    ProperTotal,
    Avd,
    Tdc,
    Distinguishing,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a graph transform.
    Transform {
        #[arg(long, value_enum)]
        kind: TransformKind,
        /// graph6 string or family such as `cycle:5`.
        #[arg(long = "in")]
        input: String,
    },
    /// Enumerate the automorphism group.
    Aut {
        #[arg(long = "in")]
        input: String,
        /// Allow up to 64 vertices instead of 24.
        #[arg(long)]
        wide: bool,
        /// Compare the groups of G, L(G), S(G), C(G), M(G) and G⁺ instead.
        #[arg(long)]
        chain: bool,
    },
    /// Run a construction and verify it.
    Construct {
        /// One of 3.2, 3.4, 3.6, 4.5, 4.9, 5.1, 5.3, 5.5, 6.1, 6.2, appendix-tree.
        #[arg(long)]
        theorem: String,
        #[arg(long = "in")]
        input: String,
        /// Second graph for 5.5.
        #[arg(long)]
        with: Option<String>,
        /// For 5.5 with graphs of equal order: start from proper total colorings.
        #[arg(long)]
        equal_order: bool,
        /// For 3.6: color the edges of M(G) with three colors instead.
        #[arg(long)]
        edges: bool,
        /// Write the coloring JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring JSON file.
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Exact value of a parameter by exhaustive search.
    Oracle {
        #[arg(long, value_parser = parse_param)]
        param: ParamKind,
        #[arg(long = "in")]
        input: String,
        /// Search on a transform of the input.
        #[arg(long, value_enum, default_value = "graph")]
        on: OnGraph,
        /// Largest number of colors tried; defaults to order + size.
        #[arg(long)]
        cap: Option<u32>,
        /// Node budget; overrides SYMCOL_BUDGET.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Print the idempotent commutative Latin square of order 2k - 1 as CSV.
    Latin {
        #[arg(long)]
        k: usize,
    },
    /// Run a check over a family of graphs, writing a JSONL report.
    Sweep(sweep::SweepArgs),
}

fn parse_param(s: &str) -> Result<ParamKind, String> {
    s.parse().map_err(|e: symcol::Error| e.to_string())
}

/// How a subcommand ended.
pub enum Failure {
    /// Bad arguments or input; exit 2.
    Usage(String),
    /// A verifier rejected; exit 1. The JSON has already been printed.
    Rejected,
    /// Search budget, caps or a construction defect; exit 3.
    Runtime(String),
}

impl From<symcol::Error> for Failure {
    fn from(e: symcol::Error) -> Self {
        use symcol::Error::*;
        match e {
            Graph6 { .. } | OrderOutOfRange(_) | Input(_) | Precondition(_) | Contract(_) => Failure::Usage(e.to_string()),
            CapExceeded { .. } | BudgetExhausted { .. } | ConstructionDefect(_) => Failure::Runtime(e.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Transform { kind, input } => commands::transform(kind, &input),
        Command::Aut { input, wide, chain } => commands::aut(&input, wide, chain),
        Command::Construct { theorem, input, with, equal_order, edges, out } => {
            commands::construct(&theorem, &input, with.as_deref(), equal_order, edges, out.as_deref())
        }
        Command::Verify { property, coloring } => commands::verify(property, &coloring),
        Command::Oracle { param, input, on, cap, budget, workers } => commands::oracle(param, &input, on, cap, budget, workers),
        Command::Latin { k } => commands::latin(k),
        Command::Sweep(args) => sweep::run(args),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
