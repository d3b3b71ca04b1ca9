mod bench;
mod checkpath;
mod fuzz;
mod verify;

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use incorrect_apsp::minplus::incorrect_apsp_minplus_default;
use incorrect_apsp::relax::{apsp_kij, incorrect_apsp_ijk, triple_ijk};
use incorrect_apsp::sparse::incorrect_apsp_sparse;
use incorrect_apsp::{DistMatrix, Graph, InputFormat};

pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NEGATIVE_CYCLE: u8 = 3;
pub const EXIT_EXHAUSTED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "incorrect-apsp",
    version,
    about = "Solvers and checkers for the loop-order-swapped all-pairs shortest path variant"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm and print its matrix
    Compute(ComputeArgs),
    /// Run several algorithms and compare their matrices cell-exactly
    Verify(VerifyArgs),
    /// Seeded randomized differential testing
    Fuzz(fuzz::FuzzArgs),
    /// Time algorithms over generated graphs and emit CSV
    Bench(bench::BenchArgs),
    /// Evaluate path predicates on one vertex sequence
    CheckPath(checkpath::CheckPathArgs),
    /// Parse the input and check it is free of negative cycles
    Validate(InputArgs),
}

#[derive(Args)]
pub struct InputArgs {
    /// Input file, or - for standard input
    #[arg(long, default_value = "-")]
    input: String,
    /// Input syntax
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Algorithm to run
    #[arg(long, value_enum)]
    algo: Algo,
    /// Output file, or - for standard output
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Algorithms to compare; defaults to all five
    #[arg(long, value_enum)]
    algo: Vec<Algo>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Algo {
    /// Pivot-outermost relaxation (correct all-pairs shortest paths)
    Kij,
    /// Pivot-innermost relaxation (the studied variant)
    Ijk,
    /// Three consecutive pivot-innermost passes
    TripleIjk,
    /// Per-source solver built on single-source calls
    Sparse,
    /// Reduction to a correct-APSP oracle via min-plus products
    Minplus,
}

impl Algo {
    pub fn label(self) -> &'static str {
        match self {
            Algo::Kij => "kij",
            Algo::Ijk => "ijk",
            Algo::TripleIjk => "triple-ijk",
            Algo::Sparse => "sparse",
            Algo::Minplus => "minplus",
        }
    }

    pub fn run(self, g: &Graph) -> DistMatrix {
        match self {
            Algo::Kij => apsp_kij(&g.adjacency_matrix()),
            Algo::Ijk => incorrect_apsp_ijk(&g.adjacency_matrix()),
            Algo::TripleIjk => triple_ijk(&g.adjacency_matrix()),
            Algo::Sparse => incorrect_apsp_sparse(g),
            Algo::Minplus => incorrect_apsp_minplus_default(g).0,
        }
    }
}

/// Read and parse the input graph; failures carry the exit code.
fn load_graph(args: &InputArgs) -> Result<Graph, u8> {
    let text = if args.input == "-" {
        let mut buf = String::new();
        match std::io::stdin().read_to_string(&mut buf) {
            Ok(_) => buf,
            Err(e) => {
                eprintln!("error: cannot read standard input: {e}");
                return Err(EXIT_INPUT);
            }
        }
    } else {
        match fs::read_to_string(&args.input) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", args.input);
                return Err(EXIT_INPUT);
            }
        }
    };
    let format = match args.format {
        Format::Edgelist => InputFormat::EdgeList,
        Format::Matrix => InputFormat::Matrix,
    };
    incorrect_apsp::graph::parse_graph(&text, format).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_INPUT
    })
}

/// Load plus the negative-cycle gate shared by compute and verify.
fn load_validated(args: &InputArgs) -> Result<Graph, u8> {
    let g = load_graph(args)?;
    if !g.negative_cycle_free() {
        eprintln!("error: the input graph contains a negative cycle");
        return Err(EXIT_NEGATIVE_CYCLE);
    }
    Ok(g)
}

fn write_output(path: &str, content: &str) -> Result<(), u8> {
    let result = if path == "-" {
        use std::io::Write;
        std::io::stdout().write_all(content.as_bytes())
    } else {
        fs::write(path, content)
    };
    result.map_err(|e| {
        eprintln!("error: cannot write {path}: {e}");
        EXIT_INPUT
    })
}

fn cmd_compute(args: &ComputeArgs) -> u8 {
    let g = match load_validated(&args.input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let m = args.algo.run(&g);
    match write_output(&args.output, &m.to_string()) {
        Ok(()) => 0,
        Err(code) => code,
    }
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let g = match load_validated(&args.input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let algos = if args.algo.is_empty() {
        vec![
            Algo::Kij,
            Algo::Ijk,
            Algo::TripleIjk,
            Algo::Sparse,
            Algo::Minplus,
        ]
    } else {
        args.algo.clone()
    };
    match verify::run(&g, &algos) {
        Ok(groups) => {
            for line in groups {
                println!("{line}");
            }
            0
        }
        Err(report) => {
            println!("{report}");
            EXIT_MISMATCH
        }
    }
}

fn cmd_validate(args: &InputArgs) -> u8 {
    let g = match load_graph(args) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if !g.negative_cycle_free() {
        eprintln!("error: the input graph contains a negative cycle");
        return EXIT_NEGATIVE_CYCLE;
    }
    println!("ok: n={}, m={}, no negative cycle", g.n(), g.edges().len());
    0
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Fuzz(args) => fuzz::run(args),
        Command::Bench(args) => bench::run(args),
        Command::CheckPath(args) => checkpath::run(args),
        Command::Validate(args) => cmd_validate(args),
    };
    ExitCode::from(code)
}
