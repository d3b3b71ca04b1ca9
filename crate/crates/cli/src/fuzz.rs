use std::fs;

use clap::Args;
use incorrect_apsp::generate::{random_cycle_free_graph, GraphSpec};
use incorrect_apsp::Graph;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{verify, Algo, EXIT_EXHAUSTED, EXIT_INPUT, EXIT_MISMATCH};

const RETRY_CAP: usize = 1000;
const DENSITY_CYCLE: [f64; 3] = [0.1, 0.5, 0.9];

#[derive(Args)]
pub struct FuzzArgs {
    /// Number of random graphs to check
    #[arg(long, default_value_t = 200)]
    pub trials: u64,
    /// Vertex count range, inclusive (e.g. 4..40 or a single number)
    #[arg(long, default_value = "2..16")]
    pub n: String,
    /// Edge density in [0, 1]; omitted cycles through 0.1, 0.5, 0.9
    #[arg(long)]
    pub density: Option<f64>,
    /// Weight range, inclusive (e.g. 1..100 or -5..50)
    #[arg(long, value_name = "LO..HI", allow_hyphen_values = true)]
    pub weight_range: Option<String>,
    /// Allow negative edge weights (draws are re-rolled until cycle-free)
    #[arg(long)]
    pub negative_edges: bool,
    /// Base seed; together with a trial index it fixes the whole graph
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Where to write the offending graph on a mismatch
    #[arg(long, default_value = "fuzz-reproducer.txt")]
    pub reproducer: String,
}

/// Inclusive "LO..HI" with a bare "N" meaning N..N.
fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = match text.split_once("..") {
        Some((l, h)) => (l, h.strip_prefix('=').unwrap_or(h)),
        None => (text, text),
    };
    let parse = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| format!("bad range bound {s:?}"))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(format!("empty range {text:?}"));
    }
    Ok((lo, hi))
}

struct Plan {
    trials: u64,
    n_lo: usize,
    n_hi: usize,
    density: Option<f64>,
    weight_min: i64,
    weight_max: i64,
    seed: u64,
}

fn plan(args: &FuzzArgs) -> Result<Plan, String> {
    let (n_lo, n_hi) = parse_range(&args.n)?;
    if n_lo < 1 {
        return Err("vertex counts must be at least 1".into());
    }
    if let Some(d) = args.density {
        if !(0.0..=1.0).contains(&d) {
            return Err(format!("density {d} is outside [0, 1]"));
        }
    }
    let (weight_min, weight_max) = match &args.weight_range {
        Some(text) => parse_range(text)?,
        None if args.negative_edges => (-5, 50),
        None => (1, 100),
    };
    if weight_min < 0 && !args.negative_edges {
        return Err(format!(
            "weight range {weight_min}..{weight_max} includes negatives; pass --negative-edges to allow them"
        ));
    }
    Ok(Plan {
        trials: args.trials,
        n_lo: n_lo as usize,
        n_hi: n_hi as usize,
        density: args.density,
        weight_min,
        weight_max,
        seed: args.seed,
    })
}

enum TrialFailure {
    Exhausted {
        trial: u64,
    },
    Mismatch {
        trial: u64,
        graph: Graph,
        report: String,
    },
}

fn run_trial(p: &Plan, trial: u64) -> Result<(), TrialFailure> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    rng.set_stream(trial + 1);
    let spec = GraphSpec {
        n: rng.random_range(p.n_lo..=p.n_hi),
        density: p.density.unwrap_or(DENSITY_CYCLE[(trial % 3) as usize]),
        weight_min: p.weight_min,
        weight_max: p.weight_max,
    };
    let Some(g) = random_cycle_free_graph(&spec, &mut rng, RETRY_CAP) else {
        return Err(TrialFailure::Exhausted { trial });
    };
    let all = [
        Algo::Kij,
        Algo::Ijk,
        Algo::TripleIjk,
        Algo::Sparse,
        Algo::Minplus,
    ];
    match verify::run(&g, &all) {
        Ok(_) => Ok(()),
        Err(report) => Err(TrialFailure::Mismatch {
            trial,
            graph: g,
            report: report.to_string(),
        }),
    }
}

pub fn run(args: &FuzzArgs) -> u8 {
    let p = match plan(args) {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_INPUT;
        }
    };
    // find_map_first keeps the report deterministic: the lowest failing
    // trial index wins regardless of worker scheduling.
    let failure = (0..p.trials)
        .into_par_iter()
        .find_map_first(|t| run_trial(&p, t).err());
    match failure {
        None => {
            println!("fuzz: {} trials passed (seed {})", p.trials, p.seed);
            0
        }
        Some(TrialFailure::Exhausted { trial }) => {
            eprintln!(
                "error: trial {trial} (seed {}) found no negative-cycle-free graph in {RETRY_CAP} draws",
                p.seed
            );
            EXIT_EXHAUSTED
        }
        Some(TrialFailure::Mismatch {
            trial,
            graph,
            report,
        }) => {
            if let Err(e) = fs::write(&args.reproducer, graph.to_edge_list()) {
                eprintln!("error: cannot write reproducer {}: {e}", args.reproducer);
            }
            println!("fuzz: trial {trial} (seed {}): {report}", p.seed);
            println!("fuzz: reproducer written to {}", args.reproducer);
            EXIT_MISMATCH
        }
    }
}
