use std::hint::black_box;
use std::time::Instant;

use clap::{Args, ValueEnum};
use incorrect_apsp::generate::{random_graph, GraphSpec};
use incorrect_apsp::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{write_output, Algo, EXIT_INPUT};

#[derive(Args)]
pub struct BenchArgs {
    /// Comma-separated vertex counts
    #[arg(long, default_value = "64,128,256")]
    pub sizes: String,
    /// Timed repetitions per data point (one extra warmup run)
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    /// Graph density regime
    #[arg(long, value_enum, default_value_t = Regime::Both)]
    pub regime: Regime,
    /// Algorithms to time
    #[arg(long, value_enum)]
    pub algo: Vec<Algo>,
    /// Seed for graph generation; identical seeds time identical graphs
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Output file for the CSV, or - for standard output
    #[arg(long, default_value = "-")]
    pub output: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Regime {
    /// Around four edges per vertex
    Sparse,
    /// Half of all ordered pairs
    Dense,
    Both,
}

impl Regime {
    fn expand(self) -> &'static [Regime] {
        match self {
            Regime::Both => &[Regime::Sparse, Regime::Dense],
            Regime::Sparse => &[Regime::Sparse],
            Regime::Dense => &[Regime::Dense],
        }
    }

    fn density(self, n: usize) -> f64 {
        match self {
            // m = density * n * (n - 1) ordered pairs, so 4/(n-1) lands
            // near four edges per vertex.
            Regime::Sparse => (4.0 / (n.max(2) - 1) as f64).min(1.0),
            Regime::Dense => 0.5,
            Regime::Both => unreachable!("expanded before use"),
        }
    }

    fn stream(self) -> u64 {
        match self {
            Regime::Sparse => 1,
            Regime::Dense => 2,
            Regime::Both => unreachable!("expanded before use"),
        }
    }
}

fn generate(n: usize, regime: Regime, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((n as u64) << 8 | regime.stream());
    let spec = GraphSpec {
        n,
        density: regime.density(n),
        weight_min: 1,
        weight_max: 100,
    };
    random_graph(&spec, &mut rng)
}

fn median_ns(samples: &mut [u128]) -> u128 {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

fn time_algo(algo: Algo, g: &Graph, reps: usize) -> u128 {
    black_box(algo.run(black_box(g)));
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        black_box(algo.run(black_box(g)));
        samples.push(start.elapsed().as_nanos());
    }
    median_ns(&mut samples)
}

pub fn run(args: &BenchArgs) -> u8 {
    let mut sizes = Vec::new();
    for tok in args.sizes.split(',') {
        match tok.trim().parse::<usize>() {
            Ok(n) if n >= 1 => sizes.push(n),
            _ => {
                eprintln!("error: bad size {tok:?}");
                return EXIT_INPUT;
            }
        }
    }
    if args.reps == 0 {
        eprintln!("error: reps must be at least 1");
        return EXIT_INPUT;
    }
    let algos = if args.algo.is_empty() {
        vec![Algo::Kij, Algo::Ijk, Algo::Sparse]
    } else {
        let mut a = args.algo.clone();
        a.sort();
        a.dedup();
        a
    };
    let mut csv = String::from("algo,n,m,median_ns,reps\n");
    for &n in &sizes {
        for &regime in args.regime.expand() {
            let g = generate(n, regime, args.seed);
            for &algo in &algos {
                let ns = time_algo(algo, &g, args.reps);
                csv.push_str(&format!(
                    "{},{},{},{},{}\n",
                    algo.label(),
                    n,
                    g.edges().len(),
                    ns,
                    args.reps
                ));
            }
        }
    }
    match write_output(&args.output, &csv) {
        Ok(()) => 0,
        Err(code) => code,
    }
}
