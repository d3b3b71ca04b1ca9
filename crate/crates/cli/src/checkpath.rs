use clap::Args;
use incorrect_apsp::path::{realized_by_sequence, VertexPath, MAX_REALIZATION_VERTICES};
use incorrect_apsp::relax::RelaxSequence;

use crate::EXIT_INPUT;

#[derive(Args)]
pub struct CheckPathArgs {
    /// Comma-separated 1-based vertex ids, e.g. 3,101,1,102,2
    pub path: String,
    /// Vertex-set size; defaults to the largest id on the path
    #[arg(long)]
    pub n: Option<usize>,
}

/// 1-based comma-separated ids to 0-based, rejecting zero and junk.
fn parse_ids(text: &str) -> Result<Vec<usize>, String> {
    let mut ids = Vec::new();
    for tok in text.split(',') {
        match tok.trim().parse::<usize>() {
            Ok(0) => return Err("vertex ids are 1-based; 0 is not a vertex".into()),
            Ok(v) => ids.push(v - 1),
            Err(_) => return Err(format!("bad vertex id {tok:?}")),
        }
    }
    Ok(ids)
}

pub fn run(args: &CheckPathArgs) -> u8 {
    let ids = match parse_ids(&args.path) {
        Ok(ids) => ids,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_INPUT;
        }
    };
    let max_id = ids.iter().max().copied().unwrap_or(0);
    let n = args.n.unwrap_or(max_id + 1);
    if max_id >= n {
        eprintln!("error: vertex {} exceeds n = {n}", max_id + 1);
        return EXIT_INPUT;
    }
    let p = match VertexPath::new(ids) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let shown: Vec<String> = p.vertices().iter().map(|v| (v + 1).to_string()).collect();
    println!("n: {n}");
    println!("path (1-based): {}", shown.join(" -> "));
    println!("increasing: {}", p.is_increasing());
    println!("decreasing: {}", p.is_decreasing());
    println!("valley: {}", p.is_valley());
    println!("proper: {}", p.is_proper());
    println!("realized: {}", p.is_realized());
    if p.vertices().len() <= MAX_REALIZATION_VERTICES {
        let brute =
            realized_by_sequence(&p, &RelaxSequence::ijk(n)).expect("length is inside the guard");
        println!("realized-bruteforce: {brute}");
    } else {
        println!("realized-bruteforce: skipped (more than {MAX_REALIZATION_VERTICES} vertices)");
    }
    0
}
