use std::fmt;

use incorrect_apsp::{DistMatrix, Graph};

use crate::Algo;

/// First cell where two matrices disagree, reported 1-based.
#[derive(Debug)]
pub struct MismatchReport {
    pub left: &'static str,
    pub right: &'static str,
    pub i: usize,
    pub j: usize,
    pub left_value: String,
    pub right_value: String,
}

impl fmt::Display for MismatchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mismatch at cell ({}, {}): {}={} vs {}={}",
            self.i + 1,
            self.j + 1,
            self.left,
            self.left_value,
            self.right,
            self.right_value
        )
    }
}

pub fn compare(
    left: (&'static str, &DistMatrix),
    right: (&'static str, &DistMatrix),
) -> Result<(), MismatchReport> {
    let n = left.1.n();
    assert_eq!(n, right.1.n(), "matrices of different order");
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (left.1.get(i, j), right.1.get(i, j));
            if a != b {
                return Err(MismatchReport {
                    left: left.0,
                    right: right.0,
                    i,
                    j,
                    left_value: a.to_string(),
                    right_value: b.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Run the selected algorithms and compare within their equality classes:
/// the variant solvers (ijk, sparse, minplus) must agree with each other,
/// and triple-ijk must agree with kij. Returns one summary line per class
/// that had at least two members.
pub fn run(g: &Graph, algos: &[Algo]) -> Result<Vec<String>, MismatchReport> {
    let mut selected: Vec<Algo> = algos.to_vec();
    selected.sort();
    selected.dedup();
    let variant: Vec<Algo> = selected
        .iter()
        .copied()
        .filter(|a| matches!(a, Algo::Ijk | Algo::Sparse | Algo::Minplus))
        .collect();
    let correct: Vec<Algo> = selected
        .iter()
        .copied()
        .filter(|a| matches!(a, Algo::Kij | Algo::TripleIjk))
        .collect();
    let mut lines = Vec::new();
    for group in [variant, correct] {
        if group.len() < 2 {
            continue;
        }
        let base = group[0].run(g);
        for &other in &group[1..] {
            compare((group[0].label(), &base), (other.label(), &other.run(g)))?;
        }
        let labels: Vec<&str> = group.iter().map(|a| a.label()).collect();
        lines.push(format!("agree: {}", labels.join(" == ")));
    }
    Ok(lines)
}
