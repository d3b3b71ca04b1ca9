use crate::graph::DistMatrix;
use crate::weight::Weight;

/// One relaxation instruction: `A[i][j] = min(A[i][j], A[i][k] + A[k][j])`.
/// Components are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// A finite sequence of relaxation triples over vertices `0..n`. The two
/// canonical loop orders are stored symbolically, so positions and lookups
/// cost O(1) and no n^3 buffer is materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelaxSequence {
    /// Pivot-outermost order: position p = k * n^2 + i * n + j.
    Kij { n: usize },
    /// Pivot-innermost order: position p = i * n^2 + j * n + k.
    Ijk { n: usize },
    /// An arbitrary explicit sequence; every component must be below n.
    Explicit { n: usize, triples: Vec<Triple> },
}

impl RelaxSequence {
    pub fn kij(n: usize) -> RelaxSequence {
        RelaxSequence::Kij { n }
    }

    pub fn ijk(n: usize) -> RelaxSequence {
        RelaxSequence::Ijk { n }
    }

    pub fn explicit(n: usize, triples: Vec<Triple>) -> RelaxSequence {
        for t in &triples {
            assert!(
                t.i < n && t.j < n && t.k < n,
                "triple ({}, {}, {}) outside vertex range 0..{n}",
                t.i,
                t.j,
                t.k
            );
        }
        RelaxSequence::Explicit { n, triples }
    }

    pub fn n(&self) -> usize {
        match *self {
            RelaxSequence::Kij { n }
            | RelaxSequence::Ijk { n }
            | RelaxSequence::Explicit { n, .. } => n,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            RelaxSequence::Kij { n } | RelaxSequence::Ijk { n } => n * n * n,
            RelaxSequence::Explicit { triples, .. } => triples.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The triple at 0-based position `idx`.
    pub fn triple_at(&self, idx: usize) -> Triple {
        match self {
            RelaxSequence::Kij { n } => {
                let (k, r) = (idx / (n * n), idx % (n * n));
                Triple {
                    i: r / n,
                    j: r % n,
                    k,
                }
            }
            RelaxSequence::Ijk { n } => {
                let (i, r) = (idx / (n * n), idx % (n * n));
                Triple {
                    i,
                    j: r / n,
                    k: r % n,
                }
            }
            RelaxSequence::Explicit { triples, .. } => triples[idx],
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Triple> + '_ {
        (0..self.len()).map(move |idx| self.triple_at(idx))
    }

    /// First position >= `lb` holding `t`, if any. O(1) for the canonical
    /// orders (each triple occurs exactly once); linear scan for explicit
    /// sequences, which only appear at small scale.
    pub fn first_occurrence_at_or_after(&self, t: Triple, lb: usize) -> Option<usize> {
        let n = self.n();
        if t.i >= n || t.j >= n || t.k >= n {
            return None;
        }
        match self {
            RelaxSequence::Kij { n } => {
                let pos = t.k * n * n + t.i * n + t.j;
                (pos >= lb).then_some(pos)
            }
            RelaxSequence::Ijk { n } => {
                let pos = t.i * n * n + t.j * n + t.k;
                (pos >= lb).then_some(pos)
            }
            RelaxSequence::Explicit { triples, .. } => triples
                .iter()
                .skip(lb)
                .position(|&x| x == t)
                .map(|off| lb + off),
        }
    }
}

/// Apply every triple of `seq` to a copy of `a`, in order.
pub fn run_relaxation(a: &DistMatrix, seq: &RelaxSequence) -> DistMatrix {
    run_relaxation_prefix(a, seq, seq.len())
}

/// Apply only the first `prefix_len` triples of `seq`.
pub fn run_relaxation_prefix(a: &DistMatrix, seq: &RelaxSequence, prefix_len: usize) -> DistMatrix {
    assert!(
        a.has_zero_diagonal(),
        "relaxation input must have a zero diagonal"
    );
    assert!(seq.n() <= a.n(), "sequence vertex range exceeds the matrix");
    assert!(
        prefix_len <= seq.len(),
        "prefix length exceeds the sequence"
    );
    let mut m = a.clone();
    for idx in 0..prefix_len {
        let Triple { i, j, k } = seq.triple_at(idx);
        let (Weight::Finite(x), Weight::Finite(y)) = (m.get(i, k), m.get(k, j)) else {
            continue;
        };
        let cand = Weight::Finite(x + y);
        if cand < m.get(i, j) {
            m.set(i, j, cand);
        }
    }
    m
}

/// Correct all-pairs shortest paths: Floyd-Warshall with the pivot loop
/// outermost. Equals `run_relaxation(a, T_kij)` cell-exactly. The input must
/// describe a negative-cycle-free graph.
pub fn apsp_kij(a: &DistMatrix) -> DistMatrix {
    assert!(
        a.has_zero_diagonal(),
        "relaxation input must have a zero diagonal"
    );
    let n = a.n();
    let mut m = a.clone();
    for k in 0..n {
        for i in 0..n {
            // Cell (i, k) cannot improve while pivoting on k, so hoist it.
            let Weight::Finite(dik) = m.get(i, k) else {
                continue;
            };
            for j in 0..n {
                let Weight::Finite(dkj) = m.get(k, j) else {
                    continue;
                };
                let cand = Weight::Finite(dik + dkj);
                if cand < m.get(i, j) {
                    m.set(i, j, cand);
                }
            }
        }
    }
    m
}

/// The loop-swapped variant: pivot loop innermost. Equals
/// `run_relaxation(a, T_ijk)` cell-exactly.
pub fn incorrect_apsp_ijk(a: &DistMatrix) -> DistMatrix {
    assert!(
        a.has_zero_diagonal(),
        "relaxation input must have a zero diagonal"
    );
    let n = a.n();
    let mut m = a.clone();
    for i in 0..n {
        for j in 0..n {
            // Within one (i, j) pass the only writable cell is (i, j) itself,
            // and it is read back only as min(best, best + 0), so a local
            // accumulator matches the in-place update exactly.
            let mut best = m.get(i, j);
            for k in 0..n {
                let (Weight::Finite(x), Weight::Finite(y)) = (m.get(i, k), m.get(k, j)) else {
                    continue;
                };
                let cand = Weight::Finite(x + y);
                if cand < best {
                    best = cand;
                }
            }
            m.set(i, j, best);
        }
    }
    m
}

/// Three passes of the swapped variant. By the time the third pass finishes
/// the matrix has converged to correct all-pairs shortest paths.
pub fn triple_ijk(a: &DistMatrix) -> DistMatrix {
    let once = incorrect_apsp_ijk(a);
    let twice = incorrect_apsp_ijk(&once);
    incorrect_apsp_ijk(&twice)
}
