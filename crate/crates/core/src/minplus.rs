use crate::graph::{DistMatrix, Graph};
use crate::weight::Weight;

/// Product count bookkeeping for one run of the oracle reduction. For an
/// n-vertex input each orientation makes exactly 2 * ceil(log2 n) + 1 oracle
/// calls and 2 * ceil(log2 n) + 2 min-plus products.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OracleStats {
    pub apsp_calls: usize,
    pub minplus_calls: usize,
}

/// Min-plus matrix product, C[i][j] = min_k (A[i][k] + B[k][j]). The right
/// operand is transposed up front so the inner loop walks two contiguous
/// rows, and cells are flattened to plain i64 with an infinity sentinel so
/// the hot loop compares and adds machine words instead of enum values.
pub fn minplus(a: &DistMatrix, b: &DistMatrix) -> DistMatrix {
    // Finite sums stay under the sentinel: magnitudes are capped at W_MAX
    // by ingestion, and 2 * W_MAX < i64::MAX.
    const INF: i64 = i64::MAX;
    let raw = |w: Weight| match w {
        Weight::Finite(x) => x,
        Weight::Infinity => INF,
    };
    let n = a.n();
    assert_eq!(n, b.n(), "operand dimensions differ");
    let mut af = Vec::with_capacity(n * n);
    for i in 0..n {
        af.extend(a.row(i).iter().map(|&w| raw(w)));
    }
    let mut bt = vec![INF; n * n];
    for k in 0..n {
        let brow = b.row(k);
        for j in 0..n {
            bt[j * n + k] = raw(brow[j]);
        }
    }
    let mut cells = Vec::with_capacity(n * n);
    for arow in af.chunks_exact(n.max(1)) {
        for bcol in bt.chunks_exact(n.max(1)) {
            let mut best = INF;
            for (&x, &y) in arow.iter().zip(bcol) {
                if x == INF || y == INF {
                    continue;
                }
                let cand = x + y;
                if cand < best {
                    best = cand;
                }
            }
            cells.push(if best == INF {
                Weight::Infinity
            } else {
                Weight::Finite(best)
            });
        }
    }
    DistMatrix::from_cells(n, cells)
}

/// Textbook triple loop over the untransposed operands. Slower on large
/// inputs but obviously correct; the kernels must agree cell-exactly.
pub fn minplus_naive(a: &DistMatrix, b: &DistMatrix) -> DistMatrix {
    let n = a.n();
    assert_eq!(n, b.n(), "operand dimensions differ");
    let mut out = DistMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let mut best = Weight::Infinity;
            for k in 0..n {
                let (Weight::Finite(x), Weight::Finite(y)) = (a.get(i, k), b.get(k, j)) else {
                    continue;
                };
                let cand = Weight::Finite(x + y);
                if cand < best {
                    best = cand;
                }
            }
            out.set(i, j, best);
        }
    }
    out
}

/// Adjacency matrix of the graph square: cell (i, j) is the cheapest way to
/// go i -> j using at most two edges. Requires a zero diagonal.
pub fn graph_square(a: &DistMatrix) -> DistMatrix {
    assert!(
        a.has_zero_diagonal(),
        "graph square input must have a zero diagonal"
    );
    minplus(a, a)
}

/// Copy with every strictly-above-diagonal cell erased to infinity: keeps
/// walks whose endpoints never ascend.
pub fn mask_descending(v: &DistMatrix) -> DistMatrix {
    let n = v.n();
    let mut out = v.clone();
    for i in 0..n {
        for j in i + 1..n {
            out.set(i, j, Weight::Infinity);
        }
    }
    out
}

/// Copy with every strictly-below-diagonal cell erased to infinity.
pub fn mask_ascending(v: &DistMatrix) -> DistMatrix {
    let n = v.n();
    let mut out = v.clone();
    for i in 0..n {
        for j in 0..i {
            out.set(i, j, Weight::Infinity);
        }
    }
    out
}

fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        ((n - 1).ilog2() + 1) as usize
    }
}

fn assert_clean_diagonal(m: &DistMatrix) {
    for i in 0..m.n() {
        assert!(
            m.get(i, i) >= Weight::ZERO,
            "negative diagonal cell ({i}, {i}): the input graph has a negative cycle; validate the input first"
        );
    }
}

/// Minimum weight over valley walks in the square graph, computed by
/// repeated doubling: each round closes descending and ascending runs
/// through the oracle, joins them at the low point, and appends one hop
/// from the previous round. After ceil(log2 n) rounds every at-or-above-
/// diagonal cell (i, j) holds the exact minimum over i -> j walks whose
/// interior vertices all lie at or below min(i, j).
///
/// Keeping only at-or-below-diagonal cells of the join before the final
/// product is what pins every interior of the composite under the row
/// index. A plain descending-times-ascending closure admits ascending
/// junction runs that climb past the row index, which can undercut the
/// true valley minimum; below-diagonal cells of the result carry that
/// looser class, so consumers must read the upper triangle only.
pub fn valley_closure<F>(a: &DistMatrix, oracle: &mut F) -> (DistMatrix, OracleStats)
where
    F: FnMut(&DistMatrix) -> DistMatrix,
{
    let n = a.n();
    let mut stats = OracleStats::default();
    let mut v = graph_square(a);
    stats.minplus_calls += 1;
    for _ in 0..ceil_log2(n) {
        // The masks preserve the diagonal, so a dirty one must be caught
        // before it reaches the oracle.
        assert_clean_diagonal(&v);
        let desc = oracle(&mask_descending(&v));
        stats.apsp_calls += 1;
        assert_clean_diagonal(&desc);
        let asc = oracle(&mask_ascending(&v));
        stats.apsp_calls += 1;
        assert_clean_diagonal(&asc);
        // Down-then-up joins whose landing site stays at or below the row
        // index keep every junction under it; the trailing factor supplies
        // the one hop that may rise back above.
        let joined = mask_descending(&minplus(&desc, &asc));
        v = minplus(&joined, &v);
        stats.minplus_calls += 2;
    }
    assert_clean_diagonal(&v);
    (v, stats)
}

fn ascending_edge_adjacency(g: &Graph) -> DistMatrix {
    let mut m = DistMatrix::identity(g.n());
    for e in g.edges() {
        if e.from < e.to {
            m.set(e.from, e.to, Weight::Finite(e.weight));
        }
    }
    m
}

fn upper_half<F>(g: &Graph, oracle: &mut F) -> (DistMatrix, OracleStats)
where
    F: FnMut(&DistMatrix) -> DistMatrix,
{
    let a = g.adjacency_matrix();
    let (valley, mut stats) = valley_closure(&a, oracle);
    let ascending = oracle(&ascending_edge_adjacency(g));
    stats.apsp_calls += 1;
    assert_clean_diagonal(&ascending);
    // Only at-or-above-diagonal valley cells are exact, and the junction
    // between the valley prefix and the increasing suffix must not sit
    // below the source anyway, so the mask loses nothing.
    let answer = minplus(&mask_ascending(&valley), &ascending);
    stats.minplus_calls += 1;
    (answer, stats)
}

/// The loop-swapped variant's matrix by reduction to a correct-APSP oracle:
/// upper-right cells split each path into a valley prefix and an increasing
/// suffix; lower-left cells come from the reversed graph transposed back.
/// Stats are returned per orientation (forward, reversed).
pub fn incorrect_apsp_minplus<F>(g: &Graph, mut oracle: F) -> (DistMatrix, [OracleStats; 2])
where
    F: FnMut(&DistMatrix) -> DistMatrix,
{
    let n = g.n();
    let (up, fwd_stats) = upper_half(g, &mut oracle);
    let (down, rev_stats) = upper_half(&g.reversed(), &mut oracle);
    let mut m = DistMatrix::identity(n);
    for i in 0..n {
        for j in i..n {
            m.set(i, j, up.get(i, j));
        }
        for j in i + 1..n {
            m.set(j, i, down.get(i, j));
        }
    }
    (m, [fwd_stats, rev_stats])
}

/// The reduction with the default oracle, pivot-outermost Floyd-Warshall.
pub fn incorrect_apsp_minplus_default(g: &Graph) -> (DistMatrix, [OracleStats; 2]) {
    incorrect_apsp_minplus(g, |a| crate::relax::apsp_kij(a))
}
