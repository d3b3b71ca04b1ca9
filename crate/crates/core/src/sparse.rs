use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::graph::{DistMatrix, Graph};
use crate::weight::Weight;

/// Single-source shortest-path backend.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SsspEngine {
    /// Dijkstra when the graph has no negative edge, Bellman-Ford otherwise.
    #[default]
    Auto,
    /// Binary-heap Dijkstra. Panics if the graph has a negative edge.
    Dijkstra,
    /// Bellman-Ford with early exit. Panics if a relaxation pass after the
    /// (n - 1)-th still improves, which means a reachable negative cycle.
    BellmanFord,
}

/// Distances from one source; unreachable vertices hold infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsspResult {
    pub source: usize,
    pub dist: Vec<Weight>,
}

/// Single-source shortest paths over the graph's full edge set.
pub fn sssp(g: &Graph, source: usize, engine: SsspEngine) -> SsspResult {
    assert!(source < g.n(), "source out of range");
    let use_dijkstra = match engine {
        SsspEngine::Auto => !g.has_negative_edge(),
        SsspEngine::Dijkstra => {
            assert!(
                !g.has_negative_edge(),
                "Dijkstra requires nonnegative edge weights"
            );
            true
        }
        SsspEngine::BellmanFord => false,
    };
    let dist = if use_dijkstra {
        dijkstra(g, source)
    } else {
        bellman_ford(g, source)
    };
    SsspResult { source, dist }
}

fn dijkstra(g: &Graph, source: usize) -> Vec<Weight> {
    let n = g.n();
    let mut dist = vec![Weight::Infinity; n];
    dist[source] = Weight::ZERO;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if dist[u] != Weight::Finite(d) {
            continue;
        }
        for &(v, w) in g.out_edges(u) {
            let cand = d + w;
            if Weight::Finite(cand) < dist[v] {
                dist[v] = Weight::Finite(cand);
                heap.push(Reverse((cand, v)));
            }
        }
    }
    dist
}

fn bellman_ford(g: &Graph, source: usize) -> Vec<Weight> {
    let n = g.n();
    let mut dist = vec![Weight::Infinity; n];
    dist[source] = Weight::ZERO;
    let mut converged = false;
    for _ in 1..n {
        let mut improved = false;
        for e in g.edges() {
            let Weight::Finite(d) = dist[e.from] else {
                continue;
            };
            let cand = Weight::Finite(d + e.weight);
            if cand < dist[e.to] {
                dist[e.to] = cand;
                improved = true;
            }
        }
        if !improved {
            converged = true;
            break;
        }
    }
    if !converged {
        for e in g.edges() {
            let Weight::Finite(d) = dist[e.from] else {
                continue;
            };
            assert!(
                Weight::Finite(d + e.weight) >= dist[e.to],
                "negative cycle reachable from vertex {source}; validate the input first"
            );
        }
    }
    dist
}

/// The subgraph keeping only edges with an endpoint at or below `pivot`
/// (0-based): exactly the edges a pivot-ordered prefix may relax.
pub fn restricted_graph(g: &Graph, pivot: usize) -> Graph {
    let edges = g
        .edges()
        .iter()
        .filter(|e| e.from <= pivot || e.to <= pivot)
        .map(|e| (e.from, e.to, e.weight))
        .collect();
    Graph::new(g.n(), edges, g.weight_bound()).expect("subgraph of a valid graph")
}

/// Statistics from one sparse-solver run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SparseStats {
    /// Total SSSP invocations; always exactly 2n (one per source per
    /// direction).
    pub sssp_calls: usize,
}

/// Output cells `(source, j)` for `j >= source`, as a vector indexed by
/// `j - source`. Three stages: shortest paths in the restricted graph, one
/// full-edge relaxation sweep, then an ascending dynamic program over
/// in-edges whose tail lies in `[source, j)`.
pub fn solve_row_block(g: &Graph, source: usize, engine: SsspEngine) -> Vec<Weight> {
    solve_row_block_counted(g, source, engine, None)
}

fn solve_row_block_counted(
    g: &Graph,
    source: usize,
    engine: SsspEngine,
    calls: Option<&AtomicUsize>,
) -> Vec<Weight> {
    let n = g.n();
    let restricted = restricted_graph(g, source);
    if let Some(c) = calls {
        c.fetch_add(1, Ordering::Relaxed);
    }
    let except_last = sssp(&restricted, source, engine).dist;
    let mut best = except_last.clone();
    for e in g.edges() {
        let Weight::Finite(d) = except_last[e.from] else {
            continue;
        };
        let cand = Weight::Finite(d + e.weight);
        if cand < best[e.to] {
            best[e.to] = cand;
        }
    }
    let mut row = vec![Weight::Infinity; n];
    for j in source..n {
        let mut cell = best[j];
        for &(k, w) in g.in_edges(j) {
            if k >= source && k < j {
                if let Weight::Finite(d) = row[k] {
                    let cand = Weight::Finite(d + w);
                    if cand < cell {
                        cell = cand;
                    }
                }
            }
        }
        row[j] = cell;
    }
    row.drain(..source);
    row
}

/// The loop-swapped variant's matrix via per-source SSSP runs: upper-right
/// cells from the graph itself, lower-left cells from the reversed graph
/// transposed back. Row blocks are independent and run in parallel.
pub fn incorrect_apsp_sparse(g: &Graph) -> DistMatrix {
    incorrect_apsp_sparse_with(g, SsspEngine::Auto).0
}

pub fn incorrect_apsp_sparse_with(g: &Graph, engine: SsspEngine) -> (DistMatrix, SparseStats) {
    let n = g.n();
    let calls = AtomicUsize::new(0);
    let forward: Vec<Vec<Weight>> = (0..n)
        .into_par_iter()
        .map(|i| solve_row_block_counted(g, i, engine, Some(&calls)))
        .collect();
    let reversed = g.reversed();
    let backward: Vec<Vec<Weight>> = (0..n)
        .into_par_iter()
        .map(|i| solve_row_block_counted(&reversed, i, engine, Some(&calls)))
        .collect();
    let mut m = DistMatrix::identity(n);
    for (i, block) in forward.iter().enumerate() {
        for (off, &w) in block.iter().enumerate() {
            m.set(i, i + off, w);
        }
    }
    for (i, block) in backward.iter().enumerate() {
        for (off, &w) in block.iter().enumerate() {
            if off > 0 {
                m.set(i + off, i, w);
            }
        }
    }
    (
        m,
        SparseStats {
            sssp_calls: calls.load(Ordering::Relaxed),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, Edge, InputFormat};
    use crate::relax::incorrect_apsp_ijk;

    const GOLDEN: &str = "4 3\n2 4 1\n3 1 1\n4 3 1\n";
    const M2_TEXT: &str = "4\n0 inf inf inf\ninf 0 2 1\n1 inf 0 inf\n2 inf 1 0\n";

    fn golden() -> Graph {
        parse_graph(GOLDEN, InputFormat::EdgeList).unwrap()
    }

    #[test]
    fn sssp_golden_source() {
        let d = sssp(&golden(), 3, SsspEngine::Auto).dist;
        assert_eq!(
            d,
            vec![
                Weight::Finite(2),
                Weight::Infinity,
                Weight::Finite(1),
                Weight::ZERO
            ]
        );
    }

    #[test]
    fn sssp_handles_negative_chains() {
        let g = Graph::new(3, vec![(0, 1, -1), (1, 2, -1)], 1).unwrap();
        let d = sssp(&g, 0, SsspEngine::Auto).dist;
        assert_eq!(
            d,
            vec![Weight::ZERO, Weight::Finite(-1), Weight::Finite(-2)]
        );
    }

    #[test]
    fn sssp_engines_agree_on_nonnegative_graphs() {
        let g = parse_graph(
            "5 6\n1 2 4\n2 3 1\n3 1 2\n3 5 9\n4 5 0\n1 5 12\n",
            InputFormat::EdgeList,
        )
        .unwrap();
        for s in 0..5 {
            let a = sssp(&g, s, SsspEngine::Dijkstra);
            let b = sssp(&g, s, SsspEngine::BellmanFord);
            assert_eq!(a, b, "source {s}");
        }
    }

    #[test]
    #[should_panic(expected = "nonnegative")]
    fn dijkstra_refuses_negative_edges() {
        let g = Graph::new(2, vec![(0, 1, -1)], 1).unwrap();
        sssp(&g, 0, SsspEngine::Dijkstra);
    }

    #[test]
    #[should_panic(expected = "negative cycle")]
    fn bellman_ford_panics_on_reachable_negative_cycle() {
        let g = Graph::new(2, vec![(0, 1, -3), (1, 0, 2)], 3).unwrap();
        sssp(&g, 0, SsspEngine::BellmanFord);
    }

    #[test]
    fn sssp_triangle_inequality_over_edges() {
        let g = golden();
        for s in 0..g.n() {
            let d = sssp(&g, s, SsspEngine::Auto).dist;
            assert_eq!(d[s], Weight::ZERO);
            for e in g.edges() {
                assert!(d[e.to] <= d[e.from] + Weight::Finite(e.weight));
            }
        }
    }

    #[test]
    fn restriction_with_top_pivot_is_identity() {
        let g = golden();
        assert_eq!(restricted_graph(&g, g.n() - 1), g);
    }

    #[test]
    fn restriction_keeps_edges_touching_low_vertices() {
        // Golden graph, pivot vertex 2 (1-based): edges (2,4) and (3,1) stay.
        let r = restricted_graph(&golden(), 1);
        assert_eq!(
            r.edges(),
            &[
                Edge {
                    from: 1,
                    to: 3,
                    weight: 1
                },
                Edge {
                    from: 2,
                    to: 0,
                    weight: 1
                }
            ]
        );

        let mut complete = Vec::new();
        for u in 0..3 {
            for v in 0..3 {
                if u != v {
                    complete.push((u, v, 1));
                }
            }
        }
        let g = Graph::new(3, complete, 1).unwrap();
        let r = restricted_graph(&g, 0);
        assert_eq!(r.edges().len(), 4);
        assert!(r.edges().iter().all(|e| e.from == 0 || e.to == 0));
    }

    #[test]
    fn row_block_golden_source_two() {
        // 0-based source 1: cells (2,2), (2,3), (2,4) in 1-based terms.
        let block = solve_row_block(&golden(), 1, SsspEngine::Auto);
        assert_eq!(
            block,
            vec![Weight::ZERO, Weight::Finite(2), Weight::Finite(1)]
        );
    }

    #[test]
    fn row_block_on_edgeless_graph() {
        let g = Graph::new(3, vec![], 0).unwrap();
        let block = solve_row_block(&g, 0, SsspEngine::Auto);
        assert_eq!(
            block,
            vec![Weight::ZERO, Weight::Infinity, Weight::Infinity]
        );
    }

    #[test]
    fn row_blocks_match_the_direct_variant_rows() {
        let g = parse_graph(
            "6 8\n1 3 2\n3 2 5\n2 6 1\n4 1 7\n5 4 1\n6 5 3\n2 4 2\n1 6 9\n",
            InputFormat::EdgeList,
        )
        .unwrap();
        let m = incorrect_apsp_ijk(&g.adjacency_matrix());
        for i in 0..g.n() {
            let block = solve_row_block(&g, i, SsspEngine::Auto);
            for (off, &w) in block.iter().enumerate() {
                assert_eq!(w, m.get(i, i + off), "cell ({i}, {})", i + off);
            }
        }
    }

    #[test]
    fn sparse_solver_matches_golden_matrix() {
        let (m, stats) = incorrect_apsp_sparse_with(&golden(), SsspEngine::Auto);
        assert_eq!(m.to_string(), M2_TEXT);
        assert_eq!(stats.sssp_calls, 8);
    }

    #[test]
    fn sparse_solver_on_ascending_dag() {
        // All edges go low -> high: the upper half must match correct APSP
        // and every below-diagonal cell stays infinite.
        let g = parse_graph(
            "5 5\n1 2 3\n2 3 1\n1 4 10\n3 5 2\n2 5 9\n",
            InputFormat::EdgeList,
        )
        .unwrap();
        let m = incorrect_apsp_sparse(&g);
        let apsp = crate::relax::apsp_kij(&g.adjacency_matrix());
        for i in 0..5 {
            for j in 0..5 {
                if i <= j {
                    assert_eq!(m.get(i, j), apsp.get(i, j));
                } else {
                    assert_eq!(m.get(i, j), Weight::Infinity);
                }
            }
        }
    }

    #[test]
    fn sparse_solver_single_vertex() {
        let g = Graph::new(1, vec![], 0).unwrap();
        assert_eq!(incorrect_apsp_sparse(&g).to_string(), "1\n0\n");
    }
}
