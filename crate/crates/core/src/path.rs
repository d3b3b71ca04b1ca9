use crate::error::Error;
use crate::graph::{DistMatrix, Graph};
use crate::relax::{RelaxSequence, Triple};
use crate::weight::Weight;

/// Exhaustive simple-path enumeration is exponential; refuse graphs larger
/// than this.
pub const MAX_ENUMERATION_VERTICES: usize = 10;

/// The recursive realization check memoizes over vertex pairs but scans
/// interior splits, so cap the path length.
pub const MAX_REALIZATION_VERTICES: usize = 12;

/// A simple directed path: at least one vertex, all vertices distinct.
/// Vertex ids are 0-based; their numeric order is semantically meaningful
/// to every predicate here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPath {
    verts: Vec<usize>,
}

impl VertexPath {
    pub fn new(verts: Vec<usize>) -> Result<VertexPath, Error> {
        if verts.is_empty() {
            return Err(Error::EmptyPath);
        }
        let mut seen = verts.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NonSimplePath);
        }
        Ok(VertexPath { verts })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    /// Number of edges, k >= 0.
    pub fn len_edges(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn reversed(&self) -> VertexPath {
        let mut verts = self.verts.clone();
        verts.reverse();
        VertexPath { verts }
    }

    /// Vertex ids strictly increase along the path.
    pub fn is_increasing(&self) -> bool {
        increasing(&self.verts)
    }

    /// Vertex ids strictly decrease along the path.
    pub fn is_decreasing(&self) -> bool {
        decreasing(&self.verts)
    }

    /// Every interior vertex is at most min(endpoints).
    pub fn is_valley(&self) -> bool {
        valley(&self.verts)
    }

    /// No two consecutive interior vertices p_i, p_{i+1} with i in [1, k-2]
    /// both exceed min(endpoints); the final edge is exempt.
    pub fn is_proper(&self) -> bool {
        proper(&self.verts)
    }

    /// Closed-form test for realization by the pivot-innermost canonical
    /// sequence over any vertex range containing the path: true iff k <= 1,
    /// or the path splits at some junction x with id >= the smaller endpoint
    /// into a proper prefix plus increasing suffix (when p_0 < p_k) or a
    /// decreasing prefix plus proper suffix (when p_0 > p_k).
    pub fn is_realized(&self) -> bool {
        realized(&self.verts)
    }
}

fn increasing(vs: &[usize]) -> bool {
    vs.windows(2).all(|w| w[0] < w[1])
}

fn decreasing(vs: &[usize]) -> bool {
    vs.windows(2).all(|w| w[0] > w[1])
}

fn valley(vs: &[usize]) -> bool {
    if vs.len() <= 2 {
        return true;
    }
    let bound = vs[0].min(vs[vs.len() - 1]);
    vs[1..vs.len() - 1].iter().all(|&p| p <= bound)
}

fn proper(vs: &[usize]) -> bool {
    let k = vs.len() - 1;
    if k <= 2 {
        return true;
    }
    let bound = vs[0].min(vs[k]);
    // Pairs (p_i, p_{i+1}) for i in [1, k-2]; the pair ending at p_k is
    // deliberately out of range.
    (1..=k - 2).all(|i| vs[i] <= bound || vs[i + 1] <= bound)
}

fn realized(vs: &[usize]) -> bool {
    let k = vs.len() - 1;
    if k <= 1 {
        return true;
    }
    let (s, t) = (vs[0], vs[k]);
    if s < t {
        (0..=k).any(|x| vs[x] >= s && proper(&vs[..=x]) && increasing(&vs[x..]))
    } else {
        (0..=k).any(|x| vs[x] >= t && decreasing(&vs[..=x]) && proper(&vs[x..]))
    }
}

/// Evaluate realization directly from the recursive definition: a path of
/// k >= 2 edges is realized by a prefix of `seq` iff some triple
/// (p_0, p_k, p_x) sits at a position d whose preceding prefix realizes both
/// halves. Computes the minimal realizing prefix length per subpath, which
/// is well-defined because realization is monotone in the prefix.
pub fn realized_by_sequence(p: &VertexPath, seq: &RelaxSequence) -> Result<bool, Error> {
    let vs = p.vertices();
    if vs.len() > MAX_REALIZATION_VERTICES {
        return Err(Error::RealizationGuard {
            len: vs.len(),
            limit: MAX_REALIZATION_VERTICES,
        });
    }
    let m = p.len_edges();
    if m <= 1 {
        return Ok(true);
    }
    // min_len[s][e]: minimal prefix length realizing vs[s..=e], None if no
    // prefix of seq does.
    let mut min_len = vec![vec![None::<usize>; vs.len()]; vs.len()];
    for s in 0..vs.len() {
        min_len[s][s] = Some(0);
        if s + 1 < vs.len() {
            min_len[s][s + 1] = Some(0);
        }
    }
    for span in 2..=m {
        for s in 0..=m - span {
            let e = s + span;
            let mut best: Option<usize> = None;
            for x in s + 1..e {
                let (Some(l1), Some(l2)) = (min_len[s][x], min_len[x][e]) else {
                    continue;
                };
                let t = Triple {
                    i: vs[s],
                    j: vs[e],
                    k: vs[x],
                };
                if let Some(pos) = seq.first_occurrence_at_or_after(t, l1.max(l2)) {
                    let need = pos + 1;
                    if best.map_or(true, |b| need < b) {
                        best = Some(need);
                    }
                }
            }
            min_len[s][e] = best;
        }
    }
    Ok(min_len[0][m].is_some_and(|l| l <= seq.len()))
}

/// Visit every simple path from `from` to `to` in the dense graph described
/// by `a` (finite off-diagonal cells are edges), passing the vertex slice and
/// total weight. When `from == to` only the trivial single-vertex path of
/// weight zero is visited.
pub fn for_each_simple_path<F: FnMut(&[usize], i64)>(
    a: &DistMatrix,
    from: usize,
    to: usize,
    visit: &mut F,
) -> Result<(), Error> {
    let n = a.n();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::EnumerationGuard {
            n,
            limit: MAX_ENUMERATION_VERTICES,
        });
    }
    assert!(from < n && to < n, "path endpoints out of range");
    let mut on_path = vec![false; n];
    on_path[from] = true;
    let mut stack = vec![from];
    dfs(a, to, &mut stack, &mut on_path, 0, visit);
    Ok(())
}

fn dfs<F: FnMut(&[usize], i64)>(
    a: &DistMatrix,
    to: usize,
    stack: &mut Vec<usize>,
    on_path: &mut [bool],
    acc: i64,
    visit: &mut F,
) {
    let u = *stack.last().unwrap();
    if u == to {
        // A simple path cannot leave its own terminus and return.
        visit(stack, acc);
        return;
    }
    for v in 0..a.n() {
        if v == u || on_path[v] {
            continue;
        }
        let Weight::Finite(w) = a.get(u, v) else {
            continue;
        };
        on_path[v] = true;
        stack.push(v);
        dfs(a, to, stack, on_path, acc + w, visit);
        stack.pop();
        on_path[v] = false;
    }
}

/// Reference value for one output cell: the minimum weight over simple
/// `from -> to` paths whose vertex sequence satisfies the realization
/// characterization. Exponential; guarded by [`MAX_ENUMERATION_VERTICES`].
pub fn oracle_min_realized(g: &Graph, from: usize, to: usize) -> Result<Weight, Error> {
    let a = g.adjacency_matrix();
    let mut best = Weight::Infinity;
    for_each_simple_path(&a, from, to, &mut |vs, w| {
        if realized(vs) {
            best = best.min(Weight::Finite(w));
        }
    })?;
    Ok(best)
}
