use std::fmt;
use std::ops::Index;

use crate::error::Error;
use crate::weight::{Weight, W_MAX};

/// A directed edge with 0-based endpoints. Text formats are 1-based; the
/// parsers translate at the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: i64,
}

/// Dense n x n matrix of extended weights, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    cells: Vec<Weight>,
}

impl DistMatrix {
    /// Zero diagonal, infinity elsewhere: the min-plus identity and the
    /// adjacency matrix of the edgeless graph.
    pub fn identity(n: usize) -> DistMatrix {
        let mut cells = vec![Weight::Infinity; n * n];
        for i in 0..n {
            cells[i * n + i] = Weight::ZERO;
        }
        DistMatrix { n, cells }
    }

    pub(crate) fn from_cells(n: usize, cells: Vec<Weight>) -> DistMatrix {
        assert_eq!(cells.len(), n * n);
        DistMatrix { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Weight {
        self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, w: Weight) {
        self.cells[i * self.n + j] = w;
    }

    pub fn row(&self, i: usize) -> &[Weight] {
        &self.cells[i * self.n..(i + 1) * self.n]
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == Weight::ZERO)
    }

    /// Parse the matrix text format: a line holding n, then n rows of n
    /// whitespace-separated tokens (signed decimals or `inf`). Blank lines
    /// are ignored; errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<DistMatrix, Error> {
        let mut lines = nonblank_lines(text);
        let (line_no, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            reason: "missing matrix header line".into(),
        })?;
        let n = parse_header_count(header, line_no, "vertex count")?;
        let mut cells = Vec::with_capacity(n * n);
        for row in 0..n {
            let (line_no, line) = lines.next().ok_or_else(|| Error::Parse {
                line: count_lines(text) + 1,
                reason: format!("expected {n} matrix rows, found {row}"),
            })?;
            let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
            if tokens.len() != n {
                return Err(Error::Parse {
                    line: line_no,
                    reason: format!("expected {n} cells in matrix row, found {}", tokens.len()),
                });
            }
            for tok in tokens {
                let w: Weight = tok.parse().map_err(|e| Error::Parse {
                    line: line_no,
                    reason: format!("{e}"),
                })?;
                cells.push(w);
            }
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Parse {
                line: line_no,
                reason: "trailing content after the last matrix row".into(),
            });
        }
        Ok(DistMatrix { n, cells })
    }
}

impl Index<(usize, usize)> for DistMatrix {
    type Output = Weight;

    fn index(&self, (i, j): (usize, usize)) -> &Weight {
        &self.cells[i * self.n + j]
    }
}

impl fmt::Display for DistMatrix {
    /// The matrix text format, LF line endings, one trailing newline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for DistMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DistMatrix(n={})\n{self}", self.n)
    }
}

/// Text input formats understood by [`parse_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    /// `n m` header, then m lines `u v w` with 1-based endpoints.
    EdgeList,
    /// The matrix format; finite off-diagonal cells become edges.
    Matrix,
}

/// Immutable weighted digraph. Construction canonicalizes the edge list
/// (sorted, one edge per ordered pair keeping the minimum weight, no
/// self-loops) and precomputes both adjacency directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    bound: i64,
    edges: Vec<Edge>,
    out: Vec<Vec<(usize, i64)>>,
    inc: Vec<Vec<(usize, i64)>>,
    has_negative: bool,
}

impl Graph {
    /// Build a graph over vertices `0..n` with a declared magnitude bound.
    /// Duplicate ordered pairs collapse to their minimum weight; zero-weight
    /// self-loops are dropped and negative ones rejected.
    pub fn new(n: usize, raw_edges: Vec<(usize, usize, i64)>, bound: i64) -> Result<Graph, Error> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let bound = bound.max(0);
        let guard = (n as i64).checked_add(1).and_then(|f| f.checked_mul(bound));
        if !matches!(guard, Some(v) if v <= W_MAX) {
            return Err(Error::BoundOverflow { bound, n });
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (from, to, weight) in raw_edges {
            if from >= n {
                return Err(Error::VertexOutOfRange { found: from, n });
            }
            if to >= n {
                return Err(Error::VertexOutOfRange { found: to, n });
            }
            if weight.abs() > bound {
                return Err(Error::WeightOutOfBound { weight, bound });
            }
            if from == to {
                if weight < 0 {
                    return Err(Error::NegativeSelfLoop { vertex: from });
                }
                continue;
            }
            edges.push(Edge { from, to, weight });
        }
        edges.sort_unstable();
        edges.dedup_by_key(|e| (e.from, e.to));
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for e in &edges {
            out[e.from].push((e.to, e.weight));
            inc[e.to].push((e.from, e.weight));
        }
        let has_negative = edges.iter().any(|e| e.weight < 0);
        Ok(Graph {
            n,
            bound,
            edges,
            out,
            inc,
            has_negative,
        })
    }

    /// Interpret a matrix's finite off-diagonal cells as edges. The diagonal
    /// must be exactly zero. The magnitude bound is taken from the content.
    pub fn from_adjacency(m: &DistMatrix) -> Result<Graph, Error> {
        let n = m.n();
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut edges = Vec::new();
        let mut bound = 0i64;
        for i in 0..n {
            for j in 0..n {
                match m.get(i, j) {
                    Weight::Finite(0) if i == j => {}
                    other if i == j => {
                        return Err(Error::Parse {
                            line: 0,
                            reason: format!(
                                "diagonal cell ({}, {}) must be 0, found {other}",
                                i + 1,
                                j + 1
                            ),
                        });
                    }
                    Weight::Finite(w) => {
                        bound = bound.max(w.abs());
                        edges.push((i, j, w));
                    }
                    Weight::Infinity => {}
                }
            }
        }
        Graph::new(n, edges, bound)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Declared magnitude bound M; every edge satisfies |w| <= M and ingest
    /// guaranteed (n + 1) * M <= W_MAX.
    pub fn weight_bound(&self) -> i64 {
        self.bound
    }

    /// Canonical (sorted) edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_edges(&self, u: usize) -> &[(usize, i64)] {
        &self.out[u]
    }

    pub fn in_edges(&self, v: usize) -> &[(usize, i64)] {
        &self.inc[v]
    }

    pub fn has_negative_edge(&self) -> bool {
        self.has_negative
    }

    /// Adjacency matrix: zero diagonal, edge weights off-diagonal, infinity
    /// for absent edges.
    pub fn adjacency_matrix(&self) -> DistMatrix {
        let mut m = DistMatrix::identity(self.n);
        for e in &self.edges {
            m.set(e.from, e.to, Weight::Finite(e.weight));
        }
        m
    }

    /// The graph with every edge direction flipped. Involutive.
    pub fn reversed(&self) -> Graph {
        let edges = self
            .edges
            .iter()
            .map(|e| (e.to, e.from, e.weight))
            .collect();
        Graph::new(self.n, edges, self.bound).expect("reversal preserves validity")
    }

    /// True iff the graph has no negative-weight directed cycle. Bellman-Ford
    /// from a virtual super-source (all distances start at zero), n - 1
    /// relaxation passes with early exit, then a detection pass.
    pub fn negative_cycle_free(&self) -> bool {
        let mut dist = vec![0i64; self.n];
        for _ in 1..self.n {
            let mut improved = false;
            for e in &self.edges {
                let cand = dist[e.from] + e.weight;
                if cand < dist[e.to] {
                    dist[e.to] = cand;
                    improved = true;
                }
            }
            if !improved {
                return true;
            }
        }
        self.edges
            .iter()
            .all(|e| dist[e.from] + e.weight >= dist[e.to])
    }

    /// Serialize to the edge-list text format (1-based endpoints).
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            s.push_str(&format!("{} {} {}\n", e.from + 1, e.to + 1, e.weight));
        }
        s
    }
}

/// Parse a graph from either text format. The magnitude bound is inferred
/// from the content (maximum |w|, zero when edgeless).
pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph, Error> {
    match format {
        InputFormat::Matrix => {
            let m = DistMatrix::parse(text)?;
            Graph::from_adjacency(&m)
        }
        InputFormat::EdgeList => parse_edge_list(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut lines = nonblank_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        reason: "missing edge-list header line".into(),
    })?;
    let tokens: Vec<&str> = header.split_ascii_whitespace().collect();
    if tokens.len() != 2 {
        return Err(Error::Parse {
            line: line_no,
            reason: format!("header must be \"n m\", found {} tokens", tokens.len()),
        });
    }
    let n = parse_count_token(tokens[0], line_no, "vertex count")?;
    if n == 0 {
        return Err(Error::Parse {
            line: line_no,
            reason: "vertex count must be at least 1".into(),
        });
    }
    let m = parse_count_token(tokens[1], line_no, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut bound = 0i64;
    for idx in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| Error::Parse {
            line: count_lines(text) + 1,
            reason: format!("expected {m} edge lines, found {idx}"),
        })?;
        let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("edge line must be \"u v w\", found {} tokens", tokens.len()),
            });
        }
        let u = parse_vertex_token(tokens[0], line_no, n)?;
        let v = parse_vertex_token(tokens[1], line_no, n)?;
        let w: i64 = tokens[2].parse().map_err(|_| Error::Parse {
            line: line_no,
            reason: format!("invalid edge weight {:?}", tokens[2]),
        })?;
        if u == v && w < 0 {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("negative self-loop on vertex {u} forms a negative cycle"),
            });
        }
        bound = bound.max(w.abs());
        edges.push((u - 1, v - 1, w));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            reason: "trailing content after the last edge line".into(),
        });
    }
    Graph::new(n, edges, bound)
}

fn nonblank_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
}

fn count_lines(text: &str) -> usize {
    text.lines().count()
}

fn parse_header_count(line: &str, line_no: usize, what: &str) -> Result<usize, Error> {
    let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
    if tokens.len() != 1 {
        return Err(Error::Parse {
            line: line_no,
            reason: format!(
                "header must hold exactly the {what}, found {} tokens",
                tokens.len()
            ),
        });
    }
    let n = parse_count_token(tokens[0], line_no, what)?;
    if n == 0 {
        return Err(Error::Parse {
            line: line_no,
            reason: format!("{what} must be at least 1"),
        });
    }
    Ok(n)
}

fn parse_count_token(tok: &str, line_no: usize, what: &str) -> Result<usize, Error> {
    tok.parse::<usize>().map_err(|_| Error::Parse {
        line: line_no,
        reason: format!("invalid {what} {tok:?}"),
    })
}

fn parse_vertex_token(tok: &str, line_no: usize, n: usize) -> Result<usize, Error> {
    let v = parse_count_token(tok, line_no, "vertex id")?;
    if v == 0 || v > n {
        return Err(Error::Parse {
            line: line_no,
            reason: format!("vertex id {v} outside 1..={n}"),
        });
    }
    Ok(v)
}
