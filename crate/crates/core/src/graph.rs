//! Undirected simple graphs, paths, and path covers.
//!
//! Vertices are dense ids `0..n`. Every graph also carries one display label
//! per vertex so that text formats can round-trip arbitrary names; the
//! default label of vertex `v` is `v + 1`.

use std::fmt;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};

/// Immutable undirected simple graph.
///
/// Adjacency is held twice: as a bit matrix for O(1) edge queries and as
/// sorted neighbor lists for scans.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    matrix: BitMatrix,
    neighbors: Vec<Vec<usize>>,
    labels: Vec<String>,
    edges: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            matrix: BitMatrix::new(n),
            neighbors: vec![Vec::new(); n],
            labels: default_labels(n),
            edges: 0,
        }
    }

    /// Builds a graph from 0-based edge pairs. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut matrix = BitMatrix::new(n);
        let mut count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !matrix.get(u, v) {
                matrix.set(u, v);
                matrix.set(v, u);
                count += 1;
            }
        }
        Ok(Self::from_matrix(matrix, count, default_labels(n)))
    }

    /// Builds a graph from 1-based edge pairs, the convention of the text formats.
    pub fn from_edges_1based<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let shifted: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| {
                if u == 0 || v == 0 {
                    Err(Error::VertexOutOfRange { vertex: 0, n })
                } else {
                    Ok((u - 1, v - 1))
                }
            })
            .collect::<Result<_>>()?;
        Self::from_edges(n, shifted)
    }

    fn from_matrix(matrix: BitMatrix, edges: usize, labels: Vec<String>) -> Self {
        let n = matrix.len();
        let neighbors = (0..n)
            .map(|v| (0..n).filter(|&w| matrix.get(v, w)).collect())
            .collect();
        Graph {
            matrix,
            neighbors,
            labels,
            edges,
        }
    }

    /// Replaces the display labels. Labels must be unique and one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: labels.len(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("duplicate vertex label `{l}`"),
                });
            }
        }
        self.labels = labels;
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix.get(u, v)
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// True when every label is the default `v + 1`.
    pub fn has_default_labels(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(v, l)| l.parse::<usize>() == Ok(v + 1))
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut matrix = BitMatrix::new(n);
        let mut count = 0;
        for u in 0..n {
            for v in 0..n {
                if u != v && !self.has_edge(u, v) {
                    matrix.set(u, v);
                    if u < v {
                        count += 1;
                    }
                }
            }
        }
        Self::from_matrix(matrix, count, self.labels.clone())
    }

    /// Subgraph induced by `subset`. Local ids follow increasing parent id.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<(Graph, VertexMap)> {
        let map = VertexMap::new(self.n(), subset)?;
        let k = map.len();
        let mut matrix = BitMatrix::new(k);
        let mut count = 0;
        for a in 0..k {
            for b in (a + 1)..k {
                if self.has_edge(map.to_parent(a), map.to_parent(b)) {
                    matrix.set(a, b);
                    matrix.set(b, a);
                    count += 1;
                }
            }
        }
        let labels = map
            .parents()
            .iter()
            .map(|&p| self.labels[p].clone())
            .collect();
        Ok((Self::from_matrix(matrix, count, labels), map))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Same graph with vertex `v` renamed to `perm[v]`. Labels follow their vertices.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: perm.len(),
            });
        }
        let mut labels = vec![String::new(); n];
        let mut seen = vec![false; n];
        for (v, &w) in perm.iter().enumerate() {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if std::mem::replace(&mut seen[w], true) {
                return Err(Error::DuplicateInOrdering(w));
            }
            labels[w] = self.labels[v].clone();
        }
        let g = Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))?;
        Ok(Graph { labels, ..g })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|v| v.to_string()).collect()
}

/// Bijection between a vertex subset of a parent graph and local ids `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    parents: Vec<usize>,
    local: Vec<Option<usize>>,
}

impl VertexMap {
    pub(crate) fn new(n: usize, subset: &[usize]) -> Result<Self> {
        let mut member = vec![false; n];
        for &v in subset {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            member[v] = true;
        }
        let parents: Vec<usize> = (0..n).filter(|&v| member[v]).collect();
        let mut local = vec![None; n];
        for (i, &p) in parents.iter().enumerate() {
            local[p] = Some(i);
        }
        Ok(VertexMap { parents, local })
    }

    pub fn len(&self) -> usize {
        self.parents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }

    pub fn to_parent(&self, local: usize) -> usize {
        self.parents[local]
    }

    pub fn to_local(&self, parent: usize) -> Option<usize> {
        self.local.get(parent).copied().flatten()
    }

    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    /// Maps a sequence of local ids back to parent ids.
    pub fn lift(&self, locals: &[usize]) -> Vec<usize> {
        locals.iter().map(|&l| self.parents[l]).collect()
    }
}

/// Why a vertex sequence is not a simple path, or a path family not a cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathViolation {
    OutOfRange { index: usize, vertex: usize },
    Repeated { index: usize, vertex: usize },
    /// The vertices at `index - 1` and `index` are not adjacent.
    NotAdjacent { index: usize },
    Uncovered { vertex: usize },
    Empty { path: usize },
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PathViolation::OutOfRange { index, vertex } => {
                write!(f, "vertex {vertex} at index {index} is out of range")
            }
            PathViolation::Repeated { index, vertex } => {
                write!(f, "vertex {vertex} repeated at index {index}")
            }
            PathViolation::NotAdjacent { index } => {
                write!(f, "non-adjacent consecutive pair at index {index}")
            }
            PathViolation::Uncovered { vertex } => write!(f, "vertex {vertex} is not covered"),
            PathViolation::Empty { path } => write!(f, "path {path} is empty"),
        }
    }
}

/// Checks distinctness and consecutive adjacency; reports the first offending index.
pub fn check_path(g: &Graph, seq: &[usize]) -> std::result::Result<(), PathViolation> {
    let mut seen = vec![false; g.n()];
    for (index, &v) in seq.iter().enumerate() {
        if v >= g.n() {
            return Err(PathViolation::OutOfRange { index, vertex: v });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(PathViolation::Repeated { index, vertex: v });
        }
        if index > 0 && !g.has_edge(seq[index - 1], v) {
            return Err(PathViolation::NotAdjacent { index });
        }
    }
    Ok(())
}

pub fn is_valid_path(g: &Graph, seq: &[usize]) -> bool {
    check_path(g, seq).is_ok()
}

/// A simple path, stored as its vertex sequence. `len()` counts vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn check(&self, g: &Graph) -> std::result::Result<(), PathViolation> {
        check_path(g, &self.0)
    }
}

impl From<Vec<usize>> for Path {
    fn from(v: Vec<usize>) -> Self {
        Path(v)
    }
}

/// Vertex-disjoint paths whose union is the whole vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathCover {
    paths: Vec<Path>,
}

impl PathCover {
    pub fn new(paths: Vec<Path>) -> Self {
        PathCover { paths }
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Concatenation of all paths in order.
    pub fn flatten(&self) -> Vec<usize> {
        self.paths.iter().flat_map(|p| p.vertices().iter().copied()).collect()
    }

    pub fn check(&self, g: &Graph) -> std::result::Result<(), PathViolation> {
        let mut seen = vec![false; g.n()];
        for (i, p) in self.paths.iter().enumerate() {
            if p.is_empty() {
                return Err(PathViolation::Empty { path: i });
            }
            p.check(g)?;
            for (index, &v) in p.vertices().iter().enumerate() {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(PathViolation::Repeated { index, vertex: v });
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(vertex) => Err(PathViolation::Uncovered { vertex }),
            None => Ok(()),
        }
    }
}
