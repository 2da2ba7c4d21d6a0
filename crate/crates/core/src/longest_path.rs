//! Longest path on cocomparability graphs by dynamic programming over an
//! LDFS umbrella-free ordering `σ = (u_0, …, u_{n-1})` extended with an
//! isolated dummy `u_n` on the right.
//!
//! Positions are 0-based throughout this module. The subproblem `G(i, j)`
//! for `i <= j` is the subgraph induced by `{u_i, …, u_j} \ N(u_{j+1})`, and
//! the table entry `(i, j, k)` holds the length of a longest normal path of
//! `G(i, j)` ending in `u_k`, plus a constant-size instruction telling how
//! that path was assembled from entries of row `i + 1`.
//!
//! The table is triangular in both `(i, j)` and `k ∈ [i, j]`, so it holds
//! about `n³ / 6` entries of four bytes each: roughly 43 MB at `n = 400`.
//! Sizes above [`DEFAULT_MAX_N`] must be requested explicitly.

use crate::error::{Error, Result};
use crate::graph::{check_path, Graph, Path};
use crate::normal::is_normal;
use crate::ordering::{require_ldfs, require_umbrella_free, PositionAdjacency, VertexOrdering};
use crate::search::ldfs_plus;

pub const DEFAULT_MAX_N: usize = 400;

/// Environment variable read by front ends to override [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "COCOMP_DP_MAX_N";

/// Entry lengths are stored as `u16`.
const HARD_MAX_N: usize = u16::MAX as usize - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpOptions {
    /// Verify that `σ` is umbrella-free and has no bad triple before filling
    /// the table (and that `π` is umbrella-free in [`longest_path`]).
    pub verify: bool,
    pub max_n: usize,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions {
            verify: true,
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl DpOptions {
    pub fn unchecked() -> Self {
        DpOptions {
            verify: false,
            ..Self::default()
        }
    }
}

/// `σ` plus the implicit isolated dummy `u_n`.
pub struct AugmentedOrdering {
    sigma: VertexOrdering,
    adj: PositionAdjacency,
}

impl AugmentedOrdering {
    pub fn new(g: &Graph, sigma: VertexOrdering) -> Result<Self> {
        sigma.check_against(g)?;
        let adj = PositionAdjacency::new(g, &sigma);
        Ok(AugmentedOrdering { sigma, adj })
    }

    /// Number of real vertices.
    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn ordering(&self) -> &VertexOrdering {
        &self.sigma
    }

    /// Vertex id of `u_p`.
    pub fn vertex(&self, p: usize) -> usize {
        self.sigma.vertex_at(p)
    }

    /// Adjacency of `u_p` and `u_q`; the dummy `u_n` has no neighbors.
    #[inline]
    pub fn adjacent(&self, p: usize, q: usize) -> bool {
        let n = self.n();
        p < n && q < n && self.adj.adj(p, q)
    }

    /// Whether `u_k` belongs to `G(i, j)`. Empty when `i > j`.
    pub fn in_g_ij(&self, i: usize, j: usize, k: usize) -> Result<bool> {
        let n = self.n();
        for idx in [i, j, k] {
            if idx >= n {
                return Err(Error::VertexOutOfRange { vertex: idx, n });
            }
        }
        Ok(self.member(i, j, k))
    }

    #[inline]
    fn member(&self, i: usize, j: usize, k: usize) -> bool {
        i <= k && k <= j && !self.adjacent(k, j + 1)
    }

    /// Positions of `V(G(i, j))` in increasing order.
    pub fn g_ij(&self, i: usize, j: usize) -> Vec<usize> {
        if i > j || j >= self.n() {
            return Vec::new();
        }
        (i..=j).filter(|&k| self.member(i, j, k)).collect()
    }

    pub fn to_vertices(&self, positions: &[usize]) -> Vec<usize> {
        positions.iter().map(|&p| self.sigma.vertex_at(p)).collect()
    }
}

/// How the path of a table entry `(i, j, k)` is assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instruction {
    /// Same path as entry `(i + 1, j, k)`.
    CopyUp,
    /// `(u_i)`.
    Single,
    /// `(P(u_x; i + 1, j), u_i)`; here `k = i`.
    Extend { x: usize },
    /// `(P(u_x; i + 1, j), u_i, P(u_y; i + 1, x - 1))`; here `k = y`.
    Glue { x: usize, y: usize },
}

// `len == 0` marks `u_k ∉ G(i, j)`. `via` is 0 or `x + 1`; together with
// whether `k == i` it decodes to an `Instruction`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Entry {
    len: u16,
    via: u16,
}

#[inline]
fn tri(d: usize) -> usize {
    d * (d + 1) / 2
}

pub struct DpTable {
    n: usize,
    // row_start[i] = offset of row i; row_start[n] = total size
    row_start: Vec<usize>,
    entries: Vec<Entry>,
}

impl DpTable {
    fn allocate(n: usize) -> Self {
        let mut row_start = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for i in 0..=n {
            row_start.push(acc);
            if i < n {
                acc += tri(n - i);
            }
        }
        DpTable {
            n,
            row_start,
            entries: vec![Entry::default(); acc],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of `(i, j, k)` slots allocated.
    pub fn slots(&self) -> usize {
        self.entries.len()
    }

    fn entry(&self, i: usize, j: usize, k: usize) -> Option<Entry> {
        if !(i <= k && k <= j && j < self.n) {
            return None;
        }
        let e = self.entries[self.row_start[i] + tri(j - i) + (k - i)];
        (e.len > 0).then_some(e)
    }

    /// `ℓ(u_k; i, j)`, or `None` when `u_k ∉ G(i, j)`.
    pub fn length(&self, i: usize, j: usize, k: usize) -> Option<usize> {
        self.entry(i, j, k).map(|e| e.len as usize)
    }

    pub fn instruction(&self, i: usize, j: usize, k: usize) -> Option<Instruction> {
        self.entry(i, j, k).map(|e| decode(i, k, e))
    }

    /// Lengths `ℓ(u_k; 0, n-1)` for every position `k`.
    pub fn final_lengths(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        (0..self.n)
            .map(|k| self.length(0, self.n - 1, k).unwrap_or(0))
            .collect()
    }

    /// Position maximizing `ℓ(·; 0, n-1)`, smallest position on ties.
    pub fn best_end(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (k, len) in self.final_lengths().into_iter().enumerate() {
            if best.is_none_or(|(_, l)| len > l) {
                best = Some((k, len));
            }
        }
        best
    }

    /// Expands the instructions of entry `(i, j, k)` into positions.
    pub fn reconstruct(&self, i: usize, j: usize, k: usize) -> Result<Vec<usize>> {
        enum Task {
            Expand(usize, usize, usize),
            Emit(usize),
        }
        let dangling = |i, j, k| Error::Internal(format!("dangling table reference ({i}, {j}, {k})"));
        let expected = self.entry(i, j, k).ok_or_else(|| dangling(i, j, k))?.len as usize;
        let mut out = Vec::with_capacity(expected);
        let mut stack = vec![Task::Expand(i, j, k)];
        while let Some(task) = stack.pop() {
            match task {
                Task::Emit(p) => out.push(p),
                Task::Expand(i, j, k) => {
                    let e = self.entry(i, j, k).ok_or_else(|| dangling(i, j, k))?;
                    match decode(i, k, e) {
                        Instruction::CopyUp => stack.push(Task::Expand(i + 1, j, k)),
                        Instruction::Single => out.push(i),
                        Instruction::Extend { x } => {
                            stack.push(Task::Emit(i));
                            stack.push(Task::Expand(i + 1, j, x));
                        }
                        Instruction::Glue { x, y } => {
                            stack.push(Task::Expand(i + 1, x - 1, y));
                            stack.push(Task::Emit(i));
                            stack.push(Task::Expand(i + 1, j, x));
                        }
                    }
                }
            }
            if out.len() > expected {
                break;
            }
        }
        if out.len() != expected {
            return Err(Error::Internal(format!(
                "entry ({i}, {j}, {k}) stores length {expected} but expands to {}",
                out.len()
            )));
        }
        Ok(out)
    }
}

#[inline]
fn decode(i: usize, k: usize, e: Entry) -> Instruction {
    match (k == i, e.via) {
        (true, 0) => Instruction::Single,
        (false, 0) => Instruction::CopyUp,
        (true, x) => Instruction::Extend { x: x as usize - 1 },
        (false, x) => Instruction::Glue {
            x: x as usize - 1,
            y: k,
        },
    }
}

fn check_size(n: usize, opts: &DpOptions) -> Result<()> {
    if n > opts.max_n {
        return Err(Error::SizeLimit {
            limit_name: "dp size",
            n,
            limit: opts.max_n,
        });
    }
    if n > HARD_MAX_N {
        return Err(Error::SizeLimit {
            limit_name: "dp entry width",
            n,
            limit: HARD_MAX_N,
        });
    }
    Ok(())
}

/// Fills the table for `σ`. With `opts.verify`, `σ` must be umbrella-free and
/// free of bad triples.
pub fn build_dp(g: &Graph, sigma: &AugmentedOrdering, opts: &DpOptions) -> Result<DpTable> {
    let n = sigma.n();
    check_size(n, opts)?;
    if opts.verify {
        require_umbrella_free(g, &sigma.sigma)?;
        require_ldfs(g, &sigma.sigma)?;
    }
    let mut table = DpTable::allocate(n);
    for i in (0..n).rev() {
        let (head, next) = table.entries.split_at_mut(table.row_start[i + 1]);
        let cur = &mut head[table.row_start[i]..];
        fill_row(sigma, i, cur, next);
    }
    Ok(table)
}

/// Row `i` of the table from row `i + 1`. Blocks are indexed by `j`, and
/// within a block by `k - i` (resp. `k - i - 1` in `next`).
fn fill_row(sigma: &AugmentedOrdering, i: usize, cur: &mut [Entry], next: &[Entry]) {
    let n = sigma.n();
    // `u_k ∈ G(·, j)` given the range check
    let member = |j: usize, k: usize| !sigma.adjacent(k, j + 1);
    for j in i..n {
        let cb = tri(j - i);
        let nb = if j > i { tri(j - i - 1) } else { 0 };

        for y in (i + 1)..=j {
            if member(j, y) {
                cur[cb + y - i] = Entry {
                    len: next[nb + y - i - 1].len,
                    via: 0,
                };
            }
        }

        if !member(j, i) {
            continue;
        }
        cur[cb] = Entry { len: 1, via: 0 };

        for x in (i + 1)..=j {
            if !member(j, x) || !sigma.adjacent(i, x) {
                continue;
            }
            let via = (x + 1) as u16;
            let lx = next[nb + x - i - 1].len;
            if cur[cb].len < lx + 1 {
                cur[cb] = Entry { len: lx + 1, via };
            }
            if x < i + 2 {
                continue;
            }
            // y ranges over G(i+1, x-1) = {u_{i+1}, …, u_{x-1}} \ N(u_x)
            let gb = tri(x - i - 2);
            for y in (i + 1)..x {
                if sigma.adjacent(y, x) {
                    continue;
                }
                let cand = lx + next[gb + y - i - 1].len + 1;
                let slot = &mut cur[cb + y - i];
                if slot.len < cand {
                    *slot = Entry { len: cand, via };
                }
            }
        }
    }
}

/// Output of the full pipeline.
pub struct LongestPath {
    /// A longest path, as vertex ids.
    pub path: Path,
    /// The LDFS umbrella-free ordering the table was built on.
    pub sigma: VertexOrdering,
    pub table: DpTable,
}

/// Longest path of a cocomparability graph given an umbrella-free ordering `pi`.
pub fn longest_path(g: &Graph, pi: &VertexOrdering, opts: &DpOptions) -> Result<LongestPath> {
    pi.check_against(g)?;
    check_size(g.n(), opts)?;
    if opts.verify {
        require_umbrella_free(g, pi)?;
    }
    let sigma = ldfs_plus(g, pi)?;
    longest_path_on_sigma(g, sigma, opts)
}

/// Runs the table directly on `sigma`, which must already be an LDFS
/// umbrella-free ordering (for example an I-ordering of an interval graph).
pub fn longest_path_on_sigma(g: &Graph, sigma: VertexOrdering, opts: &DpOptions) -> Result<LongestPath> {
    let aug = AugmentedOrdering::new(g, sigma)?;
    let table = build_dp(g, &aug, opts)?;
    let path = extract(&aug, &table)?;
    if let Err(v) = check_path(g, path.vertices()) {
        return Err(Error::Internal(format!("reconstructed path is invalid: {v}")));
    }
    if opts.verify && !is_normal(g, aug.ordering(), path.vertices()) {
        return Err(Error::Internal("reconstructed path is not normal".into()));
    }
    Ok(LongestPath {
        path,
        sigma: aug.sigma,
        table,
    })
}

/// Reconstructs the optimum from a filled table, as vertex ids.
pub fn extract(sigma: &AugmentedOrdering, table: &DpTable) -> Result<Path> {
    match table.best_end() {
        None => Ok(Path::default()),
        Some((k, _)) => {
            let positions = table.reconstruct(0, table.n() - 1, k)?;
            Ok(Path::new(sigma.to_vertices(&positions)))
        }
    }
}
