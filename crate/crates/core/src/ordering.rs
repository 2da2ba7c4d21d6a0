//! Vertex orderings and their characterization predicates.
//!
//! All three predicates scan triples `a < b < c` (by position) in
//! lexicographic order of positions and report the first violation, so
//! witnesses are deterministic. The inner search for `c` runs over packed
//! adjacency rows indexed by position.

use std::fmt;

use crate::bits::{self, BitMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};

/// A bijection between positions `0..n` and vertex ids `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    pub fn from_sequence(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if pos[v] != usize::MAX {
                return Err(Error::DuplicateInOrdering(v));
            }
            pos[v] = i;
        }
        Ok(VertexOrdering { seq, pos })
    }

    /// Like [`from_sequence`](Self::from_sequence), also checking the length against `g`.
    pub fn for_graph(g: &Graph, seq: Vec<usize>) -> Result<Self> {
        if seq.len() != g.n() {
            return Err(Error::LengthMismatch {
                expected: g.n(),
                found: seq.len(),
            });
        }
        Self::from_sequence(seq)
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            seq: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    pub fn into_sequence(self) -> Vec<usize> {
        self.seq
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    #[inline]
    pub fn vertex_at(&self, p: usize) -> usize {
        self.seq[p]
    }

    /// `x <_σ y`.
    #[inline]
    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.pos[x] < self.pos[y]
    }

    /// The vertex of `set` with the largest position.
    pub fn rightmost<I: IntoIterator<Item = usize>>(&self, set: I) -> Option<usize> {
        set.into_iter().max_by_key(|&v| self.pos[v])
    }

    /// Restriction to `subset`, keeping relative order. The returned ordering
    /// is over the local ids of the map, which match [`Graph::induced_subgraph`].
    pub fn restrict(&self, subset: &[usize]) -> Result<(VertexOrdering, VertexMap)> {
        let map = VertexMap::new(self.len(), subset)?;
        let seq = self.seq.iter().filter_map(|&v| map.to_local(v)).collect();
        Ok((VertexOrdering::from_sequence(seq)?, map))
    }

    pub(crate) fn check_against(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::LengthMismatch {
                expected: g.n(),
                found: self.len(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// `ac ∈ E`, `ab ∉ E`.
    IOrdering,
    /// `ac ∈ E`, `ab ∉ E`, `bc ∉ E`.
    Umbrella,
    /// `ac ∈ E`, `ab ∉ E`, and no `d` between `a` and `b` with `db ∈ E`, `dc ∉ E`.
    BadTriple,
}

/// A triple `a <_σ b <_σ c` violating one of the ordering characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleWitness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub kind: ViolationKind,
    pub d: Option<usize>,
}

impl TripleWitness {
    /// Human-readable form using the graph's labels.
    pub fn describe(&self, g: &Graph) -> String {
        format!(
            "{} ({}, {}, {})",
            self.kind_name(),
            g.label(self.a),
            g.label(self.b),
            g.label(self.c)
        )
    }

    fn kind_name(&self) -> &'static str {
        match self.kind {
            ViolationKind::IOrdering => "interval-order violation",
            ViolationKind::Umbrella => "umbrella",
            ViolationKind::BadTriple => "bad triple",
        }
    }
}

impl fmt::Display for TripleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}, {}, {})",
            self.kind_name(),
            self.a + 1,
            self.b + 1,
            self.c + 1
        )
    }
}

/// Adjacency re-indexed by position in an ordering.
pub(crate) struct PositionAdjacency {
    rows: BitMatrix,
}

impl PositionAdjacency {
    pub(crate) fn new(g: &Graph, sigma: &VertexOrdering) -> Self {
        let n = g.n();
        let mut rows = BitMatrix::new(n);
        for (u, v) in g.edges() {
            let (pu, pv) = (sigma.position(u), sigma.position(v));
            rows.set(pu, pv);
            rows.set(pv, pu);
        }
        PositionAdjacency { rows }
    }

    #[inline]
    pub(crate) fn adj(&self, p: usize, q: usize) -> bool {
        self.rows.get(p, q)
    }

    pub(crate) fn row(&self, p: usize) -> &[u64] {
        self.rows.row(p)
    }

    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    fn stride(&self) -> usize {
        self.rows.stride()
    }
}

fn witness(sigma: &VertexOrdering, (a, b, c): (usize, usize, usize), kind: ViolationKind) -> TripleWitness {
    TripleWitness {
        a: sigma.vertex_at(a),
        b: sigma.vertex_at(b),
        c: sigma.vertex_at(c),
        kind,
        d: None,
    }
}

/// Generic scan: for each position pair `a < b` with `ab ∉ E`, `candidates`
/// fills a mask of admissible `c` positions; the first one beyond `b` wins.
fn scan<F>(g: &Graph, sigma: &VertexOrdering, kind: ViolationKind, mut candidates: F) -> Result<Option<TripleWitness>>
where
    F: FnMut(&PositionAdjacency, usize, usize, &mut [u64]),
{
    sigma.check_against(g)?;
    let m = PositionAdjacency::new(g, sigma);
    let n = m.len();
    let mut mask = vec![0u64; m.stride()];
    for a in 0..n {
        if bits::next_set(m.row(a), a + 1).is_none() {
            continue;
        }
        for b in (a + 1)..n {
            if m.adj(a, b) {
                continue;
            }
            candidates(&m, a, b, &mut mask);
            if let Some(c) = bits::next_set(&mask, b + 1) {
                return Ok(Some(witness(sigma, (a, b, c), kind)));
            }
        }
    }
    Ok(None)
}

/// First triple with `ac ∈ E` and `ab ∉ E`, or `None` for an I-ordering.
pub fn find_i_violation(g: &Graph, sigma: &VertexOrdering) -> Result<Option<TripleWitness>> {
    scan(g, sigma, ViolationKind::IOrdering, |m, a, _b, mask| {
        mask.copy_from_slice(m.row(a));
    })
}

/// First umbrella, or `None` if `sigma` is umbrella-free.
pub fn find_umbrella(g: &Graph, sigma: &VertexOrdering) -> Result<Option<TripleWitness>> {
    scan(g, sigma, ViolationKind::Umbrella, |m, a, b, mask| {
        for ((w, &ra), &rb) in mask.iter_mut().zip(m.row(a)).zip(m.row(b)) {
            *w = ra & !rb;
        }
    })
}

/// First bad triple, or `None` if `sigma` is an LDFS ordering.
pub fn find_bad_triple(g: &Graph, sigma: &VertexOrdering) -> Result<Option<TripleWitness>> {
    // c must be adjacent to a and to every d in (a, b) with db ∈ E.
    scan(g, sigma, ViolationKind::BadTriple, |m, a, b, mask| {
        mask.copy_from_slice(m.row(a));
        for d in (a + 1)..b {
            if m.adj(d, b) {
                for (w, &rd) in mask.iter_mut().zip(m.row(d)) {
                    *w &= rd;
                }
            }
        }
    })
}

pub fn is_i_ordering(g: &Graph, sigma: &VertexOrdering) -> Result<bool> {
    Ok(find_i_violation(g, sigma)?.is_none())
}

pub fn is_umbrella_free(g: &Graph, sigma: &VertexOrdering) -> Result<bool> {
    Ok(find_umbrella(g, sigma)?.is_none())
}

pub fn is_ldfs_ordering(g: &Graph, sigma: &VertexOrdering) -> Result<bool> {
    Ok(find_bad_triple(g, sigma)?.is_none())
}

/// Umbrella-free check that fails with the witness as a precondition error.
pub fn require_umbrella_free(g: &Graph, sigma: &VertexOrdering) -> Result<()> {
    match find_umbrella(g, sigma)? {
        Some(w) => Err(Error::Precondition(w)),
        None => Ok(()),
    }
}

pub fn require_ldfs(g: &Graph, sigma: &VertexOrdering) -> Result<()> {
    match find_bad_triple(g, sigma)? {
        Some(w) => Err(Error::Precondition(w)),
        None => Ok(()),
    }
}
