//! Seeded instance generators. Each returns a graph together with an
//! ordering that certifies membership in its class.
//!
//! Randomness comes from ChaCha8 seeded with the 64-bit seed
//! (`rand_chacha::ChaCha8Rng::seed_from_u64`), which is portable across
//! platforms, so a `GenSpec` always reproduces the same instance.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::VertexOrdering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Interval,
    Permutation,
    Cocomparability,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Interval, Family::Permutation, Family::Cocomparability];

    pub fn name(self) -> &'static str {
        match self {
            Family::Interval => "interval",
            Family::Permutation => "permutation",
            Family::Cocomparability => "cocomparability",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "interval" => Ok(Family::Interval),
            "permutation" => Ok(Family::Permutation),
            "cocomparability" | "cocomp" => Ok(Family::Cocomparability),
            other => Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    /// Density knob in `[0, 1]`; its meaning depends on the family.
    pub p: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, p: f64, seed: u64) -> Self {
        GenSpec { family, n, p, seed }
    }

    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParameter(format!("p = {} is outside [0, 1]", self.p)));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Dispatches on `spec.family`.
pub fn generate(spec: &GenSpec) -> Result<(Graph, VertexOrdering)> {
    match spec.family {
        Family::Interval => gen_interval(spec),
        Family::Permutation => gen_permutation(spec),
        Family::Cocomparability => gen_cocomparability(spec),
    }
}

/// Random intervals with integer endpoints in `[0, 4n]`. Lengths are uniform
/// in `[0, p·4n]`. Returns the intersection graph and the left-endpoint order,
/// which is an I-ordering.
pub fn gen_interval(spec: &GenSpec) -> Result<(Graph, VertexOrdering)> {
    spec.validate()?;
    let mut rng = spec.rng();
    let hi = 4 * spec.n as u64;
    let span = (spec.p * hi as f64).round() as u64;
    let intervals: Vec<(u64, u64)> = (0..spec.n)
        .map(|_| {
            let l = rng.random_range(0..=hi);
            let len = rng.random_range(0..=span);
            (l, (l + len).min(hi))
        })
        .collect();
    interval_graph(&intervals)
}

/// Intersection graph of closed intervals `[l, r]`, ordered by left
/// endpoint, then right endpoint, then index.
pub fn interval_graph(intervals: &[(u64, u64)]) -> Result<(Graph, VertexOrdering)> {
    if let Some(&(l, r)) = intervals.iter().find(|(l, r)| l > r) {
        return Err(Error::InvalidParameter(format!("interval [{l}, {r}] is empty")));
    }
    let n = intervals.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let (la, ra) = intervals[a];
            let (lb, rb) = intervals[b];
            if la <= rb && lb <= ra {
                edges.push((a, b));
            }
        }
    }
    let mut seq: Vec<usize> = (0..n).collect();
    seq.sort_by_key(|&v| (intervals[v].0, intervals[v].1, v));
    Ok((Graph::from_edges(n, edges)?, VertexOrdering::from_sequence(seq)?))
}

/// A random permutation of `0..n`: starting from the identity, each position
/// is swapped with a uniform position with probability `p`. Returns the
/// inversion graph and the identity order, which is umbrella-free.
pub fn gen_permutation(spec: &GenSpec) -> Result<(Graph, VertexOrdering)> {
    spec.validate()?;
    let mut rng = spec.rng();
    let n = spec.n;
    let mut perm: Vec<usize> = (0..n).collect();
    if spec.p >= 1.0 {
        perm.shuffle(&mut rng);
    } else if n > 0 {
        for i in 0..n {
            if rng.random_bool(spec.p) {
                let j = rng.random_range(0..n);
                perm.swap(i, j);
            }
        }
    }
    permutation_graph(&perm)
}

/// Inversion graph of `perm`: `i < j` adjacent iff `perm[i] > perm[j]`.
pub fn permutation_graph(perm: &[usize]) -> Result<(Graph, VertexOrdering)> {
    VertexOrdering::from_sequence(perm.to_vec())?;
    let n = perm.len();
    let edges = (0..n).flat_map(|i| ((i + 1)..n).filter(move |&j| perm[i] > perm[j]).map(move |j| (i, j)));
    Ok((Graph::from_edges(n, edges)?, VertexOrdering::identity(n)))
}

/// A random poset on `0..n` (each pair `i < j` related with probability `p`,
/// then transitively closed). Returns the complement of its comparability
/// graph and the identity order, a linear extension and hence umbrella-free.
pub fn gen_cocomparability(spec: &GenSpec) -> Result<(Graph, VertexOrdering)> {
    spec.validate()?;
    let mut rng = spec.rng();
    let n = spec.n;
    let mut relations = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(spec.p) {
                relations.push((i, j));
            }
        }
    }
    poset_cocomparability(n, &relations)
}

/// Transitive closure of `relations` (each `(i, j)` with `i < j`), returned as
/// upper-triangular rows.
pub fn transitive_closure(n: usize, relations: &[(usize, usize)]) -> Result<Vec<Vec<u64>>> {
    let words = bits::words_for(n);
    let mut rows = vec![vec![0u64; words]; n];
    for &(i, j) in relations {
        if i >= j || j >= n {
            return Err(Error::InvalidParameter(format!(
                "relation ({i}, {j}) must satisfy i < j < n"
            )));
        }
        bits::set(&mut rows[i], j);
    }
    // rows of larger indices are closed before they are merged downward
    for i in (0..n).rev() {
        let mut acc = rows[i].clone();
        let mut j = i + 1;
        while let Some(k) = bits::next_set(&rows[i], j) {
            for (a, &b) in acc.iter_mut().zip(&rows[k]) {
                *a |= b;
            }
            j = k + 1;
        }
        rows[i] = acc;
    }
    Ok(rows)
}

/// Complement of the comparability graph of the poset generated by `relations`.
pub fn poset_cocomparability(n: usize, relations: &[(usize, usize)]) -> Result<(Graph, VertexOrdering)> {
    let closed = transitive_closure(n, relations)?;
    let edges = (0..n).flat_map(|i| {
        let row = &closed[i];
        ((i + 1)..n).filter(move |&j| !bits::test(row, j)).map(move |j| (i, j))
    });
    Ok((Graph::from_edges(n, edges)?, VertexOrdering::identity(n)))
}
