//! Exponential reference solvers for small graphs.
//!
//! These never consult orderings; they enumerate simple paths directly
//! (backtracking over a visited bitmask) or tabulate which vertex subsets
//! span a path (subset DP). Inputs above the configured caps are refused.

use crate::error::{Error, Result};
use crate::graph::{is_valid_path, Graph, Path, PathCover};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub longest: usize,
    pub cover: usize,
    pub maximal: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            longest: 14,
            cover: 10,
            maximal: 10,
        }
    }
}

fn refuse(g: &Graph, cap: usize, limit_name: &'static str) -> Result<()> {
    if g.n() > cap || g.n() > 63 {
        return Err(Error::SizeLimit {
            limit_name,
            n: g.n(),
            limit: cap.min(63),
        });
    }
    Ok(())
}

/// A maximum-cardinality simple path, by exhaustive backtracking.
pub fn brute_longest_path(g: &Graph, limits: &OracleLimits) -> Result<Path> {
    refuse(g, limits.longest, "oracle longest-path")?;
    let n = g.n();
    let mut best = Vec::new();
    let mut cur = Vec::with_capacity(n);
    for s in 0..n {
        cur.push(s);
        extend(g, 1u64 << s, &mut cur, &mut best);
        cur.pop();
        if best.len() == n {
            break;
        }
    }
    Ok(Path::new(best))
}

fn extend(g: &Graph, visited: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cur.len() > best.len() {
        best.clone_from(cur);
    }
    if best.len() == g.n() {
        return;
    }
    let x = *cur.last().unwrap();
    for &y in g.neighbors(x) {
        if visited >> y & 1 == 0 {
            cur.push(y);
            extend(g, visited | 1 << y, cur, best);
            cur.pop();
        }
    }
}

/// For every vertex subset (as a bitmask), the set of vertices that can end
/// a path spanning exactly that subset.
fn path_ends(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut ends = vec![0u64; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..(1usize << n) {
        let mut e = ends[mask];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            for &w in g.neighbors(v) {
                if mask >> w & 1 == 0 {
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    ends
}

/// A path spanning exactly `mask`, recovered from the subset table.
fn spanning_path(g: &Graph, ends: &[u64], mask: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut rest = mask;
    let mut allowed = ends[mask];
    while rest != 0 {
        let v = allowed.trailing_zeros() as usize;
        out.push(v);
        rest &= !(1 << v);
        allowed = if rest == 0 {
            0
        } else {
            g.neighbors(v)
                .iter()
                .filter(|&&u| rest >> u & 1 == 1)
                .fold(0u64, |acc, &u| acc | 1 << u)
                & ends[rest]
        };
        debug_assert!(rest == 0 || allowed != 0);
    }
    out.reverse();
    out
}

/// Minimum partition of `V` into vertex-disjoint paths, by subset DP.
pub fn brute_min_path_cover(g: &Graph, limits: &OracleLimits) -> Result<PathCover> {
    refuse(g, limits.cover, "oracle path-cover")?;
    let n = g.n();
    let ends = path_ends(g);
    let full = (1usize << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    let mut choice = vec![0usize; 1 << n];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // submasks of `mask` that contain its lowest vertex
        let mut sub = rest;
        loop {
            let s = sub | low;
            if ends[s] != 0 && best[mask ^ s] != usize::MAX && best[mask ^ s] + 1 < best[mask] {
                best[mask] = best[mask ^ s] + 1;
                choice[mask] = s;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut paths = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let s = choice[mask];
        paths.push(Path::new(spanning_path(g, &ends, s)));
        mask ^= s;
    }
    Ok(PathCover::new(paths))
}

/// True iff no simple path has a vertex set strictly containing `V(path)`.
/// Invalid paths are reported as not maximal.
pub fn brute_is_maximal_path(g: &Graph, path: &[usize], limits: &OracleLimits) -> Result<bool> {
    refuse(g, limits.maximal, "oracle maximal-path")?;
    if path.is_empty() || !is_valid_path(g, path) {
        return Ok(g.n() == 0 && path.is_empty());
    }
    let ends = path_ends(g);
    let mask = path.iter().fold(0usize, |m, &v| m | 1 << v);
    Ok(no_path_superset(&ends, g.n(), mask))
}

fn no_path_superset(ends: &[u64], n: usize, mask: usize) -> bool {
    let free = ((1usize << n) - 1) ^ mask;
    // nonempty submasks of the complement
    let mut add = free;
    while add != 0 {
        if ends[mask | add] != 0 {
            return false;
        }
        add = (add - 1) & free;
    }
    true
}

/// Vertex sets (bitmasks) of all maximal paths.
pub fn maximal_path_sets(g: &Graph, limits: &OracleLimits) -> Result<Vec<u64>> {
    refuse(g, limits.maximal, "oracle maximal-path")?;
    let n = g.n();
    let ends = path_ends(g);
    let full = (1usize << n) - 1;
    let mut out = Vec::new();
    for mask in 1..=full {
        if ends[mask] != 0 && no_path_superset(&ends, n, mask) {
            out.push(mask as u64);
        }
    }
    Ok(out)
}

/// Every ordering of the vertices in `mask` that forms a path of `g`.
pub fn paths_spanning(g: &Graph, mask: u64) -> Vec<Vec<usize>> {
    fn go(g: &Graph, left: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let mut cand = left;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if cur.last().is_none_or(|&x| g.has_edge(x, v)) {
                cur.push(v);
                go(g, left & !(1 << v), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if mask != 0 {
        go(g, mask, &mut Vec::new(), &mut out);
    }
    out
}
