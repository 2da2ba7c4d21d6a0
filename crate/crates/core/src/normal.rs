//! Typical and normal paths relative to a vertex ordering.
//!
//! A path is normal when, read from its first vertex, every step goes to the
//! rightmost not-yet-used in-path neighbor. Equivalently, its vertex order
//! is what the RMN sweep produces on the induced subgraph under the
//! restricted ordering; [`is_normal_via_rmn`] computes that second route.

use crate::graph::{is_valid_path, Graph};
use crate::ordering::VertexOrdering;
use crate::search::rmn;

/// First vertex is rightmost in `V(P)`; second is the rightmost in-path
/// neighbor of the first. Invalid paths are not typical.
pub fn is_typical(g: &Graph, sigma: &VertexOrdering, path: &[usize]) -> bool {
    if !is_valid_path(g, path) || sigma.len() != g.n() {
        return false;
    }
    let Some(&v1) = path.first() else {
        return true;
    };
    if sigma.rightmost(path.iter().copied()) != Some(v1) {
        return false;
    }
    match path.get(1) {
        None => true,
        Some(&v2) => sigma.rightmost(path.iter().copied().filter(|&w| g.has_edge(v1, w))) == Some(v2),
    }
}

pub fn is_normal(g: &Graph, sigma: &VertexOrdering, path: &[usize]) -> bool {
    let normal = is_typical(g, sigma, path)
        && (1..path.len()).all(|i| {
            let prev = path[i - 1];
            let rest = path[i..].iter().copied().filter(|&w| g.has_edge(prev, w));
            sigma.rightmost(rest) == Some(path[i])
        });
    debug_assert_eq!(
        normal,
        is_normal_via_rmn(g, sigma, path),
        "normality routes disagree on {path:?}"
    );
    normal
}

/// Normality decided by running RMN on `G[V(P)]` under `σ|V(P)` and
/// comparing with `path`.
pub fn is_normal_via_rmn(g: &Graph, sigma: &VertexOrdering, path: &[usize]) -> bool {
    if !is_valid_path(g, path) || sigma.len() != g.n() {
        return false;
    }
    let (Ok((h, map)), Ok((local_sigma, _))) = (g.induced_subgraph(path), sigma.restrict(path)) else {
        return false;
    };
    match rmn(&h, &local_sigma) {
        Ok(r) => r.cover.len() <= 1 && map.lift(r.ordering.sequence()) == path,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord1(seq: &[usize]) -> VertexOrdering {
        VertexOrdering::from_sequence(seq.iter().map(|v| v - 1).collect()).unwrap()
    }

    fn p1(seq: &[usize]) -> Vec<usize> {
        seq.iter().map(|v| v - 1).collect()
    }

    fn p4() -> Graph {
        Graph::from_edges_1based(4, [(1, 2), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn single_vertex() {
        let g = p4();
        let s = ord1(&[4, 3, 2, 1]);
        for v in 0..4 {
            assert!(is_typical(&g, &s, &[v]));
            assert!(is_normal(&g, &s, &[v]));
        }
    }

    #[test]
    fn p4_typical() {
        let g = p4();
        let s = ord1(&[4, 3, 2, 1]);
        assert!(is_typical(&g, &s, &p1(&[1, 2, 3, 4])));
        assert!(!is_typical(&g, &s, &p1(&[4, 3, 2, 1])));
    }

    #[test]
    fn p4_normal() {
        let g = p4();
        let s = ord1(&[4, 3, 2, 1]);
        assert!(is_normal(&g, &s, &p1(&[1, 2, 3, 4])));
        // 1 is rightmost of {1, 2} under σ, so only (1, 2) is normal
        assert!(is_normal(&g, &s, &p1(&[1, 2])));
        assert!(!is_normal(&g, &s, &p1(&[2, 1])));
        assert!(is_normal(&g, &s, &p1(&[3, 4])));
        assert!(!is_normal(&g, &s, &p1(&[4, 3])));
        assert!(!is_normal_via_rmn(&g, &s, &p1(&[4, 3])));
    }

    #[test]
    fn typical_but_not_normal() {
        // K4 under identity: normal order is 4,3,2,1
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = VertexOrdering::identity(4);
        assert!(is_typical(&g, &s, &[3, 2, 0, 1]));
        assert!(!is_normal(&g, &s, &[3, 2, 0, 1]));
        assert!(is_normal(&g, &s, &[3, 2, 1, 0]));
    }

    #[test]
    fn invalid_paths_are_rejected() {
        let g = p4();
        let s = ord1(&[4, 3, 2, 1]);
        assert!(!is_normal(&g, &s, &p1(&[1, 3])));
        assert!(!is_typical(&g, &s, &p1(&[1, 2, 1])));
    }
}
