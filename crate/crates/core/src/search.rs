//! Lexicographic depth-first search, its `π`-guided variant LDFS+, and the
//! rightmost-neighbor sweep (RMN) whose restarts segment a path cover.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, PathCover};
use crate::ordering::{require_umbrella_free, VertexOrdering};

/// An LDFS label: a strictly decreasing sequence of visit numbers, most
/// recent first. The empty label sorts below every non-empty one.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LdfsLabel {
    // oldest digit first so that prepending is a push
    rev: Vec<usize>,
}

impl LdfsLabel {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Label with the given digits, most recent first.
    pub fn from_digits(digits: &[usize]) -> Self {
        LdfsLabel {
            rev: digits.iter().rev().copied().collect(),
        }
    }

    pub fn prepend(&mut self, digit: usize) {
        debug_assert!(self.rev.last().is_none_or(|&d| d < digit));
        self.rev.push(digit);
    }

    /// Digits, most recent first.
    pub fn digits(&self) -> impl Iterator<Item = usize> + '_ {
        self.rev.iter().rev().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.rev.is_empty()
    }
}

impl Ord for LdfsLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.digits().cmp(other.digits())
    }
}

impl PartialOrd for LdfsLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shared label-driven traversal. `prefer(a, b)` breaks label ties and
/// returns true when `a` should be taken over `b`.
fn label_search<F>(g: &Graph, mut labels: Vec<LdfsLabel>, prefer: F) -> VertexOrdering
where
    F: Fn(usize, usize) -> bool,
{
    let n = g.n();
    let mut numbered = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    for i in 1..=n {
        let mut best: Option<usize> = None;
        for v in (0..n).filter(|&v| !numbered[v]) {
            best = match best {
                None => Some(v),
                Some(b) => match labels[v].cmp(&labels[b]) {
                    Ordering::Greater => Some(v),
                    Ordering::Equal if prefer(v, b) => Some(v),
                    _ => Some(b),
                },
            };
        }
        let v = best.expect("an unnumbered vertex remains");
        numbered[v] = true;
        seq.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                labels[w].prepend(i);
            }
        }
    }
    VertexOrdering::from_sequence(seq).expect("every vertex is numbered once")
}

/// Generic LDFS from `start`; ties go to the lowest vertex id.
pub fn ldfs(g: &Graph, start: usize) -> Result<VertexOrdering> {
    if start >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: start,
            n: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut labels = vec![LdfsLabel::empty(); g.n()];
    labels[start] = LdfsLabel::from_digits(&[0]);
    Ok(label_search(g, labels, |a, b| a < b))
}

/// LDFS+: every label tie goes to the vertex rightmost in `pi`.
///
/// Disconnected graphs are fine: once the remaining labels are all empty the
/// tie rule restarts in the rightmost unvisited vertex.
pub fn ldfs_plus(g: &Graph, pi: &VertexOrdering) -> Result<VertexOrdering> {
    pi.check_against(g)?;
    let labels = vec![LdfsLabel::empty(); g.n()];
    Ok(label_search(g, labels, |a, b| pi.precedes(b, a)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmnResult {
    /// Visit order.
    pub ordering: VertexOrdering,
    /// Maximal runs between restarts, in visit order.
    pub cover: PathCover,
}

/// Rightmost-neighbor sweep over `sigma`.
pub fn rmn(g: &Graph, sigma: &VertexOrdering) -> Result<RmnResult> {
    sigma.check_against(g)?;
    let n = g.n();
    let mut visited = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    let mut paths = Vec::new();
    // every position at or beyond `frontier` is visited
    let mut frontier = n;
    while seq.len() < n {
        while visited[sigma.vertex_at(frontier - 1)] {
            frontier -= 1;
        }
        let mut x = sigma.vertex_at(frontier - 1);
        let mut path = vec![x];
        visited[x] = true;
        seq.push(x);
        while let Some(y) = sigma.rightmost(g.neighbors(x).iter().copied().filter(|&y| !visited[y])) {
            visited[y] = true;
            seq.push(y);
            path.push(y);
            x = y;
        }
        paths.push(Path::new(path));
    }
    Ok(RmnResult {
        ordering: VertexOrdering::from_sequence(seq)?,
        cover: PathCover::new(paths),
    })
}

/// Minimum path cover of a cocomparability graph: RMN over LDFS+ of an
/// umbrella-free ordering `pi`.
pub fn min_path_cover(g: &Graph, pi: &VertexOrdering) -> Result<PathCover> {
    require_umbrella_free(g, pi)?;
    let sigma = ldfs_plus(g, pi)?;
    Ok(rmn(g, &sigma)?.cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::{find_bad_triple, ViolationKind};

    fn g1(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges_1based(n, edges.iter().copied()).unwrap()
    }

    fn ord1(seq: &[usize]) -> VertexOrdering {
        VertexOrdering::from_sequence(seq.iter().map(|v| v - 1).collect()).unwrap()
    }

    fn seq1(o: &VertexOrdering) -> Vec<usize> {
        o.sequence().iter().map(|v| v + 1).collect()
    }

    fn k(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn label_order() {
        let e = LdfsLabel::empty();
        let a = LdfsLabel::from_digits(&[3]);
        let b = LdfsLabel::from_digits(&[3, 2]);
        let c = LdfsLabel::from_digits(&[4]);
        assert!(e < a && a < b && b < c);
        assert_eq!(LdfsLabel::from_digits(&[0]).cmp(&e), Ordering::Greater);
        let mut l = LdfsLabel::empty();
        l.prepend(1);
        l.prepend(5);
        assert_eq!(l.digits().collect::<Vec<_>>(), vec![5, 1]);
    }

    #[test]
    fn ldfs_small() {
        assert_eq!(seq1(&ldfs(&Graph::empty(1), 0).unwrap()), vec![1]);
        assert_eq!(seq1(&ldfs(&k(3), 0).unwrap()), vec![1, 2, 3]);
        assert_eq!(ldfs(&Graph::empty(2), 0), Err(Error::Disconnected));
        assert!(matches!(ldfs(&k(3), 3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn ldfs_backtracks_to_most_recent() {
        // path 1-2-3 with an extra leaf 4 on 1: DFS must finish 2's branch first
        let g = g1(4, &[(1, 2), (2, 3), (1, 4)]);
        let s = ldfs(&g, 0).unwrap();
        assert_eq!(seq1(&s), vec![1, 2, 3, 4]);
        assert_eq!(find_bad_triple(&g, &s).unwrap(), None);
    }

    #[test]
    fn ldfs_plus_examples() {
        let p4 = g1(4, &[(1, 2), (2, 3), (3, 4)]);
        let s = ldfs_plus(&p4, &ord1(&[1, 2, 3, 4])).unwrap();
        assert_eq!(seq1(&s), vec![4, 3, 2, 1]);
        assert_eq!(find_bad_triple(&p4, &s).unwrap(), None);

        let e3 = Graph::empty(3);
        assert_eq!(seq1(&ldfs_plus(&e3, &ord1(&[1, 2, 3])).unwrap()), vec![3, 2, 1]);
        assert_eq!(seq1(&ldfs_plus(&Graph::empty(1), &ord1(&[1])).unwrap()), vec![1]);
        assert!(matches!(
            ldfs_plus(&e3, &ord1(&[1, 2])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn rmn_examples() {
        let p4 = g1(4, &[(1, 2), (2, 3), (3, 4)]);
        let r = rmn(&p4, &ord1(&[4, 3, 2, 1])).unwrap();
        assert_eq!(seq1(&r.ordering), vec![1, 2, 3, 4]);
        assert_eq!(r.cover.len(), 1);

        let r = rmn(&Graph::empty(3), &ord1(&[1, 2, 3])).unwrap();
        let paths: Vec<_> = r.cover.paths().iter().map(|p| p.vertices().to_vec()).collect();
        assert_eq!(paths, vec![vec![2], vec![1], vec![0]]);

        for s in [[1, 2, 3], [3, 1, 2], [2, 3, 1]] {
            let r = rmn(&k(3), &ord1(&s)).unwrap();
            assert_eq!(r.cover.len(), 1);
            assert_eq!(r.cover.paths()[0].len(), 3);
        }
    }

    #[test]
    fn rmn_cover_concatenates_to_ordering() {
        let g = g1(6, &[(1, 2), (3, 4), (4, 5)]);
        let r = rmn(&g, &VertexOrdering::identity(6)).unwrap();
        assert_eq!(r.cover.flatten(), r.ordering.sequence());
        assert!(r.cover.check(&g).is_ok());
    }

    #[test]
    fn min_path_cover_examples() {
        assert_eq!(min_path_cover(&k(3), &ord1(&[2, 3, 1])).unwrap().len(), 1);
        assert_eq!(min_path_cover(&Graph::empty(4), &VertexOrdering::identity(4)).unwrap().len(), 4);
        let p4 = g1(4, &[(1, 2), (2, 3), (3, 4)]);
        let c = min_path_cover(&p4, &ord1(&[1, 2, 3, 4])).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.paths()[0].len(), 4);
    }

    #[test]
    fn min_path_cover_rejects_umbrella() {
        let g = g1(3, &[(1, 3)]);
        match min_path_cover(&g, &ord1(&[1, 2, 3])) {
            Err(Error::Precondition(w)) => {
                assert_eq!(w.kind, ViolationKind::Umbrella);
                assert_eq!((w.a, w.b, w.c), (0, 1, 2));
            }
            other => panic!("expected precondition error, got {other:?}"),
        }
    }
}
