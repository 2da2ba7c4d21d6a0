use cocomp_core::format::{format_ordering, parse_graph};
use cocomp_core::longest_path::{longest_path, AugmentedOrdering, DpOptions};
use cocomp_core::normal::{is_normal, is_normal_via_rmn, is_typical};
use cocomp_core::oracle::{brute_longest_path, OracleLimits};
use cocomp_core::ordering::{find_bad_triple, is_ldfs_ordering, is_umbrella_free};
use cocomp_core::search::ldfs;
use cocomp_core::{Graph, VertexOrdering};

/// Five-vertex LDFS illustration: edges ed, ec, dc, da, ca, cb.
const LDFS_FIGURE: &str = "e d\ne c\nd c\nd a\nc a\nc b\n";

#[test]
fn ldfs_figure_from_e() {
    let g = parse_graph(LDFS_FIGURE).unwrap();
    let e = g.vertex_by_label("e").unwrap();
    let sigma = ldfs(&g, e).unwrap();
    assert_eq!(format_ordering(&g, &sigma), "e d c a b");
    assert!(is_ldfs_ordering(&g, &sigma).unwrap());
}

#[test]
fn ldfs_figure_label_comparisons() {
    // Replays the narrative: after e and d, c outranks a; after c, a outranks b.
    let g = parse_graph(LDFS_FIGURE).unwrap();
    let id = |l: &str| g.vertex_by_label(l).unwrap();
    let (a, b, c, d, e) = (id("a"), id("b"), id("c"), id("d"), id("e"));
    // labels as digit lists, most recent first
    let label = |v: usize, visited: &[usize]| -> Vec<usize> {
        visited
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &w)| g.has_edge(v, w))
            .map(|(i, _)| i + 1)
            .collect()
    };
    assert_eq!(label(c, &[e, d]), vec![2, 1]);
    assert_eq!(label(a, &[e, d]), vec![2]);
    assert!(label(c, &[e, d]) > label(a, &[e, d]));
    assert_eq!(label(a, &[e, d, c]), vec![3, 2]);
    assert_eq!(label(b, &[e, d, c]), vec![3]);
    assert!(label(a, &[e, d, c]) > label(b, &[e, d, c]));
}

/// Nine-vertex cocomparability graph with σ = (u1, …, u9). Encodes the stated
/// facts: N(u9) ∩ {u3..u8} = {u7}; (u8, u5, u6, u3, u4) is a path with u8u6,
/// u6u4 ∉ E; u2 is a d-vertex of (u1, u3, u4) and u6 of (u5, u7, u8). The
/// remaining edge u3u5 completes it to an LDFS umbrella-free ordering.
fn nine_vertex() -> Graph {
    Graph::from_edges_1based(
        9,
        [
            (1, 2),
            (1, 4),
            (2, 3),
            (3, 4),
            (3, 5),
            (3, 6),
            (5, 6),
            (5, 8),
            (6, 7),
            (7, 8),
            (7, 9),
        ],
    )
    .unwrap()
}

fn u(k: usize) -> usize {
    k - 1
}

#[test]
fn nine_vertex_ordering_is_ldfs_umbrella_free() {
    let g = nine_vertex();
    let sigma = VertexOrdering::identity(9);
    assert!(is_umbrella_free(&g, &sigma).unwrap());
    assert!(is_ldfs_ordering(&g, &sigma).unwrap());
}

#[test]
fn g_3_8_membership() {
    let g = nine_vertex();
    let aug = AugmentedOrdering::new(&g, VertexOrdering::identity(9)).unwrap();
    let members: Vec<usize> = aug.g_ij(u(3), u(8)).into_iter().map(|p| p + 1).collect();
    assert_eq!(members, vec![3, 4, 5, 6, 8]);
    for k in 1..=9 {
        assert!(aug.in_g_ij(0, 8, u(k)).unwrap(), "G(1, n) = G");
    }
}

#[test]
fn normal_path_in_g_3_8() {
    let g = nine_vertex();
    let sigma = VertexOrdering::identity(9);
    let p: Vec<usize> = [8, 5, 6, 3, 4].into_iter().map(u).collect();
    assert!(is_typical(&g, &sigma, &p));
    assert!(is_normal(&g, &sigma, &p));
    assert!(is_normal_via_rmn(&g, &sigma, &p));
    // normality is also intrinsic to G(3, 8)
    let aug = AugmentedOrdering::new(&g, sigma.clone()).unwrap();
    let (h, map) = g.induced_subgraph(&aug.g_ij(u(3), u(8))).unwrap();
    let (hs, _) = sigma.restrict(map.parents()).unwrap();
    let local: Vec<usize> = p.iter().map(|&v| map.to_local(v).unwrap()).collect();
    assert!(is_normal(&h, &hs, &local));
}

#[test]
fn closure_example_triples() {
    let g = nine_vertex();
    let sigma = VertexOrdering::identity(9);
    // σ' = (u1, u3, u4, u5, u7, u8) has the bad triple (u1, u3, u4)
    let sub: Vec<usize> = [1, 3, 4, 5, 7, 8].into_iter().map(u).collect();
    let (h, map) = g.induced_subgraph(&sub).unwrap();
    let (hs, _) = sigma.restrict(&sub).unwrap();
    let w = find_bad_triple(&h, &hs).unwrap().unwrap();
    assert_eq!(
        [w.a, w.b, w.c].map(|v| map.to_parent(v) + 1),
        [1, 3, 4]
    );
    // adding u2 and u6 as d-vertices repairs both
    let closure: Vec<usize> = (1..=8).map(u).collect();
    let (h, _) = g.induced_subgraph(&closure).unwrap();
    let (hs, _) = sigma.restrict(&closure).unwrap();
    assert!(is_ldfs_ordering(&h, &hs).unwrap());
}

#[test]
fn nine_vertex_longest_path_matches_oracle() {
    let g = nine_vertex();
    let r = longest_path(&g, &VertexOrdering::identity(9), &DpOptions::default()).unwrap();
    let brute = brute_longest_path(&g, &OracleLimits::default()).unwrap();
    assert_eq!(r.path.len(), brute.len());
    assert!(is_normal(&g, &r.sigma, r.path.vertices()));
}
