use proptest::prelude::*;

use cocomp_core::generators::{generate, Family, GenSpec};
use cocomp_core::longest_path::{
    build_dp, longest_path, longest_path_on_sigma, AugmentedOrdering, DpOptions,
};
use cocomp_core::normal::{is_normal, is_normal_via_rmn};
use cocomp_core::oracle::{
    brute_is_maximal_path, brute_longest_path, brute_min_path_cover, OracleLimits,
};
use cocomp_core::ordering::{find_bad_triple, is_i_ordering, is_ldfs_ordering, is_umbrella_free};
use cocomp_core::search::{ldfs, ldfs_plus, min_path_cover, rmn};
use cocomp_core::{Graph, VertexOrdering};

fn instance(max_n: usize) -> impl Strategy<Value = (Graph, VertexOrdering)> {
    (
        prop::sample::select(Family::ALL.to_vec()),
        1..=max_n,
        prop::sample::select(vec![0.2, 0.5, 0.8]),
        any::<u64>(),
    )
        .prop_map(|(f, n, p, seed)| generate(&GenSpec::new(f, n, p, seed)).unwrap())
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_involution(g in any_graph(9)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_on_everything_is_identity(g in any_graph(9)) {
        let all: Vec<usize> = (0..g.n()).collect();
        let (h, _) = g.induced_subgraph(&all).unwrap();
        prop_assert_eq!(h, g);
    }

    #[test]
    fn interval_order_is_umbrella_free_and_ldfs((g, o) in (1usize..=14, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, p, s)| generate(&GenSpec::new(Family::Interval, n, p, s)).unwrap()))
    {
        prop_assert!(is_i_ordering(&g, &o).unwrap());
        prop_assert!(is_umbrella_free(&g, &o).unwrap());
        prop_assert!(is_ldfs_ordering(&g, &o).unwrap());
    }

    #[test]
    fn umbrella_free_restricts((g, o) in instance(12), mask in any::<u16>()) {
        let sub: Vec<usize> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
        let (h, _) = g.induced_subgraph(&sub).unwrap();
        let (hs, _) = o.restrict(&sub).unwrap();
        prop_assert!(is_umbrella_free(&h, &hs).unwrap());
    }

    #[test]
    fn ldfs_yields_ldfs_ordering(g in any_graph(9)) {
        for comp in g.components() {
            let (h, _) = g.induced_subgraph(&comp).unwrap();
            for start in 0..h.n() {
                let s = ldfs(&h, start).unwrap();
                prop_assert_eq!(s.vertex_at(0), start);
                prop_assert_eq!(find_bad_triple(&h, &s).unwrap(), None);
            }
        }
    }

    #[test]
    fn ldfs_plus_is_umbrella_free_ldfs((g, pi) in instance(14)) {
        let s = ldfs_plus(&g, &pi).unwrap();
        prop_assert!(is_umbrella_free(&g, &s).unwrap());
        prop_assert!(is_ldfs_ordering(&g, &s).unwrap());
    }

    #[test]
    fn rightmost_nonneighbor_moves_first((g, pi) in instance(14)) {
        let r = rmn(&g, &pi).unwrap();
        let plus = ldfs_plus(&g, &pi).unwrap();
        for x in 0..g.n() {
            for y in 0..g.n() {
                if x != y && !g.has_edge(x, y) && pi.precedes(y, x) {
                    prop_assert!(r.ordering.precedes(x, y), "rmn: {} vs {}", x, y);
                    prop_assert!(plus.precedes(x, y), "ldfs+: {} vs {}", x, y);
                }
            }
        }
    }

    #[test]
    fn rmn_cover_partitions((g, pi) in instance(14)) {
        let r = rmn(&g, &pi).unwrap();
        prop_assert!(r.cover.check(&g).is_ok());
        prop_assert_eq!(r.cover.flatten(), r.ordering.sequence().to_vec());
    }

    #[test]
    fn min_cover_is_optimal((g, pi) in instance(10)) {
        let cover = min_path_cover(&g, &pi).unwrap();
        prop_assert!(cover.check(&g).is_ok());
        let best = brute_min_path_cover(&g, &OracleLimits::default()).unwrap();
        prop_assert_eq!(cover.len(), best.len());
    }

    #[test]
    fn longest_path_is_optimal_and_normal((g, pi) in instance(12)) {
        let r = longest_path(&g, &pi, &DpOptions::default()).unwrap();
        prop_assert!(r.path.check(&g).is_ok());
        prop_assert!(is_normal(&g, &r.sigma, r.path.vertices()));
        prop_assert!(is_normal_via_rmn(&g, &r.sigma, r.path.vertices()));
        let best = brute_longest_path(&g, &OracleLimits::default()).unwrap();
        prop_assert_eq!(r.path.len(), best.len());
    }

    #[test]
    fn table_entries_reconstruct((g, pi) in instance(10)) {
        let sigma = ldfs_plus(&g, &pi).unwrap();
        let aug = AugmentedOrdering::new(&g, sigma.clone()).unwrap();
        let table = build_dp(&g, &aug, &DpOptions::default()).unwrap();
        let n = g.n();
        for i in 0..n {
            for j in i..n {
                let members = aug.g_ij(i, j);
                let (h, map) = g.induced_subgraph(&aug.to_vertices(&members)).unwrap();
                let (hs, _) = sigma.restrict(map.parents()).unwrap();
                for k in i..=j {
                    let len = table.length(i, j, k);
                    prop_assert_eq!(len.is_some(), aug.in_g_ij(i, j, k).unwrap());
                    let Some(len) = len else { continue };
                    prop_assert!(len >= 1 && len <= j - i + 1);
                    if i < n - 1 && k > i {
                        if let Some(up) = table.length(i + 1, j, k) {
                            prop_assert!(len >= up);
                        }
                    }
                    let pos = table.reconstruct(i, j, k).unwrap();
                    prop_assert_eq!(pos.len(), len);
                    prop_assert_eq!(*pos.last().unwrap(), k);
                    prop_assert!(pos.iter().all(|p| members.contains(p)));
                    let local: Vec<usize> = aug
                        .to_vertices(&pos)
                        .into_iter()
                        .map(|v| map.to_local(v).unwrap())
                        .collect();
                    prop_assert!(is_normal(&h, &hs, &local));
                }
            }
        }
    }

    #[test]
    fn g_ij_structure((g, pi) in instance(14)) {
        let sigma = ldfs_plus(&g, &pi).unwrap();
        let aug = AugmentedOrdering::new(&g, sigma).unwrap();
        let n = g.n();
        for i in 0..n {
            for j in i..n {
                let whole = aug.g_ij(i, j);
                let mut expect: Vec<usize> = whole.iter().copied().filter(|&p| p != i).collect();
                expect.sort_unstable();
                let next = if i < j { aug.g_ij(i + 1, j) } else { Vec::new() };
                prop_assert_eq!(&next, &expect);
                for &x in &next {
                    if x >= i + 2 {
                        for y in aug.g_ij(i + 1, x - 1) {
                            prop_assert!(whole.contains(&y), "({}, {}) x={} y={}", i, j, x, y);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn interval_shortcut_matches_pipeline((g, o) in (1usize..=40, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, p, s)| generate(&GenSpec::new(Family::Interval, n, p, s)).unwrap()))
    {
        let direct = longest_path_on_sigma(&g, o.clone(), &DpOptions::default()).unwrap();
        let full = longest_path(&g, &o, &DpOptions::default()).unwrap();
        prop_assert_eq!(direct.path.len(), full.path.len());
    }

    #[test]
    fn oracle_length_is_relabel_invariant(g in any_graph(9), perm in shuffled(9)) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let h = g.relabel(&perm).unwrap();
        let limits = OracleLimits::default();
        prop_assert_eq!(
            brute_longest_path(&g, &limits).unwrap().len(),
            brute_longest_path(&h, &limits).unwrap().len()
        );
    }

    #[test]
    fn oracle_longest_is_maximal(g in any_graph(9)) {
        let limits = OracleLimits::default();
        let p = brute_longest_path(&g, &limits).unwrap();
        prop_assert!(brute_is_maximal_path(&g, p.vertices(), &limits).unwrap());
    }

    #[test]
    fn generators_are_deterministic(f in prop::sample::select(Family::ALL.to_vec()), n in 0usize..30,
        p in 0.0f64..=1.0, seed in any::<u64>())
    {
        let spec = GenSpec::new(f, n, p, seed);
        let (g1, o1) = generate(&spec).unwrap();
        let (g2, o2) = generate(&spec).unwrap();
        prop_assert_eq!(g1, g2);
        prop_assert_eq!(o1, o2);
    }

    #[test]
    fn generated_orders_are_umbrella_free((g, o) in instance(30)) {
        prop_assert!(is_umbrella_free(&g, &o).unwrap());
    }
}

/// Quadruple enumeration straight from the definition of a bad triple.
fn bad_triple_exists(g: &Graph, n: usize) -> bool {
    (0..n).any(|a| {
        ((a + 1)..n).any(|b| {
            !g.has_edge(a, b)
                && ((b + 1)..n).any(|c| {
                    g.has_edge(a, c) && !((a + 1)..b).any(|d| g.has_edge(d, b) && !g.has_edge(d, c))
                })
        })
    })
}

#[test]
fn bad_triple_scan_exhaustive_up_to_6() {
    for n in 0..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        let id = VertexOrdering::identity(n);
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            let found = find_bad_triple(&g, &id).unwrap();
            assert_eq!(found.is_some(), bad_triple_exists(&g, n), "n={n} mask={mask:#x}");
            if let Some(w) = found {
                assert!(w.a < w.b && w.b < w.c);
                assert!(g.has_edge(w.a, w.c) && !g.has_edge(w.a, w.b));
            }
        }
    }
}

#[test]
fn every_maximal_path_set_has_a_normal_ordering() {
    use cocomp_core::oracle::{maximal_path_sets, paths_spanning};
    let limits = OracleLimits::default();
    for seed in 0..60u64 {
        let f = Family::ALL[(seed % 3) as usize];
        let (g, pi) = generate(&GenSpec::new(f, 1 + (seed % 8) as usize, 0.5, seed)).unwrap();
        let sigma = ldfs_plus(&g, &pi).unwrap();
        for set in maximal_path_sets(&g, &limits).unwrap() {
            let ok = paths_spanning(&g, set).iter().any(|p| is_normal(&g, &sigma, p));
            assert!(ok, "seed {seed} set {set:#b}");
        }
    }
}
