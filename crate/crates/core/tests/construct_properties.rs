use gvbounds_validation as reference;
use gvbounds::construct::{
    greedy_distance_coloring, greedy_lexicode, hl_independent_set, hl_run, verify_code, TriangleFreeRemainder,
    DEFAULT_TRIALS,
};
use gvbounds::oracle::{build_gilbert_graph, ExplicitGraph, DEFAULT_VERTEX_BUDGET as BUDGET};
use gvbounds::CodeParams;
use proptest::prelude::*;

fn gv_ceiling(n: u64, d: u64) -> usize {
    let v = reference::volume(n, d - 1);
    ((1u128 << n).div_ceil(v)) as usize
}

#[test]
fn lexicodes_are_verified_and_beat_gv() {
    for n in 1..=11u64 {
        for d in 1..=n {
            let mut book = greedy_lexicode(&CodeParams::binary(n, d).unwrap(), BUDGET).unwrap();
            let claimed = book.min_distance;
            assert!(verify_code(&mut book).unwrap() >= d);
            assert_eq!(book.min_distance, claimed);
            assert!(book.len() >= gv_ceiling(n, d), "n={n} d={d} size={}", book.len());
        }
    }
}

#[test]
fn lexicodes_match_backtracking_optimum_where_known() {
    // Small lengths where the lexicode is optimal.
    for (n, d) in [(4u64, 3u64), (5, 3), (6, 3), (7, 3), (6, 4), (7, 4)] {
        let book = greedy_lexicode(&CodeParams::binary(n, d).unwrap(), BUDGET).unwrap();
        assert_eq!(book.len(), reference::brute_max_code(n, d), "n={n} d={d}");
    }
}

#[test]
fn hl_on_gilbert_graphs_meets_floor_and_is_deterministic() {
    for n in 4..=9u64 {
        for d in 2..=4.min(n) {
            let g = build_gilbert_graph(&CodeParams::binary(n, d).unwrap(), BUDGET).unwrap();
            for seed in [0u64, 1, 99] {
                let a = hl_independent_set(&g, seed, 8).unwrap();
                let b = hl_independent_set(&g, seed, 8).unwrap();
                assert_eq!(a, b);
                assert!(a.len() >= gv_ceiling(n, d));
                assert!(a.min_distance >= d);
            }
        }
    }
}

#[test]
fn colorings_are_proper() {
    for n in 1..=8u64 {
        for d in 1..=n {
            let c = greedy_distance_coloring(n, d, BUDGET).unwrap();
            assert!(c.is_proper(), "n={n} d={d}");
            // A brute pair check, independent of the library's ball walk.
            for x in 0..1u64 << n {
                for y in x + 1..1u64 << n {
                    if reference::popcount(x ^ y) <= d {
                        assert_ne!(c.colors[x as usize], c.colors[y as usize]);
                    }
                }
            }
        }
    }
}

fn random_graph(nv: usize, mask: &[bool]) -> ExplicitGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..nv {
        for v in u + 1..nv {
            if mask[k % mask.len()] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    ExplicitGraph::from_edges(nv, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hl_output_is_independent_and_maximal(
        nv in 1usize..40,
        mask in proptest::collection::vec(any::<bool>(), 1..200),
        seed in any::<u64>(),
    ) {
        let g = random_graph(nv, &mask);
        let rem = TriangleFreeRemainder::new(&g);
        let out = hl_run(&g, &rem, seed, DEFAULT_TRIALS);
        prop_assert!(g.is_independent(&out.vertices));
        let max_deg = (0..nv).map(|v| g.degree(v)).max().unwrap_or(0);
        prop_assert!(out.vertices.len() >= nv.div_ceil(max_deg + 1));
        for v in 0..nv {
            prop_assert!(out.vertices.contains(&v) || g.neighbors(v).iter().any(|&u| out.vertices.contains(&(u as usize))));
        }
        prop_assert_eq!(out, hl_run(&g, &rem, seed, DEFAULT_TRIALS));
    }

    #[test]
    fn remainder_is_triangle_free(nv in 3usize..30, mask in proptest::collection::vec(any::<bool>(), 1..120)) {
        let g = random_graph(nv, &mask);
        let rem = TriangleFreeRemainder::new(&g);
        for u in 0..nv {
            for &v in g.neighbors(u) {
                for &w in g.neighbors(v as usize) {
                    let all_alive = rem.alive[u] && rem.alive[v as usize] && rem.alive[w as usize];
                    prop_assert!(!(all_alive && g.has_edge(u, w as usize)));
                }
            }
        }
    }
}
