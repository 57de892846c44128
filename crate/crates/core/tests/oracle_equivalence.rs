use gvbounds_validation as reference;
use gvbounds::combinatorics::johnson_intersection_number;
use gvbounds::oracle::{
    build_gilbert_graph, build_sphere_graph, degree_profile, exact_max_independent_set, graph_stats,
    DEFAULT_VERTEX_BUDGET as BUDGET,
};
use gvbounds::sphere::{
    e_johnson, e_qary, e_theorem1, heavy_weight_degree_floor, johnson_sphere_edge_count, qary_sphere_degree,
    qary_sphere_edge_count, sphere_degree, sphere_edge_count,
};
use gvbounds::{CodeParams, Count, Rational};

fn count(x: u64) -> Count {
    Count::from(x)
}

#[test]
fn binary_degrees_and_edges_match_brute_force() {
    for n in 2..=8u64 {
        for d in 2..=n {
            let params = CodeParams::binary(n, d).unwrap();
            let (degrees, edges) = reference::binary_sphere(n, d - 1);
            for (&w, set) in &degrees {
                assert_eq!(set.len(), 1, "weight class {w} not uniform at n={n} d={d}");
                let deg = *set.iter().next().unwrap();
                assert_eq!(sphere_degree(&params, w).unwrap(), count(deg), "n={n} d={d} w={w}");
            }
            assert_eq!(sphere_edge_count(&params), count(edges), "n={n} d={d}");
            assert_eq!(e_theorem1(n, d - 1) * count(3), count(edges), "n={n} d={d}");
        }
    }
}

#[test]
fn library_oracle_agrees_with_test_oracle() {
    for n in 3..=7u64 {
        for d in 2..=n {
            let params = CodeParams::binary(n, d).unwrap();
            let g = build_sphere_graph(&params, BUDGET).unwrap();
            let (degrees, edges) = reference::binary_sphere(n, d - 1);
            assert_eq!(g.n_edges(), edges);
            let profile = degree_profile(&g);
            assert_eq!(profile, degrees, "n={n} d={d}");
        }
    }
}

#[test]
fn qary_edges_match_brute_force() {
    for q in 2..=4u64 {
        for n in 1..=5u64 {
            for d in 2..=n {
                let params = CodeParams::qary(n, d, q).unwrap();
                let edges = reference::qary_sphere_edges(n, d - 1, q);
                assert_eq!(qary_sphere_edge_count(&params), count(edges), "q={q} n={n} d={d}");
                let three_e = &e_qary(n, d - 1, q).unwrap() * &Rational::from_i64(3, 1).unwrap();
                assert_eq!(three_e, Rational::from_count(&count(edges)), "q={q} n={n} d={d}");
            }
        }
    }
}

#[test]
fn qary_reduces_to_binary() {
    for n in 2..=8u64 {
        for d in 2..=n {
            let b = CodeParams::binary(n, d).unwrap();
            let q = CodeParams::qary(n, d, 2).unwrap();
            for w in 1..d {
                assert_eq!(qary_sphere_degree(&q, w).unwrap(), sphere_degree(&b, w).unwrap());
            }
            assert_eq!(e_qary(n, d - 1, 2).unwrap(), Rational::from_count(&e_theorem1(n, d - 1)));
        }
    }
}

#[test]
fn johnson_numbers_and_edges_match_brute_force() {
    for n in 2..=7u64 {
        for w in 1..=4.min(n) {
            for k in 0..=w {
                for i in 0..=w {
                    for j in 0..=w {
                        if let Some(p) = reference::johnson_p(n, w, i, j, k) {
                            assert_eq!(johnson_intersection_number(n, w, i, j, k), count(p), "n={n} w={w} i={i} j={j} k={k}");
                        }
                    }
                }
            }
            for r in 1..w {
                let edges = reference::johnson_sphere_edges(n, r, w);
                assert_eq!(johnson_sphere_edge_count(n, r, w), count(edges), "n={n} w={w} r={r}");
                let three_e = &e_johnson(n, r, w).unwrap() * &Rational::from_i64(3, 1).unwrap();
                assert_eq!(three_e, Rational::from_count(&count(edges)));
            }
        }
    }
}

#[test]
fn heavy_vertices_meet_degree_floor() {
    for n in (2..=10u64).step_by(2) {
        let floor = heavy_weight_degree_floor(n).unwrap();
        let (degrees, _) = reference::binary_sphere(n, n / 2);
        for &deg in &degrees[&(n / 2)] {
            assert!(count(deg + 1) >= floor, "n={n} deg={deg}");
        }
    }
}

#[test]
fn gilbert_graph_triangles_follow_transitivity() {
    for n in 3..=9u64 {
        for d in 2..=n.min(5) {
            let params = CodeParams::binary(n, d).unwrap();
            let g = build_gilbert_graph(&params, BUDGET).unwrap();
            let stats = graph_stats(&g);
            let delta = reference::volume(n, d - 1) as u64 - 1;
            assert!((0..g.n_vertices()).all(|v| g.degree(v) as u64 == delta));
            let t = sphere_edge_count(&params);
            assert_eq!(stats.neighborhood_edges_max, t);
            assert_eq!(stats.triangle_count * count(3), count(1 << n) * t);
        }
    }
}

#[test]
fn exact_solver_matches_plain_backtracking() {
    for n in 2..=6u64 {
        for d in 1..=n {
            let params = CodeParams::binary(n, d).unwrap();
            let g = build_gilbert_graph(&params, BUDGET).unwrap();
            let book = exact_max_independent_set(&g).unwrap();
            assert_eq!(book.len(), reference::brute_max_code(n, d), "n={n} d={d}");
        }
    }
}
