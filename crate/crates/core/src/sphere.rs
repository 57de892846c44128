//! Closed-form degrees and edge counts of the sphere graph: the subgraph of
//! the Gilbert graph induced by the punctured ball of radius `d' = d-1`
//! around the zero word. Binary, q-ary and constant-weight variants.
//!
//! Internally every sum is written over the ball radius `r`; the public
//! functions taking [`CodeParams`] use `r = d'`, while [`e_theorem1`],
//! [`e_qary`] and [`e_johnson`] take the radius directly.

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{binary_entropy, binomial, johnson_intersection_number, BinomialRows};
use crate::error::{invalid, Error, Result};
use crate::num::{ceil_half_plus, Count, Rational};
use crate::params::{CodeParams, SplitParams};

fn binary_rows(n: u64, r: u64) -> BinomialRows {
    let lo = n.saturating_sub(r);
    BinomialRows::new((0..=r).chain(lo..=n), r)
}

/// `deg(v) + 1` for a weight-`w` vertex of the binary sphere graph of radius `r`.
fn closed_ball_hits(rows: &BinomialRows, n: u64, r: u64, w: u64) -> Count {
    let mut total = Count::zero();
    for i in 1..=r {
        let lo = ceil_half_plus(w as i64 + i as i64 - r as i64);
        for j in lo..=w.min(i) {
            total += rows.get(w, j as i64) * rows.get(n - w, i as i64 - j as i64);
        }
    }
    total
}

/// `Σ_{w=1}^{r} C(n,w)·deg_w`, i.e. twice the edge count of the binary sphere graph.
fn binary_degree_sum(n: u64, r: u64) -> Count {
    let r = r.min(n);
    if r == 0 {
        return Count::zero();
    }
    let rows = binary_rows(n, r);
    (1..=r)
        .into_par_iter()
        .map(|w| {
            let deg = closed_ball_hits(&rows, n, r, w)
                .checked_sub(&Count::one())
                .expect("a vertex always counts itself");
            rows.get(n, w as i64) * &deg
        })
        .reduce(Count::zero, |a, b| a + b)
}

fn check_weight(params: &CodeParams, w: u64) -> Result<()> {
    if w == 0 || w > params.d_prime() {
        return Err(invalid(format!(
            "vertex weight {w} outside 1..={} for n={} d={}",
            params.d_prime(),
            params.n(),
            params.d()
        )));
    }
    Ok(())
}

/// Degree of a weight-`w` vertex in the binary sphere graph.
pub fn sphere_degree(params: &CodeParams, w: u64) -> Result<Count> {
    check_weight(params, w)?;
    let (n, r) = (params.n(), params.d_prime());
    let rows = binary_rows(n, r);
    closed_ball_hits(&rows, n, r, w).checked_sub(&Count::one())
}

/// Number of edges of the binary sphere graph for minimum distance `d`.
pub fn sphere_edge_count(params: &CodeParams) -> Count {
    binary_degree_sum(params.n(), params.d_prime())
        .exact_div(&Count::from(2u64))
        .expect("handshake sum is even")
}

/// The triple sum `e(n, d)` weighted by 1/6. Since `e(n, d') = e(G_S)/3` and the
/// Gilbert graph has `2ⁿ·e(G_S)/3` triangles, the division is always exact.
pub fn e_theorem1(n: u64, d: u64) -> Count {
    binary_degree_sum(n, d)
        .exact_div(&Count::from(6u64))
        .expect("binary sphere-graph edge count is divisible by 3")
}

/// `Σ_i Σ_j Σ_k C(w,j) C(w-j,k) C(n-w,i-c) (q-2)^k (q-1)^{i-c}` for a weight-`w`
/// vertex of the q-ary sphere graph of radius `r`, where `c = j+k`. Counts the
/// vertex itself once.
fn qary_closed_ball_hits(n: u64, r: u64, q: u64, w: u64) -> Count {
    let mut total = Count::zero();
    for i in 1..=r {
        let a = w.min(i);
        for j in 0..=a {
            let b = ((w + i) as i64 - j as i64 - (r + j).min(n) as i64).max(0) as u64;
            for k in b..=(a - j) {
                let c = j + k;
                if c > i {
                    continue;
                }
                total += binomial(w, j as i64)
                    * binomial(w - j, k as i64)
                    * binomial(n - w, (i - c) as i64)
                    * Count::pow(q - 2, k as u32)
                    * Count::pow(q - 1, (i - c) as u32);
            }
        }
    }
    total
}

/// Degree of a weight-`w` vertex in the q-ary sphere graph.
pub fn qary_sphere_degree(params: &CodeParams, w: u64) -> Result<Count> {
    check_weight(params, w)?;
    qary_closed_ball_hits(params.n(), params.d_prime(), params.q(), w).checked_sub(&Count::one())
}

fn qary_degree_sum(n: u64, r: u64, q: u64) -> Count {
    let r = r.min(n);
    (1..=r)
        .into_par_iter()
        .map(|w| {
            let deg = qary_closed_ball_hits(n, r, q, w)
                .checked_sub(&Count::one())
                .expect("a vertex always counts itself");
            binomial(n, w as i64) * Count::pow(q - 1, w as u32) * deg
        })
        .reduce(Count::zero, |a, b| a + b)
}

/// Edge count of the q-ary sphere graph for minimum distance `d`.
pub fn qary_sphere_edge_count(params: &CodeParams) -> Count {
    qary_degree_sum(params.n(), params.d_prime(), params.q())
        .exact_div(&Count::from(2u64))
        .expect("handshake sum is even")
}

/// `e_q(n, d) = e(G_{q,S})/3` for ball radius `d`. Exact rational: for `q`
/// divisible by 3 the edge count need not be.
pub fn e_qary(n: u64, d: u64, q: u64) -> Result<Rational> {
    if q < 2 {
        return Err(invalid(format!("alphabet size q={q} must be at least 2")));
    }
    Rational::from_counts(&qary_degree_sum(n, d, q), &Count::from(6u64))
}

/// Degree of a vertex at Johnson distance `k` from the centre in the
/// constant-weight sphere graph of radius `r`.
pub fn johnson_sphere_degree(n: u64, r: u64, w: u64, k: u64) -> Count {
    let mut total = Count::zero();
    for i in 1..=r {
        for j in 1..=r {
            total += johnson_intersection_number(n, w, i, j, k);
        }
    }
    total
}

fn johnson_degree_sum(n: u64, r: u64, w: u64) -> Count {
    (1..=r.min(w))
        .into_par_iter()
        .map(|k| {
            binomial(w, k as i64)
                * binomial(n - w, k as i64)
                * johnson_sphere_degree(n, r, w, k)
        })
        .reduce(Count::zero, |a, b| a + b)
}

/// Edge count of the constant-weight sphere graph of Johnson radius `r`.
pub fn johnson_sphere_edge_count(n: u64, r: u64, w: u64) -> Count {
    johnson_degree_sum(n, r, w)
        .exact_div(&Count::from(2u64))
        .expect("handshake sum is even")
}

/// `e(n, d, w)`: the Johnson-scheme triple sum weighted by 1/6, exact.
pub fn e_johnson(n: u64, d: u64, w: u64) -> Result<Rational> {
    if w > n {
        return Err(invalid(format!("weight w={w} exceeds length n={n}")));
    }
    Rational::from_counts(&johnson_degree_sum(n, d, w), &Count::from(6u64))
}

/// Degree sums over the light and heavy weight classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSplit {
    /// First weight counted in the heavy class.
    pub boundary: u64,
    pub e1: Count,
    pub e2: Count,
}

/// Splits `Σ_v (deg(v)+1)` at weight `⌊λd'⌋`: `e1` covers weights
/// `1..⌊λd'⌋-1`, `e2` the rest. A boundary below 1 is raised to 1, leaving `e1`
/// empty. Always `e1 + e2 = 2·e(G_S) + Σ_{i=1}^{d'} C(n,i)`.
pub fn split_e1_e2(params: &CodeParams, split: &SplitParams) -> Result<WeightSplit> {
    let (n, r) = (params.n(), params.d_prime());
    if r == 0 {
        return Err(invalid("sphere graph is empty for d = 1"));
    }
    if 2 * r >= n {
        return Err(invalid(format!("split needs d' < n/2, got n={n} d'={r}")));
    }
    let boundary = ((split.lambda() * r as f64).floor() as u64).max(1);
    let rows = binary_rows(n, r);
    let weight_class = |w: u64| rows.get(n, w as i64) * &closed_ball_hits(&rows, n, r, w);
    let e1 = (1..boundary).map(weight_class).sum();
    let e2 = (boundary..=r).map(weight_class).sum();
    Ok(WeightSplit { boundary, e1, e2 })
}

/// Base-2 exponents of the entropy upper bounds on `e1`, `h1`, `h2` and `e2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EntropyExponents {
    /// `n(H₂(δ) + H₂(λδ))`.
    pub e1: f64,
    /// `n(λδ H₂(μ/λ) + (1-λδ) H₂(μδ/(1-λδ)))`.
    pub h1: f64,
    /// `log₂(nλδ) + n(λδ + (1-λδ) H₂((δ-λδ/2)/(1-λδ)))`.
    pub h2: f64,
    /// `log₂(nλδ+1) + n(H₂(δ) + λδ + (1-λδ) H₂((δ-λδ/2)/(1-λδ)))`.
    pub e2: f64,
}

pub fn entropy_upper_bounds(params: &CodeParams, split: &SplitParams) -> Result<EntropyExponents> {
    let n = params.n() as f64;
    if 2 * params.d_prime() >= params.n() {
        return Err(invalid("entropy bounds need d' < n/2"));
    }
    let delta = params.delta();
    let (lambda, mu) = (split.lambda(), split.mu());
    let ld = lambda * delta;
    let h = binary_entropy;
    let heavy_tail = h((delta - ld / 2.0) / (1.0 - ld))?;
    let e1 = n * (h(delta)? + h(ld)?);
    let h1 = n * (ld * h(mu / lambda)? + (1.0 - ld) * h(mu * delta / (1.0 - ld))?);
    let h2 = (n * ld).log2() + n * (ld + (1.0 - ld) * heavy_tail);
    let e2 = (n * ld + 1.0).log2() + n * (h(delta)? + ld + (1.0 - ld) * heavy_tail);
    Ok(EntropyExponents { e1, h1, h2, e2 })
}

/// `⌈½ Σ_{w=1}^{n/2} C(n,w)⌉`: the floor on `deg(v)+1` for vertices of weight
/// `d' = n/2`.
pub fn heavy_weight_degree_floor(n: u64) -> Result<Count> {
    if !n.is_multiple_of(2) || n == 0 {
        return Err(Error::InvalidParams(format!("n={n} must be even and positive")));
    }
    let s: Count = (1..=n / 2).map(|w| binomial(n, w as i64)).sum();
    Ok(s.div_ceil(&Count::from(2u64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64, d: u64) -> CodeParams {
        CodeParams::binary(n, d).unwrap()
    }

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn degree_examples() {
        assert_eq!(sphere_degree(&p(3, 2), 1).unwrap(), c(0));
        assert_eq!(sphere_degree(&p(4, 3), 1).unwrap(), c(6));
        assert_eq!(sphere_degree(&p(4, 3), 2).unwrap(), c(6));
        assert!(sphere_degree(&p(4, 3), 0).is_err());
        assert!(sphere_degree(&p(4, 3), 3).is_err());
    }

    #[test]
    fn edge_examples() {
        assert_eq!(sphere_edge_count(&p(4, 3)), c(30));
        assert_eq!(sphere_edge_count(&p(3, 2)), c(0));
        assert_eq!(sphere_edge_count(&p(7, 1)), c(0));
        assert_eq!(e_theorem1(4, 2), c(10));
        assert_eq!(e_theorem1(9, 0), c(0));
    }

    #[test]
    fn theorem1_sum_is_a_third_of_the_edges() {
        for n in 1..=20 {
            for d in 1..=n {
                let params = p(n, d);
                assert_eq!(
                    e_theorem1(n, d - 1) * c(3),
                    sphere_edge_count(&params),
                    "n={n} d={d}"
                );
            }
        }
    }

    #[test]
    fn qary_reduces_to_binary() {
        for n in 1..=8 {
            for d in 2..=n {
                let b = p(n, d);
                let q = CodeParams::qary(n, d, 2).unwrap();
                for w in 1..d {
                    assert_eq!(qary_sphere_degree(&q, w).unwrap(), sphere_degree(&b, w).unwrap());
                }
            }
            for d in 0..=n {
                assert_eq!(e_qary(n, d, 2).unwrap(), Rational::from_count(&e_theorem1(n, d)));
            }
        }
    }

    #[test]
    fn qary_examples() {
        let params = CodeParams::qary(3, 2, 3).unwrap();
        assert_eq!(qary_sphere_degree(&params, 1).unwrap(), c(1));
        assert_eq!(e_qary(3, 1, 3).unwrap(), Rational::from_i64(1, 1).unwrap());
        assert_eq!(qary_sphere_edge_count(&params), c(3));
        assert!(e_qary(3, 1, 1).is_err());
    }

    #[test]
    fn johnson_zero_radius() {
        assert_eq!(e_johnson(8, 0, 3).unwrap(), Rational::from_i64(0, 1).unwrap());
        assert_eq!(johnson_sphere_edge_count(8, 0, 3), c(0));
    }

    #[test]
    fn degree_floor_monotone_small() {
        for n in 2..=30 {
            for d in 2..=n / 2 {
                let params = p(n, d);
                let degs: Vec<Count> =
                    (1..d).map(|w| sphere_degree(&params, w).unwrap()).collect();
                assert!(degs.windows(2).all(|w| w[0] >= w[1]), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn split_identity() {
        for (n, d, lambda) in [(10, 5, 0.75), (8, 2, 0.7), (8, 3, 0.8), (8, 4, 0.9), (20, 9, 0.75)] {
            let params = p(n, d);
            let s = split_e1_e2(&params, &SplitParams::new(lambda, 0.1).unwrap()).unwrap();
            let shells: Count = (1..d).map(|i| binomial(n, i as i64)).sum();
            assert_eq!(
                &s.e1 + &s.e2,
                sphere_edge_count(&params) * c(2) + shells,
                "n={n} d={d} lambda={lambda}"
            );
        }
        // d' = 1: floor(0.9) = 0 is raised to 1, leaving e1 empty.
        let s = split_e1_e2(&p(8, 2), &SplitParams::new(0.9, 0.1).unwrap()).unwrap();
        assert_eq!(s.boundary, 1);
        assert!(s.e1.is_zero());
        assert!(split_e1_e2(&p(8, 1), &SplitParams::default()).is_err());
        assert!(split_e1_e2(&p(8, 5), &SplitParams::default()).is_err());
    }

    #[test]
    fn entropy_bounds_dominate_exact_split() {
        let params = p(20, 9);
        let split = SplitParams::new(0.75, 0.1).unwrap();
        let exact = split_e1_e2(&params, &split).unwrap();
        let b = entropy_upper_bounds(&params, &split).unwrap();
        assert!(exact.e1.log2().value() <= b.e1, "{} > {}", exact.e1.log2(), b.e1);
        assert!(exact.e2.log2().value() <= b.e2 + 1e-6, "{} > {}", exact.e2.log2(), b.e2);
        let tiny = entropy_upper_bounds(&p(1000, 2), &split).unwrap();
        assert!(tiny.e1 / 1000.0 < 0.03);
    }

    #[test]
    fn heavy_floor_examples() {
        assert_eq!(heavy_weight_degree_floor(4).unwrap(), c(5));
        assert_eq!(heavy_weight_degree_floor(6).unwrap(), c(21));
        assert_eq!(heavy_weight_degree_floor(2).unwrap(), c(1));
        assert!(heavy_weight_degree_floor(5).is_err());
    }
}
