//! Exact binomials, sphere volumes, binary entropy and the intersection numbers
//! of the Hamming and Johnson schemes.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{invalid, Error, Result};
use crate::num::{ceil_half_plus, Count};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> Count {
    if k < 0 || k as u64 > n {
        return Count::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    Count::from_biguint(acc)
}

/// Cached rows of Pascal's triangle for a chosen set of upper indices, each
/// truncated at `k_max`. The sums in this crate touch only a handful of rows
/// (`n`, `n-w`, `w`), so this is much cheaper than a full triangle.
#[derive(Clone, Debug)]
pub struct BinomialRows {
    rows: HashMap<u64, Vec<Count>>,
    k_max: u64,
    zero: Count,
}

impl BinomialRows {
    pub fn new(ms: impl IntoIterator<Item = u64>, k_max: u64) -> Self {
        let mut rows = HashMap::new();
        for m in ms {
            rows.entry(m).or_insert_with(|| pascal_row(m, k_max));
        }
        BinomialRows {
            rows,
            k_max,
            zero: Count::zero(),
        }
    }

    /// Rows `0..=hi`.
    pub fn upto(hi: u64, k_max: u64) -> Self {
        Self::new(0..=hi, k_max)
    }

    /// Panics when row `m` was not requested or `k` exceeds `k_max` while
    /// being `≤ m`; both are programming errors.
    pub fn get(&self, m: u64, k: i64) -> &Count {
        if k < 0 || k as u64 > m {
            return &self.zero;
        }
        assert!(k as u64 <= self.k_max, "binomial row truncated at {}", self.k_max);
        &self.rows.get(&m).unwrap_or_else(|| panic!("binomial row {m} not cached"))[k as usize]
    }
}

fn pascal_row(m: u64, k_max: u64) -> Vec<Count> {
    let top = k_max.min(m);
    let mut row = Vec::with_capacity(top as usize + 1);
    let mut cur = BigUint::one();
    row.push(Count::from_biguint(cur.clone()));
    for t in 0..top {
        cur *= m - t;
        cur /= t + 1;
        row.push(Count::from_biguint(cur.clone()));
    }
    row
}

/// `V(n, d) = Σ_{i=0}^{min(d,n)} C(n, i)`; zero for negative radius.
pub fn hamming_volume(n: u64, d: i64) -> Count {
    if d < 0 {
        return Count::zero();
    }
    let top = (d as u64).min(n);
    let mut acc = BigUint::one();
    let mut term = BigUint::one();
    for i in 0..top {
        term *= n - i;
        term /= i + 1;
        acc += &term;
    }
    Count::from_biguint(acc)
}

/// `V_q(n, d) = Σ C(n, i)(q-1)^i`.
pub fn qary_volume(n: u64, d: i64, q: u64) -> Result<Count> {
    if q < 2 {
        return Err(invalid(format!("alphabet size q={q} must be at least 2")));
    }
    if d < 0 {
        return Ok(Count::zero());
    }
    let top = (d as u64).min(n);
    let mut acc = BigUint::one();
    let mut term = BigUint::one();
    for i in 0..top {
        term *= (n - i) * (q - 1);
        term /= i + 1;
        acc += &term;
    }
    Ok(Count::from_biguint(acc))
}

/// Size of a radius-`d` ball in the Johnson scheme on weight-`w` words of
/// length `n`: `Σ_{i=0}^{d} C(w,i) C(n-w,i)`.
pub fn johnson_volume(n: u64, d: i64, w: u64) -> Count {
    (0..=d.max(-1))
        .map(|i| binomial(w, i) * binomial(n.saturating_sub(w), i))
        .sum()
}

/// `H₂(x)`, with `H₂(0) = H₂(1) = 0`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("binary entropy argument {x} outside [0,1]")));
    }
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    Ok(-x * x.log2() - (1.0 - x) * (1.0 - x).log2())
}

/// `p^w_{i,j}` of the Hamming scheme `H(n, q)`: the number of words `x` with
/// `d(x,u) = i` and `d(x,v) = j` for a fixed pair at distance `w`.
///
/// On the `w` coordinates where the centres differ, `x` copies `v` (`a` times),
/// takes one of the `q-2` other symbols (`b` times) or copies `u`; on the
/// remaining `n-w` coordinates it differs from both in `e` places. Then
/// `i = a+b+e`, `j = w-a+e` which pins `b = i+j-w-2e`. For `q = 2` only `b = 0`
/// survives and the sum collapses to the single term `C(w, i-e) C(n-w, e)`.
pub fn hamming_intersection_number(n: u64, q: u64, w: u64, i: u64, j: u64) -> Count {
    if w > n || i > n || j > n {
        return Count::zero();
    }
    let (w_, i_, j_) = (w as i64, i as i64, j as i64);
    if q == 2 {
        let s = i_ + j_ - w_;
        if s < 0 || s % 2 != 0 {
            return Count::zero();
        }
        let e = s / 2;
        return binomial(w, i_ - e) * binomial(n - w, e);
    }
    let mut total = Count::zero();
    let mut e = 0i64;
    loop {
        let b = i_ + j_ - w_ - 2 * e;
        if b < 0 {
            break;
        }
        let a = i_ - b - e;
        let c = j_ - b - e;
        if a >= 0 && c >= 0 {
            let term = binomial(w, a)
                * binomial(w - a as u64, b)
                * Count::pow(q - 2, b as u32)
                * binomial(n - w, e)
                * Count::pow(q - 1, e as u32);
            total += term;
        }
        e += 1;
    }
    total
}

/// `p^k_{i,j}` of the Johnson scheme `J(n, w)`: the number of weight-`w` words
/// at Johnson distances `i` and `j` from two fixed weight-`w` words at Johnson
/// distance `k` (Johnson distance is half the Hamming distance).
pub fn johnson_intersection_number(n: u64, w: u64, i: u64, j: u64, k: u64) -> Count {
    if k > i + j || k > w || w > n {
        return Count::zero();
    }
    let (n_, w_, i_, j_, k_) = (n as i64, w as i64, i as i64, j as i64, k as i64);
    let lo = 0.max(i_ - k_).max(j_ - k_).max(i_ + j_ - w_);
    let hi = i_.min(j_).min(i_ + j_ - k_).min(n_ - w_ - k_);
    if lo > hi {
        return Count::zero();
    }
    let rest = (n_ - w_ - k_) as u64;
    (lo..=hi)
        .map(|l| {
            binomial(rest, l)
                * binomial(k, i_ - l)
                * binomial(k, j_ - l)
                * binomial(w - k, i_ + j_ - k_ - l)
        })
        .sum()
}

/// `|B(u, r) ∩ B(v, r)|` for binary words with `d(u, v) = d`, summed from the
/// intersection numbers.
pub fn sphere_intersection_volume(n: u64, r: u64, d: u64) -> Count {
    if d > n {
        return Count::zero();
    }
    let r = r.min(n);
    let mut total = Count::zero();
    for i in 0..=r {
        for j in 0..=r {
            total += hamming_intersection_number(n, 2, d, i, j);
        }
    }
    total
}

/// The closed form `Σ_{i=w}^{d-w} Σ_{j=⌈(w+i)/2⌉}^{i} C(w,j) C(n-w,i-j)` that
/// is sometimes quoted for the intersection of two radius-`(d-w)` balls whose
/// centres are `d` apart. It does not agree with the direct count; see
/// [`intersection_formula_report`].
pub fn displayed_intersection_formula(n: u64, d: u64, w: u64) -> Count {
    if w > d {
        return Count::zero();
    }
    let mut total = Count::zero();
    for i in w..=(d - w) {
        let lo = ceil_half_plus((w + i) as i64);
        for j in lo..=i {
            total += binomial(w, j as i64) * binomial(n.saturating_sub(w), i as i64 - j as i64);
        }
    }
    total
}

/// One row of the comparison between the direct intersection count and the
/// displayed closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionComparison {
    pub n: u64,
    pub d: u64,
    pub w: u64,
    pub direct: Count,
    pub displayed: Count,
}

impl IntersectionComparison {
    pub fn agrees(&self) -> bool {
        self.direct == self.displayed
    }
}

/// Both readings of `I(n, d-w)` for every `1 ≤ w ≤ d/2`, `1 ≤ d ≤ n ≤ n_max`.
pub fn intersection_formula_report(n_max: u64) -> Vec<IntersectionComparison> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for d in 1..=n {
            for w in 1..=d / 2 {
                out.push(IntersectionComparison {
                    n,
                    d,
                    w,
                    direct: sphere_intersection_volume(n, d - w, d),
                    displayed: displayed_intersection_formula(n, d, w),
                });
            }
        }
    }
    out
}
