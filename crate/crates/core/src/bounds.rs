//! Explicit lower bounds on A₂(n,d), A_q(n,d) and A(n,2d,w), the colouring
//! bound for hypercube powers, and the best-of table.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{binomial, hamming_volume, johnson_volume, qary_volume, sphere_intersection_volume};
use crate::error::{invalid, Result};
use crate::num::{Count, LogValue, Rational};
use crate::params::CodeParams;
use crate::sphere::{e_johnson, e_qary, e_theorem1};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FormulaId {
    Gv,
    Varshamov,
    Elia,
    Tolhuizen,
    Fabris1,
    Fabris2,
    Bgs,
    Theorem1,
    Qgv,
    Theorem4,
    LevCw,
    Theorem6,
    NdgColoring,
}

impl FormulaId {
    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::Gv => "GV",
            FormulaId::Varshamov => "VARSHAMOV",
            FormulaId::Elia => "ELIA",
            FormulaId::Tolhuizen => "TOLHUIZEN",
            FormulaId::Fabris1 => "FABRIS1",
            FormulaId::Fabris2 => "FABRIS2",
            FormulaId::Bgs => "BGS",
            FormulaId::Theorem1 => "THEOREM1",
            FormulaId::Qgv => "QGV",
            FormulaId::Theorem4 => "THEOREM4",
            FormulaId::LevCw => "LEV_CW",
            FormulaId::Theorem6 => "THEOREM6",
            FormulaId::NdgColoring => "NDG_COLORING",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One evaluated bound. `floor_int` is `⌊value⌋` clamped at zero; `exact` is
/// absent for bounds involving logarithms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundResult {
    pub formula_id: FormulaId,
    pub exact: Option<Rational>,
    pub log2_value: LogValue,
    pub floor_int: Count,
    pub params: CodeParams,
    pub aux: BTreeMap<String, String>,
}

impl BoundResult {
    fn exact(formula_id: FormulaId, params: &CodeParams, value: Rational) -> Self {
        BoundResult {
            formula_id,
            log2_value: value.log2(),
            floor_int: value.floor_nonneg(),
            exact: Some(value),
            params: *params,
            aux: BTreeMap::new(),
        }
    }

    /// `factor · x` for an exact factor and a nonnegative double `x`; the floor
    /// treats `x` as the exact dyadic rational it stores.
    fn scaled(formula_id: FormulaId, params: &CodeParams, factor: &Rational, x: f64) -> Self {
        let (log2_value, floor_int) = match Rational::from_f64(x) {
            Some(xr) if x > 0.0 => (
                LogValue::new(factor.log2().value() + x.log2()),
                (factor * &xr).floor_nonneg(),
            ),
            _ => (LogValue::NEG_INFINITY, Count::zero()),
        };
        let mut aux = BTreeMap::new();
        aux.insert("factor".to_string(), factor.to_string());
        BoundResult {
            formula_id,
            exact: None,
            log2_value,
            floor_int,
            params: *params,
            aux,
        }
    }

    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.aux.insert(key.to_string(), value.to_string());
        self
    }
}

fn require_binary(params: &CodeParams, what: &str) -> Result<()> {
    if params.q() != 2 || params.w().is_some() {
        return Err(invalid(format!("{what} applies to unrestricted binary codes only")));
    }
    Ok(())
}

fn ratio(num: &Count, den: &Count) -> Rational {
    Rational::from_counts(num, den).expect("volumes are positive")
}

/// `2^{⌊log₂ x⌋}` for `x ≥ 1`.
fn pow2_floor(x: &Count) -> Count {
    Count::pow2(x.floor_log2().expect("volume is at least 1"))
}

/// `qⁿ/V_q(n,d-1)`: the binary bound as `GV`, the q-ary one as `QGV`.
pub fn gv_bound(params: &CodeParams) -> Result<BoundResult> {
    if params.w().is_some() {
        return Err(invalid("constant-weight instances use levenshtein_cw_bound"));
    }
    let (n, d, q) = (params.n(), params.d(), params.q());
    let total = Count::pow(q, n as u32);
    let volume = qary_volume(n, d as i64 - 1, q)?;
    let id = if q == 2 { FormulaId::Gv } else { FormulaId::Qgv };
    Ok(BoundResult::exact(id, params, ratio(&total, &volume)))
}

pub fn varshamov_bound(params: &CodeParams) -> Result<BoundResult> {
    require_binary(params, "the Varshamov bound")?;
    let (n, d) = (params.n(), params.d());
    if d < 2 {
        return Err(invalid("the Varshamov bound needs d >= 2"));
    }
    let den = pow2_floor(&hamming_volume(n - 1, d as i64 - 2));
    Ok(BoundResult::exact(FormulaId::Varshamov, params, ratio(&Count::pow2(n - 1), &den)))
}

pub fn elia_bound(params: &CodeParams) -> Result<BoundResult> {
    require_binary(params, "the Elia bound")?;
    let (n, d) = (params.n(), params.d());
    if n < 4 || d < 3 {
        return Err(invalid("the Elia bound needs n >= 4 and d >= 3"));
    }
    let a = pow2_floor(&hamming_volume(n - 3, d as i64 - 2));
    let b = pow2_floor(&hamming_volume(n - 2, d as i64 - 3));
    Ok(BoundResult::exact(FormulaId::Elia, params, ratio(&Count::pow2(n - 2), &a.max(b))))
}

/// `f_T + 1`, capped at 2ⁿ, where `f_T` is the largest `M` with
/// `2ⁿ/M + r(M-r)/(2ⁿM) > V(n,d-1)` and `r = 2ⁿ mod M`.
pub fn tolhuizen_bound(params: &CodeParams) -> Result<BoundResult> {
    require_binary(params, "the Tolhuizen bound")?;
    let n = params.n();
    let two_n = Count::pow2(n).to_bigint();
    let four_n = &two_n * &two_n;
    let volume = hamming_volume(n, params.d() as i64 - 1).to_bigint();
    // 4ⁿ + r(M-r) > V·2ⁿ·M, the predicate multiplied through by 2ⁿM.
    let holds = |m: &BigInt| {
        let r = &two_n % m;
        &four_n + &r * (m - &r) > &volume * &two_n * m
    };
    let one = BigInt::from(1);
    let lo: BigInt = (&two_n / &volume - BigInt::from(2)).max(one.clone());
    let hi = if volume == one {
        two_n.clone()
    } else {
        let vm1: BigInt = &volume - BigInt::from(1);
        ((&two_n + &vm1 - BigInt::from(1)) / &vm1 + BigInt::from(2)).min(two_n.clone())
    };
    let mut m: BigInt = hi;
    let f_t: BigInt = loop {
        if holds(&m) {
            break m;
        }
        if m <= lo {
            // The window always contains f_T; the descent is a guard.
            let mut k: BigInt = m - 1;
            while k > one && !holds(&k) {
                k -= 1;
            }
            break k;
        }
        m -= 1;
    };
    let value: BigInt = (&f_t + BigInt::from(1)).min(two_n);
    let value = Rational::new(value, one).expect("unit denominator");
    Ok(BoundResult::exact(FormulaId::Tolhuizen, params, value).with("f_T", f_t))
}

/// `(f_F1, f_F2)`. `f_F2` is `None` when `d < 3`.
///
/// `f_F2 ≥ 2ⁿ/V(n,d-2)`, which at `d = 3` is the sphere-packing upper bound,
/// so it overshoots `A₂(n,d)` at small lengths (e.g. 16/5 at `(4,3)` where
/// the optimum is 2). It is reported but never chosen as a table winner.
pub fn fabris_bounds(params: &CodeParams) -> Result<(BoundResult, Option<BoundResult>)> {
    require_binary(params, "the Fabris bounds")?;
    let (n, d) = (params.n(), params.d());
    if d < 2 {
        return Err(invalid("the Fabris bounds need d >= 2"));
    }
    let v1 = hamming_volume(n, d as i64 - 1);
    let i1 = sphere_intersection_volume(n, d - 1, d);
    let f1 = ratio(
        &Count::pow2(n).checked_sub(&i1)?,
        &v1.checked_sub(&i1)?,
    );
    let f1 = BoundResult::exact(FormulaId::Fabris1, params, f1).with("I", &i1);
    if d < 3 {
        return Ok((f1, None));
    }
    let v2 = hamming_volume(n, d as i64 - 2);
    let i2 = sphere_intersection_volume(n, d - 2, d);
    let f2 = &ratio(&Count::pow2(n), &v1) * &ratio(&(&v1 + &i2), &v2);
    let f2 = BoundResult::exact(FormulaId::Fabris2, params, f2)
        .with("I", &i2)
        .with("winner_eligible", "false");
    Ok((f1, Some(f2)))
}

/// One term of the BGS family; `b = 1` is Varshamov, `b = 2` is Elia.
pub fn bgs_term(params: &CodeParams, b: u64) -> Result<Rational> {
    require_binary(params, "the BGS bound")?;
    let (n, d) = (params.n(), params.d());
    if d < 2 || b > d - 1 {
        return Err(invalid(format!("BGS term needs d >= 2 and b <= d-1, got d={d} b={b}")));
    }
    let a = pow2_floor(&hamming_volume(n - b - 1, d as i64 - 2));
    let c = pow2_floor(&hamming_volume(n - b, (d - b) as i64 - 1));
    Ok(ratio(&Count::pow2(n), &(Count::pow2(b) * a.max(c).clone())))
}

/// Maximum of [`bgs_term`] over `b = 0..=min(b_max, d-1)`; the winning `b`
/// (smallest on ties) is recorded in `aux`.
pub fn bgs_bound(params: &CodeParams, b_max: Option<u64>) -> Result<BoundResult> {
    require_binary(params, "the BGS bound")?;
    if params.d() < 2 {
        return Err(invalid("the BGS bound needs d >= 2"));
    }
    let top = b_max.unwrap_or(u64::MAX).min(params.d() - 1);
    let mut best: Option<(u64, Rational)> = None;
    for b in 0..=top {
        let term = bgs_term(params, b)?;
        if best.as_ref().is_none_or(|(_, v)| term > *v) {
            best = Some((b, term));
        }
    }
    let (b, value) = best.expect("b = 0 is always available");
    Ok(BoundResult::exact(FormulaId::Bgs, params, value).with("b", b))
}

/// `(N/V)·(log₂V - ½log₂e)/10`, or for `e = 0` the triangle-free form
/// `N·log₂Δ/(8Δ)` with `Δ = V - 1`.
fn sparse_graph_bound(id: FormulaId, params: &CodeParams, vertices: &Count, volume: &Count, e: &Rational) -> BoundResult {
    if e.numer().sign() == num_bigint::Sign::NoSign {
        let delta = volume.checked_sub(&Count::one()).expect("volume is at least 1");
        if delta.is_zero() {
            return BoundResult::scaled(id, params, &ratio(vertices, volume), 0.0).with("branch", "triangle_free");
        }
        let factor = ratio(vertices, &(Count::from(8u64) * delta.clone()));
        return BoundResult::scaled(id, params, &factor, delta.log2().value())
            .with("branch", "triangle_free")
            .with("e", "0");
    }
    let x = (volume.log2().value() - 0.5 * e.log2().value()) / 10.0;
    BoundResult::scaled(id, params, &ratio(vertices, volume), x).with("e", e)
}

pub fn theorem1_bound(params: &CodeParams) -> Result<BoundResult> {
    require_binary(params, "the sphere-graph bound")?;
    let (n, d) = (params.n(), params.d());
    if d < 2 {
        return Err(invalid("the sphere-graph bound needs d >= 2"));
    }
    let e = Rational::from_count(&e_theorem1(n, d - 1));
    Ok(sparse_graph_bound(
        FormulaId::Theorem1,
        params,
        &Count::pow2(n),
        &hamming_volume(n, d as i64 - 1),
        &e,
    ))
}

/// The q-ary sphere-graph bound; at `q = 2` it coincides with
/// [`theorem1_bound`] apart from the identifier.
pub fn theorem4_qary_bound(params: &CodeParams) -> Result<BoundResult> {
    if params.w().is_some() {
        return Err(invalid("the q-ary sphere-graph bound has no weight restriction"));
    }
    let (n, d, q) = (params.n(), params.d(), params.q());
    if d < 2 {
        return Err(invalid("the q-ary sphere-graph bound needs d >= 2"));
    }
    let e = e_qary(n, d - 1, q)?;
    Ok(sparse_graph_bound(
        FormulaId::Theorem4,
        params,
        &Count::pow(q, n as u32),
        &qary_volume(n, d as i64 - 1, q)?,
        &e,
    ))
}

fn constant_weight_parts(params: &CodeParams) -> Result<(u64, u64, u64)> {
    let w = params
        .w()
        .ok_or_else(|| invalid("constant-weight bound needs w"))?;
    let (n, d) = (params.n(), params.d());
    if 2 * w > n {
        return Err(invalid(format!("need w <= n/2, got n={n} w={w}")));
    }
    Ok((n, d, w))
}

/// `C(n,w)/V(n,d-1,w)` with `V(n,r,w) = Σ_{i≤r} C(w,i)C(n-w,i)`.
pub fn levenshtein_cw_bound(params: &CodeParams) -> Result<BoundResult> {
    let (n, d, w) = constant_weight_parts(params)?;
    let value = ratio(&binomial(n, w as i64), &johnson_volume(n, d as i64 - 1, w));
    Ok(BoundResult::exact(FormulaId::LevCw, params, value))
}

pub fn theorem6_cw_bound(params: &CodeParams) -> Result<BoundResult> {
    let (n, d, w) = constant_weight_parts(params)?;
    if d < 2 {
        return Err(invalid("the constant-weight sphere-graph bound needs d >= 2"));
    }
    let e = e_johnson(n, d - 1, w)?;
    Ok(sparse_graph_bound(
        FormulaId::Theorem6,
        params,
        &binomial(n, w as i64),
        &johnson_volume(n, d as i64 - 1, w),
        &e,
    ))
}

/// Upper bound `2^{⌊log₂V(n-1,d-1)⌋+1}` on the number of colours needed so
/// that words within distance `d` get distinct colours.
pub fn ndg_coloring_bound(n: u64, d: u64) -> Result<Count> {
    if n == 0 || d == 0 || d > n {
        return Err(invalid(format!("need 1 <= d <= n, got n={n} d={d}")));
    }
    Ok(Count::pow2(hamming_volume(n - 1, d as i64 - 1).floor_log2().expect("volume >= 1") + 1))
}

/// Every bound whose preconditions hold at `params`, in identifier order.
pub fn applicable_bounds(params: &CodeParams) -> Vec<BoundResult> {
    let mut out = Vec::new();
    let d = params.d();
    if params.w().is_some() {
        out.extend(levenshtein_cw_bound(params));
        if d >= 2 {
            out.extend(theorem6_cw_bound(params));
        }
    } else if params.q() > 2 {
        out.extend(gv_bound(params));
        if d >= 2 {
            out.extend(theorem4_qary_bound(params));
        }
    } else {
        out.extend(gv_bound(params));
        out.extend(varshamov_bound(params));
        out.extend(elia_bound(params));
        out.extend(tolhuizen_bound(params));
        if let Ok((f1, f2)) = fabris_bounds(params) {
            out.push(f1);
            out.extend(f2);
        }
        out.extend(bgs_bound(params, None));
        out.extend(theorem1_bound(params));
    }
    out.sort_by_key(|b| b.formula_id);
    out
}

/// Whether a bound may be picked as a table winner.
pub fn winner_eligible(b: &BoundResult) -> bool {
    b.formula_id != FormulaId::Fabris2
}

/// One point of the table with every applicable bound and the winner: the
/// largest floor among eligible bounds, ties broken by the larger value, then
/// identifier order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub params: CodeParams,
    pub bounds: Vec<BoundResult>,
    pub winner: FormulaId,
    /// Largest floor, clamped to at least 1.
    pub best_floor: Count,
}

impl TableRow {
    pub fn new(params: CodeParams) -> Option<TableRow> {
        let bounds = applicable_bounds(&params);
        let winner = bounds.iter().filter(|b| winner_eligible(b)).reduce(|a, b| {
            let better = b.floor_int > a.floor_int
                || (b.floor_int == a.floor_int && b.log2_value.value() > a.log2_value.value());
            if better {
                b
            } else {
                a
            }
        })?;
        let best_floor = winner.floor_int.clone().max(Count::one());
        Some(TableRow {
            params,
            winner: winner.formula_id,
            best_floor,
            bounds,
        })
    }

    pub fn winner_result(&self) -> &BoundResult {
        self.bounds
            .iter()
            .find(|b| b.formula_id == self.winner)
            .expect("winner is among the bounds")
    }
}

/// Parameter grid for [`best_bound_table`]. `w = None` means unrestricted codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRequest {
    pub n: (u64, u64),
    pub d: (u64, u64),
    pub q: (u64, u64),
    pub w: Option<(u64, u64)>,
}

impl TableRequest {
    /// Valid points in `(n, d, q, w)` lexicographic order.
    pub fn points(&self) -> Vec<CodeParams> {
        let mut out = Vec::new();
        for n in self.n.0..=self.n.1 {
            for d in self.d.0..=self.d.1 {
                for q in self.q.0..=self.q.1 {
                    match self.w {
                        None => out.extend(CodeParams::new(n, d, q, None)),
                        Some((lo, hi)) => {
                            out.extend((lo..=hi).filter_map(|w| CodeParams::new(n, d, q, Some(w)).ok()))
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundTable {
    pub rows: Vec<TableRow>,
    /// Set when the point count exceeded the budget; `rows` then holds the
    /// first `budget` points.
    pub truncated: bool,
    pub requested_points: usize,
}

/// Evaluates the grid, at most `budget` points. Points without any
/// applicable bound are absent.
pub fn best_bound_table(request: &TableRequest, budget: u64) -> BoundTable {
    let points = request.points();
    let requested_points = points.len();
    let take = (budget as usize).min(points.len());
    let rows = points[..take]
        .par_iter()
        .filter_map(|p| TableRow::new(*p))
        .collect();
    BoundTable {
        rows,
        truncated: take < requested_points,
        requested_points,
    }
}

/// Flat record with the CSV header keys, used for both CSV and JSON output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRecord {
    pub n: Option<u64>,
    pub d: Option<u64>,
    pub q: Option<u64>,
    pub w: Option<u64>,
    pub formula: String,
    pub exact_num: Option<String>,
    pub exact_den: Option<String>,
    pub log2: Option<f64>,
    pub floor: Option<Count>,
    pub aux: BTreeMap<String, String>,
}

pub const TABLE_HEADER: &str = "n,d,q,w,formula,exact_num,exact_den,log2,floor,aux";

impl TableRecord {
    fn from_result(b: &BoundResult, floor: Count) -> TableRecord {
        TableRecord {
            n: Some(b.params.n()),
            d: Some(b.params.d()),
            q: Some(b.params.q()),
            w: b.params.w(),
            formula: b.formula_id.to_string(),
            exact_num: b.exact.as_ref().map(|r| r.numer().to_string()),
            exact_den: b.exact.as_ref().map(|r| r.denom().to_string()),
            log2: b.log2_value.is_finite().then_some(b.log2_value.value()),
            floor: Some(floor),
            aux: b.aux.clone(),
        }
    }

    pub fn truncation_marker(emitted: usize, requested: usize) -> TableRecord {
        let mut aux = BTreeMap::new();
        aux.insert("rows_emitted".to_string(), emitted.to_string());
        aux.insert("points_requested".to_string(), requested.to_string());
        TableRecord {
            n: None,
            d: None,
            q: None,
            w: None,
            formula: "TRUNCATED".to_string(),
            exact_num: None,
            exact_den: None,
            log2: None,
            floor: None,
            aux,
        }
    }

    pub fn to_csv_line(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(T::to_string).unwrap_or_default()
        }
        let aux: Vec<String> = self.aux.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            opt(&self.n),
            opt(&self.d),
            opt(&self.q),
            opt(&self.w),
            self.formula,
            opt(&self.exact_num),
            opt(&self.exact_den),
            self.log2.map(|x| LogValue::new(x).to_string()).unwrap_or_default(),
            opt(&self.floor),
            aux.join(";")
        )
    }
}

/// Table records: one winner row per point, or with `all` every bound
/// followed by nothing else. A truncated table ends with a marker row.
pub fn table_records(table: &BoundTable, all: bool) -> Vec<TableRecord> {
    let mut out = Vec::new();
    for row in &table.rows {
        if all {
            out.extend(row.bounds.iter().map(|b| TableRecord::from_result(b, b.floor_int.clone())));
        } else {
            out.push(TableRecord::from_result(row.winner_result(), row.best_floor.clone()));
        }
    }
    if table.truncated {
        out.push(TableRecord::truncation_marker(table.rows.len(), table.requested_points));
    }
    out
}

pub fn write_csv<W: Write>(records: &[TableRecord], mut out: W) -> Result<()> {
    writeln!(out, "{TABLE_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.to_csv_line())?;
    }
    Ok(())
}

pub fn write_json<W: Write>(records: &[TableRecord], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(n: u64, d: u64) -> CodeParams {
        CodeParams::binary(n, d).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_i64(n, d).unwrap()
    }

    #[test]
    fn gv_examples() {
        assert_eq!(gv_bound(&bin(4, 3)).unwrap().exact, Some(r(16, 11)));
        assert_eq!(gv_bound(&bin(5, 3)).unwrap().exact, Some(r(2, 1)));
        assert_eq!(gv_bound(&bin(6, 1)).unwrap().exact, Some(r(64, 1)));
        let q = gv_bound(&CodeParams::qary(3, 2, 3).unwrap()).unwrap();
        assert_eq!((q.formula_id, q.exact), (FormulaId::Qgv, Some(r(27, 7))));
    }

    #[test]
    fn varshamov_elia_examples() {
        assert_eq!(varshamov_bound(&bin(4, 3)).unwrap().exact, Some(r(2, 1)));
        assert_eq!(varshamov_bound(&bin(7, 2)).unwrap().exact, Some(r(64, 1)));
        assert!(varshamov_bound(&bin(7, 1)).is_err());
        assert_eq!(elia_bound(&bin(6, 3)).unwrap().exact, Some(r(4, 1)));
        assert!(elia_bound(&bin(3, 3)).is_err());
    }

    #[test]
    fn tolhuizen_examples() {
        let t = tolhuizen_bound(&bin(4, 3)).unwrap();
        assert_eq!(t.exact, Some(r(2, 1)));
        assert_eq!(t.aux["f_T"], "1");
        let t = tolhuizen_bound(&bin(5, 1)).unwrap();
        assert_eq!(t.exact, Some(r(32, 1)));
        assert_eq!(t.aux["f_T"], "31");
    }

    #[test]
    fn levenshtein_and_coloring_examples() {
        let p = CodeParams::constant_weight(5, 2, 2).unwrap();
        assert_eq!(levenshtein_cw_bound(&p).unwrap().exact, Some(r(10, 7)));
        let p = CodeParams::constant_weight(8, 1, 3).unwrap();
        assert_eq!(levenshtein_cw_bound(&p).unwrap().exact, Some(r(56, 1)));
        assert!(levenshtein_cw_bound(&CodeParams::constant_weight(5, 2, 3).unwrap()).is_err());
        assert_eq!(ndg_coloring_bound(4, 1).unwrap(), Count::from(2u64));
        assert_eq!(ndg_coloring_bound(5, 2).unwrap(), Count::from(8u64));
    }

    #[test]
    fn theorem1_small_value_and_degenerate_branch() {
        // (16/11)·(log₂11 - ½log₂10)/10
        let t = theorem1_bound(&bin(4, 3)).unwrap();
        let expected = 16.0 / 11.0 * (11f64.log2() - 0.5 * 10f64.log2()) / 10.0;
        assert!((t.log2_value.value() - expected.log2()).abs() < 1e-12);
        assert_eq!(t.floor_int, Count::zero());
        let t = theorem1_bound(&bin(8, 2)).unwrap();
        assert_eq!(t.aux["branch"], "triangle_free");
        // 256·log₂8/(8·8) = 12
        assert_eq!(t.floor_int, Count::from(12u64));
    }

    #[test]
    fn theorem4_matches_theorem1_at_q2() {
        for n in 2..=8 {
            for d in 2..=n {
                let a = theorem1_bound(&bin(n, d)).unwrap();
                let b = theorem4_qary_bound(&bin(n, d)).unwrap();
                assert_eq!((a.log2_value, a.floor_int), (b.log2_value, b.floor_int));
            }
        }
    }

    #[test]
    fn bgs_reduces_to_varshamov_and_elia() {
        for n in 4..=20 {
            for d in 3..=n {
                let p = bin(n, d);
                assert_eq!(Some(bgs_term(&p, 1).unwrap()), varshamov_bound(&p).unwrap().exact);
                assert_eq!(Some(bgs_term(&p, 2).unwrap()), elia_bound(&p).unwrap().exact);
            }
        }
    }

    #[test]
    fn fabris2_reaches_sphere_packing_at_d3() {
        for n in 3..=40 {
            let (_, f2) = fabris_bounds(&bin(n, 3)).unwrap();
            let packing = r(1, 1);
            let packing = &packing * &ratio(&Count::pow2(n), &hamming_volume(n, 1));
            assert!(f2.unwrap().exact.unwrap() >= packing);
        }
    }

    #[test]
    fn table_rows() {
        let req = TableRequest {
            n: (4, 4),
            d: (3, 3),
            q: (2, 2),
            w: None,
        };
        let table = best_bound_table(&req, 100);
        assert_eq!(table.rows.len(), 1);
        let row = &table.rows[0];
        assert_eq!(row.best_floor, Count::from(2u64));
        let floors: BTreeMap<FormulaId, Count> =
            row.bounds.iter().map(|b| (b.formula_id, b.floor_int.clone())).collect();
        assert_eq!(floors[&FormulaId::Gv], Count::one());
        assert_eq!(floors[&FormulaId::Varshamov], Count::from(2u64));
        assert_eq!(floors[&FormulaId::Tolhuizen], Count::from(2u64));
        let req = TableRequest {
            n: (3, 5),
            d: (1, 9),
            q: (2, 2),
            w: None,
        };
        let table = best_bound_table(&req, 100);
        assert!(table.rows.iter().all(|r| r.params.d() <= r.params.n()));
        for row in table.rows.iter().filter(|r| r.params.d() == 1) {
            assert_eq!(row.best_floor, Count::pow2(row.params.n()));
        }
        let cut = best_bound_table(&req, 4);
        assert!(cut.truncated);
        let recs = table_records(&cut, false);
        assert_eq!(recs.last().unwrap().formula, "TRUNCATED");
        assert_eq!(recs.len(), 5);
    }

    #[test]
    fn csv_line_shape() {
        let table = best_bound_table(
            &TableRequest {
                n: (4, 4),
                d: (3, 3),
                q: (2, 2),
                w: None,
            },
            10,
        );
        let recs = table_records(&table, false);
        assert_eq!(recs[0].to_csv_line(), "4,3,2,,VARSHAMOV,2,1,1,2,");
    }
}
