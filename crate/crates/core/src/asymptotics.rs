//! Entropy-domain sparsity conditions for the sphere graph: the `f` and `g`
//! curves, a threshold scan locating where they stop holding, and the exact
//! finite-n ratio `e(G_S) / V(n,d')^{2-ε}`.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{binary_entropy, hamming_volume};
use crate::error::{Error, Result};
use crate::num::{fmt_sig, LogValue};
use crate::params::{CodeParams, SplitParams};
use crate::sphere::sphere_edge_count;

pub const DEFAULT_GRID_STEP: f64 = 1e-4;
pub const DEFAULT_REFINE_TOL: f64 = 1e-9;

/// Slack, in bits per unit of `n`, allowed when checking the asymptotic
/// sparsity inequality at finite `n`.
pub const FINITE_N_MARGIN_PER_N: f64 = 0.01;

pub const CURVE_HEADER: &str = "delta,f,g,holds";

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta <= 0.5 {
        Ok(())
    } else {
        Err(Error::Domain(format!("delta={delta} outside (0, 0.5]")))
    }
}

/// `(1-ε)H₂(δ) - H₂(λδ)` for raw `ε`, `λ`, so the degenerate `ε = 0, λ = 1`
/// corner is reachable.
pub fn f_value(delta: f64, epsilon: f64, lambda: f64) -> Result<f64> {
    check_delta(delta)?;
    Ok((1.0 - epsilon) * binary_entropy(delta)? - binary_entropy(lambda * delta)?)
}

/// `(1-ε)H₂(δ) - λδ - (1-λδ)H₂((δ-λδ/2)/(1-λδ))` for raw `ε`, `λ`.
pub fn g_value(delta: f64, epsilon: f64, lambda: f64) -> Result<f64> {
    check_delta(delta)?;
    let ld = lambda * delta;
    if ld >= 1.0 {
        return Err(Error::Domain(format!("lambda*delta={ld} must be below 1")));
    }
    let inner = (delta - ld / 2.0) / (1.0 - ld);
    Ok((1.0 - epsilon) * binary_entropy(delta)? - ld - (1.0 - ld) * binary_entropy(inner)?)
}

pub fn f_func(delta: f64, split: &SplitParams) -> Result<f64> {
    f_value(delta, split.epsilon(), split.lambda())
}

pub fn g_func(delta: f64, split: &SplitParams) -> Result<f64> {
    g_value(delta, split.epsilon(), split.lambda())
}

/// Both strict inequalities `f > 0` and `g > 0`; false outside the domain.
pub fn conditions_hold(delta: f64, split: &SplitParams) -> bool {
    AsymptoticPoint::at(delta, split).is_ok_and(|p| p.conditions_hold)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticPoint {
    pub delta: f64,
    pub f_value: f64,
    pub g_value: f64,
    pub conditions_hold: bool,
}

impl AsymptoticPoint {
    pub fn at(delta: f64, split: &SplitParams) -> Result<Self> {
        let f_value = f_func(delta, split)?;
        let g_value = g_func(delta, split)?;
        Ok(AsymptoticPoint {
            delta,
            f_value,
            g_value,
            conditions_hold: f_value > 0.0 && g_value > 0.0,
        })
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{}",
            fmt_sig(self.delta, 9),
            fmt_sig(self.f_value, 9),
            fmt_sig(self.g_value, 9),
            self.conditions_hold
        )
    }
}

/// Which condition fails first past the threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Binding {
    F,
    G,
    Both,
    /// Conditions hold all the way to 0.5.
    None,
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Binding::F => "f",
            Binding::G => "g",
            Binding::Both => "f,g",
            Binding::None => "none",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Threshold {
    /// Largest δ at which both conditions still hold, to within `refine_tol`.
    pub delta_star: f64,
    pub binding: Binding,
    /// Last grid point where the conditions hold.
    pub grid_last_pass: f64,
    pub grid_step: f64,
    pub refine_tol: f64,
}

/// Walks the grid `step, 2·step, …, 0.5` until the conditions first fail, then
/// bisects between the last passing and first failing grid points.
pub fn threshold_scan(split: &SplitParams, grid_step: f64, refine_tol: f64) -> Result<Threshold> {
    if !(grid_step > 0.0 && grid_step <= DEFAULT_GRID_STEP) {
        return Err(Error::InvalidParams(format!(
            "grid_step={grid_step} must lie in (0, {DEFAULT_GRID_STEP}]"
        )));
    }
    if !(refine_tol > 0.0 && refine_tol <= DEFAULT_REFINE_TOL) {
        return Err(Error::InvalidParams(format!(
            "refine_tol={refine_tol} must lie in (0, {DEFAULT_REFINE_TOL}]"
        )));
    }
    let steps = (0.5 / grid_step).floor() as u64;
    let mut grid: Vec<f64> = (1..=steps).map(|k| k as f64 * grid_step).collect();
    if grid.last().is_none_or(|&x| x < 0.5) {
        grid.push(0.5);
    }
    let holds = |x: f64| conditions_hold(x, split);
    let first_fail = match grid.iter().position(|&x| !holds(x)) {
        Some(0) => return Err(Error::NoThreshold),
        Some(i) => i,
        None => {
            return Ok(Threshold {
                delta_star: 0.5,
                binding: Binding::None,
                grid_last_pass: 0.5,
                grid_step,
                refine_tol,
            })
        }
    };
    let (mut lo, mut hi) = (grid[first_fail - 1], grid[first_fail]);
    let grid_last_pass = lo;
    while hi - lo > refine_tol {
        let mid = 0.5 * (lo + hi);
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let at_fail = AsymptoticPoint::at(hi, split)?;
    let binding = match (at_fail.f_value > 0.0, at_fail.g_value > 0.0) {
        (false, false) => Binding::Both,
        (false, true) => Binding::F,
        _ => Binding::G,
    };
    Ok(Threshold {
        delta_star: lo,
        binding,
        grid_last_pass,
        grid_step,
        refine_tol,
    })
}

/// `log₂ e(G_S) - (2-ε) log₂ V(n,d')`, exact up to the final logarithms;
/// `-inf` when the sphere graph has no edges. Requires `d' ≤ n/2` so the
/// half-length regime can be compared against the sparse one.
pub fn ratio_decay_check(params: &CodeParams, split: &SplitParams) -> Result<LogValue> {
    if params.q() != 2 || params.w().is_some() {
        return Err(Error::InvalidParams("ratio check is for unrestricted binary codes".into()));
    }
    let (n, r) = (params.n(), params.d_prime());
    if 2 * r > n {
        return Err(Error::InvalidParams(format!("need d' <= n/2, got n={n} d'={r}")));
    }
    let edges = sphere_edge_count(params);
    if edges.is_zero() {
        return Ok(LogValue::new(f64::NEG_INFINITY));
    }
    let volume = hamming_volume(n, r as i64);
    Ok(LogValue::new(
        edges.log2().value() - (2.0 - split.epsilon()) * volume.log2().value(),
    ))
}

/// Curve points `lo, lo+step, …` up to `hi` inclusive; empty when `lo > hi`.
pub fn curve_points(split: &SplitParams, range: (f64, f64), step: f64) -> Result<Vec<AsymptoticPoint>> {
    let (lo, hi) = range;
    if step.is_nan() || step <= 0.0 {
        return Err(Error::InvalidParams(format!("step={step} must be positive")));
    }
    if lo > hi {
        return Ok(Vec::new());
    }
    check_delta(lo)?;
    check_delta(hi)?;
    // Tolerate the rounding in (hi-lo)/step so the end point is not dropped.
    let count = ((hi - lo) / step + 1e-9).floor() as u64 + 1;
    (0..count)
        .into_par_iter()
        .map(|k| AsymptoticPoint::at((lo + k as f64 * step).min(hi), split))
        .collect()
}

/// Writes `delta,f,g,holds` rows in ascending δ and returns the points.
pub fn emit_curves<W: Write>(
    split: &SplitParams,
    range: (f64, f64),
    step: f64,
    mut sink: W,
) -> Result<Vec<AsymptoticPoint>> {
    let points = curve_points(split, range, step)?;
    writeln!(sink, "{CURVE_HEADER}")?;
    for p in &points {
        writeln!(sink, "{}", p.csv_line())?;
    }
    sink.flush()?;
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_split() -> SplitParams {
        SplitParams::default()
    }

    #[test]
    fn corner_values() {
        assert_eq!(f_value(0.25, 0.0, 1.0).unwrap(), 0.0);
        assert!(f_value(1e-12, 1e-6, 0.999).unwrap().abs() < 1e-9);
        assert!(g_value(1e-12, 1e-6, 0.999).unwrap().abs() < 1e-9);
        assert!(f_value(0.0, 1e-6, 0.999).is_err());
        assert!(g_value(0.6, 1e-6, 0.999).is_err());
    }

    #[test]
    fn conditions_near_half() {
        let s = reference_split();
        assert!(f_func(0.4994, &s).unwrap() > 0.0);
        assert!(g_func(0.4994, &s).unwrap() > 0.0);
        assert!(conditions_hold(0.4994, &s));
        assert!(conditions_hold(0.1, &s));
        assert!(!conditions_hold(0.5, &s));
        assert!(g_func(0.4999, &s).unwrap() <= 0.0);
    }

    #[test]
    fn scan_locates_threshold() {
        let t = threshold_scan(&reference_split(), DEFAULT_GRID_STEP, DEFAULT_REFINE_TOL).unwrap();
        assert!(t.delta_star >= 0.4994 && t.delta_star < 0.5, "{t:?}");
        assert_eq!(t.binding, Binding::G);
        assert!(conditions_hold(t.delta_star, &reference_split()));
    }

    #[test]
    fn large_epsilon_has_no_threshold() {
        let s = SplitParams::new(0.999, 0.5).unwrap();
        assert!(matches!(threshold_scan(&s, 1e-4, 1e-9), Err(Error::NoThreshold)));
    }

    #[test]
    fn scan_rejects_coarse_grid() {
        assert!(threshold_scan(&reference_split(), 1e-3, 1e-9).is_err());
        assert!(threshold_scan(&reference_split(), 1e-4, 1e-6).is_err());
    }

    #[test]
    fn ratio_sentinel_and_sign() {
        let s = reference_split();
        let r = ratio_decay_check(&CodeParams::binary(10, 2).unwrap(), &s).unwrap();
        assert_eq!(r.value(), f64::NEG_INFINITY);
        let r = ratio_decay_check(&CodeParams::binary(20, 7).unwrap(), &s).unwrap();
        assert!(r.value() < 0.0);
        assert!(ratio_decay_check(&CodeParams::binary(10, 7).unwrap(), &s).is_err());
    }

    #[test]
    fn curves_csv() {
        let mut buf = Vec::new();
        let pts = emit_curves(&reference_split(), (0.499, 0.5), 1e-4, &mut buf).unwrap();
        assert_eq!(pts.len(), 11);
        assert_eq!(pts.last().unwrap().delta, 0.5);
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CURVE_HEADER));
        assert!(lines.next().unwrap().starts_with("0.499,"));
        assert!(text.trim_end().ends_with(",false"));

        let mut empty = Vec::new();
        emit_curves(&reference_split(), (0.3, 0.2), 1e-3, &mut empty).unwrap();
        assert_eq!(empty, format!("{CURVE_HEADER}\n").into_bytes());
    }
}
