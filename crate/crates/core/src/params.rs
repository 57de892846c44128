use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Problem instance `(n, d, q, w)`. With `w` set the instance is the
/// constant-weight problem `A(n, 2d, w)`, where `d` is the half-distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    n: u64,
    d: u64,
    q: u64,
    w: Option<u64>,
}

impl CodeParams {
    pub fn new(n: u64, d: u64, q: u64, w: Option<u64>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("length n must be positive"));
        }
        if d == 0 || d > n {
            return Err(invalid(format!("need 1 <= d <= n, got n={n} d={d}")));
        }
        if q < 2 {
            return Err(invalid(format!("alphabet size q={q} must be at least 2")));
        }
        if let Some(w) = w {
            if q != 2 {
                return Err(invalid("constant-weight instances are binary"));
            }
            if w < d || w > n {
                return Err(invalid(format!("need d <= w <= n, got d={d} w={w} n={n}")));
            }
        }
        Ok(CodeParams { n, d, q, w })
    }

    pub fn binary(n: u64, d: u64) -> Result<Self> {
        Self::new(n, d, 2, None)
    }

    pub fn qary(n: u64, d: u64, q: u64) -> Result<Self> {
        Self::new(n, d, q, None)
    }

    pub fn constant_weight(n: u64, d: u64, w: u64) -> Result<Self> {
        Self::new(n, d, 2, Some(w))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn w(&self) -> Option<u64> {
        self.w
    }

    /// `d' = d - 1`, the radius of the punctured ball that forms the sphere graph.
    pub fn d_prime(&self) -> u64 {
        self.d - 1
    }

    /// `δ = d'/n`.
    pub fn delta(&self) -> f64 {
        self.d_prime() as f64 / self.n as f64
    }
}

/// Weight split `λ ∈ [2/3, 1)` and sparsity exponent `ε ∈ (0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplitParams {
    lambda: f64,
    epsilon: f64,
}

impl SplitParams {
    pub fn new(lambda: f64, epsilon: f64) -> Result<Self> {
        if !(2.0 / 3.0..1.0).contains(&lambda) {
            return Err(invalid(format!("lambda={lambda} must lie in [2/3, 1)")));
        }
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(invalid(format!("epsilon={epsilon} must lie in (0, 1)")));
        }
        Ok(SplitParams { lambda, epsilon })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `μ = 1 - λ`.
    pub fn mu(&self) -> f64 {
        1.0 - self.lambda
    }
}

impl Default for SplitParams {
    fn default() -> Self {
        SplitParams {
            lambda: 0.999,
            epsilon: 1e-6,
        }
    }
}
