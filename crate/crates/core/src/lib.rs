//! Lower bounds on the size of error-correcting codes: the Gilbert-Varshamov
//! bound, its explicit improvements, and the locally-sparse-graph improvement
//! built on exact sphere-graph edge counts. Brute-force graph oracles check
//! every closed form at small scale, and greedy constructions realize the
//! bounds on concrete codes.

pub mod asymptotics;
pub mod bounds;
pub mod codebook;
pub mod combinatorics;
pub mod construct;
pub mod error;
pub mod num;
pub mod oracle;
pub mod params;
pub mod sphere;

pub use error::{Error, Result};
pub use num::{ceil_plus, Count, LogValue, Rational};
pub use params::{CodeParams, SplitParams};
