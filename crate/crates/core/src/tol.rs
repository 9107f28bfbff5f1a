//! Default numeric tolerances.
//!
//! Stated for `f64` at dimensions up to a few dozen; callers needing other
//! budgets pass explicit tolerances where the API allows it.

use crate::scalar::{cast, Scalar};

/// Hermiticity, commutator, and sector-block deviations.
pub const HERMITICITY: f64 = 1e-10;
/// Below this magnitude an amplitude does not count as sector support.
pub const SUPPORT: f64 = 1e-12;
/// Theorem checks (cross elements, expectation agreement, unitarity).
pub const THEOREM: f64 = 1e-12;
/// Positive-semidefiniteness slack on density operators.
pub const POSITIVITY: f64 = 1e-10;
/// Accepted deviation of norms, weight sums, traces from 1.
pub const NORM: f64 = 1e-8;
/// Vector distance above which two states count as genuinely different.
pub const DISTINCT_VECTOR: f64 = 0.1;

pub fn hermiticity<T: Scalar>() -> T {
    cast(HERMITICITY)
}

pub fn support<T: Scalar>() -> T {
    cast(SUPPORT)
}

pub fn theorem<T: Scalar>() -> T {
    cast(THEOREM)
}

pub fn positivity<T: Scalar>() -> T {
    cast(POSITIVITY)
}

pub fn norm<T: Scalar>() -> T {
    cast(NORM)
}

pub fn distinct_vector<T: Scalar>() -> T {
    cast(DISTINCT_VECTOR)
}
