//! Floating-point scalar abstraction.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Real scalar the library is generic over: `f32` or `f64`.
///
/// All tolerances and numeric constants are stated for `f64`; the `f32`
/// instantiation compiles and runs but the default tolerances leave no
/// roundoff headroom there.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Lossless-enough conversion of an `f64` constant into `T`.
pub(crate) fn cast<T: Scalar>(x: f64) -> T {
    T::from(x).expect("finite f64 constant")
}
