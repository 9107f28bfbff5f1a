//! Generalized Laguerre polynomials by the ascending three-term
//! recurrence, which is stable on the positive half-line.

use crate::scalar::Scalar;

/// L^alpha_k(x).
///
/// Recurrence: L_0 = 1, L_1 = 1 + alpha - x,
/// (j+1) L_{j+1} = (2j + 1 + alpha - x) L_j - (j + alpha) L_{j-1}.
pub fn laguerre<T: Scalar>(k: u32, alpha: T, x: T) -> T {
    let one = T::one();
    if k == 0 {
        return one;
    }
    let mut prev = one;
    let mut current = one + alpha - x;
    for j in 1..k {
        let jf = T::from(j).unwrap();
        let next = ((jf + jf + one + alpha - x) * current - (jf + alpha) * prev)
            / (jf + one);
        prev = current;
        current = next;
    }
    current
}

/// L_k(x) e^{-x/2} for alpha = 0, evaluated through the same recurrence on
/// pre-damped values so it stays representable at quadrature-node scales
/// where L_k alone would overflow.
pub(crate) fn laguerre_scaled<T: Scalar>(k: u32, x: T) -> T {
    let one = T::one();
    let half = T::from(0.5).unwrap();
    let damp = (-(x * half)).exp();
    if k == 0 {
        return damp;
    }
    let mut prev = damp;
    let mut current = (one - x) * damp;
    for j in 1..k {
        let jf = T::from(j).unwrap();
        let next = ((jf + jf + one - x) * current - jf * prev) / (jf + one);
        prev = current;
        current = next;
    }
    current
}
