//! Independent eigenvalue oracle: Numerov integration of
//! -psi''/2 - psi/x = E psi on (0, x_max] with psi(0) = psi(x_max) = 0,
//! bisecting on energy with node counting to select the k-th level.

use crate::error::{Error, Result};
use crate::scalar::{cast, Scalar};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig<T: Scalar> {
    /// Domain truncation; the box wall sits here.
    pub x_max: T,
    /// Uniform grid steps between 0 and x_max.
    pub grid_points: usize,
    /// Energy window searched by bisection.
    pub energy_bracket: (T, T),
    /// Bisection resolution on the energy.
    pub tolerance: T,
}

impl<T: Scalar> Default for SolverConfig<T> {
    fn default() -> Self {
        Self {
            x_max: cast(120.0),
            grid_points: 200_000,
            energy_bracket: (cast(-0.7), cast(-1e-4)),
            tolerance: cast(1e-9),
        }
    }
}

impl<T: Scalar> SolverConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.x_max > T::zero()) || !self.x_max.is_finite() {
            return Err(Error::InvalidConfig("x_max must be positive and finite"));
        }
        if self.grid_points < 1000 {
            return Err(Error::InvalidConfig("grid_points must be at least 1000"));
        }
        if !(self.tolerance > T::zero()) {
            return Err(Error::InvalidConfig("tolerance must be positive"));
        }
        let (lo, hi) = self.energy_bracket;
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidConfig(
                "energy_bracket must be a finite increasing pair",
            ));
        }
        Ok(())
    }
}

/// Interior sign changes of the Numerov solution shot from the origin at
/// the given trial energy. Nondecreasing in the energy; the k-th Dirichlet
/// eigenvalue is exactly where the count steps from k-1 to k.
fn count_nodes<T: Scalar>(energy: T, cfg: &SolverConfig<T>) -> usize {
    let n = cfg.grid_points;
    let h = cfg.x_max / T::from(n).unwrap();
    let h2 = h * h;
    let one = T::one();
    let two = one + one;
    let twelve = cast::<T>(12.0);

    // Series start y = x - x^2 + (1-E)x^3/3 + (4E-1)x^4/18 keeps the
    // singular 1/x term out of the first step.
    let series = |x: T| {
        let third = (one - energy) / cast::<T>(3.0);
        let fourth = (cast::<T>(4.0) * energy - one) / cast::<T>(18.0);
        x * (one - x + x * x * third + x * x * x * fourth)
    };
    let k_of = |x: T| two * (energy + one / x);

    let mut y_prev = series(h);
    let mut y_cur = series(h + h);
    let mut k_prev = k_of(h);
    let mut k_cur = k_of(h + h);

    let mut nodes = 0usize;
    let mut last_sign = if y_prev >= T::zero() { 1i8 } else { -1i8 };
    let cur_sign = if y_cur >= T::zero() { 1i8 } else { -1i8 };
    if cur_sign != last_sign {
        nodes += 1;
        last_sign = cur_sign;
    }

    let rescale_at = T::max_value().sqrt() * cast::<T>(1e-3);
    for i in 2..n {
        let x_next = h * T::from(i + 1).unwrap();
        let k_next = k_of(x_next);
        let a = one + h2 * k_next / twelve;
        let b = two * (one - cast::<T>(5.0) * h2 * k_cur / twelve) * y_cur;
        let c = (one + h2 * k_prev / twelve) * y_prev;
        let y_next = (b - c) / a;

        let sign = if y_next >= T::zero() { 1i8 } else { -1i8 };
        if sign != last_sign {
            nodes += 1;
            last_sign = sign;
        }

        y_prev = y_cur;
        y_cur = y_next;
        k_prev = k_cur;
        k_cur = k_next;

        if y_cur.abs() > rescale_at {
            let scale = y_cur.abs();
            y_prev = y_prev / scale;
            y_cur = y_cur / scale;
        }
    }
    nodes
}

/// k-th eigenvalue (k = 1 is the ground state) of the half-line problem.
pub fn solve_halfline<T: Scalar>(cfg: &SolverConfig<T>, k: u32) -> Result<T> {
    cfg.validate()?;
    if k < 1 {
        return Err(Error::QuantumNumberRange {
            name: "k",
            min: 1,
            got: k,
        });
    }
    let (mut lo, mut hi) = cfg.energy_bracket;
    let lo_count = count_nodes(lo, cfg);
    let hi_count = count_nodes(hi, cfg);
    let target = k as usize;
    if lo_count >= target || hi_count < target {
        return Err(Error::BracketMissesEigenvalue {
            k,
            lo_count,
            hi_count,
        });
    }

    let two = T::one() + T::one();
    let mut converged = false;
    for _ in 0..400 {
        if hi - lo <= cfg.tolerance {
            converged = true;
            break;
        }
        let mid = (lo + hi) / two;
        if mid <= lo || mid >= hi {
            // bracket narrowed to float resolution
            converged = true;
            break;
        }
        if count_nodes(mid, cfg) >= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if !converged {
        return Err(Error::SolverDidNotConverge);
    }
    Ok((lo + hi) / two)
}
