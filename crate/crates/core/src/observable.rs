//! Hermitian observables, density operators, and the sector theorems:
//! vanishing cross-sector elements, phase freedom, decoherence, and the
//! commutes-with-everything test for a classical superselection variable.

use std::sync::Arc;

use num_complex::Complex;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, CMatrix};
use crate::scalar::{cast, Scalar};
use crate::space::Space;
use crate::state::StateVector;
use crate::tol;

/// Hermitian matrix over a labeled basis. Hermiticity is validated at
/// construction, so every held value satisfies it within [`tol::HERMITICITY`].
#[derive(Clone, Debug, PartialEq)]
pub struct Observable<T: Scalar> {
    space: Arc<Space>,
    matrix: CMatrix<T>,
}

impl<T: Scalar> Observable<T> {
    pub fn new(space: Arc<Space>, matrix: CMatrix<T>) -> Result<Self> {
        if matrix.dim() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                got: matrix.dim(),
            });
        }
        if !matrix.is_finite() {
            return Err(Error::NonFinite("observable matrix"));
        }
        let deviation = matrix.hermiticity_deviation();
        if deviation > tol::hermiticity() {
            return Err(Error::NotHermitian {
                max_deviation: deviation.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { space, matrix })
    }

    pub fn from_fn(
        space: Arc<Space>,
        mut f: impl FnMut(usize, usize) -> Complex<T>,
    ) -> Result<Self> {
        let matrix = CMatrix::from_fn(space.dim(), &mut f);
        Self::new(space, matrix)
    }

    pub fn identity(space: Arc<Space>) -> Self {
        let matrix = CMatrix::identity(space.dim());
        Self { space, matrix }
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    /// Largest matrix element between basis states of different sectors.
    pub fn cross_sector_max(&self) -> T {
        let mut max = T::zero();
        for i in 0..self.matrix.dim() {
            for j in 0..self.matrix.dim() {
                if self.space.sector_at(i) != self.space.sector_at(j) {
                    max = max.max(self.matrix.get(i, j).norm());
                }
            }
        }
        max
    }

    /// Block-diagonal across sectors, i.e. a candidate physical observable
    /// in the presence of the superselection rule.
    pub fn is_sector_compatible(&self) -> bool {
        self.cross_sector_max() <= tol::hermiticity()
    }

    fn require_sector_compatible(&self) -> Result<()> {
        let max_cross = self.cross_sector_max();
        if max_cross <= tol::hermiticity() {
            Ok(())
        } else {
            Err(Error::NotSectorCompatible {
                max_cross: max_cross.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    fn require_same_space(&self, v: &StateVector<T>) -> Result<()> {
        if Space::same_space(&self.space, v.space()) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// <v|O|v> for a normalized v. The imaginary residue is below the
    /// Hermiticity tolerance and is dropped.
    pub fn expectation(&self, v: &StateVector<T>) -> Result<T> {
        self.require_same_space(v)?;
        v.require_normalized()?;
        Ok(self.quadratic_form(v))
    }

    /// <a|O|b> without normalization requirements.
    pub fn matrix_element(&self, a: &StateVector<T>, b: &StateVector<T>) -> Result<Complex<T>> {
        self.require_same_space(a)?;
        self.require_same_space(b)?;
        let ob = self.matrix.matvec(b.amplitudes());
        let zero = Complex::new(T::zero(), T::zero());
        Ok(a.amplitudes()
            .iter()
            .zip(&ob)
            .fold(zero, |acc, (x, y)| acc + x.conj() * *y))
    }

    fn quadratic_form(&self, v: &StateVector<T>) -> T {
        let ov = self.matrix.matvec(v.amplitudes());
        let zero = Complex::new(T::zero(), T::zero());
        v.amplitudes()
            .iter()
            .zip(&ov)
            .fold(zero, |acc, (x, y)| acc + x.conj() * *y)
            .re
    }

    /// Largest entry of [self, other].
    pub fn commutator_max(&self, other: &Self) -> Result<T> {
        if !Space::same_space(&self.space, &other.space) {
            return Err(Error::DimensionMismatch {
                expected: self.space.dim(),
                got: other.space.dim(),
            });
        }
        Ok(self.matrix.commutator(&other.matrix).max_abs())
    }
}

/// True iff `g` commutes with every listed observable and is not a scalar
/// multiple of the identity; such a `g` grades the space into coherent
/// sectors.
pub fn is_csv<T: Scalar>(g: &Observable<T>, observables: &[Observable<T>]) -> Result<bool> {
    let eps = tol::hermiticity::<T>();
    for o in observables {
        if g.commutator_max(o)? > eps {
            return Ok(false);
        }
    }
    let n = T::from(g.space.dim()).unwrap();
    let mean = g.matrix.trace().scale(T::one() / n);
    let shifted = g
        .matrix
        .sub(&CMatrix::identity(g.space.dim()).scale(mean));
    Ok(shifted.max_abs() > eps)
}

/// Matrix element of a sector-compatible observable between physical
/// states of two different sectors. The no-transition theorem bounds its
/// magnitude by roundoff.
pub fn cross_sector_element<T: Scalar>(
    o: &Observable<T>,
    a: &StateVector<T>,
    b: &StateVector<T>,
) -> Result<Complex<T>> {
    o.require_same_space(a)?;
    o.require_same_space(b)?;
    let sectors_a = a.sectors();
    let sectors_b = b.sectors();
    if sectors_a.len() != 1 || sectors_b.len() != 1 {
        return Err(Error::NotPhysical);
    }
    if sectors_a == sectors_b {
        return Err(Error::SameSector);
    }
    o.require_sector_compatible()?;
    o.matrix_element(a, b)
}

/// Largest expectation difference over a family of observables.
pub fn max_expectation_difference<T: Scalar>(
    u: &StateVector<T>,
    u2: &StateVector<T>,
    observables: &[Observable<T>],
) -> Result<T> {
    let mut max = T::zero();
    for o in observables {
        let diff = (o.expectation(u)? - o.expectation(u2)?).abs();
        max = max.max(diff);
    }
    Ok(max)
}

/// Whether two normalized states agree, within `tolerance`, on every
/// listed observable. Only sector-compatible observables are admitted:
/// the phase-freedom theorem quantifies over exactly those.
pub fn indistinguishable<T: Scalar>(
    u: &StateVector<T>,
    u2: &StateVector<T>,
    observables: &[Observable<T>],
    tolerance: T,
) -> Result<bool> {
    for o in observables {
        o.require_sector_compatible()?;
    }
    Ok(max_expectation_difference(u, u2, observables)? <= tolerance)
}

/// Dense seeded Hermitian observable: uniform [-1, 1] entries, then
/// (A + A^dag)/2. Draws are made in f64 so the stream is identical for
/// every scalar type.
pub fn random_hermitian<T: Scalar, R: Rng>(space: &Arc<Space>, rng: &mut R) -> Observable<T> {
    let n = space.dim();
    let raw = CMatrix::from_fn(n, |_, _| {
        let re: f64 = rng.gen_range(-1.0..=1.0);
        let im: f64 = rng.gen_range(-1.0..=1.0);
        Complex::new(cast::<T>(re), cast::<T>(im))
    });
    Observable {
        space: space.clone(),
        matrix: raw.hermitize(),
    }
}

/// Seeded Hermitian observable restricted to the sector blocks; spans the
/// sector-compatible algebra as the seed varies.
pub fn random_sector_observable<T: Scalar, R: Rng>(
    space: &Arc<Space>,
    rng: &mut R,
) -> Observable<T> {
    let dense = random_hermitian::<T, R>(space, rng);
    let zero = Complex::new(T::zero(), T::zero());
    let matrix = CMatrix::from_fn(space.dim(), |i, j| {
        if space.sector_at(i) == space.sector_at(j) {
            dense.matrix.get(i, j)
        } else {
            zero
        }
    });
    Observable {
        space: space.clone(),
        matrix,
    }
}

/// Hermitian, unit-trace, positive-semidefinite operator over a labeled
/// basis; the carrier for mixed states.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator<T: Scalar> {
    space: Arc<Space>,
    matrix: CMatrix<T>,
}

impl<T: Scalar> DensityOperator<T> {
    pub fn new(space: Arc<Space>, matrix: CMatrix<T>) -> Result<Self> {
        if matrix.dim() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                got: matrix.dim(),
            });
        }
        if !matrix.is_finite() {
            return Err(Error::NonFinite("density matrix"));
        }
        let deviation = matrix.hermiticity_deviation();
        if deviation > tol::hermiticity() {
            return Err(Error::NotHermitian {
                max_deviation: deviation.to_f64().unwrap_or(f64::NAN),
            });
        }
        let trace = matrix.trace().re;
        if (trace - T::one()).abs() > tol::norm() {
            return Err(Error::TraceNotOne {
                trace: trace.to_f64().unwrap_or(f64::NAN),
            });
        }
        let eigenvalues = hermitian_eigenvalues(&matrix);
        if let Some(&min) = eigenvalues.first() {
            if min < -tol::positivity::<T>() {
                return Err(Error::NotPositive {
                    min_eigenvalue: min.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self { space, matrix })
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn trace(&self) -> T {
        self.matrix.trace().re
    }

    /// Zero every block between distinct sectors. The diagonal is
    /// untouched, so the trace is preserved exactly, and positivity
    /// survives because sector blocks are principal submatrices.
    pub fn decohere(&self) -> Self {
        let zero = Complex::new(T::zero(), T::zero());
        let matrix = CMatrix::from_fn(self.space.dim(), |i, j| {
            if self.space.sector_at(i) == self.space.sector_at(j) {
                self.matrix.get(i, j)
            } else {
                zero
            }
        });
        Self {
            space: self.space.clone(),
            matrix,
        }
    }

    /// trace(rho O).
    pub fn expect(&self, o: &Observable<T>) -> Result<T> {
        if !Space::same_space(&self.space, &o.space) {
            return Err(Error::SpaceMismatch);
        }
        Ok(self.matrix.mul(&o.matrix).trace().re)
    }
}
