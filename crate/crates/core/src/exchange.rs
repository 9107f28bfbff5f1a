//! Two-particle exchange: the permutation operator, symmetric and
//! antisymmetric projectors, and the vanishing of observable matrix
//! elements between the two exchange sectors.

use std::sync::Arc;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::observable::Observable;
use crate::scalar::{cast, Scalar};
use crate::space::Space;
use crate::state::StateVector;
use crate::tol;

/// Exchange eigenvalue: +1 (bosonic) or -1 (fermionic).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExchangeSign {
    Symmetric,
    Antisymmetric,
}

impl ExchangeSign {
    pub fn sign<T: Scalar>(&self) -> T {
        match self {
            ExchangeSign::Symmetric => T::one(),
            ExchangeSign::Antisymmetric => -T::one(),
        }
    }
}

/// State of two particles over a single-particle tag set of size `d`,
/// amplitude at (slot1, slot2) stored at index `slot1 * d + slot2`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoParticleState<T: Scalar> {
    d: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> TwoParticleState<T> {
    pub fn new(d: usize, amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if d < 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: d });
        }
        if amplitudes.len() != d * d {
            return Err(Error::DimensionMismatch {
                expected: d * d,
                got: amplitudes.len(),
            });
        }
        if !amplitudes
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
        {
            return Err(Error::NonFinite("two-particle amplitudes"));
        }
        Ok(Self { d, amplitudes })
    }

    /// Product basis ket |slot1, slot2>.
    pub fn basis(d: usize, slot1: usize, slot2: usize) -> Result<Self> {
        if slot1 >= d || slot2 >= d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: slot1.max(slot2),
            });
        }
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); d * d];
        amplitudes[slot1 * d + slot2] = Complex::new(T::one(), T::zero());
        Self::new(d, amplitudes)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn amplitude(&self, slot1: usize, slot2: usize) -> Complex<T> {
        self.amplitudes[slot1 * self.d + slot2]
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: other.d,
            });
        }
        let zero = Complex::new(T::zero(), T::zero());
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .fold(zero, |acc, (a, b)| acc + a.conj() * *b))
    }

    pub fn distance(&self, other: &Self) -> Result<T> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: other.d,
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .fold(T::zero(), |acc, (a, b)| acc + (*a - *b).norm_sqr())
            .sqrt())
    }

    /// Amplitude at (i, j) moves to (j, i); applying it twice is the
    /// identity.
    pub fn swap(&self) -> Self {
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); self.d * self.d];
        for i in 0..self.d {
            for j in 0..self.d {
                amplitudes[j * self.d + i] = self.amplitudes[i * self.d + j];
            }
        }
        Self {
            d: self.d,
            amplitudes,
        }
    }

    /// (1 +- P)/2 applied to the state.
    pub fn project_exchange(&self, sign: ExchangeSign) -> Self {
        let swapped = self.swap();
        let half = T::from(0.5).unwrap();
        let s = sign.sign::<T>();
        let amplitudes = self
            .amplitudes
            .iter()
            .zip(&swapped.amplitudes)
            .map(|(a, b)| (*a + b.scale(s)).scale(half))
            .collect();
        Self {
            d: self.d,
            amplitudes,
        }
    }

    pub fn is_exchange_eigenstate(&self, sign: ExchangeSign, tolerance: T) -> bool {
        let swapped = self.swap();
        let s = sign.sign::<T>();
        self.amplitudes
            .iter()
            .zip(&swapped.amplitudes)
            .fold(T::zero(), |acc, (a, b)| acc + (b.scale(s) - *a).norm_sqr())
            .sqrt()
            <= tolerance
    }

    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm <= T::zero() {
            return Err(Error::EmptyInput("cannot normalize the zero vector"));
        }
        let inv = T::one() / norm;
        Ok(Self {
            d: self.d,
            amplitudes: self.amplitudes.iter().map(|z| z.scale(inv)).collect(),
        })
    }

    /// View in the labeled two-particle space used by [`Observable`].
    pub fn to_state_vector(&self) -> StateVector<T> {
        let space = two_particle_space(self.d);
        StateVector::new(space, self.amplitudes.clone()).expect("layouts match")
    }

    /// Seeded dense state, not normalized.
    pub fn random<R: Rng>(d: usize, rng: &mut R) -> Result<Self> {
        let amplitudes = (0..d * d)
            .map(|_| {
                let re: f64 = rng.gen_range(-1.0..=1.0);
                let im: f64 = rng.gen_range(-1.0..=1.0);
                Complex::new(cast::<T>(re), cast::<T>(im))
            })
            .collect();
        Self::new(d, amplitudes)
    }

    /// Seeded normalized exchange eigenstate of the given sign.
    pub fn random_eigenstate<R: Rng>(d: usize, sign: ExchangeSign, rng: &mut R) -> Result<Self> {
        loop {
            let projected = Self::random(d, rng)?.project_exchange(sign);
            if projected.norm_sqr() > cast(1e-3) {
                return projected.normalized();
            }
        }
    }
}

/// Single-sector labeled basis for the d^2 product space; tags are
/// zero-padded "i,j" pairs so the lexicographic layout matches the
/// row-major amplitude layout.
pub fn two_particle_space(d: usize) -> Arc<Space> {
    let width = (d.max(2) - 1).to_string().len();
    Space::single_sector(
        "two-particle",
        (0..d * d).map(|k| format!("{:0w$},{:0w$}", k / d, k % d, w = width)),
    )
    .expect("static basis")
}

/// Matrix of the permutation operator on the d^2 basis.
pub fn swap_matrix<T: Scalar>(d: usize) -> CMatrix<T> {
    let one = Complex::new(T::one(), T::zero());
    let zero = Complex::new(T::zero(), T::zero());
    CMatrix::from_fn(d * d, |row, col| {
        let (i, j) = (row / d, row % d);
        if col == j * d + i {
            one
        } else {
            zero
        }
    })
}

/// Seeded Hermitian observable commuting with the swap operator,
/// constructed as (A + PAP)/2 plus its adjoint from a dense random A.
pub fn random_exchange_observable<T: Scalar>(seed: u64, d: usize) -> Result<Observable<T>> {
    if d < 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = CMatrix::from_fn(d * d, |_, _| {
        let re: f64 = rng.gen_range(-1.0..=1.0);
        let im: f64 = rng.gen_range(-1.0..=1.0);
        Complex::new(cast::<T>(re), cast::<T>(im))
    });
    let p = swap_matrix::<T>(d);
    let half = Complex::new(T::from(0.5).unwrap(), T::zero());
    let symmetrized = a.add(&p.mul(&a).mul(&p)).scale(half);
    let matrix = symmetrized.add(&symmetrized.adjoint());
    Observable::new(two_particle_space(d), matrix)
}

fn require_swap_invariant<T: Scalar>(o: &Observable<T>, d: usize) -> Result<()> {
    let p = swap_matrix::<T>(d);
    let max_commutator = o.matrix().commutator(&p).max_abs();
    if max_commutator > tol::hermiticity() {
        return Err(Error::NotSwapInvariant {
            max_commutator: max_commutator.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// <anti|O|sym> for a swap-commuting observable between normalized
/// exchange eigenstates; the univalence chain forces it to vanish.
pub fn exchange_cross_element<T: Scalar>(
    o: &Observable<T>,
    sym: &TwoParticleState<T>,
    anti: &TwoParticleState<T>,
) -> Result<Complex<T>> {
    if sym.d != anti.d {
        return Err(Error::DimensionMismatch {
            expected: sym.d,
            got: anti.d,
        });
    }
    let d = sym.d;
    if o.space().dim() != d * d {
        return Err(Error::DimensionMismatch {
            expected: d * d,
            got: o.space().dim(),
        });
    }
    require_swap_invariant(o, d)?;
    let eps = tol::norm::<T>();
    if !sym.is_exchange_eigenstate(ExchangeSign::Symmetric, eps) {
        return Err(Error::NotExchangeEigenstate("symmetric"));
    }
    if !anti.is_exchange_eigenstate(ExchangeSign::Antisymmetric, eps) {
        return Err(Error::NotExchangeEigenstate("antisymmetric"));
    }
    if (sym.norm() - T::one()).abs() > eps || (anti.norm() - T::one()).abs() > eps {
        return Err(Error::NotNormalized {
            norm: sym.norm().to_f64().unwrap_or(f64::NAN),
        });
    }
    o.matrix_element(&anti.to_state_vector(), &sym.to_state_vector())
}

/// Applies the swap to a_+ |phi_+> + a_- |phi_-> and returns the flipped
/// vector a_+ |phi_+> - a_- |phi_-> together with its distance from the
/// original, 2 |a_-| for an orthonormal pair.
pub fn exchange_superposition_flip<T: Scalar>(
    a_plus: Complex<T>,
    a_minus: Complex<T>,
    basis_sym: &TwoParticleState<T>,
    basis_anti: &TwoParticleState<T>,
) -> Result<(TwoParticleState<T>, T)> {
    let eps = tol::norm::<T>();
    if (basis_sym.norm() - T::one()).abs() > eps || (basis_anti.norm() - T::one()).abs() > eps {
        return Err(Error::NotNormalized {
            norm: basis_sym.norm().to_f64().unwrap_or(f64::NAN),
        });
    }
    let overlap = basis_sym.inner(basis_anti)?.norm();
    if overlap > eps {
        return Err(Error::NotOrthogonal {
            overlap: overlap.to_f64().unwrap_or(f64::NAN),
        });
    }
    if !basis_sym.is_exchange_eigenstate(ExchangeSign::Symmetric, eps) {
        return Err(Error::NotExchangeEigenstate("symmetric"));
    }
    if !basis_anti.is_exchange_eigenstate(ExchangeSign::Antisymmetric, eps) {
        return Err(Error::NotExchangeEigenstate("antisymmetric"));
    }
    let d = basis_sym.d;
    let original_amplitudes: Vec<Complex<T>> = basis_sym
        .amplitudes
        .iter()
        .zip(&basis_anti.amplitudes)
        .map(|(s, a)| a_plus * *s + a_minus * *a)
        .collect();
    let original = TwoParticleState::new(d, original_amplitudes)?;
    let flipped = original.swap();
    let distance = original.distance(&flipped)?;
    Ok((flipped, distance))
}
