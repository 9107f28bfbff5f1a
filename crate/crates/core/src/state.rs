//! State vectors over a sector-graded basis.
//!
//! Vectors with support in several sectors are representable on purpose:
//! the theorems verified elsewhere quantify over such formal vectors, and
//! [`StateVector::is_physical`] tells the two kinds apart.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_complex::Complex;
use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::{cast, Scalar};
use crate::space::{BasisId, SectorLabel, Space};
use crate::tol;

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T: Scalar> {
    space: Arc<Space>,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    /// Amplitudes in basis order (sorted by sector then tag).
    pub fn new(space: Arc<Space>, amplitudes: Vec<Complex<T>>) -> Result<Self> {
        if amplitudes.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                got: amplitudes.len(),
            });
        }
        if !amplitudes
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
        {
            return Err(Error::NonFinite("state amplitudes"));
        }
        Ok(Self { space, amplitudes })
    }

    /// Build from sparse (id, amplitude) pairs; absent ids get amplitude 0.
    pub fn from_amplitudes(
        space: Arc<Space>,
        pairs: impl IntoIterator<Item = (BasisId, Complex<T>)>,
    ) -> Result<Self> {
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); space.dim()];
        for (id, amp) in pairs {
            let index = space
                .index_of(&id)
                .ok_or_else(|| Error::UnknownBasisId(id.to_string()))?;
            amplitudes[index] = amplitudes[index] + amp;
        }
        Self::new(space, amplitudes)
    }

    /// Unit basis vector |id>.
    pub fn basis_state(space: Arc<Space>, id: &BasisId) -> Result<Self> {
        let index = space
            .index_of(id)
            .ok_or_else(|| Error::UnknownBasisId(id.to_string()))?;
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); space.dim()];
        amplitudes[index] = Complex::new(T::one(), T::zero());
        Self::new(space, amplitudes)
    }

    pub fn zero(space: Arc<Space>) -> Self {
        let dim = space.dim();
        Self {
            space,
            amplitudes: vec![Complex::new(T::zero(), T::zero()); dim],
        }
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn amplitude(&self, id: &BasisId) -> Option<Complex<T>> {
        self.space.index_of(id).map(|i| self.amplitudes[i])
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn is_normalized(&self, tolerance: T) -> bool {
        (self.norm() - T::one()).abs() <= tolerance
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        let norm = self.norm();
        if (norm - T::one()).abs() <= tol::norm() {
            Ok(())
        } else {
            Err(Error::NotNormalized {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm <= T::zero() {
            return Err(Error::EmptyInput("cannot normalize the zero vector"));
        }
        let inv = T::one() / norm;
        Ok(Self {
            space: self.space.clone(),
            amplitudes: self.amplitudes.iter().map(|z| z.scale(inv)).collect(),
        })
    }

    /// Sectors carrying amplitude above the support threshold.
    pub fn sectors(&self) -> BTreeSet<SectorLabel> {
        let eps = tol::support::<T>();
        let mut out = BTreeSet::new();
        for (index, amp) in self.amplitudes.iter().enumerate() {
            if amp.norm() > eps {
                out.insert(self.space.sector_at(index).clone());
            }
        }
        out
    }

    /// A vector is physical when all its support lies in one sector.
    pub fn is_physical(&self) -> bool {
        self.sectors().len() <= 1
    }

    /// Zero out every amplitude outside the given sector.
    pub fn project_sector(&self, sector: &SectorLabel) -> Result<Self> {
        let range = self
            .space
            .sector_range(sector)
            .ok_or_else(|| Error::UnknownSector(sector.to_string()))?;
        let zero = Complex::new(T::zero(), T::zero());
        let amplitudes = self
            .amplitudes
            .iter()
            .enumerate()
            .map(|(i, amp)| if range.contains(&i) { *amp } else { zero })
            .collect();
        Ok(Self {
            space: self.space.clone(),
            amplitudes,
        })
    }

    /// Multiply each sector component by exp(i phase). Sectors missing
    /// from the map keep phase 0 and are left bit-identical.
    pub fn rephase_sectors(&self, phases: &BTreeMap<SectorLabel, T>) -> Self {
        let amplitudes = self
            .amplitudes
            .iter()
            .enumerate()
            .map(|(i, amp)| match phases.get(self.space.sector_at(i)) {
                Some(&phase) if phase != T::zero() => {
                    *amp * Complex::from_polar(T::one(), phase)
                }
                _ => *amp,
            })
            .collect();
        Self {
            space: self.space.clone(),
            amplitudes,
        }
    }

    pub fn distance(&self, other: &Self) -> Result<T> {
        if !Space::same_space(&self.space, &other.space) {
            return Err(Error::SpaceMismatch);
        }
        let sum = self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .fold(T::zero(), |acc, (a, b)| acc + (*a - *b).norm_sqr());
        Ok(sum.sqrt())
    }
}

/// Linear combination sum_i coeffs[i] * states[i].
///
/// The result is a formal vector; it need not be physical.
pub fn superpose<T: Scalar>(
    coeffs: &[Complex<T>],
    states: &[StateVector<T>],
) -> Result<StateVector<T>> {
    if coeffs.is_empty() || states.is_empty() {
        return Err(Error::EmptyInput("superpose"));
    }
    if coeffs.len() != states.len() {
        return Err(Error::LengthMismatch {
            coeffs: coeffs.len(),
            states: states.len(),
        });
    }
    if !coeffs.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("superposition coefficients"));
    }
    let space = states[0].space().clone();
    for state in &states[1..] {
        if !Space::same_space(&space, state.space()) {
            return Err(Error::SpaceMismatch);
        }
    }
    let zero = Complex::new(T::zero(), T::zero());
    let mut amplitudes = vec![zero; space.dim()];
    for (coeff, state) in coeffs.iter().zip(states) {
        for (slot, amp) in amplitudes.iter_mut().zip(state.amplitudes()) {
            *slot = *slot + *coeff * *amp;
        }
    }
    StateVector::new(space, amplitudes)
}

/// Inner product <a|b>, conjugate-linear in the first argument.
pub fn inner<T: Scalar>(a: &StateVector<T>, b: &StateVector<T>) -> Result<Complex<T>> {
    if !Space::same_space(a.space(), b.space()) {
        return Err(Error::SpaceMismatch);
    }
    let zero = Complex::new(T::zero(), T::zero());
    Ok(a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .fold(zero, |acc, (x, y)| acc + x.conj() * *y))
}

/// Seeded dense unit vector; real and imaginary parts are drawn uniformly
/// from [-1, 1] before normalization. Draws are made in f64 so the stream
/// is identical for every scalar type.
pub fn random_unit<T: Scalar, R: Rng>(space: &Arc<Space>, rng: &mut R) -> StateVector<T> {
    loop {
        let amplitudes: Vec<Complex<T>> = (0..space.dim())
            .map(|_| {
                let re: f64 = rng.gen_range(-1.0..=1.0);
                let im: f64 = rng.gen_range(-1.0..=1.0);
                Complex::new(cast(re), cast(im))
            })
            .collect();
        let candidate = StateVector {
            space: space.clone(),
            amplitudes,
        };
        if candidate.norm_sqr() > cast(1e-3) {
            return candidate.normalized().expect("norm checked above");
        }
    }
}

/// Seeded unit vector supported in a single sector.
pub fn random_unit_in_sector<T: Scalar, R: Rng>(
    space: &Arc<Space>,
    sector: &SectorLabel,
    rng: &mut R,
) -> Result<StateVector<T>> {
    let range = space
        .sector_range(sector)
        .ok_or_else(|| Error::UnknownSector(sector.to_string()))?;
    loop {
        let zero = Complex::new(T::zero(), T::zero());
        let mut amplitudes = vec![zero; space.dim()];
        for slot in &mut amplitudes[range.clone()] {
            let re: f64 = rng.gen_range(-1.0..=1.0);
            let im: f64 = rng.gen_range(-1.0..=1.0);
            *slot = Complex::new(cast(re), cast(im));
        }
        let candidate = StateVector {
            space: space.clone(),
            amplitudes,
        };
        if candidate.norm_sqr() > cast(1e-3) {
            return candidate.normalized();
        }
    }
}
