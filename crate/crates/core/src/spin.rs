//! Spin species, the standard spin-1/2 states, and the 2 pi rotation that
//! separates bosonic from fermionic sectors.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::observable::{max_expectation_difference, random_sector_observable, Observable};
use crate::scalar::{cast, Scalar};
use crate::space::{BasisId, SectorLabel, Space};
use crate::state::{superpose, StateVector};
use crate::tol;

/// Particle species identified by its spin, stored as 2s so half-integers
/// stay exact. Statistics follow from the spin: half-integer means
/// fermionic, integer means bosonic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinSpecies {
    twice_spin: u32,
}

impl SpinSpecies {
    pub fn from_twice_spin(twice_spin: u32) -> Self {
        Self { twice_spin }
    }

    /// Spin 1/2.
    pub fn electron() -> Self {
        Self::from_twice_spin(1)
    }

    /// Spin 1.
    pub fn photon() -> Self {
        Self::from_twice_spin(2)
    }

    pub fn twice_spin(&self) -> u32 {
        self.twice_spin
    }

    pub fn is_fermion(&self) -> bool {
        self.twice_spin % 2 == 1
    }

    pub fn is_boson(&self) -> bool {
        !self.is_fermion()
    }

    /// Phase picked up under a full 2 pi rotation: (-1)^(2s).
    pub fn rotation_2pi_sign<T: Scalar>(&self) -> T {
        if self.is_fermion() {
            -T::one()
        } else {
            T::one()
        }
    }
}

impl fmt::Display for SpinSpecies {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice_spin % 2 == 0 {
            write!(f, "{}", self.twice_spin / 2)
        } else {
            write!(f, "{}/2", self.twice_spin)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinDirection {
    PlusZ,
    MinusZ,
    PlusX,
    MinusX,
    PlusY,
    MinusY,
}

/// The single-sector spin-1/2 space with basis |+>, |->.
pub fn spin_space() -> Arc<Space> {
    Space::single_sector("spin-1/2", ["+", "-"]).expect("static basis")
}

/// Spin state pointing along the requested axis, unit norm.
///
/// In the (|+>, |->) basis:
///   +x -> (1, 1)/sqrt2,          -x -> (1, -1)/sqrt2,
///   +y -> (e^{-i pi/4}, e^{+i pi/4})/sqrt2, -y with the phases swapped.
pub fn make_spin_state<T: Scalar>(direction: SpinDirection) -> StateVector<T> {
    let space = spin_space();
    let zero = T::zero();
    let one = T::one();
    let inv_sqrt2 = cast::<T>(std::f64::consts::FRAC_1_SQRT_2);
    let quarter_pi = T::from(std::f64::consts::FRAC_PI_4).unwrap();
    let (plus, minus) = match direction {
        SpinDirection::PlusZ => (Complex::new(one, zero), Complex::new(zero, zero)),
        SpinDirection::MinusZ => (Complex::new(zero, zero), Complex::new(one, zero)),
        SpinDirection::PlusX => (
            Complex::new(inv_sqrt2, zero),
            Complex::new(inv_sqrt2, zero),
        ),
        SpinDirection::MinusX => (
            Complex::new(inv_sqrt2, zero),
            Complex::new(-inv_sqrt2, zero),
        ),
        SpinDirection::PlusY => (
            Complex::from_polar(inv_sqrt2, -quarter_pi),
            Complex::from_polar(inv_sqrt2, quarter_pi),
        ),
        SpinDirection::MinusY => (
            Complex::from_polar(inv_sqrt2, quarter_pi),
            Complex::from_polar(inv_sqrt2, -quarter_pi),
        ),
    };
    StateVector::new(space, vec![plus, minus]).expect("static state")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

/// Pauli matrix on the spin-1/2 space.
pub fn pauli<T: Scalar>(axis: PauliAxis) -> Observable<T> {
    let zero = T::zero();
    let one = T::one();
    let z = Complex::new(zero, zero);
    let entries = match axis {
        PauliAxis::X => [z, Complex::new(one, zero), Complex::new(one, zero), z],
        PauliAxis::Y => [z, Complex::new(zero, -one), Complex::new(zero, one), z],
        PauliAxis::Z => [Complex::new(one, zero), z, z, Complex::new(-one, zero)],
    };
    Observable::from_fn(spin_space(), |i, j| entries[2 * i + j]).expect("Pauli is Hermitian")
}

/// Full 2 pi rotation: each sector component is multiplied by the species
/// sign (-1)^(2s). Every populated sector must have a species entry.
pub fn rotate_2pi<T: Scalar>(
    v: &StateVector<T>,
    species_per_sector: &BTreeMap<SectorLabel, SpinSpecies>,
) -> Result<StateVector<T>> {
    for sector in v.sectors() {
        if !species_per_sector.contains_key(&sector) {
            return Err(Error::MissingSpecies(sector.to_string()));
        }
    }
    let amplitudes = v
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(i, amp)| {
            match species_per_sector.get(v.space().sector_at(i)) {
                Some(species) if species.is_fermion() => -*amp,
                _ => *amp,
            }
        })
        .collect();
    StateVector::new(v.space().clone(), amplitudes)
}

/// The two-sector photon/electron space of the univalence argument.
pub fn univalence_space() -> Arc<Space> {
    Space::new([
        BasisId::new("boson", "photon"),
        BasisId::new("fermion", "electron"),
    ])
    .expect("static basis")
}

pub fn univalence_species() -> BTreeMap<SectorLabel, SpinSpecies> {
    BTreeMap::from([
        (SectorLabel::new("boson"), SpinSpecies::photon()),
        (SectorLabel::new("fermion"), SpinSpecies::electron()),
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnivalenceVerdict {
    /// Support in at most one sector: the rotation is at most a global phase.
    PhysicalSingleSector,
    /// Genuinely different vector, yet no sector-compatible observable can
    /// tell the two apart; the coherent reading of the superposition fails.
    ForbiddenAsCoherent,
    /// Two-sector support but below the distinctness threshold.
    Inconclusive,
}

impl fmt::Display for UnivalenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            UnivalenceVerdict::PhysicalSingleSector => "physical (single sector)",
            UnivalenceVerdict::ForbiddenAsCoherent => "forbidden-as-coherent",
            UnivalenceVerdict::Inconclusive => "inconclusive",
        };
        f.write_str(text)
    }
}

#[derive(Clone, Debug)]
pub struct UnivalenceReport<T: Scalar> {
    /// || Psi - R(2 pi) Psi ||.
    pub vector_distance: T,
    /// Largest expectation difference over the sampled sector-compatible
    /// observables.
    pub max_expectation_diff: T,
    pub observables_tested: usize,
    pub verdict: UnivalenceVerdict,
}

/// Rotates a_p |photon> + a_e |electron> by 2 pi and reports how different
/// the result is: as a Hilbert-space vector, and as measured by a seeded
/// family of sector-compatible observables.
pub fn univalence_report<T: Scalar>(
    a_p: Complex<T>,
    a_e: Complex<T>,
    seed: u64,
    observables: usize,
) -> Result<UnivalenceReport<T>> {
    let norm_sqr = a_p.norm_sqr() + a_e.norm_sqr();
    if (norm_sqr.sqrt() - T::one()).abs() > tol::norm() {
        return Err(Error::NotNormalized {
            norm: norm_sqr.sqrt().to_f64().unwrap_or(f64::NAN),
        });
    }
    let space = univalence_space();
    let photon = StateVector::basis_state(space.clone(), &BasisId::new("boson", "photon"))?;
    let electron = StateVector::basis_state(space.clone(), &BasisId::new("fermion", "electron"))?;
    let psi = superpose(&[a_p, a_e], &[photon, electron])?;
    let rotated = rotate_2pi(&psi, &univalence_species())?;

    let vector_distance = psi.distance(&rotated)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_diff = T::zero();
    for _ in 0..observables {
        let o = random_sector_observable(&space, &mut rng);
        let diff = max_expectation_difference(&psi, &rotated, std::slice::from_ref(&o))?;
        max_diff = max_diff.max(diff);
    }

    let verdict = if psi.sectors().len() <= 1 {
        UnivalenceVerdict::PhysicalSingleSector
    } else if vector_distance > cast(tol::DISTINCT_VECTOR) && max_diff <= tol::theorem() {
        UnivalenceVerdict::ForbiddenAsCoherent
    } else {
        UnivalenceVerdict::Inconclusive
    };

    Ok(UnivalenceReport {
        vector_distance,
        max_expectation_diff: max_diff,
        observables_tested: observables,
        verdict,
    })
}
