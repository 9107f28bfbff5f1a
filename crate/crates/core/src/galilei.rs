//! Galilean identity-loop phases and the mass and particle-number
//! superselection rules they induce.
//!
//! Only the net phase of displacement -> boost -> inverse displacement ->
//! inverse boost is represented; it acts on mass-labeled amplitudes, which
//! is all the argument needs.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::space::{BasisId, SectorLabel, Space};
use crate::state::StateVector;
use crate::tol;

/// Boost velocity, displacement, and time, in atomic units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GalileiParams<T: Scalar> {
    velocity: [T; 3],
    displacement: [T; 3],
    time: T,
}

impl<T: Scalar> GalileiParams<T> {
    pub fn new(velocity: [T; 3], displacement: [T; 3], time: T) -> Result<Self> {
        let finite = velocity.iter().chain(&displacement).all(|x| x.is_finite());
        if !finite || !time.is_finite() {
            return Err(Error::NonFinite("Galilei parameters"));
        }
        Ok(Self {
            velocity,
            displacement,
            time,
        })
    }

    pub fn velocity(&self) -> [T; 3] {
        self.velocity
    }

    pub fn displacement(&self) -> [T; 3] {
        self.displacement
    }

    pub fn time(&self) -> T {
        self.time
    }

    /// v . r, the argument of the identity-loop phase.
    pub fn vr_dot(&self) -> T {
        self.velocity
            .iter()
            .zip(&self.displacement)
            .fold(T::zero(), |acc, (v, r)| acc + *v * *r)
    }
}

/// Net phase exp(i m v.r) of the loop U_-v U_-r U_v U_r on a state of
/// mass m.
pub fn ui_phase<T: Scalar>(mass: T, params: &GalileiParams<T>) -> Result<Complex<T>> {
    if !(mass > T::zero()) || !mass.is_finite() {
        return Err(Error::NonPositiveMass {
            mass: mass.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(Complex::from_polar(T::one(), mass * params.vr_dot()))
}

/// Phase exp(i n m v.r) picked up by an n-particle state of per-particle
/// mass m; coincides with `ui_phase` at total mass n m.
pub fn particle_number_phase<T: Scalar>(
    n: u32,
    mass: T,
    params: &GalileiParams<T>,
) -> Result<Complex<T>> {
    if !(mass > T::zero()) || !mass.is_finite() {
        return Err(Error::NonPositiveMass {
            mass: mass.to_f64().unwrap_or(f64::NAN),
        });
    }
    if n == 0 {
        return Ok(Complex::new(T::one(), T::zero()));
    }
    ui_phase(T::from(n).unwrap() * mass, params)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MassComponent<T: Scalar> {
    pub mass: T,
    pub amplitude: Complex<T>,
    pub sector: SectorLabel,
}

/// Amplitudes over states of definite mass, one sector per component.
#[derive(Clone, Debug, PartialEq)]
pub struct MassLabeledState<T: Scalar> {
    components: Vec<MassComponent<T>>,
}

impl<T: Scalar> MassLabeledState<T> {
    pub fn new(components: Vec<MassComponent<T>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyInput("mass-labeled state"));
        }
        for component in &components {
            if !(component.mass > T::zero()) || !component.mass.is_finite() {
                return Err(Error::NonPositiveMass {
                    mass: component.mass.to_f64().unwrap_or(f64::NAN),
                });
            }
            if !component.amplitude.re.is_finite() || !component.amplitude.im.is_finite() {
                return Err(Error::NonFinite("mass component amplitude"));
            }
        }
        for (i, a) in components.iter().enumerate() {
            for b in &components[i + 1..] {
                if a.sector == b.sector {
                    return Err(Error::DuplicateBasisId(a.sector.to_string()));
                }
            }
        }
        Ok(Self { components })
    }

    /// Two components with weights |a1|^2, |a2|^2 on distinct mass sectors.
    pub fn two_mass(
        mass1: T,
        amp1: Complex<T>,
        mass2: T,
        amp2: Complex<T>,
    ) -> Result<Self> {
        Self::new(vec![
            MassComponent {
                mass: mass1,
                amplitude: amp1,
                sector: SectorLabel::new("m1"),
            },
            MassComponent {
                mass: mass2,
                amplitude: amp2,
                sector: SectorLabel::new("m2"),
            },
        ])
    }

    pub fn components(&self) -> &[MassComponent<T>] {
        &self.components
    }

    pub fn norm_sqr(&self) -> T {
        self.components
            .iter()
            .fold(T::zero(), |acc, c| acc + c.amplitude.norm_sqr())
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// Identity-loop action: each component picks up its mass-dependent
    /// phase. Norm is preserved.
    pub fn apply_ui(&self, params: &GalileiParams<T>) -> Self {
        let components = self
            .components
            .iter()
            .map(|c| MassComponent {
                mass: c.mass,
                amplitude: c.amplitude
                    * Complex::from_polar(T::one(), c.mass * params.vr_dot()),
                sector: c.sector.clone(),
            })
            .collect();
        Self { components }
    }

    /// |<s|U_I s>|^2 for a normalized state; equals
    /// |sum_j |a_j|^2 exp(i m_j v.r)|^2.
    pub fn ui_overlap(&self, params: &GalileiParams<T>) -> Result<T> {
        let norm = self.norm();
        if (norm - T::one()).abs() > tol::norm() {
            return Err(Error::NotNormalized {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        let vr = params.vr_dot();
        let zero = Complex::new(T::zero(), T::zero());
        let sum = self.components.iter().fold(zero, |acc, c| {
            acc + Complex::from_polar(c.amplitude.norm_sqr(), c.mass * vr)
        });
        Ok(sum.norm_sqr())
    }

    /// Distance as vectors; the component layout must match, which holds
    /// for any state and its `apply_ui` images.
    pub fn distance(&self, other: &Self) -> Result<T> {
        if self.components.len() != other.components.len() {
            return Err(Error::DimensionMismatch {
                expected: self.components.len(),
                got: other.components.len(),
            });
        }
        let mut sum = T::zero();
        for (a, b) in self.components.iter().zip(&other.components) {
            if a.sector != b.sector {
                return Err(Error::SpaceMismatch);
            }
            sum = sum + (a.amplitude - b.amplitude).norm_sqr();
        }
        Ok(sum.sqrt())
    }

    /// Embed into a sector-graded space, one basis element per mass sector.
    pub fn to_state_vector(&self) -> Result<StateVector<T>> {
        let space = self.space()?;
        StateVector::from_amplitudes(
            space,
            self.components
                .iter()
                .map(|c| (BasisId::new(c.sector.clone(), "mass"), c.amplitude)),
        )
    }

    pub fn space(&self) -> Result<Arc<Space>> {
        Space::new(
            self.components
                .iter()
                .map(|c| BasisId::new(c.sector.clone(), "mass")),
        )
    }
}
