//! Incoherent superpositions: real-weighted statistical mixtures.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::observable::{DensityOperator, Observable};
use crate::scalar::Scalar;
use crate::space::Space;
use crate::state::StateVector;
use crate::tol;

/// Mixture of normalized states with real weights that sum to 1. The
/// weights are populations, never amplitudes, so no relative phase exists
/// between members and no interference terms can arise.
#[derive(Clone, Debug, PartialEq)]
pub struct Ensemble<T: Scalar> {
    members: Vec<(T, StateVector<T>)>,
}

impl<T: Scalar> Ensemble<T> {
    pub fn new(members: Vec<(T, StateVector<T>)>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyInput("ensemble"));
        }
        let space = members[0].1.space().clone();
        let mut sum = T::zero();
        for (weight, state) in &members {
            if !weight.is_finite() || *weight < T::zero() {
                return Err(Error::InvalidWeight {
                    value: weight.to_f64().unwrap_or(f64::NAN),
                });
            }
            if !Space::same_space(&space, state.space()) {
                return Err(Error::SpaceMismatch);
            }
            state.require_normalized()?;
            sum = sum + *weight;
        }
        if (sum - T::one()).abs() > tol::norm() {
            return Err(Error::WeightSum {
                sum: sum.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[(T, StateVector<T>)] {
        &self.members
    }

    pub fn space(&self) -> &std::sync::Arc<Space> {
        self.members[0].1.space()
    }

    /// Ensemble average sum_k w_k <psi_k|O|psi_k>; by construction free of
    /// cross terms between members.
    pub fn average(&self, o: &Observable<T>) -> Result<T> {
        let mut total = T::zero();
        for (weight, state) in &self.members {
            total = total + *weight * o.expectation(state)?;
        }
        Ok(total)
    }

    /// sum_k w_k |psi_k><psi_k|.
    pub fn to_density(&self) -> Result<DensityOperator<T>> {
        let dim = self.space().dim();
        let mut matrix = CMatrix::zeros(dim);
        for (weight, state) in &self.members {
            let outer = CMatrix::outer(state.amplitudes());
            matrix = matrix.add(&outer.scale(Complex::new(*weight, T::zero())));
        }
        DensityOperator::new(self.space().clone(), matrix)
    }
}
