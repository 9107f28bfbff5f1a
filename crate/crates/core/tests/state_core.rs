//! States, ensembles, observables, and the general sector theorems.

use std::collections::BTreeMap;
use std::sync::Arc;

use approx::{assert_abs_diff_eq, assert_relative_eq};
use num_complex::Complex;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use supersel::linalg::CMatrix;
use supersel::spin::{make_spin_state, pauli, spin_space, PauliAxis, SpinDirection};
use supersel::{
    cross_sector_element, indistinguishable, inner, is_csv, random_sector_observable,
    random_unit, random_unit_in_sector, superpose, BasisId, Ensemble, Error, Observable,
    SectorLabel, Space, StateVector,
};

type C = Complex<f64>;

fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

fn photon_electron_space() -> Arc<Space> {
    Space::new([
        BasisId::new("boson", "photon"),
        BasisId::new("fermion", "electron"),
    ])
    .unwrap()
}

/// Three sectors of mixed dimension, enough structure for the theorems.
fn graded_space() -> Arc<Space> {
    Space::new([
        BasisId::new("g1", "a"),
        BasisId::new("g1", "b"),
        BasisId::new("g2", "a"),
        BasisId::new("g2", "b"),
        BasisId::new("g2", "c"),
        BasisId::new("g3", "a"),
        BasisId::new("g3", "b"),
    ])
    .unwrap()
}

fn basis_vec(space: &Arc<Space>, sector: &str, tag: &str) -> StateVector<f64> {
    StateVector::basis_state(space.clone(), &BasisId::new(sector, tag)).unwrap()
}

#[test]
fn superpose_builds_the_x_spin_state() {
    let plus = make_spin_state::<f64>(SpinDirection::PlusZ);
    let minus = make_spin_state::<f64>(SpinDirection::MinusZ);
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let x = superpose(&[c(inv_sqrt2, 0.0), c(inv_sqrt2, 0.0)], &[minus, plus]).unwrap();
    assert_eq!(x.amplitudes(), make_spin_state::<f64>(SpinDirection::PlusX).amplitudes());
}

#[test]
fn superpose_identity_case_returns_the_state() {
    let space = graded_space();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let psi = random_unit::<f64, _>(&space, &mut rng);
    let phi = random_unit::<f64, _>(&space, &mut rng);
    let result = superpose(&[c(1.0, 0.0), c(0.0, 0.0)], &[psi.clone(), phi]).unwrap();
    assert_eq!(result.amplitudes(), psi.amplitudes());
}

#[test]
fn cross_sector_superposition_is_formal_not_physical() {
    let space = photon_electron_space();
    let photon = basis_vec(&space, "boson", "photon");
    let electron = basis_vec(&space, "fermion", "electron");
    let psi = superpose(&[c(0.6, 0.0), c(0.0, 0.8)], &[photon, electron]).unwrap();
    assert!(!psi.is_physical());
    let sectors: Vec<String> = psi.sectors().iter().map(|s| s.to_string()).collect();
    assert_eq!(sectors, ["boson", "fermion"]);
}

#[test]
fn superpose_rejects_bad_input() {
    let space = graded_space();
    let v = basis_vec(&space, "g1", "a");
    assert!(matches!(
        superpose::<f64>(&[], &[]),
        Err(Error::EmptyInput(_))
    ));
    assert!(matches!(
        superpose(&[c(1.0, 0.0), c(2.0, 0.0)], &[v.clone()]),
        Err(Error::LengthMismatch { .. })
    ));
    let other = make_spin_state::<f64>(SpinDirection::PlusZ);
    assert!(matches!(
        superpose(&[c(1.0, 0.0), c(1.0, 0.0)], &[v, other]),
        Err(Error::SpaceMismatch)
    ));
}

#[test]
fn inner_product_oracles() {
    let plus = make_spin_state::<f64>(SpinDirection::PlusZ);
    let minus = make_spin_state::<f64>(SpinDirection::MinusZ);
    let x = make_spin_state::<f64>(SpinDirection::PlusX);
    assert_eq!(inner(&plus, &minus).unwrap(), c(0.0, 0.0));
    // expanding |x> by hand: |1/sqrt2|^2 + |1/sqrt2|^2 = 1
    assert_abs_diff_eq!(inner(&x, &x).unwrap().re, 1.0, epsilon = 1e-15);
    assert_abs_diff_eq!(
        inner(&plus, &x).unwrap().re,
        std::f64::consts::FRAC_1_SQRT_2,
        epsilon = 1e-15
    );
}

#[test]
fn zero_vector_has_no_sectors() {
    let space = graded_space();
    let zero = StateVector::<f64>::zero(space);
    assert!(zero.sectors().is_empty());
    assert!(zero.is_physical());
}

#[test]
fn projection_keeps_one_sector_and_is_idempotent() {
    let space = photon_electron_space();
    let photon = basis_vec(&space, "boson", "photon");
    let electron = basis_vec(&space, "fermion", "electron");
    let a_p = c(0.6, 0.1);
    let a_e = c(-0.3, 0.7);
    let psi = superpose(&[a_p, a_e], &[photon, electron]).unwrap();

    let boson_part = psi.project_sector(&SectorLabel::new("boson")).unwrap();
    assert_eq!(boson_part.amplitude(&BasisId::new("boson", "photon")), Some(a_p));
    assert_eq!(
        boson_part.amplitude(&BasisId::new("fermion", "electron")),
        Some(c(0.0, 0.0))
    );
    let twice = boson_part.project_sector(&SectorLabel::new("boson")).unwrap();
    assert_eq!(twice.amplitudes(), boson_part.amplitudes());

    assert!(matches!(
        psi.project_sector(&SectorLabel::new("nope")),
        Err(Error::UnknownSector(_))
    ));
}

proptest! {
    #[test]
    fn projections_reassemble_the_vector_exactly(
        parts in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 7)
    ) {
        let space = graded_space();
        let amplitudes: Vec<C> = parts.iter().map(|&(re, im)| c(re, im)).collect();
        let v = StateVector::new(space.clone(), amplitudes).unwrap();
        let projections: Vec<StateVector<f64>> = space
            .sectors()
            .iter()
            .map(|g| v.project_sector(g).unwrap())
            .collect();
        let coeffs = vec![c(1.0, 0.0); projections.len()];
        let reassembled = superpose(&coeffs, &projections).unwrap();
        prop_assert_eq!(reassembled.amplitudes(), v.amplitudes());
    }

    #[test]
    fn inner_is_conjugate_symmetric_and_positive(
        left in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 7),
        right in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 7)
    ) {
        let space = graded_space();
        let a = StateVector::new(space.clone(), left.iter().map(|&(re, im)| c(re, im)).collect()).unwrap();
        let b = StateVector::new(space, right.iter().map(|&(re, im)| c(re, im)).collect()).unwrap();
        let ab = inner(&a, &b).unwrap();
        let ba = inner(&b, &a).unwrap();
        prop_assert!((ab - ba.conj()).norm() <= 1e-12);
        let aa = inner(&a, &a).unwrap();
        prop_assert!(aa.im.abs() <= 1e-12);
        prop_assert!(aa.re >= 0.0);
    }
}

#[test]
fn expectation_oracles_on_spin_half() {
    let x = make_spin_state::<f64>(SpinDirection::PlusX);
    let plus = make_spin_state::<f64>(SpinDirection::PlusZ);
    let sigma_x = pauli::<f64>(PauliAxis::X);
    let sigma_z = pauli::<f64>(PauliAxis::Z);
    assert_abs_diff_eq!(sigma_x.expectation(&x).unwrap(), 1.0, epsilon = 1e-15);
    assert_abs_diff_eq!(sigma_z.expectation(&plus).unwrap(), 1.0, epsilon = 1e-15);
    assert_abs_diff_eq!(sigma_z.expectation(&x).unwrap(), 0.0, epsilon = 1e-15);
}

#[test]
fn expectation_rejects_unnormalized_states() {
    let space = spin_space();
    let v = StateVector::new(space, vec![c(2.0, 0.0), c(0.0, 0.0)]).unwrap();
    assert!(matches!(
        pauli::<f64>(PauliAxis::Z).expectation(&v),
        Err(Error::NotNormalized { .. })
    ));
}

#[test]
fn observables_must_be_hermitian() {
    let space = spin_space();
    let mut m = CMatrix::<f64>::zeros(2);
    m.set(0, 1, c(1.0, 0.0));
    m.set(1, 0, c(0.5, 0.0));
    assert!(matches!(
        Observable::new(space, m),
        Err(Error::NotHermitian { .. })
    ));
}

#[test]
fn expectation_splits_into_populations_plus_interference_terms() {
    // <phi|O|phi> = |a|^2 <+|O|+> + |b|^2 <-|O|-> + 2 Re(a* b <+|O|->)
    let plus = make_spin_state::<f64>(SpinDirection::PlusZ);
    let minus = make_spin_state::<f64>(SpinDirection::MinusZ);
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..50 {
        let raw = random_unit::<f64, _>(&spin_space(), &mut rng);
        let a = raw.amplitudes()[0];
        let b = raw.amplitudes()[1];
        let phi = superpose(&[a, b], &[plus.clone(), minus.clone()]).unwrap();
        let o = supersel::random_hermitian::<f64, _>(&spin_space(), &mut rng);
        let lhs = o.expectation(&phi).unwrap()
            - a.norm_sqr() * o.expectation(&plus).unwrap()
            - b.norm_sqr() * o.expectation(&minus).unwrap();
        let cross = o.matrix_element(&plus, &minus).unwrap();
        let rhs = 2.0 * (a.conj() * b * cross).re;
        assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12);
    }
}

#[test]
fn ensemble_validation_catches_bad_mixtures() {
    let plus = make_spin_state::<f64>(SpinDirection::PlusZ);
    let minus = make_spin_state::<f64>(SpinDirection::MinusZ);
    assert!(matches!(
        Ensemble::new(vec![(-0.1, plus.clone()), (1.1, minus.clone())]),
        Err(Error::InvalidWeight { .. })
    ));
    assert!(matches!(
        Ensemble::new(vec![(0.5, plus.clone()), (0.4, minus.clone())]),
        Err(Error::WeightSum { .. })
    ));
    let stretched = StateVector::new(spin_space(), vec![c(2.0, 0.0), c(0.0, 0.0)]).unwrap();
    assert!(matches!(
        Ensemble::new(vec![(1.0, stretched)]),
        Err(Error::NotNormalized { .. })
    ));
    assert!(matches!(
        Ensemble::<f64>::new(vec![]),
        Err(Error::EmptyInput(_))
    ));
}

#[test]
fn incoherent_mixture_shows_no_interference() {
    let plus = make_spin_state::<f64>(SpinDirection::PlusZ);
    let minus = make_spin_state::<f64>(SpinDirection::MinusZ);
    let mixture = Ensemble::new(vec![(0.5, plus), (0.5, minus)]).unwrap();
    let sigma_z = pauli::<f64>(PauliAxis::Z);
    let sigma_x = pauli::<f64>(PauliAxis::X);
    assert_abs_diff_eq!(mixture.average(&sigma_z).unwrap(), 0.0, epsilon = 1e-15);
    // the coherent |x> state scores 1 on sigma_x; the mixture scores 0
    assert_abs_diff_eq!(mixture.average(&sigma_x).unwrap(), 0.0, epsilon = 1e-15);
    let x = make_spin_state::<f64>(SpinDirection::PlusX);
    assert_abs_diff_eq!(sigma_x.expectation(&x).unwrap(), 1.0, epsilon = 1e-15);
}

#[test]
fn singleton_ensemble_reduces_to_the_pure_expectation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let space = graded_space();
    for _ in 0..20 {
        let psi = random_unit::<f64, _>(&space, &mut rng);
        let o = supersel::random_hermitian::<f64, _>(&space, &mut rng);
        let e = Ensemble::new(vec![(1.0, psi.clone())]).unwrap();
        assert_abs_diff_eq!(
            e.average(&o).unwrap(),
            o.expectation(&psi).unwrap(),
            epsilon = 1e-14
        );
    }
}

#[test]
fn densities_of_basic_spin_mixtures() {
    let plus = make_spin_state::<f64>(SpinDirection::PlusZ);
    let minus = make_spin_state::<f64>(SpinDirection::MinusZ);
    let x = make_spin_state::<f64>(SpinDirection::PlusX);

    let pure_plus = Ensemble::new(vec![(1.0, plus.clone())]).unwrap();
    let rho = pure_plus.to_density().unwrap();
    assert_eq!(rho.matrix().get(0, 0), c(1.0, 0.0));
    assert_eq!(rho.matrix().get(1, 1), c(0.0, 0.0));

    let balanced = Ensemble::new(vec![(0.5, plus), (0.5, minus)]).unwrap();
    let rho = balanced.to_density().unwrap();
    assert_eq!(rho.matrix().get(0, 0), c(0.5, 0.0));
    assert_eq!(rho.matrix().get(0, 1), c(0.0, 0.0));
    assert_eq!(rho.matrix().get(1, 1), c(0.5, 0.0));

    // a pure |x> keeps its interference terms in the density picture
    let coherent = Ensemble::new(vec![(1.0, x)]).unwrap();
    let rho = coherent.to_density().unwrap();
    assert_abs_diff_eq!(rho.matrix().get(0, 1).re, 0.5, epsilon = 1e-15);
    assert_abs_diff_eq!(rho.matrix().get(1, 0).re, 0.5, epsilon = 1e-15);
}

#[test]
fn density_reproduces_ensemble_averages() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let space = graded_space();
    for _ in 0..20 {
        let a = random_unit::<f64, _>(&space, &mut rng);
        let b = random_unit::<f64, _>(&space, &mut rng);
        let e = Ensemble::new(vec![(0.3, a), (0.7, b)]).unwrap();
        let rho = e.to_density().unwrap();
        assert_relative_eq!(rho.trace(), 1.0, epsilon = 1e-12);
        let o = supersel::random_hermitian::<f64, _>(&space, &mut rng);
        assert_abs_diff_eq!(
            rho.expect(&o).unwrap(),
            e.average(&o).unwrap(),
            epsilon = 1e-12
        );
    }
}

#[test]
fn decoherence_zeroes_cross_blocks_and_keeps_the_trace() {
    let space = photon_electron_space();
    let photon = basis_vec(&space, "boson", "photon");
    let electron = basis_vec(&space, "fermion", "electron");
    let a_p = c(0.6, 0.0);
    let a_e = c(0.0, 0.8);
    let psi = superpose(&[a_p, a_e], &[photon, electron]).unwrap();
    let rho = Ensemble::new(vec![(1.0, psi)]).unwrap().to_density().unwrap();
    assert_abs_diff_eq!(rho.matrix().get(0, 1).norm(), 0.48, epsilon = 1e-15);

    let mixed = rho.decohere();
    assert_eq!(mixed.matrix().get(0, 1), c(0.0, 0.0));
    assert_eq!(mixed.matrix().get(1, 0), c(0.0, 0.0));
    // surviving diagonal blocks are the sector populations
    assert_abs_diff_eq!(mixed.matrix().get(0, 0).re, 0.36, epsilon = 1e-15);
    assert_abs_diff_eq!(mixed.matrix().get(1, 1).re, 0.64, epsilon = 1e-15);
    assert_eq!(mixed.trace(), rho.trace());
}

#[test]
fn decoherence_is_invisible_to_sector_compatible_observables() {
    let space = graded_space();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let a = random_unit::<f64, _>(&space, &mut rng);
        let b = random_unit::<f64, _>(&space, &mut rng);
        let rho = Ensemble::new(vec![(0.4, a), (0.6, b)])
            .unwrap()
            .to_density()
            .unwrap();
        let o = random_sector_observable::<f64, _>(&space, &mut rng);
        assert_abs_diff_eq!(
            rho.expect(&o).unwrap(),
            rho.decohere().expect(&o).unwrap(),
            epsilon = 1e-12
        );
    }
}

#[test]
fn sector_parity_is_a_csv_for_block_observables() {
    let space = graded_space();
    // +1 on g1, -1 elsewhere: constant on sectors, not a multiple of 1
    let g = Observable::from_fn(space.clone(), |i, j| {
        if i != j {
            c(0.0, 0.0)
        } else if i < 2 {
            c(1.0, 0.0)
        } else {
            c(-1.0, 0.0)
        }
    })
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let observables: Vec<Observable<f64>> = (0..20)
        .map(|_| random_sector_observable(&space, &mut rng))
        .collect();
    assert!(is_csv(&g, &observables).unwrap());

    let identity = Observable::identity(space.clone());
    assert!(!is_csv(&identity, &observables).unwrap());

    assert!(!is_csv(&pauli::<f64>(PauliAxis::X), &[pauli(PauliAxis::Z)]).unwrap());
}

#[test]
fn no_observable_connects_different_sectors() {
    let space = photon_electron_space();
    let photon = basis_vec(&space, "boson", "photon");
    let electron = basis_vec(&space, "fermion", "electron");
    let identity = Observable::identity(space.clone());
    assert_eq!(
        cross_sector_element(&identity, &photon, &electron).unwrap(),
        c(0.0, 0.0)
    );

    let big = graded_space();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let sectors = big.sectors();
    for _ in 0..50 {
        let o = random_sector_observable::<f64, _>(&big, &mut rng);
        let a = random_unit_in_sector::<f64, _>(&big, &sectors[0], &mut rng).unwrap();
        let b = random_unit_in_sector::<f64, _>(&big, &sectors[2], &mut rng).unwrap();
        let element = cross_sector_element(&o, &a, &b).unwrap();
        assert!(element.norm() <= 1e-12, "leak {:e}", element.norm());
    }
}

#[test]
fn cross_sector_element_rejects_formal_states() {
    let space = photon_electron_space();
    let photon = basis_vec(&space, "boson", "photon");
    let electron = basis_vec(&space, "fermion", "electron");
    let formal = superpose(
        &[c(std::f64::consts::FRAC_1_SQRT_2, 0.0), c(std::f64::consts::FRAC_1_SQRT_2, 0.0)],
        &[photon.clone(), electron.clone()],
    )
    .unwrap();
    let identity = Observable::identity(space);
    assert!(matches!(
        cross_sector_element(&identity, &formal, &electron),
        Err(Error::NotPhysical)
    ));
    assert!(matches!(
        cross_sector_element(&identity, &photon.clone(), &photon),
        Err(Error::SameSector)
    ));
}

#[test]
fn rephasing_with_zero_phases_is_the_identity() {
    let space = graded_space();
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let v = random_unit::<f64, _>(&space, &mut rng);
    let same = v.rephase_sectors(&BTreeMap::new());
    assert_eq!(same.amplitudes(), v.amplitudes());
}

#[test]
fn sector_phases_are_unobservable_but_move_the_vector() {
    let space = graded_space();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let v = random_unit::<f64, _>(&space, &mut rng);
    let phases = BTreeMap::from([
        (SectorLabel::new("g1"), 1.3),
        (SectorLabel::new("g2"), -0.4),
        (SectorLabel::new("g3"), 2.9),
    ]);
    let v2 = v.rephase_sectors(&phases);
    assert_abs_diff_eq!(v2.norm(), 1.0, epsilon = 1e-14);

    let observables: Vec<Observable<f64>> = (0..50)
        .map(|_| random_sector_observable(&space, &mut rng))
        .collect();
    assert!(indistinguishable(&v, &v2, &observables, 1e-12).unwrap());

    // flipping the dominant sector by pi moves the vector far
    let dominant = space
        .sectors()
        .into_iter()
        .max_by(|a, b| {
            let wa = v.project_sector(a).unwrap().norm_sqr();
            let wb = v.project_sector(b).unwrap().norm_sqr();
            wa.partial_cmp(&wb).unwrap()
        })
        .unwrap();
    let flip = BTreeMap::from([(dominant, std::f64::consts::PI)]);
    let far = v.rephase_sectors(&flip);
    assert!(v.distance(&far).unwrap() > 0.1);
    assert!(indistinguishable(&v, &far, &observables, 1e-12).unwrap());
}

#[test]
fn states_in_one_sector_remain_distinguishable() {
    let plus = make_spin_state::<f64>(SpinDirection::PlusZ);
    let minus = make_spin_state::<f64>(SpinDirection::MinusZ);
    let sigma_z = pauli::<f64>(PauliAxis::Z);
    assert!(!indistinguishable(&plus, &minus, &[sigma_z], 1e-12).unwrap());
    assert!(indistinguishable(&plus, &plus, &[pauli(PauliAxis::X)], 1e-12).unwrap());
}

#[test]
fn indistinguishable_rejects_incompatible_observables() {
    let space = photon_electron_space();
    let photon = basis_vec(&space, "boson", "photon");
    // couples the sectors, so it is not an admissible observable here
    let coupling = Observable::from_fn(space, |i, j| {
        if i == j {
            c(0.0, 0.0)
        } else {
            c(1.0, 0.0)
        }
    })
    .unwrap();
    assert!(matches!(
        indistinguishable(&photon, &photon, &[coupling], 1e-12),
        Err(Error::NotSectorCompatible { .. })
    ));
}
