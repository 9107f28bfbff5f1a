//! Identity-loop phases, the mass rule, and the particle-number rule.

use approx::assert_abs_diff_eq;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use supersel::galilei::{
    particle_number_phase, ui_phase, GalileiParams, MassComponent, MassLabeledState,
};
use supersel::{indistinguishable, random_sector_observable, Error, Observable, SectorLabel};

type C = Complex<f64>;

fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

const PI: f64 = std::f64::consts::PI;
const INV_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn params(vr: f64) -> GalileiParams<f64> {
    // v along x, r chosen so v.r equals the requested value
    GalileiParams::new([1.0, 0.0, 0.0], [vr, 0.0, 0.0], 0.0).unwrap()
}

fn random_params(rng: &mut ChaCha8Rng) -> GalileiParams<f64> {
    let mut triple = || {
        [
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        ]
    };
    let v = triple();
    let r = triple();
    GalileiParams::new(v, r, rng.gen_range(-1.0..1.0)).unwrap()
}

#[test]
fn loop_phase_oracles() {
    let orthogonal = GalileiParams::new([1.0, 0.0, 0.0], [0.0, 2.0, 0.0], 0.5).unwrap();
    assert_eq!(ui_phase(3.7, &orthogonal).unwrap(), c(1.0, 0.0));

    let phase = ui_phase(1.0, &params(PI)).unwrap();
    assert_abs_diff_eq!(phase.re, -1.0, epsilon = 1e-15);
    assert_abs_diff_eq!(phase.im, 0.0, epsilon = 1e-15);

    let mut rng = ChaCha8Rng::seed_from_u64(59);
    for _ in 0..50 {
        let p = random_params(&mut rng);
        let mass = rng.gen_range(0.1..5.0);
        assert_abs_diff_eq!(ui_phase(mass, &p).unwrap().norm(), 1.0, epsilon = 1e-15);
    }
}

#[test]
fn masses_must_be_positive_and_finite() {
    assert!(matches!(
        ui_phase(0.0, &params(1.0)),
        Err(Error::NonPositiveMass { .. })
    ));
    assert!(matches!(
        ui_phase(-2.0, &params(1.0)),
        Err(Error::NonPositiveMass { .. })
    ));
    assert!(matches!(
        GalileiParams::new([f64::NAN, 0.0, 0.0], [0.0; 3], 0.0),
        Err(Error::NonFinite(_))
    ));
    assert!(matches!(
        MassLabeledState::two_mass(1.0, c(1.0, 0.0), -1.0, c(0.0, 0.0)),
        Err(Error::NonPositiveMass { .. })
    ));
}

#[test]
fn each_sector_appears_once() {
    let shared = SectorLabel::new("m");
    let result = MassLabeledState::new(vec![
        MassComponent {
            mass: 1.0,
            amplitude: c(1.0, 0.0),
            sector: shared.clone(),
        },
        MassComponent {
            mass: 2.0,
            amplitude: c(0.0, 0.0),
            sector: shared,
        },
    ]);
    assert!(matches!(result, Err(Error::DuplicateBasisId(_))));
}

#[test]
fn trivial_loop_leaves_the_state_bit_identical() {
    let s = MassLabeledState::two_mass(1.0, c(0.8, 0.1), 2.5, c(-0.3, 0.5)).unwrap();
    let unmoved = s.apply_ui(&GalileiParams::new([0.0; 3], [1.0, 2.0, 3.0], 0.7).unwrap());
    assert_eq!(unmoved, s);
}

#[test]
fn single_mass_states_pick_up_only_a_global_phase() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..30 {
        let amp = Complex::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
        let s = MassLabeledState::new(vec![MassComponent {
            mass: rng.gen_range(0.1..5.0),
            amplitude: amp,
            sector: SectorLabel::new("m"),
        }])
        .unwrap();
        let p = random_params(&mut rng);
        let moved = s.apply_ui(&p);
        assert_abs_diff_eq!(s.ui_overlap(&p).unwrap(), 1.0, epsilon = 1e-12);

        let space = s.space().unwrap();
        let observables: Vec<Observable<f64>> = (0..10)
            .map(|_| random_sector_observable(&space, &mut rng))
            .collect();
        assert!(indistinguishable(
            &s.to_state_vector().unwrap(),
            &moved.to_state_vector().unwrap(),
            &observables,
            1e-12
        )
        .unwrap());
    }
}

#[test]
fn loop_overlap_closed_form_at_balanced_amplitudes() {
    // masses differing by 1, so v.r = pi makes the phase difference pi
    let s = MassLabeledState::two_mass(1.0, c(INV_SQRT2, 0.0), 2.0, c(INV_SQRT2, 0.0)).unwrap();
    assert_abs_diff_eq!(s.ui_overlap(&params(-PI)).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(s.ui_overlap(&params(-2.0 * PI)).unwrap(), 1.0, epsilon = 1e-12);

    let relative = s.apply_ui(&params(-PI));
    // the relative phase pi shows up against the original state
    let overlap_sq = s.ui_overlap(&params(-PI)).unwrap();
    assert!(overlap_sq <= 1e-15);
    assert!(s.distance(&relative).unwrap() >= 0.5);
}

#[test]
fn loop_overlap_requires_a_normalized_state() {
    let s = MassLabeledState::two_mass(1.0, c(1.0, 0.0), 2.0, c(1.0, 0.0)).unwrap();
    assert!(matches!(
        s.ui_overlap(&params(1.0)),
        Err(Error::NotNormalized { .. })
    ));
}

#[test]
fn loop_action_is_unitary_and_composes_additively() {
    let mut rng = ChaCha8Rng::seed_from_u64(67);
    for _ in 0..50 {
        let s = MassLabeledState::two_mass(
            rng.gen_range(0.1..3.0),
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            rng.gen_range(3.1..6.0),
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        )
        .unwrap();
        let p1 = random_params(&mut rng);
        let p2 = random_params(&mut rng);
        assert_abs_diff_eq!(s.apply_ui(&p1).norm(), s.norm(), epsilon = 1e-12);

        let sequential = s.apply_ui(&p1).apply_ui(&p2);
        let summed = s.apply_ui(&params(p1.vr_dot() + p2.vr_dot()));
        assert!(sequential.distance(&summed).unwrap() <= 1e-12);
    }
}

#[test]
fn mass_rule_distance_with_unobservable_difference() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for _ in 0..50 {
        // both populations at least 0.1
        let w: f64 = rng.gen_range(0.1..0.9);
        let m1: f64 = rng.gen_range(0.2..2.0);
        let delta: f64 = rng.gen_range(0.5..2.0);
        let s = MassLabeledState::two_mass(
            m1,
            Complex::from_polar(w.sqrt(), rng.gen_range(0.0..std::f64::consts::TAU)),
            m1 + delta,
            Complex::from_polar((1.0 - w).sqrt(), rng.gen_range(0.0..std::f64::consts::TAU)),
        )
        .unwrap();
        // (m1 - m2) v.r = pi
        let p = params(-PI / delta);
        let moved = s.apply_ui(&p);
        assert!(s.distance(&moved).unwrap() >= 0.5);

        let space = s.space().unwrap();
        let observables: Vec<Observable<f64>> = (0..10)
            .map(|_| random_sector_observable(&space, &mut rng))
            .collect();
        assert!(indistinguishable(
            &s.to_state_vector().unwrap(),
            &moved.to_state_vector().unwrap(),
            &observables,
            1e-12
        )
        .unwrap());
    }
}

#[test]
fn particle_number_phase_oracles() {
    assert_eq!(
        particle_number_phase(0, 1.0, &params(0.77)).unwrap(),
        c(1.0, 0.0)
    );

    let phase = particle_number_phase(3, 1.0, &params(PI / 3.0)).unwrap();
    assert_abs_diff_eq!(phase.re, -1.0, epsilon = 1e-15);
    assert_abs_diff_eq!(phase.im, 0.0, epsilon = 1e-15);

    assert!(matches!(
        particle_number_phase(2, 0.0, &params(1.0)),
        Err(Error::NonPositiveMass { .. })
    ));
}

#[test]
fn n_particles_carry_the_total_mass_phase() {
    let mut rng = ChaCha8Rng::seed_from_u64(73);
    for _ in 0..50 {
        let n: u32 = rng.gen_range(1..12);
        let mass: f64 = rng.gen_range(0.1..4.0);
        let p = random_params(&mut rng);
        let lhs = particle_number_phase(n, mass, &p).unwrap();
        let rhs = ui_phase(n as f64 * mass, &p).unwrap();
        assert!((lhs - rhs).norm() <= 1e-12);
    }
}
