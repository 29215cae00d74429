mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use qswitch::coherence::*;
use qswitch::switch::reference_states;
use qswitch::QubitState;

use common::*;

const TOL: f64 = 1e-10;

fn generic_l1(a: QubitState, b: QubitState, t: f64, dz: f64) -> f64 {
    brute_l1(&generic_rho_ab(a, b, t, dz))
}

#[test]
fn l1_switch_matches_generic_path() {
    let mut r = rng(11);
    for _ in 0..200 {
        let (a, b) = (random_qubit(&mut r), random_qubit(&mut r));
        let t = rand::Rng::random_range(&mut r, -1.0..4.0);
        let closed = c_l1_switch(&a, &b, t).value();
        assert!((closed - generic_l1(a, b, t, 0.0)).abs() <= TOL);
    }
}

#[test]
fn degenerate_inputs_match_generic_path() {
    let zero = QubitState::zero();
    let a = QubitState::from_bloch(0.9, 2.0);
    for (x, y) in [(zero, a), (a, zero), (zero, zero), (QubitState::one(), a)] {
        let closed = c_l1_switch(&x, &y, 0.5).value();
        assert!((closed - generic_l1(x, y, 0.5, 0.0)).abs() <= TOL);
    }
}

#[test]
fn maximal_coherence_is_constant() {
    let plus = QubitState::plus();
    for t in linspace(0.0, FRAC_PI_2, 11) {
        assert!((c_l1_switch(&plus, &plus, t).value() - 3.0).abs() <= TOL);
        assert!((generic_l1(plus, plus, t, 0.0) - 3.0).abs() <= TOL);
    }
}

#[test]
fn a0_matches_generic_path() {
    let mut r = rng(12);
    for _ in 0..100 {
        let a = random_qubit(&mut r);
        let t = rand::Rng::random_range(&mut r, 0.0..3.2);
        let closed = c_l1_a0(&a, t).value();
        assert!((closed - generic_l1(a, QubitState::zero(), t, 0.0)).abs() <= TOL);
    }
    let plus = QubitState::plus();
    let value = generic_l1(plus, QubitState::zero(), FRAC_PI_4, 0.0);
    assert!((value - 1.914_213_562_373_095).abs() <= TOL);
}

#[test]
fn aa_forms_match_generic_path_at_every_time() {
    let a = QubitState::real(1.0 / 10f64.sqrt(), 3.0 / 10f64.sqrt()).unwrap();
    for t in [0.0, 0.4, FRAC_PI_2] {
        assert!((generic_l1(a, a, t, 0.0) - 1.56).abs() <= TOL);
    }
    let re = c_re(&generic_rho_ab(a, a, 0.7, 0.0)).unwrap().value();
    assert!((c_re_aa(&a).value() - re).abs() <= 1e-9);

    let mut r = rng(13);
    for _ in 0..100 {
        let a = random_qubit(&mut r);
        let t = rand::Rng::random_range(&mut r, 0.0..6.3);
        let rho = generic_rho_ab(a, a, t, 0.0);
        assert!((c_l1_aa(&a).value() - brute_l1(&rho)).abs() <= TOL);
        assert!((c_re_aa(&a).value() - c_re(&rho).unwrap().value()).abs() <= 1e-9);
    }
}

#[test]
fn dm_form_matches_generic_path() {
    let (a, b) = reference_states();
    let closed = c_l1_switch_dm(&a, &b, FRAC_PI_4, 0.5).value();
    assert!((closed - generic_l1(a, b, FRAC_PI_4, 0.5)).abs() <= TOL);

    let mut r = rng(14);
    for _ in 0..200 {
        let (a, b) = (random_qubit(&mut r), random_qubit(&mut r));
        let t = rand::Rng::random_range(&mut r, 0.0..FRAC_PI_2);
        let dz = rand::Rng::random_range(&mut r, 0.0..1.0);
        let closed = c_l1_switch_dm(&a, &b, t, dz).value();
        let summed = brute_l1(&generic_rho_ab_summed(a, b, t, dz));
        assert!((closed - summed).abs() <= TOL, "({t}, {dz})");
    }
}

#[test]
fn delta_matches_generic_difference() {
    let (a, b) = reference_states();
    let generic = generic_l1(a, b, FRAC_PI_4, 0.0) - generic_l1(a, b, FRAC_PI_4, 0.5);
    assert!((c_delta_abs(&a, &b, FRAC_PI_4, 0.5) - generic.abs()).abs() <= TOL);

    let mut r = rng(15);
    for _ in 0..100 {
        let (a, b) = (random_qubit(&mut r), random_qubit(&mut r));
        let t = rand::Rng::random_range(&mut r, 0.0..FRAC_PI_2);
        let dz = rand::Rng::random_range(&mut r, 0.0..1.0);
        let generic = generic_l1(a, b, t, 0.0) - generic_l1(a, b, t, dz);
        assert!((c_delta(&a, &b, t, dz) - generic).abs() <= TOL);
        assert!((c_delta_closed(&a, &b, t, dz) - generic).abs() <= TOL);
    }
}

#[test]
fn equal_inputs_keep_l1_constant() {
    let mut r = rng(16);
    let ts = linspace(0.0, 2.0 * std::f64::consts::PI, 50);
    for _ in 0..20 {
        let a = random_qubit(&mut r);
        let values: Vec<f64> = ts.iter().map(|&t| c_l1_switch(&a, &a, t).value()).collect();
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / values.len() as f64;
        assert!(var.sqrt() <= TOL);
        assert!((mean - c_l1_aa(&a).value()).abs() <= TOL);
    }
}

#[test]
fn bound_holds_with_tight_margin() {
    let mut r = rng(17);
    for _ in 0..1000 {
        let a = random_qubit(&mut r);
        let t = rand::Rng::random_range(&mut r, 0.0..6.3);
        let eps = c_l1_a0_bound_margin(t) + 1e-12;
        assert!(c_l1_a0(&a, t).value() <= c_l1_a0_bound(t, eps));
    }
}

#[test]
fn incoherent_states_have_zero_coherence() {
    let mut r = rng(18);
    for dim in [2, 3, 4, 8] {
        for _ in 0..20 {
            let rho = random_diagonal_density(&mut r, dim);
            assert!(c_l1(&rho).unwrap().value() <= TOL);
            assert!(c_re(&rho).unwrap().value() <= TOL);
        }
    }
}

#[test]
fn measures_are_convex() {
    let mut r = rng(19);
    for dim in [2, 4, 8] {
        for _ in 0..30 {
            let (r1, r2) = (random_density(&mut r, dim), random_density(&mut r, dim));
            let p = rand::Rng::random_range(&mut r, 0.01..0.99);
            let m = mix(p, &r1, &r2);
            for f in [c_l1, c_re] {
                let lhs = f(&m).unwrap().value();
                let rhs = p * f(&r1).unwrap().value() + (1.0 - p) * f(&r2).unwrap().value();
                assert!(lhs <= rhs + 1e-9);
            }
        }
    }
}

#[test]
fn measures_are_monotone_under_dephasing_mixtures() {
    let mut r = rng(20);
    for dim in [2, 4, 8] {
        for _ in 0..30 {
            let rho = random_density(&mut r, dim);
            let out = dephasing_mixture(&mut r, &rho, 3);
            for f in [c_l1, c_re] {
                assert!(f(&out).unwrap().value() <= f(&rho).unwrap().value() + 1e-9);
            }
        }
    }
}
