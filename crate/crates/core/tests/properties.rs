mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;
use qswitch::coherence::{c_l1, c_l1_switch, c_re};
use qswitch::linalg::{exp_minus_i, kron, partial_trace, von_neumann_entropy};
use qswitch::noise::{evolve_dm, u_qs_dm};
use qswitch::switch::{evolve, prepare_register, u_qs, u_qs_hat, u_qs_spectral, ControlBit};
use qswitch::{ComplexMatrix, QubitState};

use common::*;

fn qubit() -> impl Strategy<Value = QubitState> {
    (0.0..PI, 0.0..2.0 * PI).prop_map(|(theta, phi)| QubitState::from_bloch(theta, phi))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exponential_is_a_group(seed in any::<u64>(), s in -3.0..3.0f64, u in -3.0..3.0f64, dim in 2usize..6) {
        let h = random_hermitian(&mut rng(seed), dim);
        let lhs = &exp_minus_i(&h, s).unwrap() * &exp_minus_i(&h, u).unwrap();
        let rhs = exp_minus_i(&h, s + u).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-10);
    }

    #[test]
    fn spectrum_reconstructs(seed in any::<u64>(), dim in 1usize..7) {
        let h = random_hermitian(&mut rng(seed), dim);
        let s = qswitch::linalg::eig_hermitian(&h).unwrap();
        prop_assert!(s.reconstruct().max_abs_diff(&h) <= 1e-10);
        let v = &s.eigenvectors;
        let vtv = &qswitch::linalg::dagger(v) * v;
        prop_assert!(vtv.max_abs_diff(&ComplexMatrix::identity(dim)) <= 1e-10);
        prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn partial_trace_composes(seed in any::<u64>()) {
        let rho = random_density(&mut rng(seed), 8);
        let ac = partial_trace(&rho, &[2, 2, 2], &[0, 2]).unwrap();
        let a_stepwise = partial_trace(&ac, &[2, 2], &[0]).unwrap();
        let a_direct = partial_trace(&rho, &[2, 2, 2], &[0]).unwrap();
        prop_assert!(a_stepwise.max_abs_diff(&a_direct) <= 1e-12);
        prop_assert!((a_direct.trace().re - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn kron_mixed_product(seed in any::<u64>(), da in 1usize..4, db in 1usize..4) {
        let mut r = rng(seed);
        let (a, c) = (random_complex_matrix(&mut r, da), random_complex_matrix(&mut r, da));
        let (b, d) = (random_complex_matrix(&mut r, db), random_complex_matrix(&mut r, db));
        let lhs = &kron(&a, &b) * &kron(&c, &d);
        let rhs = kron(&(&a * &c), &(&b * &d));
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-10);
    }

    #[test]
    fn pure_states_have_zero_entropy(seed in any::<u64>(), dim in 2usize..9) {
        let mut r = rng(seed);
        let g = random_complex_matrix(&mut r, dim);
        let psi: Vec<_> = (0..dim).map(|i| g[(i, 0)]).collect();
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let psi: Vec<_> = psi.iter().map(|z| z / norm).collect();
        let rho = hermitize(&ComplexMatrix::outer(&psi));
        prop_assert!(von_neumann_entropy(&rho).unwrap() <= 1e-9);
    }

    #[test]
    fn switch_invariants(a in qubit(), b in qubit(), t in 0.0..2.0 * PI) {
        let reg = prepare_register(a, b, ControlBit::One);
        let out = evolve(&reg, t);
        prop_assert!((out.norm_sqr() - 1.0).abs() <= 1e-12);
        for k in [0, 2, 4, 6] {
            prop_assert!(out.amplitudes()[k].norm() <= 1e-12);
        }
        prop_assert!(u_qs(t + 2.0 * PI).max_abs_diff(&u_qs(t)) <= 1e-10);
        prop_assert!(u_qs(t).max_abs_diff(&u_qs_spectral(t)) <= 1e-12);
    }

    #[test]
    fn phase_corrected_switch_swaps(a in qubit(), b in qubit()) {
        let swapped = u_qs_hat(FRAC_PI_2).apply(prepare_register(a, b, ControlBit::One).amplitudes());
        let expected = prepare_register(b, a, ControlBit::One);
        for (x, y) in swapped.iter().zip(expected.amplitudes()) {
            prop_assert!((x - y).norm() <= 1e-12);
        }
    }

    #[test]
    fn noisy_evolution_invariants(a in qubit(), b in qubit(), t in 0.0..FRAC_PI_2, dz in 0.0..1.0f64) {
        let reg = prepare_register(a, b, ControlBit::One);
        let closed = evolve_dm(&reg, t, dz);
        prop_assert!((closed.norm_sqr() - 1.0).abs() <= 1e-12);
        let matrix = u_qs_dm(t, dz).apply(reg.amplitudes());
        for (k, (x, y)) in closed.amplitudes().iter().zip(&matrix).enumerate() {
            prop_assert!((x - y).norm() <= 1e-12);
            if k % 2 == 0 {
                prop_assert!(x.norm() <= 1e-12);
            }
        }
        let near = evolve_dm(&reg, t, 1e-8);
        let plain = evolve(&reg, t);
        for (x, y) in near.amplitudes().iter().zip(plain.amplitudes()) {
            prop_assert!((x - y).norm() <= 1e-6);
        }
    }

    #[test]
    fn switch_boundary_symmetry(a in qubit(), b in qubit()) {
        let start = c_l1_switch(&a, &b, 0.0).value();
        let end = c_l1_switch(&a, &b, FRAC_PI_2).value();
        prop_assert!((start - end).abs() <= 1e-10);
    }

    #[test]
    fn measures_nonnegative_and_bounded(seed in any::<u64>(), dim in 2usize..9) {
        let rho = random_density(&mut rng(seed), dim);
        let l1 = c_l1(&rho).unwrap().value();
        let re = c_re(&rho).unwrap().value();
        prop_assert!(l1 > 1e-10 && l1 <= (dim - 1) as f64 + 1e-9);
        prop_assert!(re > 1e-10 && re <= (dim as f64).log2() + 1e-9);
        prop_assert!((l1 - brute_l1(&rho)).abs() <= 1e-12);
    }
}
