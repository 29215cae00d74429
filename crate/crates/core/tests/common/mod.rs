//! Random inputs and independent oracles shared by the integration suites.
#![allow(dead_code)]

use std::f64::consts::PI;

use qswitch::linalg::{exp_minus_i, partial_trace};
use qswitch::noise::{build_h_dm, u_qs_dm};
use qswitch::switch::{build_h_qs, prepare_register, ControlBit};
use qswitch::{Complex64, ComplexMatrix, QubitState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_qubit(rng: &mut impl Rng) -> QubitState {
    QubitState::from_bloch(rng.random_range(0.0..PI), rng.random_range(0.0..2.0 * PI))
}

pub fn random_complex_matrix(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let entries: Vec<Complex64> = (0..dim * dim)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    ComplexMatrix::from_row_major(dim, &entries).unwrap()
}

pub fn random_hermitian(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let g = random_complex_matrix(rng, dim);
    let gd = qswitch::linalg::dagger(&g);
    (&g + &gd).scale(Complex64::new(0.5, 0.0))
}

/// `G G† / Tr[G G†]`, full rank with probability one.
pub fn random_density(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let g = random_complex_matrix(rng, dim);
    let rho = &g * &qswitch::linalg::dagger(&g);
    let tr = rho.trace().re;
    hermitize(&rho.scale(Complex64::new(1.0 / tr, 0.0)))
}

pub fn random_diagonal_density(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let w: Vec<f64> = (0..dim).map(|_| rng.random_range(0.0..1.0)).collect();
    let s: f64 = w.iter().sum();
    ComplexMatrix::from_diagonal(&w.iter().map(|x| x / s).collect::<Vec<_>>())
}

/// Removes rounding asymmetry so density checks see an exactly Hermitian input.
pub fn hermitize(m: &ComplexMatrix) -> ComplexMatrix {
    let md = qswitch::linalg::dagger(m);
    (m + &md).scale(Complex64::new(0.5, 0.0))
}

/// `Σ_{i≠j} |ρ_ij|` by direct loops.
pub fn brute_l1(rho: &ComplexMatrix) -> f64 {
    let n = rho.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += rho[(i, j)].norm();
            }
        }
    }
    s
}

/// `ρ_AB` of `|a b 1⟩` after the noisy evolution, built from the spectral
/// exponential of the full generator (not the closed-form amplitudes).
pub fn generic_rho_ab(a: QubitState, b: QubitState, t: f64, dz: f64) -> ComplexMatrix {
    let reg = prepare_register(a, b, ControlBit::One);
    let u = if dz == 0.0 {
        exp_minus_i(&build_h_qs(), t).unwrap()
    } else {
        u_qs_dm(t, dz)
    };
    let psi = u.apply(reg.amplitudes());
    hermitize(&partial_trace(&ComplexMatrix::outer(&psi), &[2, 2, 2], &[0, 1]).unwrap())
}

/// Same as [`generic_rho_ab`] but with the generator summed by hand.
pub fn generic_rho_ab_summed(a: QubitState, b: QubitState, t: f64, dz: f64) -> ComplexMatrix {
    let reg = prepare_register(a, b, ControlBit::One);
    let generator = &build_h_qs().scale(Complex64::new(t, 0.0)) + &build_h_dm(dz);
    let psi = exp_minus_i(&generator, 1.0)
        .unwrap()
        .apply(reg.amplitudes());
    hermitize(&partial_trace(&ComplexMatrix::outer(&psi), &[2, 2, 2], &[0, 1]).unwrap())
}

/// Random incoherent channel: mixture of diagonal phase unitaries.
pub fn dephasing_mixture(rng: &mut impl Rng, rho: &ComplexMatrix, terms: usize) -> ComplexMatrix {
    let n = rho.dim();
    let weights: Vec<f64> = (0..terms).map(|_| rng.random_range(0.0..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let mut out = ComplexMatrix::zeros(n);
    for w in weights {
        let phases: Vec<Complex64> = (0..n)
            .map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..2.0 * PI)))
            .collect();
        let mut term = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                term.set(i, j, phases[i] * rho[(i, j)] * phases[j].conj());
            }
        }
        out = &out + &term.scale(Complex64::new(w / total, 0.0));
    }
    hermitize(&out)
}

pub fn mix(p: f64, r1: &ComplexMatrix, r2: &ComplexMatrix) -> ComplexMatrix {
    let m = &r1.scale(Complex64::new(p, 0.0)) + &r2.scale(Complex64::new(1.0 - p, 0.0));
    hermitize(&m)
}

/// `Re Tr[ρ_A ρ_B]` by direct summation.
pub fn trace_overlap(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            s += a[(i, k)] * b[(k, i)];
        }
    }
    s.re
}

pub fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| start + (stop - start) * k as f64 / (n - 1) as f64)
        .collect()
}
