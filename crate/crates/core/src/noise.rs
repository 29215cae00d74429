//! Dzyaloshinskii-Moriya (DM) noise on the switched pair `A`, `B`.
//!
//! The noisy generator is `t·H_qs + D_z·(σx⊗σy − σy⊗σx)⊗I_C`. On the
//! `{|011⟩, |101⟩}` block it reads `[[0, t + 2iD_z], [t − 2iD_z, 0]]`, which
//! squares to `Ω²·I` with `Ω = √(t² + 4D_z²)`, so the exponential has the
//! closed form `cos Ω · I − i·sinc Ω · G`.

use num_complex::Complex64;

use crate::linalg::{exp_minus_i, kron, sigma_x, sigma_y, ComplexMatrix};
use crate::switch::{build_h_qs, evolve, prepare_register, ControlBit, QubitState, SwitchRegister};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Below this `Ω` the sinc is evaluated from its series.
const SINC_SERIES_CUTOFF: f64 = 1e-6;

/// Coefficients of the noisy switch block.
///
/// In the basis `(|011⟩, |101⟩)` the noisy unitary block is
/// `[[xi, zeta], [eta, xi]]`, so an input `(x₃, x₅)` maps to
/// `(xi·x₃ + zeta·x₅, eta·x₃ + xi·x₅)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseParams {
    pub dz: f64,
    pub t: f64,
    /// `√(t² + 4D_z²)`.
    pub omega: f64,
    /// `cos Ω`.
    pub xi: Complex64,
    /// `−(2D_z + i t)·sinc Ω`.
    pub eta: Complex64,
    /// `(2D_z − i t)·sinc Ω`.
    pub zeta: Complex64,
}

impl NoiseParams {
    /// `γ = √(−4D_z² − t²) = iΩ` on the principal branch.
    pub fn gamma(&self) -> Complex64 {
        Complex64::new(0.0, self.omega)
    }

    pub fn block(&self) -> [[Complex64; 2]; 2] {
        [[self.xi, self.zeta], [self.eta, self.xi]]
    }
}

fn sinc(x: f64) -> f64 {
    if x.abs() < SINC_SERIES_CUTOFF {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

pub fn dm_coefficients(t: f64, dz: f64) -> NoiseParams {
    let omega = t.hypot(2.0 * dz);
    let sc = sinc(omega);
    NoiseParams {
        dz,
        t,
        omega,
        xi: Complex64::new(omega.cos(), 0.0),
        eta: Complex64::new(-2.0 * dz, -t) * sc,
        zeta: Complex64::new(2.0 * dz, -t) * sc,
    }
}

/// `D_z·(σx⊗σy − σy⊗σx)⊗I_C` on the `(A, B, C)` register.
pub fn build_h_dm(dz: f64) -> ComplexMatrix {
    let pair = &kron(&sigma_x(), &sigma_y()) - &kron(&sigma_y(), &sigma_x());
    kron(&pair, &ComplexMatrix::identity(2)).scale(Complex64::new(dz, 0.0))
}

/// `exp(−i(t·H_qs + H_DM(D_z)))` by eigendecomposition of the summed generator.
pub fn u_qs_dm(t: f64, dz: f64) -> ComplexMatrix {
    let generator = &build_h_qs().scale(Complex64::new(t, 0.0)) + &build_h_dm(dz);
    exp_minus_i(&generator, 1.0).expect("generator is Hermitian")
}

fn rotate(amps: &mut [Complex64; 8], i: usize, j: usize, p: &NoiseParams) {
    let (x, y) = (amps[i], amps[j]);
    amps[i] = p.xi * x + p.zeta * y;
    amps[j] = p.eta * x + p.xi * y;
}

/// Closed-form noisy evolution of the register.
///
/// The `C = 1` block `(|011⟩, |101⟩)` rotates with [`dm_coefficients`]`(t, dz)`.
/// In the `C = 0` block `(|010⟩, |100⟩)` only the DM term acts, which is the
/// same rotation at `t = 0`.
pub fn evolve_dm(reg: &SwitchRegister, t: f64, dz: f64) -> SwitchRegister {
    let mut amps = *reg.amplitudes();
    rotate(&mut amps, 3, 5, &dm_coefficients(t, dz));
    if amps[2] != ZERO || amps[4] != ZERO {
        rotate(&mut amps, 2, 4, &dm_coefficients(0.0, dz));
    }
    SwitchRegister::with_amplitudes_unchecked(amps, reg.time() + t)
}

/// `|a b 1⟩` evolved to `t`, with DM noise when `dz != 0`.
pub fn switched_register(a: QubitState, b: QubitState, t: f64, dz: f64) -> SwitchRegister {
    let reg = prepare_register(a, b, ControlBit::One);
    if dz == 0.0 {
        evolve(&reg, t)
    } else {
        evolve_dm(&reg, t, dz)
    }
}
