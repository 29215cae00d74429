//! The noiseless quantum switch: Hamiltonian, unitaries and register evolution.
//!
//! The register holds qubits `(A, B, C)` with basis index `4·b_A + 2·b_B + b_C`.
//! The switch Hamiltonian couples `|011⟩` (index 3) and `|101⟩` (index 5), so
//! every unitary here is the identity outside that 2×2 block.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{exp_minus_i, partial_trace, ComplexMatrix};

/// Tolerance on `|α|² + |β|² = 1`.
pub const NORM_TOL: f64 = 1e-12;

/// Index of `|011⟩`.
pub const IDX_011: usize = 3;
/// Index of `|101⟩`.
pub const IDX_101: usize = 5;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Normalized single-qubit pure state `α|0⟩ + β|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    alpha: Complex64,
    beta: Complex64,
}

impl QubitState {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm2 = alpha.norm_sqr() + beta.norm_sqr();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm2));
        }
        Ok(Self { alpha, beta })
    }

    /// Real amplitudes, checked for normalization.
    pub fn real(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0))
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized(norm * norm));
        }
        Ok(Self {
            alpha: alpha / norm,
            beta: beta / norm,
        })
    }

    pub fn zero() -> Self {
        Self {
            alpha: ONE,
            beta: ZERO,
        }
    }

    pub fn one() -> Self {
        Self {
            alpha: ZERO,
            beta: ONE,
        }
    }

    pub fn plus() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self { alpha: h, beta: h }
    }

    /// `sin(a)|0⟩ + cos(a)|1⟩`, the one-parameter family used for qubit `A`
    /// in the parametrized sweeps.
    pub fn from_angle(a: f64) -> Self {
        Self {
            alpha: Complex64::new(a.sin(), 0.0),
            beta: Complex64::new(a.cos(), 0.0),
        }
    }

    /// Bloch-sphere parametrization `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
    pub fn from_bloch(theta: f64, phi: f64) -> Self {
        Self {
            alpha: Complex64::new((theta / 2.0).cos(), 0.0),
            beta: Complex64::from_polar((theta / 2.0).sin(), phi),
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        [self.alpha, self.beta]
    }
}

/// The two reference states `A = (|0⟩ + 3|1⟩)/√10`, `B = (3|0⟩ + |1⟩)/√10`
/// used for the fixed-state curves.
pub fn reference_states() -> (QubitState, QubitState) {
    let lo = 1.0 / 10f64.sqrt();
    let hi = 3.0 / 10f64.sqrt();
    (
        QubitState::normalized(Complex64::new(lo, 0.0), Complex64::new(hi, 0.0)).expect("nonzero"),
        QubitState::normalized(Complex64::new(hi, 0.0), Complex64::new(lo, 0.0)).expect("nonzero"),
    )
}

/// Pair of states for the parametrized family at angle `a`:
/// `A = sin(a)|0⟩ + cos(a)|1⟩`, `B = sin(π/2 − a)|0⟩ + cos(π/2 − a)|1⟩`.
pub fn parametrized_states(a: f64) -> (QubitState, QubitState) {
    (
        QubitState::from_angle(a),
        QubitState::from_angle(std::f64::consts::FRAC_PI_2 - a),
    )
}

/// Classical state of the control qubit `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ControlBit {
    Zero,
    One,
}

impl ControlBit {
    pub fn value(self) -> u8 {
        match self {
            ControlBit::Zero => 0,
            ControlBit::One => 1,
        }
    }
}

impl TryFrom<u8> for ControlBit {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            0 => Ok(ControlBit::Zero),
            1 => Ok(ControlBit::One),
            other => Err(Error::InvalidArgument(format!(
                "control bit must be 0 or 1, got {other}"
            ))),
        }
    }
}

/// Normalized 8-amplitude state of `(A, B, C)` together with the evolution
/// parameter accumulated so far.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwitchRegister {
    amplitudes: [Complex64; 8],
    time: f64,
}

impl SwitchRegister {
    pub fn from_amplitudes(amplitudes: [Complex64; 8], time: f64) -> Result<Self> {
        let norm2: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm2));
        }
        Ok(Self { amplitudes, time })
    }

    pub(crate) fn with_amplitudes_unchecked(amplitudes: [Complex64; 8], time: f64) -> Self {
        Self { amplitudes, time }
    }

    pub fn amplitudes(&self) -> &[Complex64; 8] {
        &self.amplitudes
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `|ψ⟩⟨ψ|` of the full register.
    pub fn density(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes)
    }
}

/// `H_qs = |011⟩⟨101| + |101⟩⟨011|`.
pub fn build_h_qs() -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(8);
    h.set(IDX_011, IDX_101, ONE);
    h.set(IDX_101, IDX_011, ONE);
    h
}

fn with_block(block: [[Complex64; 2]; 2]) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(8);
    let idx = [IDX_011, IDX_101];
    for (r, &i) in idx.iter().enumerate() {
        for (c, &j) in idx.iter().enumerate() {
            u.set(i, j, block[r][c]);
        }
    }
    u
}

/// `U_qs(t) = exp(-i t H_qs)`, written out in closed form.
pub fn u_qs(t: f64) -> ComplexMatrix {
    let (s, c) = t.sin_cos();
    let cos = Complex64::new(c, 0.0);
    let msin = Complex64::new(0.0, -s);
    with_block([[cos, msin], [msin, cos]])
}

/// Phase-corrected switch unitary: the `{3, 5}` block of [`u_qs`] times `i`,
/// i.e. `[[i cos t, sin t], [sin t, i cos t]]`. At `t = π/2` it maps
/// `|AB1⟩ → |BA1⟩` with no residual phase.
pub fn u_qs_hat(t: f64) -> ComplexMatrix {
    let (s, c) = t.sin_cos();
    let icos = I * c;
    let sin = Complex64::new(s, 0.0);
    with_block([[icos, sin], [sin, icos]])
}

/// Permutation form of the complete switch: `|AB0⟩ → |AB0⟩`, `|AB1⟩ → |BA1⟩`.
pub fn switch_permutation() -> ComplexMatrix {
    with_block([[ZERO, ONE], [ONE, ZERO]])
}

/// `|a⟩ ⊗ |b⟩ ⊗ |c⟩` at time zero.
pub fn prepare_register(a: QubitState, b: QubitState, c: ControlBit) -> SwitchRegister {
    let control = match c {
        ControlBit::Zero => [ONE, ZERO],
        ControlBit::One => [ZERO, ONE],
    };
    let mut amplitudes = [ZERO; 8];
    for (ia, &xa) in a.amplitudes().iter().enumerate() {
        for (ib, &xb) in b.amplitudes().iter().enumerate() {
            for (ic, &xc) in control.iter().enumerate() {
                amplitudes[4 * ia + 2 * ib + ic] = xa * xb * xc;
            }
        }
    }
    SwitchRegister::with_amplitudes_unchecked(amplitudes, 0.0)
}

/// Applies `U_qs(t)` to the register.
pub fn evolve(reg: &SwitchRegister, t: f64) -> SwitchRegister {
    let out = u_qs(t).apply(reg.amplitudes());
    let amplitudes: [Complex64; 8] = out.try_into().expect("8 amplitudes");
    SwitchRegister::with_amplitudes_unchecked(amplitudes, reg.time() + t)
}

/// Reduced state of `A` and `B` after tracing out the control qubit.
pub fn rho_ab(reg: &SwitchRegister) -> ComplexMatrix {
    partial_trace(&reg.density(), &[2, 2, 2], &[0, 1]).expect("register is 2x2x2")
}

/// Single-qubit marginals `(ρ_A, ρ_B)` of the register.
pub fn marginals(reg: &SwitchRegister) -> (ComplexMatrix, ComplexMatrix) {
    let rho = reg.density();
    let a = partial_trace(&rho, &[2, 2, 2], &[0]).expect("register is 2x2x2");
    let b = partial_trace(&rho, &[2, 2, 2], &[1]).expect("register is 2x2x2");
    (a, b)
}

/// `U_qs(t)` computed from the eigendecomposition of [`build_h_qs`]. Used to
/// cross-check the closed form in [`u_qs`].
pub fn u_qs_spectral(t: f64) -> ComplexMatrix {
    exp_minus_i(&build_h_qs(), t).expect("H_qs is Hermitian")
}
