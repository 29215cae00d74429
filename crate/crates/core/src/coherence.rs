//! Coherence measures in the standard computational basis.
//!
//! [`c_l1`] and [`c_re`] work on any density matrix. The remaining functions are
//! closed-form expressions for the register `|A B 1⟩` after the switch has run
//! for time `t`; each one has a generic twin obtained by building `ρ_AB` and
//! calling [`c_l1`] or [`c_re`], and the test suite holds them equal.
//!
//! Notation for the closed forms: `A = α₀|0⟩ + β₀|1⟩`, `B = α₁|0⟩ + β₁|1⟩`.
//! The reduced state `ρ_AB` is pure with amplitudes
//! `(α₀α₁, x₁, x₂, β₀β₁)` on `|00⟩, |01⟩, |10⟩, |11⟩`, where without noise
//! `x₁ = cos t·α₀β₁ − i sin t·α₁β₀` and `x₂ = cos t·α₁β₀ − i sin t·α₀β₁`.

use std::fmt;

use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::{von_neumann_entropy, ComplexMatrix};
use crate::noise::dm_coefficients;
use crate::switch::QubitState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    L1Norm,
    RelativeEntropy,
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureKind::L1Norm => f.write_str("l1_norm"),
            MeasureKind::RelativeEntropy => f.write_str("relative_entropy"),
        }
    }
}

/// Nonnegative coherence value tagged with the measure that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceValue {
    value: f64,
    kind: MeasureKind,
}

impl CoherenceValue {
    /// Rounding can push an exact zero slightly negative; such values clamp to 0.
    fn new(value: f64, kind: MeasureKind) -> Self {
        Self {
            value: value.max(0.0),
            kind,
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn kind(&self) -> MeasureKind {
        self.kind
    }
}

impl From<CoherenceValue> for f64 {
    fn from(c: CoherenceValue) -> f64 {
        c.value
    }
}

/// `Σ_{i≠j} |ρ_ij|`.
pub fn c_l1(rho: &ComplexMatrix) -> Result<CoherenceValue> {
    rho.check_density()?;
    let n = rho.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += rho[(i, j)].norm();
            }
        }
    }
    Ok(CoherenceValue::new(sum, MeasureKind::L1Norm))
}

/// `S(ρ_diag) − S(ρ)` with base-2 entropies.
pub fn c_re(rho: &ComplexMatrix) -> Result<CoherenceValue> {
    rho.check_density()?;
    let s_diag = von_neumann_entropy(&rho.diagonal_part())?;
    let s = von_neumann_entropy(rho)?;
    Ok(CoherenceValue::new(
        s_diag - s,
        MeasureKind::RelativeEntropy,
    ))
}

struct PairTerms {
    /// `α₀α₁`
    x0: Complex64,
    /// `β₀β₁`
    x3: Complex64,
    /// `α₁β₀`
    u: Complex64,
    /// `α₀β₁`
    v: Complex64,
}

impl PairTerms {
    fn new(a: &QubitState, b: &QubitState) -> Self {
        let (a0, b0, a1, b1) = (a.alpha(), a.beta(), b.alpha(), b.beta());
        Self {
            x0: a0 * a1,
            x3: b0 * b1,
            u: a1 * b0,
            v: a0 * b1,
        }
    }

    /// Noiseless amplitudes at `|011⟩` and `|101⟩`.
    fn noiseless(&self, t: f64) -> (Complex64, Complex64) {
        let (s, c) = t.sin_cos();
        let i = Complex64::i();
        (c * self.v - i * s * self.u, c * self.u - i * s * self.v)
    }

    /// DM-perturbed amplitudes at `|011⟩` and `|101⟩`.
    fn noisy(&self, t: f64, dz: f64) -> (Complex64, Complex64) {
        let p = dm_coefficients(t, dz);
        (
            p.zeta * self.u + p.xi * self.v,
            p.xi * self.u + p.eta * self.v,
        )
    }
}

/// `C_l1(ρ_AB)` of the noiseless switch at time `t`.
pub fn c_l1_switch(a: &QubitState, b: &QubitState, t: f64) -> CoherenceValue {
    let p = PairTerms::new(a, b);
    let (x1, x2) = p.noiseless(t);
    let value = 2.0
        * ((p.x0 * p.x3).norm()
            + (p.x0 * x1).norm()
            + (p.x3 * x1).norm()
            + (p.x0.norm() + p.x3.norm() + x1.norm()) * x2.norm());
    CoherenceValue::new(value, MeasureKind::L1Norm)
}

/// `C_l1` of the switch when `B = |0⟩`; depends on `A` only through `α₀β₀`
/// and `β₀²`.
pub fn c_l1_a0(a: &QubitState, t: f64) -> CoherenceValue {
    let (s, c) = t.sin_cos();
    let (a0, b0) = (a.alpha(), a.beta());
    let value =
        2.0 * (s * a0 * b0).norm() + 2.0 * (c * a0 * b0).norm() + 2.0 * (c * s * b0 * b0).norm();
    CoherenceValue::new(value, MeasureKind::L1Norm)
}

/// State-independent upper estimate `ε + |sin t| + |cos t| + |cos t·sin t|`
/// for [`c_l1_a0`].
///
/// The estimate only dominates `c_l1_a0` when `ε ≥ 3/2 − √2`; smaller `ε`
/// can be exceeded near `t = π/4` (see [`c_l1_a0_bound_margin`]).
pub fn c_l1_a0_bound(t: f64, eps: f64) -> f64 {
    let (s, c) = t.sin_cos();
    eps + s.abs() + c.abs() + (c * s).abs()
}

/// `sup_A c_l1_a0(A, t) − c_l1_a0_bound(t, 0)`.
///
/// With `k = |sin t| + |cos t|` and `m = |sin t cos t|` the supremum over
/// states is `m + √(k² + m²)`, so the margin is `√(k² + m²) − k ≥ 0`.
pub fn c_l1_a0_bound_margin(t: f64) -> f64 {
    let (s, c) = t.sin_cos();
    let k = s.abs() + c.abs();
    let m = (s * c).abs();
    k.hypot(m) - k
}

/// `C_l1` for `B = A`, constant in `t`:
/// `4|α₀β₀|(|α₀|² + |α₀β₀| + |β₀|²)`.
pub fn c_l1_aa(a: &QubitState) -> CoherenceValue {
    let (a0, b0) = (a.alpha(), a.beta());
    let q = (a0 * b0).norm();
    let value = 4.0 * q * (a0.norm_sqr() + q + b0.norm_sqr());
    CoherenceValue::new(value, MeasureKind::L1Norm)
}

/// `x log₂ x` with `0·log 0 = 0`.
fn xlog2(x: f64) -> f64 {
    if x > 0.0 {
        x * x.log2()
    } else {
        0.0
    }
}

/// `C_re` for `B = A`, constant in `t`.
pub fn c_re_aa(a: &QubitState) -> CoherenceValue {
    let pa = a.alpha().norm_sqr();
    let pb = a.beta().norm_sqr();
    // 2|α₀|⁴ log|α₀| = |α₀|² · |α₀|² log|α₀|² = pa·xlog2(pa)
    let value = -2.0 * (xlog2(pa * pb) + pa * xlog2(pa) + pb * xlog2(pb));
    CoherenceValue::new(value, MeasureKind::RelativeEntropy)
}

/// `C_l1(ρ_AB)` with DM noise of intensity `dz`.
pub fn c_l1_switch_dm(a: &QubitState, b: &QubitState, t: f64, dz: f64) -> CoherenceValue {
    let p = PairTerms::new(a, b);
    let (y1, y2) = p.noisy(t, dz);
    let value = 2.0 * (y2 * y1).norm()
        + 2.0 * (p.x0 * y1).norm()
        + 2.0 * (p.x3 * y1).norm()
        + 2.0 * (p.x0 * y2).norm()
        + 2.0 * (p.x3 * y2).norm()
        + 2.0 * (p.x0 * p.x3).norm();
    CoherenceValue::new(value, MeasureKind::L1Norm)
}

/// Signed difference `C_l1(noiseless) − C_l1(noisy)`.
pub fn c_delta(a: &QubitState, b: &QubitState, t: f64, dz: f64) -> f64 {
    c_l1_switch(a, b, t).value() - c_l1_switch_dm(a, b, t, dz).value()
}

/// `|c_delta|`, the quantity plotted against `t` and `a`.
pub fn c_delta_abs(a: &QubitState, b: &QubitState, t: f64, dz: f64) -> f64 {
    c_delta(a, b, t, dz).abs()
}

/// The difference written as a single expression, with the noiseless
/// `2|x₁x₂|` term in the form `½|(u + v)² − e^{4it}(u − v)²|`.
/// Kept as a cross-check of [`c_delta`], which is authoritative.
pub fn c_delta_closed(a: &QubitState, b: &QubitState, t: f64, dz: f64) -> f64 {
    let p = PairTerms::new(a, b);
    let (x1, x2) = p.noiseless(t);
    let (y1, y2) = p.noisy(t, dz);
    let outer = p.x0.norm() + p.x3.norm();
    let phase = Complex64::from_polar(1.0, 4.0 * t);
    let cross = (p.u + p.v).powi(2) - phase * (p.u - p.v).powi(2);

    -2.0 * y1.norm() * (y2.norm() + outer) - 2.0 * outer * y2.norm()
        + 0.5 * cross.norm()
        + 2.0 * outer * (x1.norm() + x2.norm())
}
