//! Swap-test estimation of the overlap `Tr[ρ_A ρ_B]`.
//!
//! The circuit prepares an ancilla in `|0⟩`, applies a Hadamard, a SWAP of the
//! two registers controlled by the ancilla, a second Hadamard, and measures the
//! ancilla. The probability of outcome 0 is `P₀ = (1 + Tr[ρ_A ρ_B]) / 2`, so
//! `2P₀ − 1` estimates the overlap. The circuit is simulated on density
//! operators, which covers the mixed marginals produced by the switch.
//!
//! Sampling uses `ChaCha8Rng` seeded with `seed_from_u64`, so runs with the
//! same seed are reproducible across platforms.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};

use num_complex::Complex64;
use rand::distr::{Bernoulli, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{dagger, hadamard, kron, ComplexMatrix};
use crate::noise::switched_register;
use crate::switch::{marginals, QubitState};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapEstimate {
    /// Probability (exact or empirical) of ancilla outcome 0.
    pub p0: f64,
    /// `2·p0 − 1`.
    pub overlap: f64,
    /// Number of samples; 0 for the exact value.
    pub shots: u64,
    /// `2·√(p0(1 − p0)/shots)`; 0 for the exact value.
    pub std_error: f64,
}

impl OverlapEstimate {
    fn exact(p0: f64) -> Self {
        let p0 = p0.clamp(0.0, 1.0);
        Self {
            p0,
            overlap: 2.0 * p0 - 1.0,
            shots: 0,
            std_error: 0.0,
        }
    }

    fn sampled(zeros: u64, shots: u64) -> Self {
        let p0 = zeros as f64 / shots as f64;
        Self {
            p0,
            overlap: 2.0 * p0 - 1.0,
            shots,
            std_error: 2.0 * (p0 * (1.0 - p0) / shots as f64).sqrt(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.shots == 0
    }
}

/// Times at which the overlap is estimated, plus sampling settings.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimationSchedule {
    times: Vec<f64>,
    shots: u64,
    seed: u64,
}

impl EstimationSchedule {
    /// `shots = 0` selects exact probabilities.
    pub fn new(times: Vec<f64>, shots: u64, seed: u64) -> Result<Self> {
        if times.is_empty() {
            return Err(Error::InvalidArgument(
                "schedule needs at least one time".into(),
            ));
        }
        if let Some(t) = times.iter().find(|t| !t.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "schedule time {t} is not finite"
            )));
        }
        Ok(Self { times, shots, seed })
    }

    /// Start, two interior moments and the end of the switch window:
    /// `{0, π/6, π/3, π/2}`.
    pub fn default_times() -> Vec<f64> {
        vec![0.0, FRAC_PI_6, FRAC_PI_3, FRAC_PI_2]
    }

    pub fn with_default_times(shots: u64, seed: u64) -> Self {
        Self::new(Self::default_times(), shots, seed).expect("default times are valid")
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

fn check_inputs(rho_a: &ComplexMatrix, rho_b: &ComplexMatrix) -> Result<()> {
    if rho_a.dim() != rho_b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "swap test needs equal dimensions, got {} and {}",
            rho_a.dim(),
            rho_b.dim()
        )));
    }
    rho_a.check_density()?;
    rho_b.check_density()
}

/// Controlled-SWAP on `ancilla ⊗ ℂ^d ⊗ ℂ^d`, ancilla most significant.
fn controlled_swap(d: usize) -> ComplexMatrix {
    let block = d * d;
    let mut g = ComplexMatrix::zeros(2 * block);
    let one = Complex64::new(1.0, 0.0);
    for i in 0..d {
        for j in 0..d {
            let k = i * d + j;
            g.set(k, k, one);
            g.set(block + j * d + i, block + k, one);
        }
    }
    g
}

/// Probability of ancilla outcome 0 from the simulated circuit.
fn circuit_p0(rho_a: &ComplexMatrix, rho_b: &ComplexMatrix) -> f64 {
    let d = rho_a.dim();
    let ancilla = ComplexMatrix::from_diagonal(&[1.0, 0.0]);
    let state = kron(&ancilla, &kron(rho_a, rho_b));
    let h = kron(&hadamard(), &ComplexMatrix::identity(d * d));
    let circuit = &(&h * &controlled_swap(d)) * &h;
    let out = &(&circuit * &state) * &dagger(&circuit);
    (0..d * d).map(|k| out[(k, k)].re).sum()
}

pub fn swap_test_exact(rho_a: &ComplexMatrix, rho_b: &ComplexMatrix) -> Result<OverlapEstimate> {
    check_inputs(rho_a, rho_b)?;
    Ok(OverlapEstimate::exact(circuit_p0(rho_a, rho_b)))
}

/// Draws `shots` ancilla outcomes from the exact circuit distribution.
pub fn swap_test_sampled(
    rho_a: &ComplexMatrix,
    rho_b: &ComplexMatrix,
    shots: u64,
    seed: u64,
) -> Result<OverlapEstimate> {
    if shots == 0 {
        return Err(Error::InvalidArgument(
            "sampled swap test needs at least one shot".into(),
        ));
    }
    let exact = swap_test_exact(rho_a, rho_b)?;
    let outcome_zero = Bernoulli::new(exact.p0).expect("p0 clamped to [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zeros = (0..shots).filter(|_| outcome_zero.sample(&mut rng)).count() as u64;
    Ok(OverlapEstimate::sampled(zeros, shots))
}

/// Exact if `shots == 0`, sampled otherwise.
pub fn swap_test(
    rho_a: &ComplexMatrix,
    rho_b: &ComplexMatrix,
    shots: u64,
    seed: u64,
) -> Result<OverlapEstimate> {
    if shots == 0 {
        swap_test_exact(rho_a, rho_b)
    } else {
        swap_test_sampled(rho_a, rho_b, shots, seed)
    }
}

/// Runs the swap test on the marginals `ρ_A(t)`, `ρ_B(t)` of the switched
/// register `|a b 1⟩` at every scheduled time. The `i`-th sampled estimate is
/// seeded with `seed + i`.
pub fn estimate_over_schedule(
    a: QubitState,
    b: QubitState,
    schedule: &EstimationSchedule,
    dz: f64,
) -> Result<Vec<OverlapEstimate>> {
    schedule
        .times()
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let (rho_a, rho_b) = marginals(&switched_register(a, b, t, dz));
            swap_test(
                &rho_a,
                &rho_b,
                schedule.shots(),
                schedule.seed().wrapping_add(i as u64),
            )
        })
        .collect()
}
