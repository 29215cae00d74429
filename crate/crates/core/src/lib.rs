//! Simulation of a three-qubit quantum switch and the coherence of the
//! register it switches.
//!
//! The switch exchanges the unknown states of qubits `A` and `B` when the
//! control qubit `C` is `|1⟩`. Its continuous-time evolution is generated by
//! a Hamiltonian coupling `|011⟩` and `|101⟩`; a Dzyaloshinskii-Moriya (DM)
//! term acting on `A` and `B` models coherent noise.
//!
//! Modules:
//!
//! - [`linalg`]: dense complex matrices, Hermitian eigendecomposition,
//!   `exp(-i s H)`, partial trace and von Neumann entropy.
//! - [`switch`]: switch Hamiltonian, unitaries, register preparation and
//!   noiseless evolution.
//! - [`noise`]: DM Hamiltonian, noisy unitary and closed-form noisy evolution.
//! - [`coherence`]: l1-norm and relative-entropy coherence, plus closed-form
//!   expressions for the switched register.
//! - [`estimator`]: swap-test overlap estimation, exact and sampled.
//! - [`sweep`]: parameter sweeps and CSV output used by the `qswitch-sweep`
//!   binary.
//!
//! Basis states of the register are indexed as `4·b_A + 2·b_B + b_C`, so qubit
//! `A` is the most significant bit.

pub mod coherence;
pub mod error;
pub mod estimator;
pub mod linalg;
pub mod noise;
pub mod sweep;
pub mod switch;

pub use coherence::{CoherenceValue, MeasureKind};
pub use error::{Error, Result};
pub use estimator::{EstimationSchedule, OverlapEstimate};
pub use linalg::{ComplexMatrix, Spectrum};
pub use noise::NoiseParams;
pub use switch::{ControlBit, QubitState, SwitchRegister};

pub use num_complex::Complex64;
