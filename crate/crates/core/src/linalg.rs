//! Dense complex linear algebra for small quantum registers.
//!
//! [`ComplexMatrix`] wraps a square `nalgebra` matrix of `Complex64`. Everything
//! here is a pure function over immutable inputs.

use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Elementwise tolerance for the Hermitian and unitary checks.
pub const STRUCTURE_TOL: f64 = 1e-12;
/// Allowed deviation of a density matrix trace from one.
pub const TRACE_TOL: f64 = 1e-12;
/// Most negative eigenvalue still accepted in a density matrix.
pub const MIN_EIGENVALUE_TOL: f64 = -1e-10;
/// Eigenvalues at or below this are dropped from entropy sums.
pub const ENTROPY_CUTOFF: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Square matrix of complex doubles.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<Complex64>,
}

impl ComplexMatrix {
    /// Builds a `dim × dim` matrix from entries in row-major order.
    pub fn from_row_major(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch(
                "dimension must be at least 1".into(),
            ));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            inner: DMatrix::from_row_slice(dim, dim, entries),
        })
    }

    /// Real-valued convenience constructor, row-major.
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        let c: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_row_major(dim, &c)
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            inner: DMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            inner: DMatrix::identity(dim, dim),
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.inner[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    /// Projector `|ψ⟩⟨ψ|` for an amplitude vector. The vector is used as given,
    /// without normalization.
    pub fn outer(psi: &[Complex64]) -> Self {
        let n = psi.len();
        assert!(n >= 1, "empty state vector");
        Self {
            inner: DMatrix::from_fn(n, n, |i, j| psi[i] * psi[j].conj()),
        }
    }

    pub(crate) fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self {
            inner: DMatrix::from_fn(dim, dim, f),
        }
    }

    pub(crate) fn from_nalgebra(inner: DMatrix<Complex64>) -> Self {
        debug_assert!(inner.is_square());
        Self { inner }
    }

    pub fn as_nalgebra(&self) -> &DMatrix<Complex64> {
        &self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.inner[(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.inner[(row, col)] = value;
    }

    pub fn trace(&self) -> Complex64 {
        self.inner.trace()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            inner: &self.inner * s,
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim(), "vector length does not match matrix");
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.inner[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Diagonal entries as a real-valued incoherent matrix (`ρ_diag`).
    pub fn diagonal_part(&self) -> Self {
        Self::from_fn(
            self.dim(),
            |i, j| if i == j { self.inner[(i, i)] } else { ZERO },
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.inner.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.inner
            .iter()
            .zip(other.inner.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Absolute tolerance, promoted to relative once entries exceed one.
    fn scaled_tol(&self, tol: f64) -> f64 {
        tol * self.max_abs().max(1.0)
    }

    pub fn hermitian_defect(&self) -> f64 {
        self.max_abs_diff(&dagger(self))
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_defect() <= self.scaled_tol(STRUCTURE_TOL)
    }

    pub fn is_unitary(&self) -> bool {
        let prod = &dagger(self) * self;
        prod.max_abs_diff(&Self::identity(self.dim())) <= STRUCTURE_TOL
    }

    /// Checks the density-operator invariants: Hermitian, unit trace and
    /// eigenvalues no lower than [`MIN_EIGENVALUE_TOL`].
    pub fn check_density(&self) -> Result<()> {
        let defect = self.hermitian_defect();
        if defect > self.scaled_tol(STRUCTURE_TOL) {
            return Err(Error::NotDensity(format!(
                "not Hermitian (defect {defect:e})"
            )));
        }
        let tr = self.trace();
        if (tr - ONE).norm() > TRACE_TOL {
            return Err(Error::NotDensity(format!("trace is {tr}")));
        }
        let spectrum = eig_hermitian(self)?;
        let min = spectrum.eigenvalues[0];
        if min < MIN_EIGENVALUE_TOL {
            return Err(Error::NotDensity(format!("negative eigenvalue {min:e}")));
        }
        Ok(())
    }

    pub fn is_density(&self) -> bool {
        self.check_density().is_ok()
    }

    /// `Tr[ρ²]`.
    pub fn purity(&self) -> f64 {
        (self * self).trace().re
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.inner[idx]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in product");
        ComplexMatrix {
            inner: &self.inner * &rhs.inner,
        }
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in sum");
        ComplexMatrix {
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in difference");
        ComplexMatrix {
            inner: &self.inner - &rhs.inner,
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim(), self.dim())?;
        for i in 0..self.dim() {
            let row: Vec<String> = (0..self.dim())
                .map(|j| {
                    let z = self.inner[(i, j)];
                    format!("{:+.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Pauli X.
pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_fn(2, |i, j| if i != j { ONE } else { ZERO })
}

/// Pauli Y.
pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_fn(2, |i, j| match (i, j) {
        (0, 1) => -I,
        (1, 0) => I,
        _ => ZERO,
    })
}

/// Pauli Z.
pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_diagonal(&[1.0, -1.0])
}

/// Hadamard gate.
pub fn hadamard() -> ComplexMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_real(2, &[h, h, h, -h]).expect("2x2 literal")
}

/// Kronecker product; `kron(a, b)[i·n_b + k, j·n_b + l] = a[i, j]·b[k, l]`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix {
        inner: a.inner.kronecker(&b.inner),
    }
}

/// Conjugate transpose.
pub fn dagger(a: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix {
        inner: a.inner.adjoint(),
    }
}

/// Eigendecomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Real eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, column `k` paired with `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl Spectrum {
    /// `V diag(f(λ)) V†`.
    pub fn map(&self, mut f: impl FnMut(f64) -> Complex64) -> ComplexMatrix {
        let v = self.eigenvectors.as_nalgebra();
        let n = v.nrows();
        let mut scaled = v.clone();
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let w = f(lambda);
            for i in 0..n {
                scaled[(i, k)] *= w;
            }
        }
        ComplexMatrix::from_nalgebra(scaled * v.adjoint())
    }

    /// `V diag(λ) V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map(|l| Complex64::new(l, 0.0))
    }
}

pub fn eig_hermitian(h: &ComplexMatrix) -> Result<Spectrum> {
    let defect = h.hermitian_defect();
    if defect > h.scaled_tol(STRUCTURE_TOL) {
        return Err(Error::NotHermitian(defect));
    }
    let eig = SymmetricEigen::new(h.inner.clone());
    let mut order: Vec<usize> = (0..h.dim()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = DMatrix::from_fn(h.dim(), h.dim(), |i, k| eig.eigenvectors[(i, order[k])]);
    Ok(Spectrum {
        eigenvalues,
        eigenvectors: ComplexMatrix::from_nalgebra(vectors),
    })
}

/// `exp(-i s H)` through the eigendecomposition of the Hermitian `h`.
pub fn exp_minus_i(h: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    let spectrum = eig_hermitian(h)?;
    Ok(spectrum.map(|lambda| Complex64::from_polar(1.0, -s * lambda)))
}

/// Reduces `rho` on subsystems with dimensions `dims` to the subsystems listed
/// in `keep`. Kept subsystems appear in ascending index order in the result.
pub fn partial_trace(rho: &ComplexMatrix, dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::DimensionMismatch(format!(
            "invalid subsystem dims {dims:?}"
        )));
    }
    let total: usize = dims.iter().product();
    if total != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "subsystem dims {dims:?} multiply to {total}, matrix is {0}x{0}",
            rho.dim()
        )));
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.len() != keep.len() || kept.iter().any(|&k| k >= dims.len()) {
        return Err(Error::DimensionMismatch(format!(
            "keep set {keep:?} is not a set of subsystem indices below {}",
            dims.len()
        )));
    }
    if kept.is_empty() {
        return Err(Error::DimensionMismatch(
            "keep set must not be empty".into(),
        ));
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|i| !kept.contains(i)).collect();

    // Row-major strides, subsystem 0 most significant.
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len() - 1).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    // Offset of each multi-index restricted to a subset of subsystems.
    let offsets = |subset: &[usize]| -> Vec<usize> {
        let mut out = vec![0usize];
        for &s in subset {
            let stride = strides[s];
            out = out
                .iter()
                .flat_map(|&base| (0..dims[s]).map(move |d| base + d * stride))
                .collect();
        }
        out
    };
    let kept_offsets = offsets(&kept);
    let traced_offsets = offsets(&traced);

    let m = rho.as_nalgebra();
    let out = ComplexMatrix::from_fn(kept_offsets.len(), |i, j| {
        traced_offsets
            .iter()
            .map(|&k| m[(kept_offsets[i] + k, kept_offsets[j] + k)])
            .sum()
    });
    Ok(out)
}

/// Shannon entropy, base 2, of a probability list; entries at or below
/// [`ENTROPY_CUTOFF`] contribute zero.
pub(crate) fn shannon_entropy(probs: impl IntoIterator<Item = f64>) -> f64 {
    let s: f64 = probs
        .into_iter()
        .filter(|&p| p > ENTROPY_CUTOFF)
        .map(|p| -p * p.log2())
        .sum();
    s.max(0.0)
}

/// `-Σ λ log₂ λ` over the spectrum of a density matrix.
pub fn von_neumann_entropy(rho: &ComplexMatrix) -> Result<f64> {
    rho.check_density()?;
    let spectrum = eig_hermitian(rho)?;
    Ok(shannon_entropy(spectrum.eigenvalues))
}
