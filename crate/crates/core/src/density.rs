//! Density-matrix validation, distances, mixing, and rank stratification.
//!
//! A complex N x N matrix is a density matrix when it is Hermitian, positive
//! semidefinite, and has unit trace; the determinant is then nonnegative as
//! well. `validate` reports each constraint independently so callers can see
//! exactly which one a candidate violates.

use num_complex::Complex64;

use crate::eigen::{hermitian_eigen, hermitian_eigenvalues};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::DEFAULT_TOL;

/// Outcome of checking a matrix against the density-matrix constraints.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub hermitian: bool,
    pub psd: bool,
    pub normalized: bool,
    pub det_nonneg: bool,
    /// Smallest eigenvalue of the Hermitian part.
    pub min_eigenvalue: f64,
    pub trace: Complex64,
    pub determinant: Complex64,
    /// Human-readable description of each violated constraint.
    pub violations: Vec<String>,
}

impl ValidationReport {
    /// A matrix is a density matrix iff Hermitian, PSD, and normalized.
    pub fn is_valid(&self) -> bool {
        self.hermitian && self.psd && self.normalized
    }
}

/// Checks the four defining constraints of a density matrix at absolute
/// tolerance `tol`.
///
/// Eigenvalues are taken from the Hermitian part of `m`, so the PSD flag
/// stays meaningful even when the Hermiticity flag is false.
pub fn validate(m: &ComplexMatrix, tol: f64) -> Result<ValidationReport> {
    if tol <= 0.0 {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut violations = Vec::new();

    let herm_dev = m.hermiticity_deviation();
    let hermitian = herm_dev <= tol;
    if !hermitian {
        violations.push(format!(
            "not Hermitian: max |m[i][j] - conj(m[j][i])| = {herm_dev:.3e}"
        ));
    }

    let eigenvalues = hermitian_eigenvalues(m);
    let min_eigenvalue = eigenvalues.first().copied().unwrap_or(0.0);
    let psd = min_eigenvalue >= -tol;
    if !psd {
        violations.push(format!(
            "not positive semidefinite: min eigenvalue = {min_eigenvalue:.3e}"
        ));
    }

    let trace = m.trace();
    let normalized = (trace - Complex64::new(1.0, 0.0)).norm() <= tol;
    if !normalized {
        violations.push(format!("trace = {} + {}i, expected 1", trace.re, trace.im));
    }

    let determinant = m.determinant();
    let det_nonneg = determinant.re >= -tol && determinant.im.abs() <= tol;
    if !det_nonneg {
        violations.push(format!(
            "determinant = {} + {}i is negative",
            determinant.re, determinant.im
        ));
    }

    Ok(ValidationReport {
        hermitian,
        psd,
        normalized,
        det_nonneg,
        min_eigenvalue,
        trace,
        determinant,
        violations,
    })
}

/// True iff every eigenvalue is at least `-tol`.
///
/// Errors on input that is not Hermitian within `tol`; positivity is only
/// defined for Hermitian matrices.
pub fn is_positive_semidefinite(m: &ComplexMatrix, tol: f64) -> Result<bool> {
    let dev = m.hermiticity_deviation();
    if dev > tol {
        return Err(Error::NotHermitian {
            deviation: dev,
            tol,
        });
    }
    Ok(hermitian_eigenvalues(m)[0] >= -tol)
}

/// A validated density matrix.
///
/// Construction runs `validate`; once built, the value is immutable and all
/// constraints hold at the recorded tolerance.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    tolerance: f64,
}

impl DensityMatrix {
    /// Validates `m` at tolerance `tol` and wraps it.
    pub fn new(m: ComplexMatrix, tol: f64) -> Result<Self> {
        let report = validate(&m, tol)?;
        if !report.is_valid() {
            return Err(Error::InvalidDensityMatrix {
                reasons: report.violations.join("; "),
            });
        }
        Ok(Self {
            matrix: m,
            tolerance: tol,
        })
    }

    /// Validates at the crate default tolerance.
    pub fn new_default(m: ComplexMatrix) -> Result<Self> {
        Self::new(m, DEFAULT_TOL)
    }

    /// The maximally mixed state I/N.
    pub fn maximally_mixed(dim: usize) -> Self {
        let m = ComplexMatrix::identity(dim).scale_re(1.0 / dim as f64);
        Self {
            matrix: m,
            tolerance: DEFAULT_TOL,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Purity Tr(rho^2), in [1/N, 1]; equals 1 iff the state is pure.
    ///
    /// For Hermitian rho this is the sum of |rho_ij|^2, which is exact up to
    /// rounding and manifestly real.
    pub fn purity(&self) -> f64 {
        self.matrix.entries().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Number of eigenvalues above `tol`: which rank stratum of the convex
    /// body the state sits in. Eigenvalues within `tol` of zero count as
    /// numerical noise, not rank.
    pub fn rank_stratum(&self, tol: f64) -> usize {
        hermitian_eigenvalues(&self.matrix)
            .iter()
            .filter(|&&v| v > tol)
            .count()
    }

    /// Hilbert-Schmidt distance, D with D^2 = Tr[(rho - sigma)^2] / 2.
    pub fn hs_distance(&self, other: &DensityMatrix) -> Result<f64> {
        self.matrix.hs_distance(&other.matrix)
    }

    /// Convex mixture lambda * self + (1 - lambda) * other.
    ///
    /// Convexity of the state body guarantees the result validates.
    pub fn mix(&self, other: &DensityMatrix, lambda: f64) -> Result<DensityMatrix> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::domain(format!(
                "mixing weight must lie in [0, 1], got {lambda}"
            )));
        }
        let combined = self
            .matrix
            .scale_re(lambda)
            .add(&other.matrix.scale_re(1.0 - lambda))?;
        DensityMatrix::new(combined, self.tolerance.max(other.tolerance))
    }

    /// Eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix)
    }

    /// Full eigendecomposition.
    pub fn eigen(&self) -> crate::eigen::Eigen {
        hermitian_eigen(&self.matrix)
    }
}

/// Dimension of the rank-r stratum of unit-trace N x N density matrices:
/// r(2n - r) - 1.
///
/// The raw Hermitian degree-of-freedom count for a rank-r matrix is
/// r(2n - r); unit trace removes one.
pub fn strata_dimension(n: usize, r: usize) -> Result<usize> {
    if r < 1 || r > n {
        return Err(Error::domain(format!("rank r={r} out of range 1..={n}")));
    }
    Ok(r * (2 * n - r) - 1)
}
