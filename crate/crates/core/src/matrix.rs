//! Small dense complex matrices.
//!
//! Everything in this crate operates on matrices of dimension at most a few
//! dozen, so the representation is a plain row-major `Vec<Complex64>` with no
//! attempt at sparsity or blocking.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A dense N x N complex matrix, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries; the length must be `dim * dim`.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::BadEntryCount {
                dim,
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    /// Builds a matrix by evaluating `f(row, col)` at every position.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    /// Diagonal matrix from real entries.
    pub fn diag(values: &[f64]) -> Self {
        let dim = values.len();
        Self::from_fn(dim, |i, j| {
            if i == j {
                Complex64::new(values[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entry slice.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Tr(self * other) without forming the product.
    pub fn trace_product(&self, other: &Self) -> Result<Complex64> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += self.get(i, j) * other.get(j, i);
            }
        }
        Ok(acc)
    }

    /// Largest entry-wise deviation from the conjugate transpose.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                let dev = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(dev);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    /// Returns the Hermitian part (M + M†)/2.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        })
    }

    /// Frobenius norm, sqrt(sum |m_ij|^2).
    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Hilbert-Schmidt distance to `other`: D with D^2 = Tr[(A-B)^2] / 2.
    ///
    /// For Hermitian arguments Tr[(A-B)^2] equals the squared Frobenius norm
    /// of the difference, which is how it is evaluated here.
    pub fn hs_distance(&self, other: &Self) -> Result<f64> {
        self.check_same_dim(other)?;
        let sq: f64 = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        Ok((0.5 * sq).sqrt())
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Complex64 {
        let n = self.dim;
        if n == 0 {
            return Complex64::new(1.0, 0.0);
        }
        let mut a = self.entries.clone();
        let at = |a: &[Complex64], i: usize, j: usize| a[i * n + j];
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..n {
            // pivot on the largest magnitude in this column
            let mut pivot = col;
            let mut best = at(&a, col, col).norm();
            for row in (col + 1)..n {
                let mag = at(&a, row, col).norm();
                if mag > best {
                    best = mag;
                    pivot = row;
                }
            }
            if best == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                det = -det;
            }
            let p = at(&a, col, col);
            det *= p;
            for row in (col + 1)..n {
                let factor = at(&a, row, col) / p;
                if factor.norm_sqr() == 0.0 {
                    continue;
                }
                for j in col..n {
                    let v = at(&a, row, j) - factor * at(&a, col, j);
                    a[row * n + j] = v;
                }
            }
        }
        det
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }
}
