//! Generalized Gell-Mann bases and their structure constants.
//!
//! For a d-level system the basis consists of d(d-1)/2 symmetric and
//! d(d-1)/2 antisymmetric off-diagonal matrices plus d-1 diagonal ones,
//! d^2 - 1 in total, all Hermitian and traceless with Tr(L_a L_b) = 2 delta_ab.
//! At d = 2 the three matrices are the Pauli set.
//!
//! Indices `j`, `k`, `l` in the constructors are 1-based, matching the usual
//! |j><k| notation for these matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Symmetric element |j><k| + |k><j| for 1 <= j < k <= d.
pub fn symmetric_ggm(d: usize, j: usize, k: usize) -> Result<ComplexMatrix> {
    check_pair(d, j, k)?;
    let mut m = ComplexMatrix::zeros(d);
    m.set(j - 1, k - 1, Complex64::new(1.0, 0.0));
    m.set(k - 1, j - 1, Complex64::new(1.0, 0.0));
    Ok(m)
}

/// Antisymmetric element -i|j><k| + i|k><j| for 1 <= j < k <= d.
pub fn antisymmetric_ggm(d: usize, j: usize, k: usize) -> Result<ComplexMatrix> {
    check_pair(d, j, k)?;
    let mut m = ComplexMatrix::zeros(d);
    m.set(j - 1, k - 1, Complex64::new(0.0, -1.0));
    m.set(k - 1, j - 1, Complex64::new(0.0, 1.0));
    Ok(m)
}

/// Diagonal element sqrt(2/(l(l+1))) (sum_{j<=l} |j><j| - l |l+1><l+1|)
/// for 1 <= l <= d-1; traceless by construction.
pub fn diagonal_ggm(d: usize, l: usize) -> Result<ComplexMatrix> {
    if d < 2 {
        return Err(Error::domain(format!("basis dimension d={d} must be >= 2")));
    }
    if l < 1 || l > d - 1 {
        return Err(Error::index(format!(
            "diagonal index l={l} out of 1..={}",
            d - 1
        )));
    }
    let scale = (2.0 / (l as f64 * (l as f64 + 1.0))).sqrt();
    let mut m = ComplexMatrix::zeros(d);
    for j in 0..l {
        m.set(j, j, Complex64::new(scale, 0.0));
    }
    m.set(l, l, Complex64::new(-scale * l as f64, 0.0));
    Ok(m)
}

fn check_pair(d: usize, j: usize, k: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::domain(format!("basis dimension d={d} must be >= 2")));
    }
    if j < 1 || k <= j || k > d {
        return Err(Error::index(format!(
            "indices must satisfy 1 <= j < k <= d, got j={j}, k={k}, d={d}"
        )));
    }
    Ok(())
}

/// The full ordered basis for dimension d.
///
/// Ordering is frozen: all symmetric elements in lexicographic (j, k) order,
/// then all antisymmetric elements in the same order, then the diagonal
/// elements for l = 1..d-1. Coefficient vectors indexed this way are
/// portable across runs and files.
#[derive(Debug, Clone)]
pub struct GgmBasis {
    d: usize,
    matrices: Vec<ComplexMatrix>,
}

impl GgmBasis {
    pub fn new(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::domain(format!("basis dimension d={d} must be >= 2")));
        }
        let mut matrices = Vec::with_capacity(d * d - 1);
        for j in 1..=d {
            for k in (j + 1)..=d {
                matrices.push(symmetric_ggm(d, j, k)?);
            }
        }
        for j in 1..=d {
            for k in (j + 1)..=d {
                matrices.push(antisymmetric_ggm(d, j, k)?);
            }
        }
        for l in 1..d {
            matrices.push(diagonal_ggm(d, l)?);
        }
        Ok(Self { d, matrices })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of basis elements, d^2 - 1.
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// Basis element by 0-based position in the frozen ordering.
    pub fn element(&self, i: usize) -> &ComplexMatrix {
        &self.matrices[i]
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.matrices
    }
}

/// Structure constants of the basis product algebra:
/// L_i L_j = (2/d) delta_ij I + sum_k (d_ijk + i f_ijk) L_k,
/// with d totally symmetric and f totally antisymmetric.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    m: usize,
    d_sym: Vec<f64>,
    f_antisym: Vec<f64>,
}

impl StructureConstants {
    /// Computes both tensors by the trace formulas
    /// d_ijk = Tr({L_i, L_j} L_k) / 4 and f_ijk = Tr([L_i, L_j] L_k) / (4i).
    ///
    /// Both reduce to halves of the real and imaginary parts of
    /// T_ijk = Tr(L_i L_j L_k), since reversing the product order conjugates
    /// the trace for Hermitian matrices.
    pub fn compute(basis: &GgmBasis) -> Result<Self> {
        let m = basis.len();
        let mut d_sym = vec![0.0; m * m * m];
        let mut f_antisym = vec![0.0; m * m * m];
        for i in 0..m {
            for j in 0..m {
                let product = basis.element(i).matmul(basis.element(j))?;
                for k in 0..m {
                    let t = product.trace_product(basis.element(k))?;
                    d_sym[(i * m + j) * m + k] = 0.5 * t.re;
                    f_antisym[(i * m + j) * m + k] = 0.5 * t.im;
                }
            }
        }
        Ok(Self {
            m,
            d_sym,
            f_antisym,
        })
    }

    /// Number of basis elements the tensors are indexed over (d^2 - 1).
    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// Symmetric constant d_ijk, 0-based indices in the frozen basis order.
    pub fn d(&self, i: usize, j: usize, k: usize) -> f64 {
        self.d_sym[(i * self.m + j) * self.m + k]
    }

    /// Antisymmetric constant f_ijk, 0-based indices.
    pub fn f(&self, i: usize, j: usize, k: usize) -> f64 {
        self.f_antisym[(i * self.m + j) * self.m + k]
    }
}
