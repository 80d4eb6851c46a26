//! Hermitian eigensolver for small dense complex matrices.
//!
//! Cyclic Jacobi with complex rotations. For the matrix sizes this crate
//! handles (N up to a few dozen) Jacobi is simple, deterministic, and
//! accurate to a few ulps of the matrix scale, which is what the constraint
//! checks downstream rely on.

use num_complex::Complex64;

use crate::matrix::ComplexMatrix;

/// Eigendecomposition of a Hermitian matrix.
///
/// `values` are sorted ascending; column `k` of `vectors` is the unit
/// eigenvector for `values[k]`.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl Eigen {
    /// Smallest eigenvalue.
    pub fn min(&self) -> f64 {
        self.values[0]
    }

    /// Largest eigenvalue.
    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }
}

const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of the Hermitian part of `m`.
///
/// The input is symmetrized as (M + M†)/2 before iterating, so feeding in a
/// matrix with small anti-Hermitian noise is safe; callers that must reject
/// genuinely non-Hermitian input check `hermiticity_deviation` first.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Eigen {
    let n = m.dim();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    if n <= 1 {
        return Eigen {
            values: (0..n).map(|i| a.get(i, i).re).collect(),
            vectors: v,
        };
    }

    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let target = scale * 1e-15;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= target {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]).then(i.cmp(&j)));

    let vectors = ComplexMatrix::from_fn(n, |row, col| v.get(row, order[col]));
    values.sort_by(f64::total_cmp);
    Eigen { values, vectors }
}

/// Eigenvalues only, sorted ascending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    hermitian_eigen(m).values
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            acc += a.get(i, j).norm_sqr();
        }
    }
    (2.0 * acc).sqrt()
}

/// One Jacobi rotation zeroing the (p, q) entry.
///
/// The complex off-diagonal is first de-phased, then the classic real
/// rotation with the stable tangent formula is applied. Diagonal entries are
/// written back as reals so rounding never leaks imaginary parts onto the
/// diagonal.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    // phase that makes the off-diagonal real positive
    let phase = apq / mag; // e^{i theta}
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // column transform: col_p' = c*col_p - s*conj(phase)*col_q
    //                   col_q' = s*col_p + c*conj(phase)*col_q
    let sp = Complex64::new(s, 0.0) * phase.conj();
    let cp = Complex64::new(c, 0.0) * phase.conj();

    let n = a.dim();
    for i in 0..n {
        if i == p || i == q {
            continue;
        }
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        let new_p = aip * c - aiq * sp;
        let new_q = aip * s + aiq * cp;
        a.set(i, p, new_p);
        a.set(p, i, new_p.conj());
        a.set(i, q, new_q);
        a.set(q, i, new_q.conj());
    }
    a.set(p, p, Complex64::new(app - t * mag, 0.0));
    a.set(q, q, Complex64::new(aqq + t * mag, 0.0));
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));

    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, vip * c - viq * sp);
        v.set(i, q, vip * s + viq * cp);
    }
}
