//! Independent oracles for the acceptance suite.
//!
//! Everything here recomputes reference values through closed forms or
//! plain enumeration, deliberately avoiding the library's eigensolver and
//! pipeline code so agreement is a genuine cross-check.
#![allow(dead_code)] // each test target uses its own subset

use num_complex::Complex64;
use qck_core::ComplexMatrix;

/// Eigenvalues of a 2x2 Hermitian matrix by the quadratic formula,
/// ascending.
pub fn closed_form_eigs_2x2(m: &ComplexMatrix) -> [f64; 2] {
    let p = m.get(0, 0).re;
    let q = m.get(1, 1).re;
    let z = m.get(0, 1);
    let mean = 0.5 * (p + q);
    let radius = (0.25 * (p - q) * (p - q) + z.norm_sqr()).sqrt();
    [mean - radius, mean + radius]
}

/// Eigenvalues of a 3x3 Hermitian matrix by the trigonometric solution of
/// the characteristic cubic, ascending.
pub fn closed_form_eigs_3x3(m: &ComplexMatrix) -> [f64; 3] {
    let a11 = m.get(0, 0).re;
    let a22 = m.get(1, 1).re;
    let a33 = m.get(2, 2).re;
    let a12 = m.get(0, 1);
    let a13 = m.get(0, 2);
    let a23 = m.get(1, 2);

    let off_sq = a12.norm_sqr() + a13.norm_sqr() + a23.norm_sqr();
    let q = (a11 + a22 + a33) / 3.0;
    let p2 = (a11 - q).powi(2) + (a22 - q).powi(2) + (a33 - q).powi(2) + 2.0 * off_sq;
    if p2 <= 0.0 {
        return [q, q, q];
    }
    let p = (p2 / 6.0).sqrt();

    // det((M - qI) / p) via direct expansion
    let b11 = (a11 - q) / p;
    let b22 = (a22 - q) / p;
    let b33 = (a33 - q) / p;
    let b12 = a12 / p;
    let b13 = a13 / p;
    let b23 = a23 / p;
    let det_b = b11 * b22 * b33 + 2.0 * (b12 * b23 * b13.conj()).re
        - b11 * b23.norm_sqr()
        - b22 * b13.norm_sqr()
        - b33 * b12.norm_sqr();

    let r = (det_b / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let two_thirds_pi = 2.0 * std::f64::consts::PI / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + two_thirds_pi).cos();
    let mid = 3.0 * q - hi - lo;
    [lo, mid, hi]
}

/// Smallest eigenvalue of a 2x2 or 3x3 Hermitian matrix by closed form.
pub fn closed_form_min_eig(m: &ComplexMatrix) -> f64 {
    match m.dim() {
        2 => closed_form_eigs_2x2(m)[0],
        3 => closed_form_eigs_3x3(m)[0],
        d => panic!("closed forms cover 2x2 and 3x3 only, got {d}"),
    }
}

/// Brute-force count of fully gauge-invariant states on a periodic
/// staggered chain: occupation per site in {0, 1}, field per link in
/// {-1, 0, +1}, requiring E_k - E_{k-1} = occ_k - (k mod 2) at every site.
/// Written as plain nested loops with no library calls.
pub fn brute_force_gauss_invariant_count(n_sites: usize) -> usize {
    let n = n_sites;
    let occ_total = 1usize << n;
    let field_total = 3usize.pow(n as u32);
    let mut count = 0;
    for occ_code in 0..occ_total {
        for field_code in 0..field_total {
            let mut fields = vec![0i64; n];
            let mut rest = field_code;
            for entry in fields.iter_mut() {
                *entry = (rest % 3) as i64 - 1;
                rest /= 3;
            }
            let holds = (0..n).all(|site| {
                let occ = ((occ_code >> site) & 1) as i64;
                let charge = occ - (site % 2) as i64;
                let left = fields[(site + n - 1) % n];
                fields[site] - left == charge
            });
            if holds {
                count += 1;
            }
        }
    }
    count
}

/// Complex helper for building expected matrices.
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
