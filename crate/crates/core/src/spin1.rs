//! The three-level (spin-1) constraint system.
//!
//! States are parameterized as
//!
//! ```text
//!         [ a     conj(h)  g       ]
//!   rho = [ h     b        conj(f) ]
//!         [ conj(g)  f     c       ]
//! ```
//!
//! with a + b + c = 1. Positivity is equivalent to the seven principal-minor
//! inequalities: a, b, c >= 0, |f|^2 <= bc, |g|^2 <= ca, |h|^2 <= ab, and
//! det rho = abc + 2 Re(fgh) - (a|f|^2 + b|g|^2 + c|h|^2) >= 0.
//!
//! Rescaling f = sqrt(bc) F, g = sqrt(ca) G, h = sqrt(ab) H maps the disc
//! constraints to |F|, |G|, |H| <= 1. On the |F| = 1 boundary the
//! determinant factors as -abc |G e^{iX_F} - conj(H)|^2, so physical boundary
//! states satisfy G e^{iX_F} = conj(H) and the phases sum to zero mod 2 pi.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::sample;

/// Populations (a, b, c) and off-diagonals (f, g, h) of a 3x3 Hermitian
/// unit-trace matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spin1Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub f: Complex64,
    pub g: Complex64,
    pub h: Complex64,
}

impl Spin1Params {
    pub fn new(a: f64, b: f64, c: f64, f: Complex64, g: Complex64, h: Complex64) -> Self {
        Self { a, b, c, f, g, h }
    }

    /// Populations only; all off-diagonals zero.
    pub fn diagonal(a: f64, b: f64, c: f64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        Self::new(a, b, c, zero, zero, zero)
    }

    /// The corresponding 3x3 matrix (Hermitian by construction).
    pub fn to_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::new(
            3,
            vec![
                Complex64::new(self.a, 0.0),
                self.h.conj(),
                self.g,
                self.h,
                Complex64::new(self.b, 0.0),
                self.f.conj(),
                self.g.conj(),
                self.f,
                Complex64::new(self.c, 0.0),
            ],
        )
        .expect("3x3 entry count is fixed")
    }

    /// Reads the parameterization back off a Hermitian unit-trace 3x3 matrix.
    pub fn from_matrix(m: &ComplexMatrix, tol: f64) -> Result<Self> {
        if m.dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: m.dim(),
            });
        }
        let dev = m.hermiticity_deviation();
        if dev > tol {
            return Err(Error::NotHermitian {
                deviation: dev,
                tol,
            });
        }
        let trace = m.trace();
        if (trace - Complex64::new(1.0, 0.0)).norm() > tol {
            return Err(Error::domain(format!(
                "trace = {} + {}i, expected 1",
                trace.re, trace.im
            )));
        }
        Ok(Self::new(
            m.get(0, 0).re,
            m.get(1, 1).re,
            m.get(2, 2).re,
            m.get(2, 1),
            m.get(0, 2),
            m.get(1, 0),
        ))
    }

    /// Determinant by the closed-form expansion
    /// abc + 2 Re(fgh) - (a|f|^2 + b|g|^2 + c|h|^2).
    pub fn determinant(&self) -> f64 {
        self.a * self.b * self.c + 2.0 * (self.f * self.g * self.h).re
            - (self.a * self.f.norm_sqr() + self.b * self.g.norm_sqr() + self.c * self.h.norm_sqr())
    }

    fn check_trace(&self, tol: f64) -> Result<()> {
        let sum = self.a + self.b + self.c;
        if (sum - 1.0).abs() > tol {
            return Err(Error::domain(format!(
                "populations must sum to 1, got {sum}"
            )));
        }
        Ok(())
    }
}

/// The seven principal-minor inequalities plus the closed-form determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrincipalMinorReport {
    pub a_nonneg: bool,
    pub b_nonneg: bool,
    pub c_nonneg: bool,
    pub f_within_disc: bool,
    pub g_within_disc: bool,
    pub h_within_disc: bool,
    pub det_nonneg: bool,
    pub determinant: f64,
}

impl PrincipalMinorReport {
    /// All seven inequalities hold: the matrix is positive semidefinite.
    pub fn all_satisfied(&self) -> bool {
        self.a_nonneg
            && self.b_nonneg
            && self.c_nonneg
            && self.f_within_disc
            && self.g_within_disc
            && self.h_within_disc
            && self.det_nonneg
    }
}

/// Evaluates all seven inequalities at absolute tolerance `tol`.
///
/// Errors when the populations do not sum to 1 within `tol`.
pub fn principal_minor_check(p: &Spin1Params, tol: f64) -> Result<PrincipalMinorReport> {
    p.check_trace(tol)?;
    let det = p.determinant();
    Ok(PrincipalMinorReport {
        a_nonneg: p.a >= -tol,
        b_nonneg: p.b >= -tol,
        c_nonneg: p.c >= -tol,
        f_within_disc: p.f.norm_sqr() <= p.b * p.c + tol,
        g_within_disc: p.g.norm_sqr() <= p.c * p.a + tol,
        h_within_disc: p.h.norm_sqr() <= p.a * p.b + tol,
        det_nonneg: det >= -tol,
        determinant: det,
    })
}

/// The three simplex vertices; each labels the extremal disc living on the
/// opposite edge of the population triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertex {
    A,
    B,
    C,
}

/// Membership in the 2-D extremal disc at a vertex: for vertex A the state
/// must satisfy |f|^2 <= bc with g = h = 0 (within `tol`), and cyclically
/// for B and C.
pub fn extremal_disc_check(p: &Spin1Params, vertex: Vertex, tol: f64) -> bool {
    let (active_sq, bound, off1, off2) = match vertex {
        Vertex::A => (p.f.norm_sqr(), p.b * p.c, p.g, p.h),
        Vertex::B => (p.g.norm_sqr(), p.c * p.a, p.f, p.h),
        Vertex::C => (p.h.norm_sqr(), p.a * p.b, p.f, p.g),
    };
    active_sq <= bound + tol && off1.norm() <= tol && off2.norm() <= tol
}

/// Off-diagonals rescaled by the geometric means of the populations.
///
/// `None` marks a component whose denominator vanished (the rescaling is
/// undefined at the corresponding vertex of the population triangle);
/// consumers must branch on it rather than read a placeholder value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RescaledParams {
    /// F = f / sqrt(bc).
    pub f: Option<Complex64>,
    /// G = g / sqrt(ca).
    pub g: Option<Complex64>,
    /// H = h / sqrt(ab).
    pub h: Option<Complex64>,
}

impl RescaledParams {
    pub fn defined(f: Complex64, g: Complex64, h: Complex64) -> Self {
        Self {
            f: Some(f),
            g: Some(g),
            h: Some(h),
        }
    }

    /// Inverse map: rebuilds (f, g, h) from given populations.
    ///
    /// Errors when any component is undefined.
    pub fn restore(&self, a: f64, b: f64, c: f64) -> Result<Spin1Params> {
        let (f, g, h) =
            match (self.f, self.g, self.h) {
                (Some(f), Some(g), Some(h)) => (f, g, h),
                _ => return Err(Error::domain(
                    "cannot restore off-diagonals: a rescaled component is undefined at a vertex",
                )),
            };
        Ok(Spin1Params::new(
            a,
            b,
            c,
            f * (b * c).max(0.0).sqrt(),
            g * (c * a).max(0.0).sqrt(),
            h * (a * b).max(0.0).sqrt(),
        ))
    }
}

/// Rescales the off-diagonals; a component whose population product is at
/// most `eps^2` comes back as `None`.
pub fn rescale(p: &Spin1Params, eps: f64) -> RescaledParams {
    let scale = |v: Complex64, product: f64| -> Option<Complex64> {
        if product > eps * eps {
            Some(v / product.sqrt())
        } else {
            None
        }
    };
    RescaledParams {
        f: scale(p.f, p.b * p.c),
        g: scale(p.g, p.c * p.a),
        h: scale(p.h, p.a * p.b),
    }
}

/// Residuals of the two boundary constraints on the |F| = 1 face:
/// the plane condition |G e^{iX_F} - conj(H)| and the wrapped phase sum
/// |X_F + X_G + X_H| in (-pi, pi].
///
/// Preconditions: F, G, H all defined and |F| = 1 within `tol`. When G or H
/// vanishes its phase does not exist, so the phase residual is reported as
/// zero (vacuously satisfied).
pub fn boundary_plane_check(r: &RescaledParams, tol: f64) -> Result<(f64, f64)> {
    let (f, g, h) = match (r.f, r.g, r.h) {
        (Some(f), Some(g), Some(h)) => (f, g, h),
        _ => {
            return Err(Error::domain(
                "boundary check needs all rescaled components defined",
            ))
        }
    };
    if (f.norm() - 1.0).abs() > tol {
        return Err(Error::domain(format!(
            "boundary check applies on the |F| = 1 face, got |F| = {}",
            f.norm()
        )));
    }
    let x_f = f.arg();
    let plane_residual = (g * Complex64::from_polar(1.0, x_f) - h.conj()).norm();
    let phase_residual = if g.norm() == 0.0 || h.norm() == 0.0 {
        0.0
    } else {
        wrap_angle(x_f + g.arg() + h.arg()).abs()
    };
    Ok((plane_residual, phase_residual))
}

/// Wraps an angle into (-pi, pi].
fn wrap_angle(x: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut w = x.rem_euclid(two_pi);
    if w > std::f64::consts::PI {
        w -= two_pi;
    }
    w
}

/// Output of [`sample_physical`].
#[derive(Debug, Clone)]
pub struct SampleResult {
    pub states: Vec<Spin1Params>,
    /// Accepted / attempted draws.
    pub acceptance_rate: f64,
    pub attempts: u64,
}

/// Rejection-samples `count` states from the physical region.
///
/// Populations are drawn uniformly on the simplex, off-diagonals uniformly
/// in their discs (|f| <= sqrt(bc) and cyclic), and a draw is accepted iff
/// the determinant is nonnegative. Deterministic for a fixed seed.
pub fn sample_physical(count: usize, seed: u64) -> Result<SampleResult> {
    if count == 0 {
        return Err(Error::domain("sample count must be positive"));
    }
    let mut rng = sample::rng_from_seed(seed);
    let mut states = Vec::with_capacity(count);
    let mut attempts: u64 = 0;
    while states.len() < count {
        attempts += 1;
        let (a, b, c) = sample::random_simplex3(&mut rng);
        let f = sample::random_disc((b * c).sqrt(), &mut rng);
        let g = sample::random_disc((c * a).sqrt(), &mut rng);
        let h = sample::random_disc((a * b).sqrt(), &mut rng);
        let candidate = Spin1Params::new(a, b, c, f, g, h);
        if candidate.determinant() >= 0.0 {
            states.push(candidate);
        }
    }
    Ok(SampleResult {
        states,
        acceptance_rate: count as f64 / attempts as f64,
        attempts,
    })
}
