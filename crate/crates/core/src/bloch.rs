//! Bloch-vector coordinates for density matrices.
//!
//! Any Hermitian unit-trace matrix expands uniquely as
//! rho = I/d + sum_i tau_i L_i over a generalized Gell-Mann basis, with
//! tau_i = Tr(rho L_i) / 2. The map is linear and invertible; positivity is
//! NOT automatic and must be checked on the reconstructed matrix. Pure
//! states sit on the outsphere of radius sqrt((d-1)/(2d)); for d = 2 the
//! physical region is exactly the ball of radius 1/2 (the Bloch ball), while
//! for d > 2 pure states fill only a subset of the outsphere surface.

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::ggm::{GgmBasis, StructureConstants};
use crate::matrix::ComplexMatrix;

/// Real coefficient vector of length d^2 - 1 in the frozen basis ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochVector {
    pub d: usize,
    pub tau: Vec<f64>,
}

impl BlochVector {
    pub fn new(d: usize, tau: Vec<f64>) -> Result<Self> {
        if tau.len() != d * d - 1 {
            return Err(Error::DimensionMismatch {
                expected: d * d - 1,
                found: tau.len(),
            });
        }
        Ok(Self { d, tau })
    }

    /// The origin: the maximally mixed state I/d.
    pub fn zero(d: usize) -> Self {
        Self {
            d,
            tau: vec![0.0; d * d - 1],
        }
    }

    /// Euclidean norm of tau. Pure states have radius sqrt((d-1)/(2d)).
    pub fn radius(&self) -> f64 {
        self.tau.iter().map(|t| t * t).sum::<f64>().sqrt()
    }
}

/// Coordinates of a validated state: tau_i = Tr(rho L_i) / 2.
pub fn to_bloch(rho: &DensityMatrix, basis: &GgmBasis) -> Result<BlochVector> {
    matrix_to_bloch(rho.matrix(), basis)
}

/// Coordinates of any Hermitian unit-trace matrix (no positivity required).
pub fn matrix_to_bloch(m: &ComplexMatrix, basis: &GgmBasis) -> Result<BlochVector> {
    if m.dim() != basis.d() {
        return Err(Error::DimensionMismatch {
            expected: basis.d(),
            found: m.dim(),
        });
    }
    let tau = basis
        .elements()
        .iter()
        .map(|el| Ok(0.5 * m.trace_product(el)?.re))
        .collect::<Result<Vec<f64>>>()?;
    BlochVector::new(basis.d(), tau)
}

/// Reconstructs I/d + sum_i tau_i L_i: Hermitian with unit trace for any
/// real tau. The caller decides whether positivity matters and checks it.
pub fn from_bloch(tau: &BlochVector, basis: &GgmBasis) -> Result<ComplexMatrix> {
    if tau.d != basis.d() || tau.tau.len() != basis.len() {
        return Err(Error::DimensionMismatch {
            expected: basis.len(),
            found: tau.tau.len(),
        });
    }
    let d = basis.d();
    let mut m = ComplexMatrix::identity(d).scale_re(1.0 / d as f64);
    for (coeff, el) in tau.tau.iter().zip(basis.elements()) {
        if *coeff != 0.0 {
            m = m.add(&el.scale_re(*coeff))?;
        }
    }
    Ok(m)
}

/// Pure-state surface test in coordinates.
///
/// A state is pure (rho^2 = rho) iff its radius is sqrt((d-1)/(2d)) AND the
/// coordinates close under the symmetric star product:
/// sum_jk d_ijk tau_j tau_k = ((d-2)/d) tau_i for every i. At d = 2 the
/// second condition is vacuous because every d_ijk vanishes.
///
/// Panics if the structure constants do not match the vector length; they
/// must come from the same basis.
pub fn pure_surface_check(tau: &BlochVector, sc: &StructureConstants, tol: f64) -> bool {
    let m = tau.tau.len();
    assert_eq!(
        sc.len(),
        m,
        "structure constants and Bloch vector come from different bases"
    );
    let d = tau.d as f64;

    let radius_sq: f64 = tau.tau.iter().map(|t| t * t).sum();
    if (radius_sq - (d - 1.0) / (2.0 * d)).abs() > tol {
        return false;
    }

    let target = (d - 2.0) / d;
    for i in 0..m {
        let mut star = 0.0;
        for j in 0..m {
            let tj = tau.tau[j];
            if tj == 0.0 {
                continue;
            }
            for k in 0..m {
                star += sc.d(i, j, k) * tj * tau.tau[k];
            }
        }
        if (star - target * tau.tau[i]).abs() > tol {
            return false;
        }
    }
    true
}

/// A qubit state in the (a, alpha, beta) parameterization
/// [[a, alpha - i beta], [alpha + i beta, 1 - a]].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitBallPoint {
    pub a: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl QubitBallPoint {
    /// The corresponding Hermitian unit-trace matrix.
    pub fn to_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::new(
            2,
            vec![
                Complex64::new(self.a, 0.0),
                Complex64::new(self.alpha, -self.beta),
                Complex64::new(self.alpha, self.beta),
                Complex64::new(1.0 - self.a, 0.0),
            ],
        )
        .expect("2x2 entry count is fixed")
    }
}

/// True iff (a - 1/2)^2 + alpha^2 + beta^2 <= 1/4, i.e. the point lies
/// inside or on the qubit ball; equivalent to the matrix being PSD.
pub fn qubit_ball_check(p: &QubitBallPoint) -> bool {
    let dz = p.a - 0.5;
    dz * dz + p.alpha * p.alpha + p.beta * p.beta <= 0.25
}

/// Spin expectation values (<Jx>, <Jy>, <Jz>) for a qubit state, with
/// J_i = sigma_i / 2. In the ball parameterization these are exactly
/// (alpha, beta, a - 1/2).
pub fn spin_expectations(rho: &DensityMatrix) -> Result<(f64, f64, f64)> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: rho.dim(),
        });
    }
    let m = rho.matrix();
    let off = m.get(0, 1);
    let jx = off.re;
    let jy = -off.im;
    let jz = 0.5 * (m.get(0, 0).re - m.get(1, 1).re);
    Ok((jx, jy, jz))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{is_positive_semidefinite, validate};
    use crate::sample;

    #[test]
    fn maximally_mixed_maps_to_origin() {
        for d in [2, 3, 4] {
            let basis = GgmBasis::new(d).unwrap();
            let rho = DensityMatrix::maximally_mixed(d);
            let tau = to_bloch(&rho, &basis).unwrap();
            assert!(tau.radius() < 1e-15);
            let back = from_bloch(&tau, &basis).unwrap();
            assert!(back.sub(rho.matrix()).unwrap().frobenius_norm() < 1e-15);
        }
    }

    #[test]
    fn ground_projector_coordinates_at_d2() {
        let basis = GgmBasis::new(2).unwrap();
        let rho = DensityMatrix::new_default(ComplexMatrix::diag(&[1.0, 0.0])).unwrap();
        let tau = to_bloch(&rho, &basis).unwrap();
        assert!(tau.tau[0].abs() < 1e-15);
        assert!(tau.tau[1].abs() < 1e-15);
        assert!((tau.tau[2] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn unit_z_vector_leaves_the_ball() {
        let basis = GgmBasis::new(2).unwrap();
        let tau = BlochVector::new(2, vec![0.0, 0.0, 1.0]).unwrap();
        let m = from_bloch(&tau, &basis).unwrap();
        assert!((m.get(0, 0).re - 1.5).abs() < 1e-15);
        assert!((m.get(1, 1).re + 0.5).abs() < 1e-15);
        assert!((m.trace().re - 1.0).abs() < 1e-15);
        assert!(!is_positive_semidefinite(&m, 1e-10).unwrap());
    }

    #[test]
    fn roundtrip_on_random_hermitian_unit_trace() {
        for d in [2usize, 3, 4] {
            let mut rng = sample::rng_from_seed(100 + d as u64);
            let basis = GgmBasis::new(d).unwrap();
            for _ in 0..500 {
                let m = sample::random_hermitian_unit_trace(d, &mut rng);
                let tau = matrix_to_bloch(&m, &basis).unwrap();
                let back = from_bloch(&tau, &basis).unwrap();
                let err = back
                    .entries()
                    .iter()
                    .zip(m.entries())
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0_f64, f64::max);
                assert!(err <= 1e-12, "d={d}: roundtrip error {err}");
            }
        }
    }

    #[test]
    fn pure_state_radius_matches_outsphere() {
        let mut rng = sample::rng_from_seed(21);
        for d in [2usize, 3] {
            let basis = GgmBasis::new(d).unwrap();
            let expected = ((d as f64 - 1.0) / (2.0 * d as f64)).sqrt();
            for _ in 0..100 {
                let p = sample::random_pure_projector(d, &mut rng);
                let tau = matrix_to_bloch(&p, &basis).unwrap();
                assert!((tau.radius() - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn purity_identity_links_radius() {
        let mut rng = sample::rng_from_seed(22);
        for d in [2usize, 3, 4] {
            let basis = GgmBasis::new(d).unwrap();
            for _ in 0..200 {
                let p =
                    DensityMatrix::new(sample::random_pure_projector(d, &mut rng), 1e-9).unwrap();
                let state = p
                    .mix(&DensityMatrix::maximally_mixed(d), rand::Rng::gen(&mut rng))
                    .unwrap();
                let tau = to_bloch(&state, &basis).unwrap();
                let identity = 1.0 / d as f64 + 2.0 * tau.radius() * tau.radius();
                assert!((state.purity() - identity).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn ball_membership_decides_positivity_at_d2() {
        let mut rng = sample::rng_from_seed(23);
        let basis = GgmBasis::new(2).unwrap();
        let tol = 1e-10;
        for _ in 0..2000 {
            let tau = BlochVector::new(
                2,
                (0..3)
                    .map(|_| rand::Rng::gen_range(&mut rng, -0.75..0.75))
                    .collect(),
            )
            .unwrap();
            let m = from_bloch(&tau, &basis).unwrap();
            let psd = is_positive_semidefinite(&m, tol).unwrap();
            let inside = tau.radius() <= 0.5 + tol;
            assert_eq!(psd, inside, "tau = {:?}", tau.tau);
        }
    }

    #[test]
    fn radius_alone_is_insufficient_at_d3() {
        // inside the outsphere radius but with a negative eigenvalue
        let basis = GgmBasis::new(3).unwrap();
        let mut tau = BlochVector::zero(3);
        tau.tau[7] = 0.4; // along the second diagonal direction
        assert!(tau.radius() <= (1.0f64 / 3.0).sqrt());
        let m = from_bloch(&tau, &basis).unwrap();
        assert!(!is_positive_semidefinite(&m, 1e-10).unwrap());
    }

    #[test]
    fn pure_surface_check_agrees_with_idempotence() {
        let tol = 1e-9;
        for d in [2usize, 3] {
            let basis = GgmBasis::new(d).unwrap();
            let sc = StructureConstants::compute(&basis).unwrap();
            let mut rng = sample::rng_from_seed(24);

            for _ in 0..100 {
                // random pure state: both routes must say pure
                let p = sample::random_pure_projector(d, &mut rng);
                let tau = matrix_to_bloch(&p, &basis).unwrap();
                let idempotent = {
                    let sq = p.matmul(&p).unwrap();
                    sq.hs_distance(&p).unwrap() <= tol
                };
                assert!(idempotent);
                assert!(pure_surface_check(&tau, &sc, tol), "d={d}");

                // genuinely mixed state: both must say not pure
                let mixed = DensityMatrix::new(p, 1e-9)
                    .unwrap()
                    .mix(&DensityMatrix::maximally_mixed(d), 0.7)
                    .unwrap();
                let tau_mixed = to_bloch(&mixed, &basis).unwrap();
                assert!(!pure_surface_check(&tau_mixed, &sc, tol));
            }
        }
    }

    #[test]
    fn outsphere_point_in_random_direction_is_not_pure_at_d3() {
        // radius alone does not make a pure state for d > 2
        let basis = GgmBasis::new(3).unwrap();
        let sc = StructureConstants::compute(&basis).unwrap();
        let mut rng = sample::rng_from_seed(25);
        let target = (1.0f64 / 3.0).sqrt();
        let mut rejected = 0;
        for _ in 0..50 {
            let mut tau = BlochVector::new(
                3,
                (0..8)
                    .map(|_| rand::Rng::gen_range(&mut rng, -1.0..1.0))
                    .collect(),
            )
            .unwrap();
            let r = tau.radius();
            for t in &mut tau.tau {
                *t *= target / r;
            }
            let on_surface_and_pure = pure_surface_check(&tau, &sc, 1e-9);
            let rho = from_bloch(&tau, &basis).unwrap();
            let sq = rho.matmul(&rho).unwrap();
            let idempotent = sq.hs_distance(&rho).unwrap() <= 1e-9;
            assert_eq!(on_surface_and_pure, idempotent);
            if !on_surface_and_pure {
                rejected += 1;
            }
        }
        assert!(rejected > 0, "every random outsphere direction was pure");
    }

    #[test]
    fn ball_point_examples() {
        assert!(qubit_ball_check(&QubitBallPoint {
            a: 0.5,
            alpha: 0.0,
            beta: 0.0
        }));
        assert!(qubit_ball_check(&QubitBallPoint {
            a: 1.0,
            alpha: 0.0,
            beta: 0.0
        }));
        assert!(!qubit_ball_check(&QubitBallPoint {
            a: 0.5,
            alpha: 0.4,
            beta: 0.4
        }));
    }

    #[test]
    fn ball_check_equals_matrix_positivity() {
        let mut rng = sample::rng_from_seed(26);
        for _ in 0..2000 {
            let p = QubitBallPoint {
                a: rand::Rng::gen_range(&mut rng, -0.25..1.25),
                alpha: rand::Rng::gen_range(&mut rng, -0.75..0.75),
                beta: rand::Rng::gen_range(&mut rng, -0.75..0.75),
            };
            let psd = is_positive_semidefinite(&p.to_matrix(), 1e-10).unwrap();
            assert_eq!(qubit_ball_check(&p), psd, "{p:?}");
        }
    }

    #[test]
    fn spin_expectation_examples() {
        let up = DensityMatrix::new_default(ComplexMatrix::diag(&[1.0, 0.0])).unwrap();
        let (jx, jy, jz) = spin_expectations(&up).unwrap();
        assert!(jx.abs() < 1e-15 && jy.abs() < 1e-15);
        assert!((jz - 0.5).abs() < 1e-15);

        let mixed = DensityMatrix::maximally_mixed(2);
        let (jx, jy, jz) = spin_expectations(&mixed).unwrap();
        assert!(jx.abs() < 1e-15 && jy.abs() < 1e-15 && jz.abs() < 1e-15);

        assert!(spin_expectations(&DensityMatrix::maximally_mixed(3)).is_err());
    }

    #[test]
    fn pure_qubit_spin_vector_has_length_half() {
        let mut rng = sample::rng_from_seed(27);
        for _ in 0..500 {
            let rho = DensityMatrix::new(sample::random_pure_projector(2, &mut rng), 1e-9).unwrap();
            let (jx, jy, jz) = spin_expectations(&rho).unwrap();
            assert!((jx * jx + jy * jy + jz * jz - 0.25).abs() <= 1e-12);
        }
    }

    #[test]
    fn ball_parameterization_matches_spin_expectations() {
        let mut rng = sample::rng_from_seed(28);
        for _ in 0..200 {
            let p = QubitBallPoint {
                a: rand::Rng::gen_range(&mut rng, 0.2..0.8),
                alpha: rand::Rng::gen_range(&mut rng, -0.2..0.2),
                beta: rand::Rng::gen_range(&mut rng, -0.2..0.2),
            };
            if !qubit_ball_check(&p) {
                continue;
            }
            let rho = DensityMatrix::new(p.to_matrix(), 1e-9).unwrap();
            let (jx, jy, jz) = spin_expectations(&rho).unwrap();
            assert!((jx - p.alpha).abs() < 1e-14);
            assert!((jy - p.beta).abs() < 1e-14);
            assert!((jz - (p.a - 0.5)).abs() < 1e-14);
        }
    }

    #[test]
    fn validation_report_sanity_on_reconstructed() {
        let basis = GgmBasis::new(3).unwrap();
        let tau = BlochVector::zero(3);
        let m = from_bloch(&tau, &basis).unwrap();
        let report = validate(&m, 1e-10).unwrap();
        assert!(report.is_valid());
    }
}
