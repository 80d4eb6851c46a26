//! Projected gradient descent over Bloch vectors.
//!
//! The feasible set is the image of the density-matrix body in tau
//! coordinates, where the Hilbert-Schmidt metric is Euclidean. Each step
//! moves against the objective gradient and then projects back onto the
//! feasible set, so every recorded iterate is a physical state.
//!
//! The projection eigendecomposes the (Hermitian, unit-trace) candidate and
//! replaces its spectrum with the closest point of the probability simplex.
//! That is the exact metric projection onto the feasible set, it reduces to
//! radial shrinking onto the ball for qubits, and it makes the descent
//! monotone for linear objectives at any step size. Merely clipping negative
//! eigenvalues and renormalizing the trace is not a projection in the metric
//! sense and stalls short of the optimum in dimension three and above.

use num_complex::Complex64;

use crate::bloch::{from_bloch, matrix_to_bloch, BlochVector};
use crate::density::validate;
use crate::eigen::hermitian_eigen;
use crate::error::{Error, Result};
use crate::ggm::GgmBasis;
use crate::matrix::ComplexMatrix;
use crate::sample;

/// Tolerance at which every trajectory iterate must validate.
pub const FEASIBILITY_TOL: f64 = 1e-9;

/// Objective function over states.
pub struct Objective {
    d: usize,
    kind: ObjectiveKind,
}

enum ObjectiveKind {
    /// Expectation value Tr(rho H) of a Hermitian observable.
    Linear(ComplexMatrix),
    /// Arbitrary real function of the state matrix.
    Custom(Box<dyn Fn(&ComplexMatrix) -> f64>),
}

impl std::fmt::Debug for Objective {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match self.kind {
            ObjectiveKind::Linear(_) => "linear-observable",
            ObjectiveKind::Custom(_) => "custom",
        };
        write!(out, "Objective {{ d: {}, kind: {} }}", self.d, kind)
    }
}

impl Objective {
    /// Tr(rho H) for a Hermitian observable H.
    pub fn linear(observable: ComplexMatrix, tol: f64) -> Result<Self> {
        let dev = observable.hermiticity_deviation();
        if dev > tol {
            return Err(Error::NotHermitian {
                deviation: dev,
                tol,
            });
        }
        Ok(Self {
            d: observable.dim(),
            kind: ObjectiveKind::Linear(observable),
        })
    }

    /// Arbitrary objective; must be defined on Hermitian unit-trace matrices
    /// in a neighborhood of the feasible set (finite differences step
    /// slightly outside it).
    pub fn custom(d: usize, eval: impl Fn(&ComplexMatrix) -> f64 + 'static) -> Self {
        Self {
            d,
            kind: ObjectiveKind::Custom(Box::new(eval)),
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// The observable of a linear objective, if that is what this is.
    pub fn observable(&self) -> Option<&ComplexMatrix> {
        match &self.kind {
            ObjectiveKind::Linear(h) => Some(h),
            ObjectiveKind::Custom(_) => None,
        }
    }

    pub fn evaluate(&self, state: &ComplexMatrix) -> Result<f64> {
        if state.dim() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: state.dim(),
            });
        }
        match &self.kind {
            ObjectiveKind::Linear(h) => Ok(state.trace_product(h)?.re),
            ObjectiveKind::Custom(eval) => Ok(eval(state)),
        }
    }
}

/// Optimizer settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptConfig {
    pub step_size: f64,
    pub max_iters: usize,
    /// Convergence threshold on the gradient norm and the projected-step
    /// displacement (the latter scaled by the step size).
    pub grad_tol: f64,
    /// Central finite-difference spacing for custom objectives.
    pub fd_step: f64,
    /// Seed for random initialization helpers; the descent itself is
    /// deterministic.
    pub seed: u64,
}

impl Default for OptConfig {
    fn default() -> Self {
        Self {
            step_size: 0.05,
            max_iters: 20_000,
            grad_tol: 1e-9,
            fd_step: 1e-5,
            seed: 0,
        }
    }
}

impl OptConfig {
    fn check(&self) -> Result<()> {
        if self.step_size <= 0.0 || self.grad_tol <= 0.0 || self.fd_step <= 0.0 {
            return Err(Error::domain(
                "step_size, grad_tol, and fd_step must all be positive",
            ));
        }
        if self.max_iters == 0 {
            return Err(Error::domain("max_iters must be positive"));
        }
        Ok(())
    }
}

/// One recorded optimizer state.
#[derive(Debug, Clone, PartialEq)]
pub struct Iterate {
    pub tau: BlochVector,
    pub objective_value: f64,
    /// Whether the projection actually moved the raw gradient step back
    /// onto the feasible set to produce this iterate.
    pub projected: bool,
}

/// A full descent trace; every iterate is a physical state.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub iterates: Vec<Iterate>,
    pub converged: bool,
}

impl Trajectory {
    pub fn final_iterate(&self) -> &Iterate {
        self.iterates.last().expect("trajectory is never empty")
    }
}

/// Projects a Bloch vector onto the physical region.
///
/// Already-feasible input comes back unchanged; otherwise the spectrum of
/// the reconstructed matrix is replaced by its nearest probability vector
/// and the matrix is rebuilt in the same eigenbasis. The output always
/// yields a valid density matrix.
pub fn project_physical(tau: &BlochVector, basis: &GgmBasis) -> Result<BlochVector> {
    Ok(project_with_flag(tau, basis)?.0)
}

fn project_with_flag(tau: &BlochVector, basis: &GgmBasis) -> Result<(BlochVector, bool)> {
    let m = from_bloch(tau, basis)?;
    let eig = hermitian_eigen(&m);
    if eig.values[0] >= 0.0 {
        return Ok((tau.clone(), false));
    }
    let spectrum = project_simplex(&eig.values);
    let n = m.dim();
    let v = &eig.vectors;
    let rebuilt = ComplexMatrix::from_fn(n, |i, j| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, p) in spectrum.iter().enumerate() {
            if *p > 0.0 {
                acc += v.get(i, k) * v.get(j, k).conj() * *p;
            }
        }
        acc
    });
    Ok((matrix_to_bloch(&rebuilt, basis)?, true))
}

/// Euclidean projection onto the probability simplex.
///
/// The input sums to 1 already (unit trace), but the formula handles any
/// real vector: subtract the uniform shift that makes the positive part sum
/// to one, then clip.
fn project_simplex(values: &[f64]) -> Vec<f64> {
    let mut desc = values.to_vec();
    desc.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut shift = 0.0;
    for (k, v) in desc.iter().enumerate() {
        cumulative += v;
        let candidate = (cumulative - 1.0) / (k as f64 + 1.0);
        if v - candidate > 0.0 {
            shift = candidate;
        } else {
            break;
        }
    }
    values.iter().map(|v| (v - shift).max(0.0)).collect()
}

/// Objective gradient in tau coordinates.
///
/// Linear objectives have the exact gradient Tr(L_i H); custom objectives
/// fall back to central finite differences with the given spacing.
pub fn gradient(
    obj: &Objective,
    tau: &BlochVector,
    basis: &GgmBasis,
    fd_step: f64,
) -> Result<Vec<f64>> {
    if obj.dim() != basis.d() {
        return Err(Error::DimensionMismatch {
            expected: basis.d(),
            found: obj.dim(),
        });
    }
    match &obj.kind {
        ObjectiveKind::Linear(h) => basis
            .elements()
            .iter()
            .map(|el| Ok(el.trace_product(h)?.re))
            .collect(),
        ObjectiveKind::Custom(_) => {
            let mut grad = Vec::with_capacity(tau.tau.len());
            let mut probe = tau.clone();
            for i in 0..tau.tau.len() {
                let center = tau.tau[i];
                probe.tau[i] = center + fd_step;
                let plus = obj.evaluate(&from_bloch(&probe, basis)?)?;
                probe.tau[i] = center - fd_step;
                let minus = obj.evaluate(&from_bloch(&probe, basis)?)?;
                probe.tau[i] = center;
                grad.push((plus - minus) / (2.0 * fd_step));
            }
            Ok(grad)
        }
    }
}

/// Runs projected gradient descent from a physical starting point.
///
/// Stops when the gradient norm or the projected-step displacement (scaled
/// by the step size) falls below `grad_tol`, or after `max_iters` steps.
/// The displacement criterion is the one that matters on the boundary,
/// where the raw gradient need not vanish at the constrained optimum.
pub fn optimize(
    obj: &Objective,
    tau0: &BlochVector,
    cfg: &OptConfig,
    basis: &GgmBasis,
) -> Result<Trajectory> {
    cfg.check()?;
    if obj.dim() != basis.d() || tau0.d != basis.d() {
        return Err(Error::DimensionMismatch {
            expected: basis.d(),
            found: if obj.dim() != basis.d() {
                obj.dim()
            } else {
                tau0.d
            },
        });
    }
    let start = from_bloch(tau0, basis)?;
    let report = validate(&start, FEASIBILITY_TOL)?;
    if !report.is_valid() {
        return Err(Error::InvalidDensityMatrix {
            reasons: format!(
                "starting point is not physical: {}",
                report.violations.join("; ")
            ),
        });
    }

    let mut iterates = Vec::new();
    let mut converged = false;
    let mut tau = tau0.clone();
    let mut projected = false;

    for _ in 0..cfg.max_iters {
        let state = from_bloch(&tau, basis)?;
        iterates.push(Iterate {
            tau: tau.clone(),
            objective_value: obj.evaluate(&state)?,
            projected,
        });

        let grad = gradient(obj, &tau, basis, cfg.fd_step)?;
        let grad_norm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        if grad_norm <= cfg.grad_tol {
            converged = true;
            break;
        }

        let raw = BlochVector {
            d: tau.d,
            tau: tau
                .tau
                .iter()
                .zip(&grad)
                .map(|(t, g)| t - cfg.step_size * g)
                .collect(),
        };
        let (next, was_projected) = project_with_flag(&raw, basis)?;
        let displacement = next
            .tau
            .iter()
            .zip(&tau.tau)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        tau = next;
        projected = was_projected;

        if displacement <= cfg.grad_tol * cfg.step_size {
            let state = from_bloch(&tau, basis)?;
            iterates.push(Iterate {
                tau: tau.clone(),
                objective_value: obj.evaluate(&state)?,
                projected,
            });
            converged = true;
            break;
        }
    }

    if !converged {
        // record the point max_iters left us at
        let state = from_bloch(&tau, basis)?;
        iterates.push(Iterate {
            tau: tau.clone(),
            objective_value: obj.evaluate(&state)?,
            projected,
        });
    }

    Ok(Trajectory {
        iterates,
        converged,
    })
}

/// Plain gradient descent with the projection switched off, for comparing
/// constrained against unconstrained search on the same objective.
///
/// Iterates are NOT kept physical: on a linear objective the walk leaves
/// the state body and never stops descending, which is exactly the failure
/// mode the projected method exists to prevent. Same stopping rules as
/// [`optimize`] minus the displacement criterion.
pub fn descend_unprojected(
    obj: &Objective,
    tau0: &BlochVector,
    cfg: &OptConfig,
    basis: &GgmBasis,
) -> Result<Trajectory> {
    cfg.check()?;
    if obj.dim() != basis.d() || tau0.d != basis.d() {
        return Err(Error::DimensionMismatch {
            expected: basis.d(),
            found: if obj.dim() != basis.d() {
                obj.dim()
            } else {
                tau0.d
            },
        });
    }

    let mut iterates = Vec::new();
    let mut converged = false;
    let mut tau = tau0.clone();

    for _ in 0..cfg.max_iters {
        let state = from_bloch(&tau, basis)?;
        iterates.push(Iterate {
            tau: tau.clone(),
            objective_value: obj.evaluate(&state)?,
            projected: false,
        });

        let grad = gradient(obj, &tau, basis, cfg.fd_step)?;
        let grad_norm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        if grad_norm <= cfg.grad_tol {
            converged = true;
            break;
        }
        for (t, g) in tau.tau.iter_mut().zip(&grad) {
            *t -= cfg.step_size * g;
        }
    }

    if !converged {
        let state = from_bloch(&tau, basis)?;
        iterates.push(Iterate {
            tau: tau.clone(),
            objective_value: obj.evaluate(&state)?,
            projected: false,
        });
    }

    Ok(Trajectory {
        iterates,
        converged,
    })
}

/// Random Bloch vector uniform in the insphere of radius
/// sqrt(1/(2d(d-1))); every such point is physical, so it makes a feasible
/// start without a projection call.
pub fn random_insphere_tau(d: usize, seed: u64) -> BlochVector {
    use rand::Rng;
    use rand_distr::StandardNormal;
    let m = d * d - 1;
    let mut rng = sample::rng_from_seed(seed);
    let mut direction: Vec<f64> = (0..m).map(|_| rng.sample(StandardNormal)).collect();
    let norm = direction.iter().map(|x| x * x).sum::<f64>().sqrt();
    let insphere = (1.0 / (2.0 * d as f64 * (d as f64 - 1.0))).sqrt();
    let radius = insphere * rng.gen::<f64>().powf(1.0 / m as f64);
    for x in &mut direction {
        *x *= radius / norm;
    }
    BlochVector { d, tau: direction }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::hermitian_eigenvalues;
    use crate::ggm::GgmBasis;

    fn z_observable() -> ComplexMatrix {
        ComplexMatrix::diag(&[1.0, -1.0])
    }

    #[test]
    fn linear_objective_rejects_non_hermitian() {
        let m = ComplexMatrix::from_fn(2, |i, j| Complex64::new((i + 2 * j) as f64, 1.0));
        assert!(Objective::linear(m, 1e-10).is_err());
    }

    #[test]
    fn gradient_of_z_observable() {
        let basis = GgmBasis::new(2).unwrap();
        let obj = Objective::linear(z_observable(), 1e-10).unwrap();
        let tau = BlochVector::zero(2);
        let grad = gradient(&obj, &tau, &basis, 1e-5).unwrap();
        assert!(grad[0].abs() < 1e-15);
        assert!(grad[1].abs() < 1e-15);
        assert!((grad[2] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn finite_difference_matches_analytic_gradient() {
        let mut rng = sample::rng_from_seed(41);
        let basis = GgmBasis::new(3).unwrap();
        for _ in 0..20 {
            let h = sample::random_hermitian(3, &mut rng);
            let analytic_obj = Objective::linear(h.clone(), 1e-10).unwrap();
            let fd_obj = Objective::custom(3, move |m| m.trace_product(&h).unwrap().re);
            let tau = random_insphere_tau(3, rand::Rng::gen(&mut rng));
            let analytic = gradient(&analytic_obj, &tau, &basis, 1e-5).unwrap();
            let numeric = gradient(&fd_obj, &tau, &basis, 1e-5).unwrap();
            for (a, n) in analytic.iter().zip(&numeric) {
                assert!((a - n).abs() <= 1e-6, "{a} vs {n}");
            }
        }
    }

    #[test]
    fn projection_leaves_feasible_points_alone() {
        let basis = GgmBasis::new(2).unwrap();
        let tau = BlochVector::new(2, vec![0.1, -0.2, 0.3]).unwrap();
        assert!(tau.radius() <= 0.5);
        let projected = project_physical(&tau, &basis).unwrap();
        assert_eq!(projected, tau);
    }

    #[test]
    fn projection_of_unit_z_hits_the_pole() {
        let basis = GgmBasis::new(2).unwrap();
        let tau = BlochVector::new(2, vec![0.0, 0.0, 1.0]).unwrap();
        let projected = project_physical(&tau, &basis).unwrap();
        assert!(projected.tau[0].abs() < 1e-14);
        assert!(projected.tau[1].abs() < 1e-14);
        assert!((projected.tau[2] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn projection_is_idempotent() {
        let basis = GgmBasis::new(3).unwrap();
        let mut rng = sample::rng_from_seed(42);
        for _ in 0..100 {
            let tau = BlochVector::new(
                3,
                (0..8)
                    .map(|_| rand::Rng::gen_range(&mut rng, -1.0..1.0))
                    .collect(),
            )
            .unwrap();
            let once = project_physical(&tau, &basis).unwrap();
            let twice = project_physical(&once, &basis).unwrap();
            let drift = once
                .tau
                .iter()
                .zip(&twice.tau)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0_f64, f64::max);
            assert!(drift <= 1e-12);
        }
    }

    #[test]
    fn qubit_projection_is_radial() {
        let basis = GgmBasis::new(2).unwrap();
        let mut rng = sample::rng_from_seed(43);
        for _ in 0..200 {
            let tau = BlochVector::new(
                2,
                (0..3)
                    .map(|_| rand::Rng::gen_range(&mut rng, -1.5..1.5))
                    .collect(),
            )
            .unwrap();
            let r = tau.radius();
            if r <= 0.5 {
                continue;
            }
            let projected = project_physical(&tau, &basis).unwrap();
            for (p, t) in projected.tau.iter().zip(&tau.tau) {
                assert!((p - t * 0.5 / r).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn projection_output_always_validates() {
        let basis = GgmBasis::new(3).unwrap();
        let mut rng = sample::rng_from_seed(44);
        for _ in 0..200 {
            let tau = BlochVector::new(
                3,
                (0..8)
                    .map(|_| rand::Rng::gen_range(&mut rng, -2.0..2.0))
                    .collect(),
            )
            .unwrap();
            let projected = project_physical(&tau, &basis).unwrap();
            let m = from_bloch(&projected, &basis).unwrap();
            assert!(validate(&m, FEASIBILITY_TOL).unwrap().is_valid());
        }
    }

    #[test]
    fn descends_to_the_south_pole_for_z() {
        let basis = GgmBasis::new(2).unwrap();
        let obj = Objective::linear(z_observable(), 1e-10).unwrap();
        let cfg = OptConfig {
            step_size: 0.05,
            max_iters: 10_000,
            grad_tol: 1e-10,
            ..OptConfig::default()
        };
        let trajectory = optimize(&obj, &BlochVector::zero(2), &cfg, &basis).unwrap();
        assert!(trajectory.converged);
        let last = trajectory.final_iterate();
        assert!((last.objective_value - (-1.0)).abs() <= 1e-6);
        assert!((last.tau.tau[2] - (-0.5)).abs() <= 1e-6);
    }

    #[test]
    fn reaches_the_ground_projector_at_d3() {
        let basis = GgmBasis::new(3).unwrap();
        for diag in [[2.0, 1.0, 0.0], [0.0, 0.1, 2.0]] {
            // the second spectrum is the one a trace-renormalizing clip
            // stalls on; the metric projection must not
            let obj = Objective::linear(ComplexMatrix::diag(&diag), 1e-10).unwrap();
            let cfg = OptConfig {
                step_size: 0.05,
                max_iters: 50_000,
                grad_tol: 1e-10,
                ..OptConfig::default()
            };
            let trajectory = optimize(&obj, &BlochVector::zero(3), &cfg, &basis).unwrap();
            let best = trajectory.final_iterate().objective_value;
            assert!(
                (best - 0.0).abs() <= 1e-6,
                "spectrum {diag:?} converged to {best}"
            );
        }
    }

    #[test]
    fn every_iterate_is_physical() {
        let basis = GgmBasis::new(3).unwrap();
        let mut rng = sample::rng_from_seed(45);
        let h = sample::random_hermitian(3, &mut rng);
        let obj = Objective::linear(h, 1e-10).unwrap();
        let cfg = OptConfig {
            max_iters: 2_000,
            ..OptConfig::default()
        };
        let start = random_insphere_tau(3, 5);
        let trajectory = optimize(&obj, &start, &cfg, &basis).unwrap();
        for it in &trajectory.iterates {
            let m = from_bloch(&it.tau, &basis).unwrap();
            assert!(validate(&m, FEASIBILITY_TOL).unwrap().is_valid());
        }
    }

    #[test]
    fn linear_descent_is_monotone() {
        let mut rng = sample::rng_from_seed(46);
        for d in [2usize, 3] {
            let basis = GgmBasis::new(d).unwrap();
            let h = sample::random_hermitian(d, &mut rng);
            let obj = Objective::linear(h, 1e-10).unwrap();
            let cfg = OptConfig {
                step_size: 0.1,
                max_iters: 3_000,
                ..OptConfig::default()
            };
            let trajectory = optimize(&obj, &BlochVector::zero(d), &cfg, &basis).unwrap();
            for pair in trajectory.iterates.windows(2) {
                assert!(
                    pair[1].objective_value <= pair[0].objective_value + 1e-12,
                    "objective increased at d={d}"
                );
            }
        }
    }

    #[test]
    fn converged_objective_matches_smallest_eigenvalue() {
        let mut rng = sample::rng_from_seed(47);
        for d in [2usize, 3] {
            let basis = GgmBasis::new(d).unwrap();
            for _ in 0..5 {
                let h = sample::random_hermitian(d, &mut rng);
                let lambda_min = hermitian_eigenvalues(&h)[0];
                let obj = Objective::linear(h, 1e-10).unwrap();
                let cfg = OptConfig {
                    step_size: 0.05,
                    max_iters: 100_000,
                    grad_tol: 1e-10,
                    ..OptConfig::default()
                };
                let trajectory = optimize(&obj, &BlochVector::zero(d), &cfg, &basis).unwrap();
                let best = trajectory.final_iterate().objective_value;
                assert!(
                    (best - lambda_min).abs() <= 1e-5,
                    "d={d}: {best} vs {lambda_min}"
                );
            }
        }
    }

    #[test]
    fn constant_objective_converges_immediately() {
        let basis = GgmBasis::new(3).unwrap();
        let obj = Objective::custom(3, |_| 1.0);
        let trajectory =
            optimize(&obj, &BlochVector::zero(3), &OptConfig::default(), &basis).unwrap();
        assert!(trajectory.converged);
        assert_eq!(trajectory.iterates.len(), 1);
        assert_eq!(trajectory.iterates[0].objective_value, 1.0);
    }

    #[test]
    fn unprojected_descent_leaves_the_state_body() {
        let basis = GgmBasis::new(2).unwrap();
        let obj = Objective::linear(z_observable(), 1e-10).unwrap();
        let cfg = OptConfig {
            step_size: 0.05,
            max_iters: 200,
            ..OptConfig::default()
        };
        let free = descend_unprojected(&obj, &BlochVector::zero(2), &cfg, &basis).unwrap();
        let last = free.final_iterate();
        // the unconstrained walk overshoots the physical optimum of -1
        assert!(last.objective_value < -1.0);
        let m = from_bloch(&last.tau, &basis).unwrap();
        assert!(!validate(&m, 1e-9).unwrap().is_valid());

        // the projected run on the same objective stays physical and stops
        // at the true constrained optimum
        let constrained = optimize(&obj, &BlochVector::zero(2), &cfg, &basis).unwrap();
        let best = constrained.final_iterate();
        assert!((best.objective_value - (-1.0)).abs() < 1e-3);
    }

    #[test]
    fn unphysical_start_is_rejected() {
        let basis = GgmBasis::new(2).unwrap();
        let obj = Objective::linear(z_observable(), 1e-10).unwrap();
        let outside = BlochVector::new(2, vec![0.0, 0.0, 1.0]).unwrap();
        assert!(optimize(&obj, &outside, &OptConfig::default(), &basis).is_err());
    }

    #[test]
    fn trajectories_are_deterministic() {
        let basis = GgmBasis::new(3).unwrap();
        let h = ComplexMatrix::diag(&[0.4, -0.3, 0.9]);
        let obj = Objective::linear(h, 1e-10).unwrap();
        let cfg = OptConfig {
            max_iters: 500,
            ..OptConfig::default()
        };
        let start = random_insphere_tau(3, 99);
        let a = optimize(&obj, &start, &cfg, &basis).unwrap();
        let b = optimize(&obj, &start, &cfg, &basis).unwrap();
        assert_eq!(a.iterates.len(), b.iterates.len());
        for (x, y) in a.iterates.iter().zip(&b.iterates) {
            assert_eq!(x.objective_value.to_bits(), y.objective_value.to_bits());
            for (p, q) in x.tau.tau.iter().zip(&y.tau.tau) {
                assert_eq!(p.to_bits(), q.to_bits());
            }
        }
    }

    #[test]
    fn insphere_starts_are_always_physical() {
        for d in [2usize, 3, 4] {
            let basis = GgmBasis::new(d).unwrap();
            for seed in 0..50 {
                let tau = random_insphere_tau(d, seed);
                let m = from_bloch(&tau, &basis).unwrap();
                assert!(validate(&m, 1e-12).unwrap().is_valid());
            }
        }
    }
}
