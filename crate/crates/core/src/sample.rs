//! Seeded random generation of matrices and region points.
//!
//! Every sampler takes an explicit RNG so callers control the stream; the
//! crate standardizes on ChaCha8 because its output is stable across
//! platforms and versions, which the determinism contracts depend on.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::ComplexMatrix;

/// Deterministic RNG from a 64-bit seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

fn standard_complex_normal(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Random Hermitian matrix: standard complex normal entries, symmetrized.
pub fn random_hermitian(dim: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let raw = ComplexMatrix::from_fn(dim, |_, _| standard_complex_normal(rng));
    raw.hermitian_part()
}

/// Random Hermitian matrix shifted to unit trace.
///
/// Positivity is deliberately not enforced; these samples probe both sides
/// of the constraint boundary.
pub fn random_hermitian_unit_trace(dim: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let h = random_hermitian(dim, rng);
    let shift = (1.0 - h.trace().re) / dim as f64;
    let mut out = h;
    for i in 0..dim {
        let v = out.get(i, i);
        out.set(i, i, Complex64::new(v.re + shift, 0.0));
    }
    out
}

/// Random rank-1 projector |psi><psi| from a normalized complex Gaussian
/// vector (Haar-uniform over pure states).
pub fn random_pure_projector(dim: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let mut psi: Vec<Complex64> = (0..dim).map(|_| standard_complex_normal(rng)).collect();
    let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut psi {
        *z /= norm;
    }
    ComplexMatrix::from_fn(dim, |i, j| psi[i] * psi[j].conj())
}

/// Uniform point on the probability 3-simplex via normalized exponential
/// spacings.
pub fn random_simplex3(rng: &mut ChaCha8Rng) -> (f64, f64, f64) {
    let mut draw = || -> f64 {
        // -ln(U) with U in (0, 1]
        let u: f64 = rng.gen::<f64>();
        -(1.0 - u).ln()
    };
    let (e1, e2, e3) = (draw(), draw(), draw());
    let total = e1 + e2 + e3;
    (e1 / total, e2 / total, e3 / total)
}

/// Uniform point in the complex disc of the given radius
/// (uniform angle, sqrt-uniform radius).
pub fn random_disc(radius: f64, rng: &mut ChaCha8Rng) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    let angle = 2.0 * std::f64::consts::PI * rng.gen::<f64>();
    Complex64::from_polar(r, angle)
}
