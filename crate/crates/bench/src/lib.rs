//! Shared inputs for the benchmarks.

use bargmann_lab::hermite::HermiteSystem;
use num_complex::Complex64;

/// A non-classic generalized Hermite system, `(B, C, h) = (3, 1 + 2i, 1/2)`.
pub fn skewed_system() -> HermiteSystem {
    HermiteSystem::from_bc(Complex64::new(3.0, 0.0), Complex64::new(1.0, 2.0), 0.5)
        .expect("valid parameters")
}

/// Evenly spaced sample points on a segment of the complex plane.
pub fn sample_points(count: usize, from: Complex64, to: Complex64) -> Vec<Complex64> {
    let span = to - from;
    (0..count)
        .map(|k| from + span * (k as f64 / (count.max(2) - 1) as f64))
        .collect()
}
