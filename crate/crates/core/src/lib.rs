//! Bargmann-type transforms and the orthonormal systems they generate.
//!
//! The crate works on an exact function algebra: every eigenfunction is a
//! polynomial times a complex Gaussian, so eigen-relations, ladder identities
//! and inner products are evaluated in closed form. Quadrature on the line
//! and on the plane is kept as an independent check.
//!
//! * [`gaussalg`]: polynomial-Gaussian functions, differential operators, Gaussian integrals.
//! * [`phasecore`]: quadratic phase data, weights, kernels and the canonical transform.
//! * [`bargmann`]: the transform, its adjoint and the Bergman-type projector.
//! * [`hermite`]: generalized Hermite functions and the modified oscillator.
//! * [`ncho`]: the commutative non-commutative harmonic oscillator.
//! * [`ellipse`]: the family attached to ellipses in the phase plane.
//! * [`toeplitz`]: localization operators with radial symbols.

pub mod bargmann;
pub mod ellipse;
mod error;
pub mod gaussalg;
pub mod hermite;
pub mod ncho;
pub mod phasecore;
pub mod quad;
pub mod toeplitz;

pub use error::{Error, Result, DEGREE_CAP};
pub use gaussalg::{ComplexPoly, DiffOp, HoloGauss, PolyGauss, QuadraticWeight};
pub use num_complex::Complex64;
pub use phasecore::PhaseParams;
pub use quad::{GridFunction, GridKind, QuadGrid};

/// Tolerance for identities of the exact algebra.
pub const TOL_EXACT: f64 = 1e-12;
/// Tolerance for closed forms checked against one-dimensional quadrature.
pub const TOL_QUAD_1D: f64 = 1e-8;
/// Tolerance for claims checked by two-dimensional quadrature.
pub const TOL_QUAD_2D: f64 = 1e-6;
