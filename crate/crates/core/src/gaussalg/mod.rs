//! Exact algebra of complex polynomial-times-Gaussian functions.
//!
//! [`PolyGauss`] lives on the real line, [`HoloGauss`] on the complex plane.
//! Both are closed under the differential operators used throughout the
//! crate, and their integrals have closed forms.

mod diffop;
mod extended;
mod holo;
mod integral;
mod poly;
mod polygauss;

pub use diffop::{apply_diffop, DiffOp};
pub(crate) use extended::{dd, dd_re, ExtPolyGauss};
pub use holo::{HoloGauss, QuadraticWeight};
pub use integral::{
    central_moments, gauss_integral, gaussian_moment, gaussian_rule_integral, partial_gaussian_integral,
    poly_gaussian_integral, ZGaussian,
};
pub use poly::ComplexPoly;
pub use polygauss::{distance_line, inner_product_line, norm_line, PolyGauss};
