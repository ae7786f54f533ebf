use thiserror::Error;

/// Maximum polynomial degree carried by the polynomial-Gaussian algebra.
pub const DEGREE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("polynomial degree {degree} exceeds the cap of {cap}")]
    DegreeOverflow { degree: usize, cap: usize },

    #[error("integral diverges: {0}")]
    NotIntegrable(String),

    #[error("exponent mismatch: cannot add Gaussians with different exponents")]
    ExponentMismatch,

    #[error("operator order {order} exceeds the supported maximum of 2")]
    OrderExceeded { order: u32 },

    #[error("operators carry different semiclassical parameters ({0} vs {1})")]
    ParameterMismatch(f64, f64),

    #[error("function leaves the weighted space: {0}")]
    Membership(String),

    #[error("quadrature truncation bound {bound:.3e} exceeds tolerance {tolerance:.3e}")]
    Truncation { bound: f64, tolerance: f64 },

    #[error("adaptive quadrature failed to converge (error estimate {estimate:.3e})")]
    NoConvergence { estimate: f64 },

    #[error("degenerate ellipse parameters: (alpha, beta) = (1, 0) is the circular case")]
    Degenerate,
}

pub type Result<T> = std::result::Result<T, Error>;
