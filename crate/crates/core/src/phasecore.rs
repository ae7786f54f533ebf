//! Quadratic phase functions `φ(z,x) = Az²/2 + Bzx + Cx²/2` and the
//! weights, kernels and canonical maps derived from them.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussalg::QuadraticWeight;

/// Phase coefficients and the semiclassical parameter. Serialized as
/// `{"A":[re,im],"B":[re,im],"C":[re,im],"h":x}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct PhaseParams {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    h: f64,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    #[serde(rename = "A")]
    a: Complex64,
    #[serde(rename = "B")]
    b: Complex64,
    #[serde(rename = "C")]
    c: Complex64,
    h: f64,
}

impl TryFrom<RawParams> for PhaseParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        PhaseParams::new(raw.a, raw.b, raw.c, raw.h)
    }
}

impl From<PhaseParams> for RawParams {
    fn from(p: PhaseParams) -> Self {
        RawParams { a: p.a, b: p.b, c: p.c, h: p.h }
    }
}

/// `A = -iB²/(2 Im C)`, the choice that makes the weight radial in `Bz`.
pub fn canonical_a(b: Complex64, c: Complex64) -> Result<Complex64> {
    check_bc(b, c)?;
    Ok(Complex64::new(0.0, -1.0) * b * b / (2.0 * c.im))
}

fn check_bc(b: Complex64, c: Complex64) -> Result<()> {
    if b == Complex64::new(0.0, 0.0) || !b.is_finite() {
        return Err(Error::Domain(format!("B must be a nonzero finite number, got {b}")));
    }
    if !(c.im > 0.0) || !c.is_finite() {
        return Err(Error::Domain(format!("Im C must be positive, got C = {c}")));
    }
    Ok(())
}

impl PhaseParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, h: f64) -> Result<Self> {
        check_bc(b, c)?;
        if !a.is_finite() {
            return Err(Error::Domain(format!("A must be finite, got {a}")));
        }
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::Domain(format!("h must be positive, got {h}")));
        }
        Ok(Self { a, b, c, h })
    }

    /// `(A, B, C) = (i/2, -i, i)`: the classic Bargmann transform.
    pub fn classic(h: f64) -> Result<Self> {
        Self::new(Complex64::new(0.0, 0.5), Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0), h)
    }

    /// Parameters with `A` replaced by [`canonical_a`].
    pub fn canonical(b: Complex64, c: Complex64, h: f64) -> Result<Self> {
        Self::new(canonical_a(b, c)?, b, c, h)
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn with_a(&self, a: Complex64) -> Result<Self> {
        Self::new(a, self.b, self.c, self.h)
    }

    pub fn is_canonical(&self, tol: f64) -> bool {
        canonical_a(self.b, self.c).is_ok_and(|a| (a - self.a).norm() <= tol)
    }

    /// `φ(z, x)`.
    pub fn phase(&self, z: Complex64, x: Complex64) -> Complex64 {
        0.5 * self.a * z * z + self.b * z * x + 0.5 * self.c * x * x
    }

    /// Transform normalization `2^{-1/2} π^{-3/4} |B| (Im C)^{-1/4}`.
    pub fn c_phi(&self) -> f64 {
        std::f64::consts::FRAC_1_SQRT_2 * PI.powf(-0.75) * self.b.norm() * self.c.im.powf(-0.25)
    }

    /// Projector normalization `|B|² / (2π Im C)`.
    pub fn c_big_phi(&self) -> f64 {
        self.b.norm_sqr() / (2.0 * PI * self.c.im)
    }

    /// `Φ(z) = |Bz|²/(4 Im C) - Re{(Bz)²/(4 Im C) + Az²/(2i)}` as `a|z|² + Re(b z²)`.
    pub fn weight(&self) -> QuadraticWeight {
        let im_c = self.c.im;
        QuadraticWeight {
            a: self.b.norm_sqr() / (4.0 * im_c),
            b: -(self.b * self.b / (4.0 * im_c) + self.a / Complex64::new(0.0, 2.0)),
            h: self.h,
        }
    }

    pub fn weight_phi(&self, z: Complex64) -> f64 {
        self.weight().eval(z)
    }

    /// `(2/i) ∂Φ/∂z`, the momentum coordinate of the graph of the weight.
    pub fn graph_momentum(&self, z: Complex64) -> Complex64 {
        let w = self.weight();
        Complex64::new(0.0, -2.0) * (w.a * z.conj() + w.b * z)
    }

    /// Coefficients `(k_zz, k_zζ, k_ζζ)` of the holomorphic quadratic
    /// `Ψ(z, ζ) = k_zz z² + k_zζ zζ + k_ζζ ζ²`.
    ///
    /// `Ψ` is the critical value over complex `X` of
    /// `-(φ(z,X) - conj φ(conj ζ, conj X))/(2i)`; the critical point is
    /// `X = (B̄ζ - Bz)/(2i Im C)`.
    pub fn kernel_coeffs(&self) -> (Complex64, Complex64, Complex64) {
        let im_c = self.c.im;
        let i = Complex64::new(0.0, 1.0);
        let kzz = i * self.a / 4.0 - self.b * self.b / (8.0 * im_c);
        let kzw = Complex64::new(self.b.norm_sqr() / (4.0 * im_c), 0.0);
        let kww = -i * self.a.conj() / 4.0 - self.b.conj() * self.b.conj() / (8.0 * im_c);
        (kzz, kzw, kww)
    }

    /// `Ψ(z, ζ)`; `Ψ(z, conj z) = Φ(z)`.
    pub fn kernel_psi(&self, z: Complex64, zeta: Complex64) -> Complex64 {
        let (kzz, kzw, kww) = self.kernel_coeffs();
        kzz * z * z + kzw * z * zeta + kww * zeta * zeta
    }

    /// `κ(x, ξ) = (-(Cx + ξ)/B, Bx - A(Cx + ξ)/B)`.
    pub fn kappa_map(&self, x: f64, xi: f64) -> (Complex64, Complex64) {
        let s = (self.c * x + xi) / self.b;
        (-s, self.b * x - self.a * s)
    }
}

/// Free-function form of [`PhaseParams::weight_phi`].
pub fn weight_phi(p: &PhaseParams, z: Complex64) -> f64 {
    p.weight_phi(z)
}

/// Free-function form of [`PhaseParams::kernel_psi`].
pub fn kernel_psi(p: &PhaseParams, z: Complex64, zeta: Complex64) -> Complex64 {
    p.kernel_psi(z, zeta)
}

/// Free-function form of [`PhaseParams::kappa_map`].
pub fn kappa_map(p: &PhaseParams, x: f64, xi: f64) -> (Complex64, Complex64) {
    p.kappa_map(x, xi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn canonical_a_examples() {
        assert!((canonical_a(c(0.0, -1.0), c(0.0, 1.0)).unwrap() - c(0.0, 0.5)).norm() < 1e-15);
        assert!((canonical_a(c(1.0, 0.0), c(0.0, 1.0)).unwrap() - c(0.0, -0.5)).norm() < 1e-15);
        assert!(canonical_a(c(0.0, 0.0), c(0.0, 1.0)).is_err());
        assert!(canonical_a(c(1.0, 0.0), c(1.0, -0.1)).is_err());
    }

    #[test]
    fn classic_weight_and_kernel() {
        let p = PhaseParams::classic(1.0).unwrap();
        assert!((p.weight_phi(c(1.0, 1.0)) - 0.5).abs() < 1e-15);
        assert_eq!(p.weight_phi(c(0.0, 0.0)), 0.0);
        let (kzz, kzw, kww) = p.kernel_coeffs();
        assert!(kzz.norm() < 1e-16 && kww.norm() < 1e-16);
        assert!((kzw - c(0.25, 0.0)).norm() < 1e-16);
    }

    #[test]
    fn classic_kappa() {
        let p = PhaseParams::classic(1.0).unwrap();
        let (z, _) = p.kappa_map(1.0, 2.0);
        assert!((z - c(1.0, -2.0)).norm() < 1e-15);
        assert_eq!(p.kappa_map(0.0, 0.0), (c(0.0, 0.0), c(0.0, 0.0)));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let p = PhaseParams::new(c(0.1, 0.2), c(3.0, 0.0), c(1.0, 2.0), 0.5).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"A":[0.1,0.2],"B":[3.0,0.0],"C":[1.0,2.0],"h":0.5}"#);
        let back: PhaseParams = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        let bad = r#"{"A":[0,0],"B":[1,0],"C":[1,-1],"h":1}"#;
        assert!(serde_json::from_str::<PhaseParams>(bad).is_err());
    }
}
