//! The commutative case `Q_α = (α/2) Op^W(ξ² + x²) + J Op^W(i xξ)` of the
//! non-commutative harmonic oscillator, `J = [[0, -1], [1, 0]]`.
//!
//! Conjugating by `U = [[1, -i], [1, i]]/√2` splits `Q_α` into two modified
//! oscillators `(α/2) Op^W(ξ² + x²) ± Op^W(xξ)`, each of which is the
//! oscillator of a [`HermiteSystem`] with `B = √(2/α) ν_±`, `C = ν_±`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gaussalg::{inner_product_line, DiffOp, PolyGauss};
use crate::hermite::{factorial, HermiteSystem};
use crate::phasecore::PhaseParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NchoParams {
    alpha: f64,
    h: f64,
}

impl NchoParams {
    pub fn new(alpha: f64, h: f64) -> Result<Self> {
        if !(alpha > 1.0) || !alpha.is_finite() {
            return Err(Error::Domain(format!("alpha must exceed 1, got {alpha}")));
        }
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::Domain(format!("h must be positive, got {h}")));
        }
        Ok(Self { alpha, h })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// `ν_± = (±1 + i√(α² - 1))/α`.
    pub fn nu(&self, sign: Sign) -> Complex64 {
        Complex64::new(sign.value(), (self.alpha * self.alpha - 1.0).sqrt()) / self.alpha
    }

    /// `(√(α² - 1)/2) h (2n + 1)`, shared by both signs.
    pub fn eigenvalue(&self, n: usize) -> f64 {
        0.5 * (self.alpha * self.alpha - 1.0).sqrt() * self.h * (2 * n + 1) as f64
    }

    /// Phase data of the scalar oscillator for one sign.
    pub fn bridge(&self, sign: Sign) -> Result<PhaseParams> {
        let nu = self.nu(sign);
        PhaseParams::canonical(nu * (2.0 / self.alpha).sqrt(), nu, self.h)
    }

    pub fn hermite_system(&self, sign: Sign) -> Result<HermiteSystem> {
        HermiteSystem::new(self.bridge(sign)?)
    }

    /// The scalar block `(α/2) Op^W(ξ² + x²) ± Op^W(xξ)`.
    pub fn block(&self, sign: Sign) -> DiffOp {
        let half = Complex64::new(0.5 * self.alpha, 0.0);
        DiffOp::weyl_quadratic(half, half, Complex64::new(sign.value(), 0.0), self.h)
    }
}

/// Free-function form of [`NchoParams::nu`]; fails for `α ≤ 1`.
pub fn nu(alpha: f64, sign: Sign) -> Result<Complex64> {
    Ok(NchoParams::new(alpha, 1.0)?.nu(sign))
}

/// A ℂ²-valued function on the line.
#[derive(Debug, Clone, PartialEq)]
pub struct VecFun2 {
    pub upper: PolyGauss,
    pub lower: PolyGauss,
}

impl VecFun2 {
    pub fn new(upper: PolyGauss, lower: PolyGauss) -> Self {
        Self { upper, lower }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.upper.scale(s), self.lower.scale(s))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(self.upper.try_add(&other.upper)?, self.lower.try_add(&other.lower)?))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn is_zero(&self) -> bool {
        self.upper.is_zero() && self.lower.is_zero()
    }

    /// `U F` with `U = [[1, -i], [1, i]]/√2`; both components must share an exponent.
    pub fn rotate(&self) -> Result<Self> {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let i = Complex64::new(0.0, 1.0);
        Ok(Self::new(
            self.upper.try_sub(&self.lower.scale(i))?.scale(Complex64::new(s, 0.0)),
            self.upper.try_add(&self.lower.scale(i))?.scale(Complex64::new(s, 0.0)),
        ))
    }

    /// `U* F`.
    pub fn unrotate(&self) -> Result<Self> {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let i = Complex64::new(0.0, 1.0);
        Ok(Self::new(
            self.upper.try_add(&self.lower).map(|f| f.scale(Complex64::new(s, 0.0)))?,
            self.upper.try_sub(&self.lower).map(|f| f.scale(i * s))?,
        ))
    }
}

/// Sum of the component inner products.
pub fn inner_product_vec(f: &VecFun2, g: &VecFun2) -> Result<Complex64> {
    Ok(inner_product_line(&f.upper, &g.upper)? + inner_product_line(&f.lower, &g.lower)?)
}

pub fn norm_vec(f: &VecFun2) -> Result<f64> {
    Ok(inner_product_vec(f, f)?.re.max(0.0).sqrt())
}

/// `h_{α,n}` from its own Rodrigues formula:
/// `(√(α²-1)/(πhα))^{1/4} (1/√n!) (-√(α/(2√(α²-1) h)))^n e^{√(α²-1)x²/2αh} (hD)^n e^{-√(α²-1)x²/αh}`.
pub fn h_alpha(p: &NchoParams, n: usize) -> Result<PolyGauss> {
    let (alpha, h) = (p.alpha, p.h);
    let r = (alpha * alpha - 1.0).sqrt();
    let hd = DiffOp::hd(h);
    let mut g = PolyGauss::gaussian(Complex64::new(1.0, 0.0), Complex64::new(-r / (alpha * h), 0.0))?;
    for _ in 0..n {
        g = hd.apply(&g)?;
    }
    let norm = (r / (PI * h * alpha)).powf(0.25) / factorial(n).sqrt()
        * (-(alpha / (2.0 * r * h)).sqrt()).powi(n as i32);
    g.with_poly(g.poly().scale(Complex64::new(norm, 0.0)))
        .mul_exp(Complex64::new(r / (2.0 * alpha * h), 0.0), Complex64::new(0.0, 0.0))
}

/// `Φ_{α,±,n} = h_{α,n} e^{∓ix²/2αh} (1, ±i)/√2`.
pub fn eigenfunction_vec(p: &NchoParams, sign: Sign, n: usize) -> Result<VecFun2> {
    let base = h_alpha(p, n)?
        .mul_exp(Complex64::new(0.0, -sign.value() / (2.0 * p.alpha * p.h)), Complex64::new(0.0, 0.0))?
        .scale(Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0));
    let lower = base.scale(Complex64::new(0.0, sign.value()));
    Ok(VecFun2::new(base, lower))
}

/// `Q_α F = ((α/2)L u - i X l, (α/2)L l + i X u)` with `L = Op^W(ξ² + x²)`,
/// `X = Op^W(xξ)`.
pub fn apply_q(p: &NchoParams, f: &VecFun2) -> Result<VecFun2> {
    let half = Complex64::new(0.5 * p.alpha, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let l = DiffOp::weyl_quadratic(half, half, zero, p.h);
    let x = DiffOp::weyl_quadratic(zero, zero, one, p.h);
    let upper = l.apply(&f.upper)?.try_sub(&x.apply(&f.lower)?.scale(i))?;
    let lower = l.apply(&f.lower)?.try_add(&x.apply(&f.upper)?.scale(i))?;
    Ok(VecFun2::new(upper, lower))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub sign: Sign,
    pub n: usize,
    pub lambda: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub alpha: f64,
    pub h: f64,
    pub entries: Vec<SpectrumEntry>,
}

/// Residuals `‖Q Φ - λ Φ‖/‖Φ‖` for `n < count` and both signs.
pub fn spectrum_check(p: &NchoParams, count: usize) -> Result<SpectrumReport> {
    if count == 0 {
        return Err(Error::Domain("spectrum check needs at least one level".into()));
    }
    let mut entries = Vec::with_capacity(2 * count);
    for n in 0..count {
        for sign in [Sign::Plus, Sign::Minus] {
            let f = eigenfunction_vec(p, sign, n)?;
            let lambda = p.eigenvalue(n);
            let diff = apply_q(p, &f)?.try_sub(&f.scale(Complex64::new(lambda, 0.0)))?;
            entries.push(SpectrumEntry { sign, n, lambda, residual: norm_vec(&diff)? / norm_vec(&f)? });
        }
    }
    Ok(SpectrumReport { alpha: p.alpha, h: p.h, entries })
}
