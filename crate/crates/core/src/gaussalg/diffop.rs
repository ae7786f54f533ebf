use std::collections::BTreeMap;

use num_complex::Complex64;

use super::polygauss::PolyGauss;
use crate::error::{Error, Result};

const MAX_ORDER: u32 = 2;

/// A differential operator `Σ c_{jk} x^j (hD_x)^k` with `j + k ≤ 2`,
/// `D_x = -i d/dx`. Each term differentiates first, then multiplies by `x^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffOp {
    terms: BTreeMap<(u32, u32), Complex64>,
    h: f64,
}

impl DiffOp {
    pub fn zero(h: f64) -> Self {
        assert!(h > 0.0, "semiclassical parameter must be positive");
        Self { terms: BTreeMap::new(), h }
    }

    pub fn identity(h: f64) -> Self {
        Self::zero(h).with_term(0, 0, Complex64::new(1.0, 0.0)).expect("order 0")
    }

    /// Multiplication by `x`.
    pub fn x(h: f64) -> Self {
        Self::zero(h).with_term(1, 0, Complex64::new(1.0, 0.0)).expect("order 1")
    }

    /// `hD_x`.
    pub fn hd(h: f64) -> Self {
        Self::zero(h).with_term(0, 1, Complex64::new(1.0, 0.0)).expect("order 1")
    }

    /// `d/dx = (i/h) hD_x`.
    pub fn d_dx(h: f64) -> Self {
        Self::hd(h).scale(Complex64::new(0.0, 1.0 / h))
    }

    /// Weyl quantization of `σ_ξξ ξ² + σ_xx x² + σ_xξ xξ`, using
    /// `Op^W(xξ) = x hD_x + h/(2i)`.
    pub fn weyl_quadratic(xixi: Complex64, xx: Complex64, xxi: Complex64, h: f64) -> Self {
        Self::zero(h)
            .with_term(0, 2, xixi)
            .and_then(|op| op.with_term(2, 0, xx))
            .and_then(|op| op.with_term(1, 1, xxi))
            .and_then(|op| op.with_term(0, 0, xxi * Complex64::new(0.0, -h / 2.0)))
            .expect("quadratic symbols have order 2")
    }

    /// Adds `c x^j (hD)^k` to the operator.
    pub fn with_term(mut self, j: u32, k: u32, c: Complex64) -> Result<Self> {
        if j + k > MAX_ORDER {
            return Err(Error::OrderExceeded { order: j + k });
        }
        let entry = self.terms.entry((j, k)).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if *entry == Complex64::new(0.0, 0.0) {
            self.terms.remove(&(j, k));
        }
        Ok(self)
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn coeff(&self, j: u32, k: u32) -> Complex64 {
        self.terms.get(&(j, k)).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Complex64)> + '_ {
        self.terms.iter().map(|(&jk, &c)| (jk, c))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&jk, &c)| (jk, c * s))
            .filter(|(_, c)| *c != Complex64::new(0.0, 0.0))
            .collect();
        Self { terms, h: self.h }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_h(other)?;
        other
            .terms
            .iter()
            .try_fold(self.clone(), |acc, (&(j, k), &c)| acc.with_term(j, k, c))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Adds a constant multiple of the identity.
    pub fn plus_const(&self, c: Complex64) -> Self {
        self.clone().with_term(0, 0, c).expect("order 0")
    }

    /// `self ∘ other`, normal ordered through `(hD)^m x^c = (-ih)^m c!/(c-m)! x^{c-m}`
    /// contributions of the Leibniz rule.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_h(other)?;
        let minus_ih = Complex64::new(0.0, -self.h);
        let mut out = Self::zero(self.h);
        for (&(a, b), &p) in &self.terms {
            for (&(c, d), &q) in &other.terms {
                for m in 0..=b.min(c) {
                    let falling = (c - m + 1..=c).map(f64::from).product::<f64>();
                    let coeff = p * q * binomial(b, m) * falling * minus_ih.powu(m);
                    out = out.with_term(a + c - m, b + d - m, coeff)?;
                }
            }
        }
        Ok(out)
    }

    /// `[self, other] = self∘other - other∘self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.try_sub(&other.compose(self)?)
    }

    /// Largest coefficient difference over the union of terms.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .map(|&(j, k)| (self.coeff(j, k) - other.coeff(j, k)).norm())
            .fold(0.0, f64::max)
    }

    /// Exact action on the polynomial-Gaussian class; the exponent is preserved.
    pub fn apply(&self, f: &PolyGauss) -> Result<PolyGauss> {
        let minus_ih = Complex64::new(0.0, -self.h);
        let max_k = self.terms.keys().map(|&(_, k)| k).max().unwrap_or(0);
        let mut derivs = vec![f.clone()];
        for _ in 0..max_k {
            let next = derivs.last().expect("non-empty").d_dx()?.scale(minus_ih);
            derivs.push(next);
        }
        let mut acc = PolyGauss::zero(f.gamma2())?;
        for (&(j, k), &c) in &self.terms {
            let mut term = derivs[k as usize].scale(c);
            for _ in 0..j {
                term = term.mul_x()?;
            }
            acc = acc.try_add(&term)?;
        }
        // keep the input's exponent even when the result vanishes
        if acc.is_zero() {
            return Ok(f.with_poly(acc.poly().clone()));
        }
        Ok(acc)
    }

    fn check_h(&self, other: &Self) -> Result<()> {
        if self.h == other.h {
            Ok(())
        } else {
            Err(Error::ParameterMismatch(self.h, other.h))
        }
    }
}

/// Applies the operator to `f`.
pub fn apply_diffop(op: &DiffOp, f: &PolyGauss) -> Result<PolyGauss> {
    op.apply(f)
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}
