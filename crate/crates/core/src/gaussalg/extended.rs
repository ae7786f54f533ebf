//! Double-double shadow of [`PolyGauss`] for checks whose monomial
//! coefficients cancel heavily.

use num_complex::Complex;
use twofloat::TwoFloat;

use super::diffop::DiffOp;
use super::poly::ComplexPoly;
use super::polygauss::PolyGauss;
use crate::error::Result;

pub(crate) type Cdd = Complex<TwoFloat>;

pub(crate) fn dd(z: num_complex::Complex64) -> Cdd {
    Complex::new(TwoFloat::from(z.re), TwoFloat::from(z.im))
}

pub(crate) fn dd_re(x: f64) -> Cdd {
    Complex::new(TwoFloat::from(x), TwoFloat::from(0.0))
}

fn round(z: Cdd) -> num_complex::Complex64 {
    num_complex::Complex64::new(f64::from(z.re), f64::from(z.im))
}

/// `p(x) e^{γ₂x² + γ₁x}` with double-double coefficients.
#[derive(Debug, Clone)]
pub(crate) struct ExtPolyGauss {
    pub coeffs: Vec<Cdd>,
    pub gamma2: Cdd,
    pub gamma1: Cdd,
}

impl ExtPolyGauss {
    pub fn gaussian(gamma2: Cdd) -> Self {
        Self { coeffs: vec![dd_re(1.0)], gamma2, gamma1: dd_re(0.0) }
    }

    pub fn scale(&self, s: Cdd) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * s).collect(), ..self.clone() }
    }

    pub fn mul_x(&self) -> Self {
        let mut coeffs = vec![dd_re(0.0)];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs, ..self.clone() }
    }

    pub fn d_dx(&self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![dd_re(0.0); n + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                out[k - 1] += c * dd_re(k as f64);
            }
            out[k] += c * self.gamma1;
            out[k + 1] += c * self.gamma2 * dd_re(2.0);
        }
        Self { coeffs: out, ..self.clone() }
    }

    /// Sum, assuming both share the exponent of `self`.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Cdd], k: usize| v.get(k).copied().unwrap_or_else(|| dd_re(0.0));
        let coeffs = (0..n).map(|k| get(&self.coeffs, k) + get(&other.coeffs, k)).collect();
        Self { coeffs, ..self.clone() }
    }

    pub fn with_gamma2(mut self, gamma2: Cdd) -> Self {
        self.gamma2 = gamma2;
        self
    }

    pub fn to_polygauss(&self) -> Result<PolyGauss> {
        let coeffs: Vec<_> = self.coeffs.iter().map(|&c| round(c)).collect();
        PolyGauss::new(ComplexPoly::from_coeffs(coeffs)?, round(self.gamma2), round(self.gamma1))
    }
}

impl DiffOp {
    /// [`apply`](Self::apply) in double-double arithmetic.
    pub(crate) fn apply_extended(&self, f: &ExtPolyGauss) -> ExtPolyGauss {
        let minus_ih = Complex::new(TwoFloat::from(0.0), -TwoFloat::from(self.h()));
        let max_k = self.terms().map(|((_, k), _)| k).max().unwrap_or(0);
        let mut derivs = vec![f.clone()];
        for _ in 0..max_k {
            let next = derivs.last().expect("non-empty").d_dx().scale(minus_ih);
            derivs.push(next);
        }
        let mut acc = ExtPolyGauss { coeffs: Vec::new(), ..f.clone() };
        for ((j, k), c) in self.terms() {
            let mut term = derivs[k as usize].scale(dd(c));
            for _ in 0..j {
                term = term.mul_x();
            }
            acc = acc.add(&term);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn matches_f64_action() {
        let f = PolyGauss::new(
            ComplexPoly::from_coeffs(vec![Complex64::new(0.5, -1.0), Complex64::new(0.0, 2.0), Complex64::new(1.0, 0.0)])
                .unwrap(),
            Complex64::new(-0.7, 0.3),
            Complex64::new(0.2, -0.1),
        )
        .unwrap();
        let ext = ExtPolyGauss {
            coeffs: f.poly().coeffs().iter().map(|&c| dd(c)).collect(),
            gamma2: dd(f.gamma2()),
            gamma1: dd(f.gamma1()),
        };
        let op = DiffOp::weyl_quadratic(Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.5), Complex64::new(0.3, 0.0), 0.8);
        let want = op.apply(&f).unwrap();
        let got = op.apply_extended(&ext).to_polygauss().unwrap();
        assert!(got.poly().max_abs_diff(want.poly()) < 1e-14);
    }
}
