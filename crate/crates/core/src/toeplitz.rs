//! Localization operators with radial symbols `b(x - iξ) = c(x² + ξ²)`.
//!
//! In the classic Hermite basis such an operator is diagonal with entries
//! `λ_n = (1/n!) ∫_0^∞ c(2s) s^n e^{-s} ds`. For the indicator of
//! `{x² + ξ² ≤ 2R}` this is the disk series `e^{-R} Σ_{k>n} R^k/k!`; the
//! parameter `R` is defined by that identity, so the geometric radius of the
//! disk in the `(x, ξ)` plane is `√(2R)`.

use std::f64::consts::PI;
use std::fmt;
use std::io::Write;
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;
use statrs::function::gamma::{gamma_ur, ln_gamma};

use crate::error::{Error, Result};
use crate::hermite::factorial;
use crate::quad::{adaptive_integrate, GridFunction, QuadGrid, TAIL_TOL};

const RADIAL_TAIL: f64 = 1e-13;
const MAX_INTERVALS: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SymbolKind {
    /// `c(σ) = 1` for `σ ≤ 2R`, else 0.
    Indicator(f64),
    Smooth,
}

/// A radial profile `c` with a bound on `|c|` and on its support.
#[derive(Clone)]
pub struct RadialSymbol {
    profile: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    kind: SymbolKind,
    support: f64,
    sup: f64,
}

impl fmt::Debug for RadialSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialSymbol")
            .field("kind", &self.kind)
            .field("support", &self.support)
            .field("sup", &self.sup)
            .finish()
    }
}

impl RadialSymbol {
    /// Indicator of `x² + ξ² ≤ 2R`, whose ground eigenvalue is `1 - e^{-R}`.
    pub fn indicator(r: f64) -> Result<Self> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::Domain(format!("indicator parameter must be positive, got {r}")));
        }
        Ok(Self {
            profile: Arc::new(move |s| if s <= 2.0 * r { 1.0 } else { 0.0 }),
            kind: SymbolKind::Indicator(r),
            support: 2.0 * r,
            sup: 1.0,
        })
    }

    pub fn constant(v: f64) -> Self {
        Self { profile: Arc::new(move |_| v), kind: SymbolKind::Smooth, support: f64::INFINITY, sup: v.abs() }
    }

    /// `c(σ) = e^{-rate σ}`, with `λ_n = (1 + 2 rate)^{-(n+1)}`.
    pub fn exp_decay(rate: f64) -> Result<Self> {
        if !(rate >= 0.0) {
            return Err(Error::Domain(format!("decay rate must be nonnegative, got {rate}")));
        }
        Ok(Self {
            profile: Arc::new(move |s| (-rate * s).exp()),
            kind: SymbolKind::Smooth,
            support: f64::INFINITY,
            sup: 1.0,
        })
    }

    /// A smooth profile with `|c| ≤ sup` on `[0, support]` and zero beyond.
    pub fn smooth<F>(profile: F, sup: f64, support: f64) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if !sup.is_finite() {
            return Err(Error::NotIntegrable("profile is unbounded".into()));
        }
        if !(support > 0.0) {
            return Err(Error::Domain(format!("support bound must be positive, got {support}")));
        }
        Ok(Self { profile: Arc::new(profile), kind: SymbolKind::Smooth, support, sup })
    }

    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    pub fn sup(&self) -> f64 {
        self.sup
    }

    /// `c(σ)`, zero outside the support.
    pub fn eval(&self, sigma: f64) -> f64 {
        if sigma > self.support {
            0.0
        } else {
            (self.profile)(sigma)
        }
    }

    /// `b(z) = c(|z|²)`.
    pub fn eval_plane(&self, z: Complex64) -> f64 {
        self.eval(z.norm_sqr())
    }
}

/// `λ_n = (1/n!) ∫_0^∞ c(2s) s^n e^{-s} ds` by adaptive Gauss–Kronrod, cut
/// where the Gamma tail falls below `1e-13 · sup|c|` or at the edge of the
/// support.
pub fn radial_eigenvalue(sym: &RadialSymbol, n: usize) -> Result<f64> {
    if sym.sup == 0.0 {
        return Ok(0.0);
    }
    let shape = (n + 1) as f64;
    let mut cut = shape + 10.0;
    while sym.sup * gamma_ur(shape, cut) > RADIAL_TAIL {
        cut *= 1.5;
    }
    let edge = 0.5 * sym.support;
    let log_norm = ln_gamma(shape);
    let density = move |s: f64| -> f64 {
        if s <= 0.0 {
            return if n == 0 { sym.eval(0.0) } else { 0.0 };
        }
        let w = (n as f64 * s.ln() - s - log_norm).exp();
        sym.eval(2.0 * s) * w
    };
    // the profile vanishes past its support, so nothing lies beyond `edge`
    let (v, _): (f64, f64) = adaptive_integrate(density, 0.0, edge.min(cut), 1e-14, MAX_INTERVALS)?;
    if !v.is_finite() {
        return Err(Error::NotIntegrable("radial profile produced a non-finite value".into()));
    }
    Ok(v)
}

/// `e^{-R} Σ_{k>n} R^k/k!`. Summed directly as a tail when its terms decay,
/// otherwise as `1 - e^{-R} Σ_{k≤n} R^k/k!` with compensated summation.
pub fn disk_eigenvalue(r: f64, n: usize) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!("R must be positive, got {r}")));
    }
    if (n + 1) as f64 >= r {
        let k0 = (n + 1) as f64;
        let mut term = (-r + k0 * r.ln() - ln_gamma(k0 + 1.0)).exp();
        let mut sum = 0.0;
        let mut k = k0;
        while term > 0.0 && term > 1e-18 * sum {
            sum += term;
            k += 1.0;
            term *= r / k;
        }
        Ok(sum)
    } else {
        let mut term = (-r).exp();
        let (mut sum, mut comp) = (0.0f64, 0.0f64);
        for k in 0..=n {
            if k > 0 {
                term *= r / k as f64;
            }
            let t = sum + term;
            comp += if sum.abs() >= term.abs() { (sum - t) + term } else { (term - t) + sum };
            sum = t;
        }
        Ok(1.0 - (sum + comp))
    }
}

/// Inverts `λ_0 = 1 - e^{-R}`.
pub fn radius_from_groundstate(lambda0: f64) -> Result<f64> {
    if !(lambda0 > 0.0 && lambda0 < 1.0) {
        return Err(Error::Domain(format!("ground eigenvalue must lie in (0, 1), got {lambda0}")));
    }
    Ok(-(-lambda0).ln_1p())
}

/// `a(x, ξ) = (1/π) ∫ e^{-(x-y)² - (ξ-η)²} b(y - iη) dy dη` over the grid of `b`.
pub fn symbol_convolve(b: &GridFunction, x: f64, xi: f64) -> Result<f64> {
    let grid = b.grid();
    let vals: Vec<Complex64> = grid
        .nodes()
        .iter()
        .zip(b.values())
        .map(|(z, v)| {
            let (y, eta) = (z.re, -z.im);
            v * (-(x - y).powi(2) - (xi - eta).powi(2)).exp()
        })
        .collect();
    Ok(grid.integrate_values(&vals).checked(TAIL_TOL)?.re / PI)
}

/// Trapezoid grid on `|Re z|, |Im z| ≤ half_width`.
pub fn convolve_grid(half_width: f64, spacing: f64) -> QuadGrid {
    QuadGrid::trapezoid_2d(Complex64::new(0.0, 0.0), half_width, spacing)
}

/// Polar grid for matrix elements up to index `n_max`, with a radial break at
/// the edge of an indicator's disk.
pub fn toeplitz_grid(sym: &RadialSymbol, n_max: usize) -> QuadGrid {
    let shape = (n_max + 1) as f64;
    let mut cut = shape + 20.0;
    while gamma_ur(shape, cut) > 1e-18 {
        cut *= 1.25;
    }
    let r_max = (2.0 * cut).sqrt();
    let mut breaks = Vec::new();
    if let SymbolKind::Indicator(r) = sym.kind {
        let edge = (2.0 * r).sqrt();
        if edge < r_max {
            breaks.push(edge);
        }
    }
    breaks.push(r_max);
    QuadGrid::polar_2d(&breaks, 80, 4 * n_max + 16)
}

/// `(b B_1 φ_m, B_1 φ_n)` with the classic orthonormal monomials
/// `z^k/√(π 2^{k+1} k!)` and the weight `e^{-|z|²/2}`.
pub fn toeplitz_matrix_quad(sym: &RadialSymbol, m: usize, n: usize, grid: &QuadGrid) -> Result<Complex64> {
    let norm = |k: usize| 1.0 / (PI * 2f64.powi(k as i32 + 1) * factorial(k)).sqrt();
    let scale = norm(m) * norm(n);
    let est = grid.integrate(|z| {
        let b = sym.eval_plane(z);
        if b == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        z.powu(m as u32) * z.conj().powu(n as u32) * (b * (-0.5 * z.norm_sqr()).exp())
    });
    Ok(est.checked(TAIL_TOL)? * scale)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub n: usize,
    pub lambda_formula: f64,
    pub lambda_quadrature: f64,
    pub abs_diff: f64,
}

/// Disk series against the radial integral for `n < count`.
pub fn disk_spectrum(r: f64, count: usize) -> Result<Vec<SpectrumRow>> {
    let sym = RadialSymbol::indicator(r)?;
    (0..count)
        .map(|n| {
            let f = disk_eigenvalue(r, n)?;
            let q = radial_eigenvalue(&sym, n)?;
            Ok(SpectrumRow { n, lambda_formula: f, lambda_quadrature: q, abs_diff: (f - q).abs() })
        })
        .collect()
}

pub fn write_spectrum_csv<W: Write>(rows: &[SpectrumRow], out: W) -> std::io::Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    for row in rows {
        wtr.serialize(row)?;
    }
    wtr.flush()
}
