use std::f64::consts::PI;

use anyhow::Result;
use bargmann_lab::bargmann::{inner_product_hphi, transform};
use bargmann_lab::ellipse::{EllipseKind, EllipseParams};
use bargmann_lab::hermite::{identity_defect, EigenRecord, GramMethod, HermiteSystem};
use bargmann_lab::ncho::{eigenfunction_vec, inner_product_vec, spectrum_check, NchoParams, Sign};
use bargmann_lab::toeplitz::{disk_eigenvalue, disk_spectrum, radius_from_groundstate};
use bargmann_lab::{Complex64, PhaseParams};
use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{
    CertifyArgs, EigresArgs, EllipseArgs, FamilyArgs, Format, GramArgs, Method, NchoArgs, OutputArgs, PhaseArgs,
    Suite, System, ToeplitzArgs, TransformArgs,
};
use crate::report::{sink, write_csv, write_json, Check, SuiteReport};

const TOL_EXACT: f64 = bargmann_lab::TOL_EXACT;
const TOL_RESIDUAL: f64 = 1e-10;
const TOL_GRAM_QUAD: f64 = 1e-6;
const TOL_GRAM_2D: f64 = 1e-4;

fn format_or(out: &OutputArgs, default: Format) -> Format {
    out.format.unwrap_or(default)
}

fn hermite_system(p: &PhaseArgs) -> Result<HermiteSystem> {
    Ok(HermiteSystem::from_bc(p.b, p.c, p.h)?)
}

#[derive(Serialize)]
struct GramEntry {
    row: usize,
    col: usize,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct GramReport<P: Serialize> {
    system: &'static str,
    params: P,
    method: &'static str,
    n: usize,
    /// Expected diagonal; off-diagonal entries should vanish.
    expected_diagonal: Vec<f64>,
    matrix: Vec<Vec<Complex<f64>>>,
}

/// Entries in row-major order, computed in parallel and collected by index.
fn par_matrix<F>(n: usize, entry: F) -> Result<Vec<Vec<Complex64>>>
where
    F: Fn(usize, usize) -> bargmann_lab::Result<Complex64> + Sync,
{
    let flat = (0..n * n).into_par_iter().map(|k| entry(k / n, k % n)).collect::<bargmann_lab::Result<Vec<_>>>()?;
    Ok(flat.chunks(n).map(<[_]>::to_vec).collect())
}

/// Worst entry of `|G - diag(d)|`, relative to `√(d_i d_j)`.
fn gram_deviation(g: &[Vec<Complex64>], diag: &[f64]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, row) in g.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let want = if i == j { diag[i] } else { 0.0 };
            worst = worst.max((v - want).norm() / (diag[i] * diag[j]).sqrt());
        }
    }
    worst
}

fn emit_gram<P: Serialize>(report: GramReport<P>, out: &OutputArgs) -> Result<()> {
    let mut w = sink(out.output.as_deref())?;
    match format_or(out, Format::Json) {
        Format::Json => write_json(&report, &mut w),
        Format::Csv => {
            let rows: Vec<GramEntry> = report
                .matrix
                .iter()
                .enumerate()
                .flat_map(|(row, r)| {
                    r.iter().enumerate().map(move |(col, v)| GramEntry { row, col, re: v.re, im: v.im })
                })
                .collect();
            write_csv(&rows, &mut w)
        }
    }
}

pub fn gram(a: &GramArgs) -> Result<Vec<Check>> {
    let f = &a.family;
    let n = f.n as usize;
    let method = match a.method {
        Method::Exact => "exact",
        Method::Quadrature => "quadrature",
    };
    match f.system {
        System::Hermite => {
            let sys = hermite_system(&f.phase)?;
            let gm = match a.method {
                Method::Exact => GramMethod::Exact,
                Method::Quadrature => GramMethod::Quadrature,
            };
            let g = sys.gram_matrix(n, gm)?;
            let tol = if a.method == Method::Exact { TOL_RESIDUAL } else { TOL_GRAM_QUAD };
            let check = Check::new(format!("hermite gram {method}: deviation from identity"), identity_defect(&g), tol);
            let matrix = (0..n).map(|i| (0..n).map(|j| g[(i, j)]).collect()).collect();
            let report =
                GramReport { system: "hermite", params: *sys.params(), method, n, expected_diagonal: vec![1.0; n], matrix };
            emit_gram(report, &a.out)?;
            Ok(vec![check])
        }
        System::Ncho => {
            let p = NchoParams::new(f.alpha, f.phase.h)?;
            let fs = (0..n)
                .flat_map(|k| [Sign::Plus, Sign::Minus].map(|s| eigenfunction_vec(&p, s, k)))
                .collect::<bargmann_lab::Result<Vec<_>>>()?;
            let matrix = par_matrix(fs.len(), |i, j| inner_product_vec(&fs[i], &fs[j]))?;
            let diag = vec![1.0; fs.len()];
            let check = Check::new("ncho combined gram: deviation from identity", gram_deviation(&matrix, &diag), TOL_RESIDUAL);
            let report = GramReport { system: "ncho", params: p, method: "exact", n: fs.len(), expected_diagonal: diag, matrix };
            emit_gram(report, &a.out)?;
            Ok(vec![check])
        }
        System::Ellipse => {
            let p = EllipseParams::new(f.alpha, f.beta)?;
            let classic = PhaseParams::classic(1.0)?;
            let psis = (0..n).map(|k| p.psi_n(k)).collect::<bargmann_lab::Result<Vec<_>>>()?;
            let matrix = par_matrix(n, |i, j| inner_product_hphi(&classic, &psis[i], &psis[j]))?;
            let diag: Vec<f64> = (0..n).map(|k| p.psi_norm_sq(k)).collect();
            let check = Check::new(
                "ellipse gram by 2D quadrature: relative deviation from n!(λ/a)^n‖ψ₀‖²",
                gram_deviation(&matrix, &diag),
                TOL_GRAM_2D,
            );
            let report =
                GramReport { system: "ellipse", params: p, method: "quadrature", n, expected_diagonal: diag, matrix };
            emit_gram(report, &a.out)?;
            Ok(vec![check])
        }
    }
}

fn eigen_records(f: &FamilyArgs) -> Result<Vec<EigenRecord>> {
    let n = f.n as usize;
    match f.system {
        System::Hermite => Ok(hermite_system(&f.phase)?.eigen_report(n)?),
        System::Ellipse => {
            let p = EllipseParams::new(f.alpha, f.beta)?;
            Ok((0..n)
                .map(|k| Ok(EigenRecord { n: k, eigenvalue: p.eigenvalue(k), residual: p.eigen_residual(k)? }))
                .collect::<bargmann_lab::Result<_>>()?)
        }
        System::Ncho => unreachable!("handled by the ncho report"),
    }
}

fn residual_checks<'a>(label: &str, rows: impl Iterator<Item = (String, f64)> + 'a) -> Vec<Check> {
    rows.map(|(tag, r)| Check::new(format!("{label} residual {tag}"), r, TOL_RESIDUAL)).collect()
}

pub fn eigres(a: &EigresArgs) -> Result<Vec<Check>> {
    if a.family.system == System::Ncho {
        let p = NchoParams::new(a.family.alpha, a.family.phase.h)?;
        return ncho_report(&p, a.family.n as usize, &a.out);
    }
    let rows = eigen_records(&a.family)?;
    let label = if a.family.system == System::Hermite { "hermite" } else { "ellipse" };
    let mut w = sink(a.out.output.as_deref())?;
    match format_or(&a.out, Format::Json) {
        Format::Json => write_json(&rows, &mut w)?,
        Format::Csv => write_csv(&rows, &mut w)?,
    }
    Ok(residual_checks(label, rows.iter().map(|r| (format!("n={}", r.n), r.residual))))
}

fn ncho_report(p: &NchoParams, n: usize, out: &OutputArgs) -> Result<Vec<Check>> {
    let rep = spectrum_check(p, n)?;
    let mut w = sink(out.output.as_deref())?;
    match format_or(out, Format::Json) {
        Format::Json => write_json(&rep, &mut w)?,
        Format::Csv => write_csv(&rep.entries, &mut w)?,
    }
    Ok(residual_checks("ncho", rep.entries.iter().map(|e| (format!("{} n={}", e.sign.as_str(), e.n), e.residual))))
}

pub fn ncho(a: &NchoArgs) -> Result<Vec<Check>> {
    ncho_report(&NchoParams::new(a.alpha, a.h)?, a.n as usize, &a.out)
}

#[derive(Serialize)]
struct TransformedFunction {
    n: usize,
    c2: Complex64,
    c1: Complex64,
    coeffs: Vec<Complex64>,
    /// Largest coefficient difference from the normalized monomial, relative to its size.
    monomial_deviation: f64,
}

#[derive(Serialize)]
struct CoeffRow {
    n: usize,
    k: usize,
    re: f64,
    im: f64,
}

fn transformed(sys: &HermiteSystem, n: usize) -> Result<Vec<TransformedFunction>> {
    (0..n)
        .map(|k| {
            let u = transform(sys.params(), &sys.hermite_phi(k)?)?;
            let e = sys.monomial_basis(k)?;
            let monomial_deviation = u.max_abs_diff(&e) / e.poly().max_abs();
            Ok(TransformedFunction { n: k, c2: u.c2(), c1: u.c1(), coeffs: u.poly().coeffs().to_vec(), monomial_deviation })
        })
        .collect()
}

pub fn transform_cmd(a: &TransformArgs) -> Result<Vec<Check>> {
    let sys = hermite_system(&a.phase)?;
    let funcs = transformed(&sys, a.n as usize)?;
    let mut w = sink(a.out.output.as_deref())?;
    match format_or(&a.out, Format::Json) {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                params: PhaseParams,
                functions: &'a [TransformedFunction],
            }
            write_json(&Out { params: *sys.params(), functions: &funcs }, &mut w)?;
        }
        Format::Csv => {
            let rows: Vec<CoeffRow> = funcs
                .iter()
                .flat_map(|f| f.coeffs.iter().enumerate().map(|(k, v)| CoeffRow { n: f.n, k, re: v.re, im: v.im }))
                .collect();
            write_csv(&rows, &mut w)?;
        }
    }
    Ok(funcs
        .iter()
        .map(|f| Check::new(format!("transform of phi_{} vs monomial", f.n), f.monomial_deviation, TOL_EXACT))
        .collect())
}

#[derive(Serialize)]
struct TracePoint {
    x: f64,
    xi: f64,
}

pub fn ellipse(a: &EllipseArgs) -> Result<Vec<Check>> {
    if !(a.rho > 0.0) || a.samples == 0 {
        anyhow::bail!("need rho > 0 and at least one sample");
    }
    let kind = EllipseKind::classify(a.alpha, a.beta)?;
    let trace: Vec<TracePoint> = match &kind {
        EllipseKind::Elliptic(p) => p.boundary_trace(a.rho, a.samples).into_iter().map(|(x, xi)| TracePoint { x, xi }).collect(),
        EllipseKind::Circular => (0..a.samples)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / a.samples as f64;
                TracePoint { x: a.rho * t.cos(), xi: -a.rho * t.sin() }
            })
            .collect(),
    };
    let mut w = sink(a.out.output.as_deref())?;
    match format_or(&a.out, Format::Csv) {
        Format::Csv => write_csv(&trace, &mut w)?,
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                kind: &'static str,
                constants: Option<EllipseParams>,
                rho: f64,
                trace: &'a [TracePoint],
            }
            let constants = match kind {
                EllipseKind::Elliptic(p) => Some(p),
                EllipseKind::Circular => None,
            };
            write_json(&Out { kind: kind.tag(), constants, rho: a.rho, trace: &trace }, &mut w)?;
        }
    }
    Ok(Vec::new())
}

pub fn toeplitz(a: &ToeplitzArgs) -> Result<Vec<Check>> {
    let rows = disk_spectrum(a.r, a.n as usize)?;
    let mut w = sink(a.out.output.as_deref())?;
    match format_or(&a.out, Format::Csv) {
        Format::Csv => write_csv(&rows, &mut w)?,
        Format::Json => write_json(&rows, &mut w)?,
    }
    Ok(rows.iter().map(|r| Check::new(format!("disk series vs radial integral n={}", r.n), r.abs_diff, TOL_RESIDUAL)).collect())
}

fn hermite_suite(p: &PhaseArgs, n: usize) -> Result<(PhaseParams, Vec<Check>)> {
    let sys = hermite_system(p)?;
    let mut checks = residual_checks(
        "modified oscillator",
        sys.eigen_report(n)?.into_iter().map(|r| (format!("n={}", r.n), r.residual)),
    );
    let exact = identity_defect(&sys.gram_matrix(n, GramMethod::Exact)?);
    checks.push(Check::new("gram exact: deviation from identity", exact, TOL_RESIDUAL));
    let quad = identity_defect(&sys.gram_matrix(n, GramMethod::Quadrature)?);
    checks.push(Check::new("gram quadrature: deviation from identity", quad, TOL_GRAM_QUAD));
    Ok((*sys.params(), checks))
}

pub fn certify(a: &CertifyArgs) -> Result<Vec<Check>> {
    let n = a.n as usize;
    let (name, params, checks): (&str, serde_json::Value, Vec<Check>) = match a.suite {
        Suite::Hermite => {
            let (p, checks) = hermite_suite(&a.phase, n)?;
            ("hermite", serde_json::to_value(p)?, checks)
        }
        Suite::Transform => {
            let sys = hermite_system(&a.phase)?;
            let checks = transformed(&sys, n)?
                .iter()
                .map(|f| Check::new(format!("transform of phi_{} vs monomial", f.n), f.monomial_deviation, TOL_EXACT))
                .collect();
            ("transform", serde_json::to_value(sys.params())?, checks)
        }
        Suite::Ncho => {
            let p = NchoParams::new(a.alpha, a.phase.h)?;
            let rep = spectrum_check(&p, n)?;
            let mut checks =
                residual_checks("ncho", rep.entries.iter().map(|e| (format!("{} n={}", e.sign.as_str(), e.n), e.residual)));
            let fs = (0..n)
                .flat_map(|k| [Sign::Plus, Sign::Minus].map(|s| eigenfunction_vec(&p, s, k)))
                .collect::<bargmann_lab::Result<Vec<_>>>()?;
            let g = par_matrix(fs.len(), |i, j| inner_product_vec(&fs[i], &fs[j]))?;
            checks.push(Check::new("combined gram: deviation from identity", gram_deviation(&g, &vec![1.0; fs.len()]), TOL_RESIDUAL));
            ("ncho", serde_json::to_value(p)?, checks)
        }
        Suite::Ellipse => {
            let p = EllipseParams::new(a.alpha, a.beta)?;
            let mut checks = residual_checks(
                "line oscillator",
                (0..n).map(|k| Ok((format!("n={k}"), p.eigen_residual(k)?))).collect::<bargmann_lab::Result<Vec<_>>>()?.into_iter(),
            );
            let spacing = (p.lambda / (p.a * p.c_ab.norm_sqr()) - 2.0 * p.omega()).norm();
            checks.push(Check::new("eigenvalue spacing identity", spacing, TOL_EXACT));
            let classic = PhaseParams::classic(1.0)?;
            let m = n.min(7);
            let psis = (0..m).map(|k| p.psi_n(k)).collect::<bargmann_lab::Result<Vec<_>>>()?;
            let g = par_matrix(m, |i, j| inner_product_hphi(&classic, &psis[i], &psis[j]))?;
            let diag: Vec<f64> = (0..m).map(|k| p.psi_norm_sq(k)).collect();
            checks.push(Check::new("psi gram by 2D quadrature (relative)", gram_deviation(&g, &diag), TOL_GRAM_2D));
            ("ellipse", serde_json::to_value(p)?, checks)
        }
        Suite::Toeplitz => {
            let mut checks: Vec<Check> = disk_spectrum(a.r, n)?
                .iter()
                .map(|r| Check::new(format!("disk series vs radial integral n={}", r.n), r.abs_diff, TOL_RESIDUAL))
                .collect();
            let round = (radius_from_groundstate(disk_eigenvalue(a.r, 0)?)? - a.r).abs();
            checks.push(Check::new("radius round trip", round, TOL_EXACT));
            ("toeplitz", serde_json::json!({ "R": a.r }), checks)
        }
    };
    let report = SuiteReport { suite: name.to_string(), params, checks };
    let mut w = sink(a.out.output.as_deref())?;
    match format_or(&a.out, Format::Json) {
        Format::Json => write_json(&report, &mut w)?,
        Format::Csv => write_csv(&report.checks, &mut w)?,
    }
    Ok(report.checks)
}
