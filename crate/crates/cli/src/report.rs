use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

/// One tolerance check.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        // NaN never passes
        let pass = measured <= tolerance;
        Self { name: name.into(), measured, tolerance, pass }
    }
}

#[derive(Debug, Serialize)]
pub struct SuiteReport<P: Serialize> {
    pub suite: String,
    pub params: P,
    pub checks: Vec<Check>,
}

/// Opens the requested destination, or standard output.
pub fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

pub fn write_csv<T: Serialize>(rows: &[T], out: &mut dyn Write) -> anyhow::Result<()> {
    let mut wtr = csv::Writer::from_writer(&mut *out);
    for row in rows {
        wtr.serialize(row)?;
    }
    wtr.flush()?;
    drop(wtr);
    out.flush()?;
    Ok(())
}

/// Lists failed checks on standard error and reports whether all passed.
pub fn summarize(checks: &[Check]) -> bool {
    let mut ok = true;
    for c in checks.iter().filter(|c| !c.pass) {
        ok = false;
        eprintln!("FAIL {}: measured {:e} exceeds tolerance {:e}", c.name, c.measured, c.tolerance);
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_detected() {
        let ok = Check::new("a", 1e-12, 1e-10);
        let bad = Check::new("b", 1e-8, 1e-10);
        let nan = Check::new("c", f64::NAN, 1e-10);
        assert!(ok.pass && !bad.pass && !nan.pass);
        assert!(summarize(std::slice::from_ref(&ok)));
        assert!(!summarize(&[ok, bad]));
        assert!(!summarize(&[nan]));
    }
}
