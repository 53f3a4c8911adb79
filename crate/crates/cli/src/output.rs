//! File emission: CSV, plot data and JSON reports.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use dampwave::asymptotics::{CurveRecord, VerificationReport};
use serde_json::{json, Map, Value};

/// Seventeen significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut s = header.join(",");
    s.push('\n');
    for r in rows {
        s.push_str(&r.join(","));
        s.push('\n');
    }
    fs::write(path, s)
}

fn write_json(path: &Path, v: &Value) -> io::Result<()> {
    let mut s = serde_json::to_string_pretty(v).map_err(io::Error::other)?;
    s.push('\n');
    fs::write(path, s)
}

fn write_curve(dir: &Path, rec: &CurveRecord) -> io::Result<()> {
    let rows: Vec<Vec<String>> = rec
        .curve
        .samples
        .iter()
        .map(|s| vec![fmt_f64(s.t), fmt_f64(s.value), fmt_f64(s.error_estimate)])
        .collect();
    write_csv(&dir.join(format!("{}.csv", rec.name)), &["t", "value", "error_estimate"], &rows)?;
    let mut plot = String::new();
    plot.push_str(&format!("# curve: {}\n", rec.name));
    plot.push_str(&format!("# quantity: {}\n", rec.curve.quantity_id));
    plot.push_str(&format!("# reference: {}\n", rec.reference));
    plot.push_str("# columns: t value\n");
    for s in &rec.curve.samples {
        plot.push_str(&format!("{} {}\n", fmt_f64(s.t), fmt_f64(s.value)));
    }
    let mut f = fs::File::create(dir.join(format!("{}.plot", rec.name)))?;
    f.write_all(plot.as_bytes())
}

fn report_json(r: &VerificationReport) -> Value {
    let mut measured = Map::new();
    let mut expected = Map::new();
    let mut tolerance = Map::new();
    for c in &r.checks {
        measured.insert(c.name.clone(), json!(c.measured));
        expected.insert(
            c.name.clone(),
            json!({ "relation": c.relation, "value": c.expected, "pass": c.pass }),
        );
        tolerance.insert(c.name.clone(), json!(c.tolerance));
    }
    let fits: Map<String, Value> = r
        .fits
        .iter()
        .map(|f| {
            let v = json!({
                "model": f.fit.model,
                "exponent_or_slope": f.fit.exponent_or_slope,
                "prefactor": f.fit.prefactor,
                "r_squared": f.fit.r_squared,
                "slope_std_error": f.fit.slope_std_error,
                "window": [f.fit.window.0, f.fit.window.1],
                "samples": f.fit.samples,
            });
            (f.name.clone(), v)
        })
        .collect();
    let curves: Vec<String> = r.curves.iter().map(|c| format!("{}.csv", c.name)).collect();
    let plots: Vec<String> = r.curves.iter().map(|c| format!("{}.plot", c.name)).collect();
    json!({
        "claim_id": r.claim_id,
        "pass": r.pass,
        "measured": measured,
        "expected": expected,
        "tolerance": tolerance,
        "fits": fits,
        "info": r.info,
        "notes": r.notes,
        "curves": curves,
        "plots": plots,
    })
}

/// Writes every curve once (by name), one JSON per report and
/// `summary.json`. Paths inside the JSON are relative to `dir`.
pub fn emit_report(reports: &[VerificationReport], dir: &Path) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut written = BTreeSet::new();
    for r in reports {
        for c in &r.curves {
            if written.insert(c.name.clone()) {
                write_curve(dir, c)?;
            }
        }
        write_json(&dir.join(format!("{}.json", r.claim_id)), &report_json(r))?;
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    let claims: Vec<Value> = reports
        .iter()
        .map(|r| json!({ "claim_id": r.claim_id, "pass": r.pass, "report": format!("{}.json", r.claim_id) }))
        .collect();
    let summary = json!({
        "claims": claims,
        "total": reports.len(),
        "passed": passed,
        "failed": reports.len() - passed,
        "all_pass": passed == reports.len(),
    });
    write_json(&dir.join("summary.json"), &summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(fmt_f64(0.25), "2.5000000000000000e-1");
        assert_eq!(fmt_f64(1e8), "1.0000000000000000e8");
        let back: f64 = fmt_f64(std::f64::consts::PI).parse().unwrap();
        assert_eq!(back, std::f64::consts::PI);
    }
}
