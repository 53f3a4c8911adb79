use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use dampwave_cli::{emit_report, EXIT_CLAIM_FAILED, EXIT_OK, EXIT_RUNTIME, EXIT_USAGE};
use serde_json::Value;

fn dampwave(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dampwave"))
        .args(args)
        .arg("--out")
        .arg(out)
        .env_remove("DAMPWAVE_THREADS")
        .output()
        .unwrap()
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn csv_rows(path: &Path) -> (String, Vec<Vec<f64>>) {
    let text = fs::read_to_string(path).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    let header = lines.next().unwrap().to_string();
    let rows = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap_or(f64::NAN)).collect())
        .collect();
    (header, rows)
}

#[test]
fn verify_writes_reports_curves_and_plots() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o");
    let o = dampwave(&["verify", "--claim", "thm11"], &out);
    assert_eq!(o.status.code(), Some(EXIT_OK), "{}", String::from_utf8_lossy(&o.stderr));
    let summary = json(&out.join("summary.json"));
    assert_eq!(summary["total"], 1);
    assert_eq!(summary["all_pass"], true);
    let report = json(&out.join("thm11.json"));
    assert_eq!(report["claim_id"], "thm11");
    assert_eq!(report["pass"], true);
    for f in report["curves"].as_array().unwrap().iter().chain(report["plots"].as_array().unwrap()) {
        assert!(out.join(f.as_str().unwrap()).is_file(), "{f}");
    }
    let (header, rows) = csv_rows(&out.join("D_norm.csv"));
    assert_eq!(header, "t,value,error_estimate");
    assert_eq!(rows.len(), 21);
    let plot = fs::read_to_string(out.join("D_norm.plot")).unwrap();
    assert!(plot.starts_with("# curve: D_norm\n"));
    assert!(fs::read_to_string(out.join("run.conf")).unwrap().starts_with("command = verify\n"));
}

#[test]
fn failing_claims_exit_with_their_own_code() {
    let dir = tempfile::tempdir().unwrap();
    let o = dampwave(&["verify", "--claim", "thm12", "--profile", "mexican_hat"], dir.path());
    assert_eq!(o.status.code(), Some(EXIT_CLAIM_FAILED));
    assert_eq!(json(&dir.path().join("summary.json"))["failed"], 1);
}

#[test]
fn usage_and_runtime_errors_are_distinguished() {
    let dir = tempfile::tempdir().unwrap();
    let o = dampwave(&["verify", "--nu", "-1"], dir.path());
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--nu"));
    let o = dampwave(&["verify", "--claim", "a_split", "--ladder", "2:100:8"], dir.path());
    assert_eq!(o.status.code(), Some(EXIT_RUNTIME));
    let o = Command::new(env!("CARGO_BIN_EXE_dampwave"))
        .args(["verify", "--claim", "thm11"])
        .env("DAMPWAVE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
}

#[test]
fn empty_report_list_gives_an_empty_summary() {
    let dir = tempfile::tempdir().unwrap();
    emit_report(&[], dir.path()).unwrap();
    let s = json(&dir.path().join("summary.json"));
    assert_eq!(s["total"], 0);
    assert_eq!(s["claims"].as_array().unwrap().len(), 0);
    assert_eq!(s["all_pass"], true);
}

#[test]
fn symbols_table_has_one_row_per_point() {
    let dir = tempfile::tempdir().unwrap();
    let o = dampwave(&["symbols-table", "--times", "0,1", "--r-points", "5"], dir.path());
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let (header, rows) = csv_rows(&dir.path().join("symbols_table.csv"));
    assert!(header.starts_with("t,r,"));
    assert_eq!(rows.len(), 10);
    // K0 is one at t = 0
    let k0 = header.split(',').position(|h| h == "K0").unwrap();
    assert!(rows[..5].iter().all(|r| r[k0] == 1.0));
}

#[test]
fn norm_curve_csv() {
    let dir = tempfile::tempdir().unwrap();
    let o = dampwave(&["norm", "--multiplier", "K1", "--n", "2", "--ladder", "10:1e4:8"], dir.path());
    assert_eq!(o.status.code(), Some(EXIT_OK), "{}", String::from_utf8_lossy(&o.stderr));
    let (header, rows) = csv_rows(&dir.path().join("norm_K1_2d.csv"));
    assert_eq!(header, "t,value,abs_error_estimate,panels_used");
    assert_eq!(rows.len(), 8);
    assert!(rows.windows(2).all(|w| w[1][1] > w[0][1]));
}

#[test]
fn evolve_reports_energy_and_dumps_fields() {
    let dir = tempfile::tempdir().unwrap();
    let o = dampwave(
        &["evolve", "--grid-points", "256", "--half-width", "16", "--times", "0,1,2", "--dump"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(EXIT_OK), "{}", String::from_utf8_lossy(&o.stderr));
    let (header, rows) = csv_rows(&dir.path().join("evolve.csv"));
    assert_eq!(header, "t,l2_norm,energy,dissipation,horizon_ok");
    assert_eq!(rows.len(), 3);
    assert!(rows.windows(2).all(|w| w[1][2] <= w[0][2]));
    for i in 0..3 {
        let raw = fs::read(dir.path().join(format!("u_{i}.bin"))).unwrap();
        assert_eq!(raw.len(), 24 + 8 * 256);
    }
}

#[test]
fn run_conf_replays_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let o = dampwave(&["norm", "--multiplier", "D", "--ladder", "1e3:1e5:8", "--nu", "0.5"], &a);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let conf = a.join("run.conf");
    let o = dampwave(&["--config", conf.to_str().unwrap()], &b);
    assert_eq!(o.status.code(), Some(EXIT_OK), "{}", String::from_utf8_lossy(&o.stderr));
    for f in ["run.conf", "norm_D_1d.csv"] {
        assert_eq!(fs::read(a.join(f)).unwrap(), fs::read(b.join(f)).unwrap(), "{f}");
    }
}
