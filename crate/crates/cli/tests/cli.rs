use std::process::Command;

use narayana_css_cli::{run, ReportEnvelope, Status};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let full: Vec<&str> = std::iter::once("narayana-css").chain(args.iter().copied()).collect();
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn envelope(args: &[&str]) -> (i32, ReportEnvelope) {
    let (code, out, err) = call(args);
    let env: ReportEnvelope = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} / {err}"));
    (code, env)
}

#[test]
fn triangle_formats() {
    let (code, text, _) = call(&["triangle", "--rows", "4"]);
    assert_eq!(code, 0);
    assert_eq!(text, "1\n1 1\n1 3 1\n1 6 6 1\n");
    let (code, env) = envelope(&["triangle", "--rows", "3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(env.payload["rows"], serde_json::json!([["1"], ["1", "1"], ["1", "3", "1"]]));
    let (code, _, err) = call(&["triangle", "--rows", "3", "--json", "--csv"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn narayana_checks_pass() {
    let (code, env) = envelope(&["narayana", "--n", "8", "--check-recurrence", "--check-catalan", "--check-dyck"]);
    assert_eq!(code, 0);
    assert_eq!(env.status, Status::Pass);
    assert_eq!(env.payload["catalan"], "1430");
    assert!(env.failure.is_none());
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(call(&["narayana", "--n", "0"]).0, 2);
    assert_eq!(call(&["narayana", "--n", "20", "--check-dyck"]).0, 2);
    assert_eq!(call(&["eigen", "--n", "5", "--j", "3"]).0, 2);
    assert_eq!(call(&["poincare", "--preset", "narayana", "--tmax", "10"]).0, 2);
    assert_eq!(call(&["nonsense"]).0, 2);
    assert_eq!(call(&["css"]).0, 2);
}

#[test]
fn help_exits_zero_on_stdout() {
    let (code, out, err) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify-all") && err.is_empty());
}

#[test]
fn css_compose_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.txt");
    let q = dir.path().join("q.txt");
    // (x+1)^2 and x^2 + 3x + 1
    std::fs::write(&p, "2\n1\n2\n1\n").unwrap();
    std::fs::write(&q, "2\n1/1\n3\n1\n").unwrap();
    let (code, env) = envelope(&["css", "--compose", p.to_str().unwrap(), q.to_str().unwrap(), "--m", "2"]);
    assert_eq!(code, 0);
    // coefficient j is p_j q_j / C(2, j)
    assert_eq!(env.payload["result"]["coefficients"], serde_json::json!(["1", "3", "1"]));

    std::fs::write(&q, "3\n1\n1\n").unwrap();
    let (code, _, err) = call(&["css", "--compose", p.to_str().unwrap(), q.to_str().unwrap(), "--m", "2"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn css_phi_matrix() {
    let (code, env) = envelope(&["css", "--phi", "3"]);
    assert_eq!(code, 0);
    assert_eq!(env.payload["matrix"].as_array().unwrap().len(), 2);
}

#[test]
fn eigen_reports_structure() {
    let (code, env) = envelope(&["eigen", "--n", "6", "--j", "3"]);
    assert_eq!(code, 0);
    assert_eq!(env.status, Status::Pass);
    assert_eq!(env.payload["q_polynomials"][0]["q"]["display"], "x^3 - 5x^2 + 5x - 1");
    assert_eq!(env.payload["q_polynomials"][0]["reciprocal_sign"], -1);
    assert_eq!(env.payload["eigenvalues"].as_array().unwrap().len(), 5);
}

#[test]
fn limits_and_tolerance() {
    let (code, env) = envelope(&["limits", "--j", "3", "--ns", "20,40,80"]);
    assert_eq!(code, 0);
    assert_eq!(env.status, Status::Pass);
    let (code, env) = envelope(&["limits", "--j", "6", "--tol", "1e-6"]);
    assert_eq!(code, 1);
    assert_eq!(env.failure.unwrap().check, "limit_matches_narayana");
}

#[test]
fn roots_isolate_and_interlace() {
    let (code, env) = envelope(&["roots", "--n", "6", "--isolate"]);
    assert_eq!(code, 0, "{env:?}");
    assert_eq!(env.payload["intervals"].as_array().unwrap().len(), 6);
    let (code, env) = envelope(&["roots", "--n", "7", "--interlace"]);
    assert_eq!(code, 0);
    assert_eq!(env.payload["verdict"], "StrictInterlace");
}

#[test]
fn measure_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.csv");
    let (code, env) = envelope(&["measure", "--n", "20", "--grid", "16", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(env.status, Status::Info);
    let mut reader = csv::Reader::from_path(&path).unwrap();
    assert_eq!(reader.headers().unwrap(), vec!["x", "empirical", "theoretical"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 16);
    for r in &rows {
        for field in r.iter() {
            let mantissa = field.trim_start_matches('-').split('e').next().unwrap();
            assert_eq!(mantissa.replace('.', "").len(), 17, "{field}");
            field.parse::<f64>().unwrap();
        }
    }
    let (code, env) = envelope(&["measure", "--n", "20", "--grid", "4", "--out", path.to_str().unwrap(), "--max-ks", "1e-4"]);
    assert_eq!(code, 1);
    assert_eq!(env.status, Status::Fail);
}

#[test]
fn poincare_presets() {
    let (code, env) = envelope(&["poincare", "--preset", "fibonacci", "--tmax", "50"]);
    assert_eq!(code, 0);
    let est = env.payload["verdict"]["estimate"].as_f64().unwrap();
    assert!((est - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
    let (code, env) = envelope(&["poincare", "--preset", "narayana", "--x", "-1", "--tmax", "20"]);
    assert_eq!(code, 0);
    assert_eq!(env.payload["verdict"]["kind"], "no_limit");
}

#[test]
fn envelope_rejects_unknown_fields() {
    let (_, out, _) = call(&["narayana", "--n", "3"]);
    let mut v: serde_json::Value = serde_json::from_str(&out).unwrap();
    v["extra"] = serde_json::json!(1);
    assert!(serde_json::from_value::<ReportEnvelope>(v).is_err());
}

#[test]
fn verify_all_small() {
    let (code, env) = envelope(&["verify-all", "--max-n", "12", "--seed", "7"]);
    assert_eq!(code, 0, "{:?}", env.failure);
    let ids: Vec<u64> = env.payload["criteria"].as_array().unwrap().iter().map(|c| c["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, (1..=10).collect::<Vec<_>>());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_narayana-css");
    let ok = Command::new(bin).args(["narayana", "--n", "4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["narayana", "--n", "x"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
