use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

use serde_json::Value;

fn oqsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oqsim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn script(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../scripts")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn temp_script(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("oqsim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn section<'a>(doc: &'a Value, kind: &str) -> &'a Value {
    doc["sections"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["kind"] == kind)
        .map(|s| &s["payload"])
        .unwrap_or_else(|| panic!("no {kind} section"))
}

#[test]
fn bell_json_is_one_document() {
    let out = oqsim(&["run", &script("bell.oq"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: Value =
        serde_json::from_str(&stdout(&out)).expect("stdout is exactly one JSON document");
    assert_eq!(doc["model"], "born");
    let c = section(&doc, "concurrence");
    for key in ["c_q", "c_mu", "c_scal"] {
        assert!(
            (c[key].as_f64().unwrap() - 1.0).abs() < 1e-12,
            "{key} = {}",
            c[key]
        );
    }
}

#[test]
fn intermediate_register_text_shows_fractions() {
    let out = oqsim(&["run", &script("ps22.oq")]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    for frac in ["1/4", "1/16", "3/16", "1/2", "5/16", "1/8"] {
        assert!(text.contains(frac), "missing {frac} in\n{text}");
    }
    assert!(text.contains("0.490600430"), "{text}");
}

#[test]
fn missing_file_exits_1() {
    let out = oqsim(&["run", "/nonexistent/none.oq"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot read"));
    assert!(out.stdout.is_empty());
}

#[test]
fn semantic_error_exits_1_with_line() {
    let p = temp_script("semantic.oq", "qubit a pm 1 1\n\ngate H on b\n");
    let out = oqsim(&["run", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn syntax_error_exits_1_with_line() {
    let p = temp_script("syntax.oq", "qubit a pm 1 1\nreport probs ;\n");
    let out = oqsim(&["run", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
}

#[test]
fn domain_error_exits_2() {
    let p = temp_script("runtime.oq", "qubit a bloch 4 0 0\nreport probs\n");
    let out = oqsim(&["run", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(stderr(&out).contains("line 1"), "{}", stderr(&out));
}

#[test]
fn model_flag_overrides_script() {
    let p = temp_script(
        "model.oq",
        "model arc\nqubit q amps (1, 0) (0, 0) memb 0.6 0.8\nreport memb\n",
    );
    let run = |extra: &[&str]| {
        let mut args = vec!["run", p.to_str().unwrap(), "--format", "json"];
        args.extend_from_slice(extra);
        let out = oqsim(&args);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        serde_json::from_str::<Value>(&stdout(&out)).unwrap()
    };
    let base = run(&[]);
    assert_eq!(base["model"], "arc");
    let born = run(&["--model", "born"]);
    assert_eq!(born["model"], "born");
    let mu = section(&born, "memberships")[0]["values"].clone();
    assert_eq!(mu, serde_json::json!([0.36, 0.64]));
    assert_ne!(section(&base, "memberships")[0]["values"], mu);
}

#[test]
fn seed_is_accepted_and_output_deterministic() {
    let a = oqsim(&["run", &script("ps22.oq"), "--format", "json", "--seed", "1"]);
    let b = oqsim(&["run", &script("ps22.oq"), "--format", "json", "--seed", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn selfcheck_passes_quickly() {
    let start = Instant::now();
    let out = oqsim(&["selfcheck"]);
    assert!(start.elapsed().as_secs_f64() < 5.0);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(!text.contains("FAIL"), "{text}");
    assert!(text.contains("7/7 passed"), "{text}");
}

#[test]
fn bloch_reports_norm_minimum() {
    let half_pi = std::f64::consts::FRAC_PI_2.to_string();
    let out = oqsim(&["bloch", &half_pi, "0", &half_pi, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let n = section(&doc, "norm");
    assert!((n["norm"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert!((n["closed_form"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn bloch_rejects_out_of_range_angle() {
    let out = oqsim(&["bloch", "4", "0", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn density_forms_have_expected_shape() {
    for (form, dim) in [("product", 2), ("kronecker", 4)] {
        let out = oqsim(&[
            "density", "1", "0.5", "0.3", "--form", form, "--format", "json",
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
        let m = section(&doc, "density")[0]["matrix"]
            .as_array()
            .unwrap()
            .clone();
        assert_eq!(m.len(), dim);
        let trace: f64 = (0..dim).map(|i| m[i][i][0].as_f64().unwrap()).sum();
        if form == "kronecker" {
            assert!((trace - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn concurrence_from_values_and_examples() {
    let h = "0.7071067811865476";
    let out = oqsim(&[
        "concurrence",
        h,
        "0",
        "0",
        h,
        h,
        "0",
        "0",
        h,
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((section(&doc, "concurrence")["c_q"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let out = oqsim(&["concurrence", "--example", "ps22", "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let c = section(&doc, "concurrence");
    assert!((c["c_scal"].as_f64().unwrap() - 0.348).abs() < 5e-4);

    // complex and fractional entries; unit norm in both sectors
    let out = oqsim(&[
        "concurrence",
        "1/2,1/2",
        "0",
        "0",
        "0,-0.7071067811865476",
        "1",
        "0",
        "0",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("c_mu   0"), "{}", stdout(&out));
}

#[test]
fn concurrence_rejects_unnormalized() {
    let out = oqsim(&["concurrence", "1", "1", "0", "0", "1", "0", "0", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_usage_exits_1() {
    assert_eq!(oqsim(&[]).status.code(), Some(1));
    assert_eq!(oqsim(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        oqsim(&["run", "x.oq", "--format", "yaml"]).status.code(),
        Some(1)
    );
    assert_eq!(oqsim(&["concurrence", "1", "2"]).status.code(), Some(1));
    assert_eq!(oqsim(&["--help"]).status.code(), Some(0));
}
