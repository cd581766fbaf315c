use std::io::Write;
use std::process::{Command, Output, Stdio};

fn qwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwalk"))
        .args(args)
        .output()
        .expect("run qwalk")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = qwalk(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn poly_of_triangle() {
    let doc = json(&["poly", "-g", "Bw"]);
    assert_eq!(
        doc["f_q"]["coeffs"],
        serde_json::json!(["-4", "9", "-6", "1"])
    );
    assert_eq!(doc["f_q"]["var"], "lambda");
    assert!(doc.get("f_qbar").is_none());

    let doc = json(&["poly", "-g", "Bw", "--complement"]);
    assert_eq!(
        doc["f_qbar"]["coeffs"],
        serde_json::json!(["0", "0", "0", "1"])
    );

    let out = qwalk(&["poly", "-g", "Bw"]);
    assert!(stdout(&out).contains("λ^3 - 6λ^2 + 9λ - 4"));
}

#[test]
fn walks_of_path() {
    let doc = json(&["walks", "-g", "Bg", "--max-k", "2"]);
    assert_eq!(doc, serde_json::json!({"n": 3, "counts": ["3", "8", "24"]}));
    let by_enumeration = json(&["walks", "-g", "Bg", "--max-k", "2", "--enumerate"]);
    assert_eq!(by_enumeration, doc);
}

#[test]
fn genfun_and_coronal() {
    let doc = json(&["genfun", "--gen", "complete:3", "--order", "3"]);
    assert_eq!(doc["series"], serde_json::json!(["3", "12", "48", "192"]));
    assert_eq!(
        doc["genfun"]["den"]["coeffs"],
        serde_json::json!(["-1/4", "1"])
    );

    let doc = json(&["coronal", "-g", "Bg"]);
    assert_eq!(doc["num"]["coeffs"], serde_json::json!(["-1", "3"]));
    assert_eq!(doc["den"]["coeffs"], serde_json::json!(["0", "-3", "1"]));
}

#[test]
fn spectrum_weights_sum_to_order() {
    let doc = json(&["spectrum", "--gen", "path:3"]);
    let q: Vec<f64> = serde_json::from_value(doc["eigenvalues"].clone()).unwrap();
    let gamma: Vec<f64> = serde_json::from_value(doc["gammas"].clone()).unwrap();
    assert!((q[0] - 3.0).abs() < 1e-12);
    assert!((gamma.iter().sum::<f64>() - 3.0).abs() < 1e-12);
}

#[test]
fn edge_list_file_and_stdin() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "3\n0 1\n1 2").unwrap();
    let path = file.path().to_str().unwrap();
    let doc = json(&["walks", "-e", path, "--max-k", "2"]);
    assert_eq!(doc["counts"], serde_json::json!(["3", "8", "24"]));

    let mut child = Command::new(env!("CARGO_BIN_EXE_qwalk"))
        .args(["poly", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        doc["f_q"]["coeffs"],
        serde_json::json!(["-4", "9", "-6", "1"])
    );
}

#[test]
fn op_reports_matching_formulas() {
    let doc = json(&["op", "join", "gen:empty:1", "gen:empty:2"]);
    assert_eq!(
        doc["direct"]["coeffs"],
        serde_json::json!(["0", "3", "-4", "1"])
    );
    assert_eq!(doc["match"], true);

    for (op, a, b) in [
        ("union", "Bw", "Bg"),
        ("corona", "gen:cycle:4", "gen:path:3"),
        ("edge-corona", "gen:cycle:4", "gen:path:3"),
        ("edge-corona", "gen:complete:3", "gen:empty:2"),
    ] {
        let doc = json(&["op", op, a, b]);
        assert_eq!(doc["match"], true, "{op} {a} {b}");
    }
    let doc = json(&["op", "complement", "gen:cycle:5"]);
    assert_eq!(doc["match"], true);

    // No closed form for the complement of a non-regular graph.
    let doc = json(&["op", "complement", "Bg"]);
    assert!(doc["match"].is_null());
    assert!(doc["formula_error"].is_string());
}

#[test]
fn verify_sweeps() {
    let out = qwalk(&["verify", "prop2.1", "--max-n", "5", "--seed", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("prop2.1 PASS"));

    let doc = json(&["verify", "thm2.9", "--max-n", "4", "--samples", "5"]);
    assert_eq!(doc["passed"], true);
    assert!(doc["notes"][0]
        .as_str()
        .unwrap()
        .contains("reading matched"));

    for id in ["prop2.10", "thm2.7", "ex2.16", "thm2.12"] {
        let out = qwalk(&["verify", id, "--max-n", "4", "--samples", "10"]);
        assert!(out.status.success(), "{id}");
    }
}

#[test]
fn errors_exit_nonzero() {
    let out = qwalk(&["poly", "-g", "~~~"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    assert!(!qwalk(&["verify", "thm9.9"]).status.success());
    assert!(!qwalk(&["op", "join", "Bw"]).status.success());
    assert!(!qwalk(&["poly", "-g", "Bw", "--gen", "complete:3"])
        .status
        .success());
}

#[test]
fn thread_count_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_qwalk"))
        .args(["verify", "thm2.3", "--max-n", "3", "--samples", "5"])
        .env("QWALK_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_qwalk"))
        .args(["poly", "-g", "Bw"])
        .env("QWALK_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
