use std::path::{Path, PathBuf};

use symplex::cli::run;

fn sample(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn go(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut argv = vec!["symplex"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn validate_good_and_bad() {
    assert_eq!(go(&["validate", &sample("samples/h3R_good.json")]).0, 0);
    let (code, text) = go(&["validate", &sample("samples/h3R_badomega.json")]);
    assert_eq!(code, 1);
    assert!(text.contains("(a1, a2, a4)"), "{text}");
    let (code, text) = go(&["--json", "validate", &sample("samples/h3R_badomega.json")]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["closedness_failures"][0]["triple"], serde_json::json!([0, 1, 3]));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(go(&["frobnicate"]).0, 2);
    assert_eq!(go(&["validate"]).0, 2);
    assert_eq!(go(&["validate", "/nonexistent/file.json"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("broken.json");
    std::fs::write(&p, "{\"dim\": 2, \"omega\": [[0, 1, \"x\"]]}").unwrap();
    assert_eq!(go(&["validate", p.to_str().unwrap()]).0, 2);
    assert_eq!(go(&["--help"]).0, 0);
}

#[test]
fn model_reduce_check_compose() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("model.json");
    let reduced = dir.path().join("a.json");
    let cocycle = sample("samples/xi1_h3R.json");
    assert_eq!(go(&["model", "build", &cocycle, "-o", model.to_str().unwrap()]).0, 0);
    assert_eq!(go(&["validate", model.to_str().unwrap()]).0, 0);
    let (code, text) = go(&["--json", "reduce", model.to_str().unwrap(), "-o", reduced.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["l_dim"], 1);
    assert_eq!(go(&["validate", reduced.to_str().unwrap()]).0, 0);
    let (code, text) = go(&["cocycle", "check", &cocycle]);
    assert_eq!(code, 0);
    assert!(text.contains("balanced: yes"));
}

#[test]
fn act_tau_pullback_equiv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("shifted.json");
    let phi = dir.path().join("phi.json");
    let cocycle = sample("samples/xi1_h3R.json");
    let args = ["act", "tau", &cocycle, "--tau", &sample("samples/tau_a1.json")];
    let mut full = args.to_vec();
    let (o, p) = (out.to_str().unwrap(), phi.to_str().unwrap());
    full.extend(["-o", o, "--phi-out", p]);
    let (code, text) = go(&full);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("certified"));
    let (code, text) = go(&["--json", "equiv", &cocycle, o]);
    assert_eq!(code, 0);
    assert!(text.contains("\"witness\""));
    assert_eq!(go(&["equiv", o, &sample("samples/xi1_h3R_shifted.json")]).0, 0);
    assert_eq!(go(&["pullback", &cocycle, "--pair", &sample("samples/pair_flip.json")]).0, 0);
}

#[test]
fn invariants_mark_missing_values() {
    let (code, text) = go(&["invariants", &sample("samples/xi1_h3R.json")]);
    assert_eq!(code, 0);
    assert!(text.contains("kappa7         n/a"), "{text}");
}

#[test]
fn catalog_verify_is_green() {
    let (code, text) = go(&["catalog", "verify", &sample("dim6.jsonl"), "--jobs", "2"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("66 entries: 66 ok"));
}

#[test]
fn catalog_verify_fails_on_bad_entry() {
    let dir = tempfile::tempdir().unwrap();
    let p: PathBuf = dir.path().join("bad.jsonl");
    let mut entries = symplex::catalog::bundled_dim6();
    entries.truncate(2);
    entries[0].cocycle.epsilon[0].3 = symplex::catalog::ScalarRepr::Text("7".into());
    std::fs::write(&p, symplex::catalog::to_jsonl(&entries)).unwrap();
    assert_eq!(go(&["catalog", "verify", p.to_str().unwrap()]).0, 1);
}
