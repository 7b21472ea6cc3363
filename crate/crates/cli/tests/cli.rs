use std::io::Write;
use std::process::{Command, Output};

fn qtcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtcodes")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn recipe_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn fixture(name: &str) -> String {
    format!("{}/../core/paper/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn construct_reports_parameters() {
    let out = qtcodes(&["construct", &fixture("a1_n3_l2.json")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("[12, 5, 4]"));

    let out = qtcodes(&["construct", &fixture("b_n9_l2.json"), "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["gray"], serde_json::json!([36, 10, 8]));
    assert_eq!(v["k"], 10);
    assert_eq!(v["family"], "B");
}

#[test]
fn construct_json_carries_the_bound() {
    let out = qtcodes(&["construct", &fixture("special_a2_n3_l2.json"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["projection_bound"], 8);
    assert_eq!(v["d_lee"], 8);
}

#[test]
fn precondition_violation_exits_2() {
    // f_0 = x^2+x+1 is not coprime to h = (x^3+1)/(x+1).
    let f = recipe_file(r#"{"n":3,"l":2,"family":"SpecialA2","g_poly":"x+1","f":["x^2+x+1","1"]}"#);
    let out = qtcodes(&["construct", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd(f_0"));
}

#[test]
fn guard_refusal_exits_3_with_cardinality() {
    // 2^32 codewords: over the default guard.
    let f = recipe_file(r#"{"n":16,"l":2,"family":"A1","g":["1","x"]}"#);
    let out = qtcodes(&["construct", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 3);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["k"], 32);
    assert!(v["d_lee"].is_null());
}

#[test]
fn force_enum_lifts_the_guard() {
    let f = recipe_file(r#"{"n":14,"l":1,"family":"A1","g":["1"]}"#);
    let path = f.path().to_str().unwrap();
    assert_eq!(code(&qtcodes(&["construct", path])), 3);
    let out = qtcodes(&["construct", path, "--force-enum", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["d_lee"], 1);
}

#[test]
fn parse_errors_exit_5() {
    let f = recipe_file(r#"{"n":3,"l":1,"family":"A1","g":["x^"]}"#);
    assert_eq!(code(&qtcodes(&["construct", f.path().to_str().unwrap()])), 5);
    let f = recipe_file("not json");
    assert_eq!(code(&qtcodes(&["construct", f.path().to_str().unwrap()])), 5);
    let out = qtcodes(&["classify", "--n", "3", "--gen", "x^"]);
    assert_eq!(code(&out), 5);
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 2"));
}

#[test]
fn verify_paper_exits_0_and_flags_the_audited_row() {
    let out = qtcodes(&["verify-paper"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("mismatch*"));
    assert!(text.contains("listed f_1"));

    let out = qtcodes(&["verify-paper", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_match"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
}

#[test]
fn search_is_deterministic_across_workers() {
    let args = ["search", "--n", "3", "--l", "2", "--family", "SpecialA2", "--max-deg", "3", "--json"];
    let base = qtcodes(&args);
    assert_eq!(code(&base), 0);
    for w in ["1", "2", "7"] {
        let mut a = args.to_vec();
        a.extend(["--workers", w]);
        assert_eq!(qtcodes(&a).stdout, base.stdout);
    }
    let v: serde_json::Value = serde_json::from_slice(&base.stdout).unwrap();
    assert!(v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["gray"] == serde_json::json!({"length":12,"dimension":2,"distance":8})));
}

#[test]
fn search_text_table_and_empty_space() {
    let out = qtcodes(&["search", "--n", "3", "--l", "2", "--family", "a1", "--max-deg", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("[12, 5, 4]"));
    let out = qtcodes(&["search", "--n", "3", "--l", "2", "--family", "A1", "--max-deg", "3", "--max-candidates", "0"]);
    assert_eq!(code(&out), 4);
    let out = qtcodes(&["search", "--n", "3", "--l", "2", "--family", "A1", "--max-deg", "6"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn search_rows_reconstruct() {
    let out = qtcodes(&["search", "--n", "4", "--l", "2", "--family", "B", "--max-deg", "3", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for row in v["rows"].as_array().unwrap() {
        let f = recipe_file(&row["recipe"].to_string());
        let c = qtcodes(&["construct", f.path().to_str().unwrap(), "--json"]);
        assert_eq!(code(&c), 0);
        let s: serde_json::Value = serde_json::from_slice(&c.stdout).unwrap();
        assert_eq!(s["d_lee"], row["d_lee"]);
        assert_eq!(s["k"], row["k"]);
    }
}

#[test]
fn classify_reports_shapes() {
    let out = qtcodes(&["classify", "--n", "3", "--gen", "x+1"]);
    assert_eq!(stdout(&out).trim(), "A1 with g = x+1");
    let out = qtcodes(&["classify", "--n", "3", "--gen", "u*(x+1)"]);
    assert_eq!(stdout(&out).trim(), "A2 with g = x+1");
    let out = qtcodes(&["classify", "--n", "2", "--gen", "x^2+1"]);
    assert_eq!(stdout(&out).trim(), "A2 with g = 1");
    let out = qtcodes(&["classify", "--n", "3", "--gen", "x^2+1"]);
    assert_eq!(stdout(&out).trim(), "B/other");
    let out = qtcodes(&["classify", "--n", "13", "--gen", "1"]);
    assert_eq!(code(&out), 3);
}
