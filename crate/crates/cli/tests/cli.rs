use std::process::{Command, Output};

fn runvec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_runvec"))
        .args(args)
        .output()
        .expect("spawn runvec")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_barker_seven() {
    let o = runvec(&["analyze", "+++--+-", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["barker"], true);
    assert_eq!(v["rle"]["runs"], serde_json::json!([3, 2, 1, 1]));
    assert_eq!(v["gamma"], 4);
    for key in ["n", "S", "T", "C", "C_periodic", "r_tilde", "r", "balanced", "skew_symmetric"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn analyze_single_element() {
    let v = json(&runvec(&["analyze", "+", "--json"]));
    assert_eq!(v["n"], 1);
    assert_eq!(v["barker"], true);
    assert_eq!(v["r_tilde"], serde_json::json!([]));
}

#[test]
fn analyze_rle_input() {
    let v = json(&runvec(&["analyze", "--rle", "+,3,2,2,1,1", "--json"]));
    assert_eq!(v["barker"], false);
    assert_eq!(v["r_tilde"][5], -1);
    // the positional form detects RLE input too
    assert_eq!(json(&runvec(&["analyze", "+,3,2,2,1,1", "--json"])), v);
}

#[test]
fn parse_error_reports_position_and_writes_nothing() {
    let o = runvec(&["analyze", "++x-", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 2"));

    let o = runvec(&["analyze", "--rle", "+,3,a,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 4"));
}

#[test]
fn rle_round_trip() {
    let o = runvec(&["rle", "encode", "-++-"]);
    assert_eq!(stdout(&o), "-,1,2,1\n");
    assert_eq!(stdout(&runvec(&["rle", "decode", "-,1,2,1"])), "-++-\n");
}

#[test]
fn verify_examples_exit_zero() {
    for (targets, n) in [("theorem1", "16"), ("prop-skew", "17")] {
        let o = runvec(&["verify", "--targets", targets, "--max-n", n]);
        assert!(o.status.success(), "{targets}");
    }
    let o = runvec(&["verify", "--targets", "L7", "--max-n", "25", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    let met: u64 = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["hypotheses_met_count"].as_u64().unwrap())
        .sum();
    assert!(met > 0);
    assert_eq!(v["complete"], true);
}

#[test]
fn verify_limit_exceeded_exits_two() {
    let o = runvec(&["verify", "--targets", "theorem1", "--max-n", "21", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = runvec(&["verify", "--targets", "nope", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_limit_is_configurable() {
    let o = runvec(&["verify", "--targets", "theorem1", "--max-n", "8", "--sequence-sweep-max-n", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_examples() {
    let o = runvec(&["search", "--min-n", "15", "--max-n", "45", "--mode", "skew", "--json"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());

    let o = runvec(&["search", "--min-n", "3", "--max-n", "3", "--mode", "full", "--json"]);
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    for l in &lines {
        assert_eq!(l["n"], 3);
        assert_eq!(l["verdict"], "barker");
        assert!(l["C"].is_array() && l["rle"].is_object() && l["sequence"].is_string());
    }
}

#[test]
fn search_csv_counts() {
    let o = runvec(&["search", "--max-n", "13", "--normalize", "--csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("n,count\n1,1\n2,2\n"));
    assert!(text.ends_with("13,1\n"));
}

#[test]
fn search_rejects_bad_ranges() {
    for args in [
        &["search", "--min-n", "9", "--max-n", "3"][..],
        &["search", "--max-n", "26"],
        &["search", "--min-n", "15", "--max-n", "47", "--mode", "skew"],
        &["search", "--min-n", "14", "--max-n", "15", "--mode", "skew"],
        &["search", "--max-n", "5", "--mode", "diagonal"],
    ] {
        let o = runvec(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn classify_five_rles() {
    let o = runvec(&["classify", "--max-n", "13", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    let runs: Vec<_> = v["rles"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["rle"]["runs"].clone())
        .collect();
    assert_eq!(
        serde_json::Value::Array(runs),
        serde_json::json!([[2, 1], [3, 1, 1], [3, 2, 1, 1], [3, 3, 1, 2, 1, 1], [5, 2, 2, 1, 1, 1, 1]])
    );
}

#[test]
fn output_is_byte_identical() {
    let cases: [&[&str]; 4] = [
        &["verify", "--targets", "all", "--max-n", "11", "--json"],
        &["search", "--max-n", "21", "--json", "--workers", "1"],
        &["classify", "--max-n", "21", "--json"],
        &["analyze", "+++++--++-+-+", "--json"],
    ];
    for args in cases {
        let a = runvec(args);
        let b = runvec(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let one = runvec(&["search", "--max-n", "21", "--json", "--workers", "1"]);
    let many = runvec(&["search", "--max-n", "21", "--json", "--workers", "7"]);
    assert_eq!(one.stdout, many.stdout);
    let one = runvec(&["verify", "--max-n", "11", "--json", "--workers", "1"]);
    let many = runvec(&["verify", "--max-n", "11", "--json", "--workers", "5"]);
    assert_eq!(one.stdout, many.stdout);
}
