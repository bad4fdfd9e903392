use assert_cmd::Command;
use coinvariant::exact::{PolyRecord, SparsePolynomial};
use serde_json::Value;

fn coinv() -> Command {
    let mut cmd = Command::cargo_bin("coinv").unwrap();
    cmd.env("NO_COLOR", "1");
    cmd
}

fn stdout(args: &[&str]) -> String {
    let out = coinv().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

fn lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn enumerate_streams_one_record_per_partition() {
    assert_eq!(lines(&stdout(&["enumerate", "--n", "2", "--shape", "1,1"])).len(), 2);
    let recs = lines(&stdout(&["enumerate", "--n", "2", "--shape", "1,0"]));
    let mut coinvs: Vec<u64> = recs.iter().map(|r| r["coinv"].as_u64().unwrap()).collect();
    coinvs.sort_unstable();
    assert_eq!(coinvs, [0, 1, 1]);
}

#[test]
fn enumerate_single_lookup_echoes_worked_code() {
    let out = stdout(&[
        "enumerate",
        "--n",
        "16",
        "--shape",
        "3,3,2,2,0,0",
        "--blocks",
        "1,3,5,9|6,7,8,10,14|2,12,15|4,13||11,16",
    ]);
    let rec = &lines(&out)[0];
    let code: Vec<u64> = rec["code"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(code, [1, 2, 2, 1, 3, 0, 0, 2, 2, 3, 5, 1, 0, 1, 2, 5]);
    assert_eq!(rec["coinv"], 30);
}

#[test]
fn code_and_insert_round_trip() {
    let rec = &lines(&stdout(&["insert", "--n", "3", "--shape", "1,1,0", "--code", "2,0,0"]))[0];
    let blocks = rec["blocks"].as_str().unwrap();
    let back = &lines(&stdout(&["code", "--shape", "1,1,0", "--blocks", blocks]))[0];
    assert_eq!(back["code"], serde_json::json!([2, 0, 0]));
    let m = &lines(&stdout(&["code", "--n", "3", "--shape", "1,1,0", "--code", "2,2,0"]))[0];
    assert_eq!(m["member"], false);
}

#[test]
fn hilbert_examples() {
    let series = |n: &str, shape: &str| lines(&stdout(&["hilbert", "--n", n, "--shape", shape]))[0]["coinv"].clone();
    assert_eq!(series("3", "1,1,1"), serde_json::json!([1, 2, 2, 1]));
    assert_eq!(series("2", "1,0"), serde_json::json!([1, 2]));
    assert_eq!(series("2", "0,0"), serde_json::json!([1, 2, 1]));
    let rec = &lines(&stdout(&["hilbert", "--n", "4", "--shape", "2,1,0", "--cross-check"]))[0];
    assert_eq!(rec["agree"], true);
    let csv = stdout(&["hilbert", "--n", "2", "--shape", "0,0", "--cross-check", "--out", "csv"]);
    assert_eq!(csv, "degree,coinv,ambient,ideal,quotient\n0,1,1,0,1\n1,2,2,0,2\n2,1,3,2,1\n");
}

#[test]
fn delta_examples_and_round_trip() {
    let rec = &lines(&stdout(&["delta", "--tableau", "2,1,3|5,4,9|6", "--n", "9", "--s", "5"]))[0];
    assert_eq!(rec["leading_exponent"], serde_json::json!([1, 2, 1, 0, 1, 0, 4, 4, 0]));
    assert_eq!(rec["degree"], 13);
    let record: PolyRecord = serde_json::from_value(rec["polynomial"].clone()).unwrap();
    let poly = SparsePolynomial::from_record(&record).unwrap();
    assert_eq!(poly.to_record(), record);

    let one = &lines(&stdout(&["delta", "--blocks", "1,2|", "--shape", "1,0"]))[0];
    assert_eq!(one["display"], "1");
    let x1 = &lines(&stdout(&["delta", "--blocks", "2|1", "--shape", "1,0"]))[0];
    assert_eq!(x1["display"], "x1");
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--suite", "bijection", "--max-n", "5"][..],
        &["verify", "--suite", "wilson", "--n", "3", "--k", "3", "--s", "2"],
        &["verify", "--suite", "golden"],
        &["verify", "--suite", "staircase", "--max-n", "3"],
        &["verify", "--suite", "harmonic", "--max-n", "3"],
    ] {
        let report: Value = serde_json::from_str(&stdout(args)).unwrap();
        assert_eq!(report["status"], "pass", "{args:?}");
    }
    let report: Value = serde_json::from_str(&stdout(&["verify", "--suite", "leading", "--n", "2", "--shape", "1,0"])).unwrap();
    assert_eq!(report["checks"][0]["detail"]["leading"], serde_json::json!(["(0,0)", "(0,1)", "(1,0)"]));
}

#[test]
fn budget_skips_cases() {
    let report: Value = serde_json::from_str(&stdout(&["verify", "--suite", "bijection", "--max-n", "3", "--budget", "2"])).unwrap();
    assert_eq!(report["checks"].as_array().unwrap().len(), 2);
    assert!(report["skipped"].as_u64().unwrap() > 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "all", "--max-n", "3"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["enumerate", "--n", "4", "--shape", "2,1,0"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn timings_live_in_their_own_field() {
    let report: Value = serde_json::from_str(&stdout(&["verify", "--suite", "golden", "--timings"])).unwrap();
    assert!(report["timings"].is_array());
    assert!(report["checks"][0].get("seconds").is_none());
    let plain: Value = serde_json::from_str(&stdout(&["verify", "--suite", "golden"])).unwrap();
    assert!(plain.get("timings").is_none());
}

#[test]
fn failed_verification_exits_1_with_counterexample() {
    let dir = std::env::temp_dir().join(format!("coinv-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"[{"kind": "hilbert", "name": "wrong", "n": 2, "shape": "1,0", "series": [1, 3]}]"#).unwrap();
    let out = coinv()
        .args(["verify", "--suite", "golden", "--fixtures", path.to_str().unwrap()])
        .assert()
        .code(1)
        .get_output()
        .stdout
        .clone();
    let report: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(report["status"], "fail");
    assert_eq!(report["checks"][0]["counterexample"]["got"]["coinv"], serde_json::json!([1, 2]));
    assert_eq!(report["checks"][0]["params"]["series"], serde_json::json!([1, 3]));
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["enumerate", "--n", "2", "--shape", "1,2"][..],
        &["enumerate", "--n", "1", "--shape", "2"],
        &["enumerate", "--shape", "1,0"],
        &["hilbert", "--n", "2", "--shape", "x"],
        &["delta", "--tableau", "2|1"],
        &["delta", "--tableau", "1,2|1"],
        &["insert", "--n", "3", "--shape", "1,1,0", "--code", "2,2,0"],
        &["code", "--n", "3", "--shape", "1,1,0", "--code", "1,0"],
        &["wilson", "--n", "2", "--k", "3", "--s", "2"],
        &["verify", "--suite", "leading", "--shape", "1,0"],
        &["verify", "--suite", "golden", "--fixtures", "/nonexistent/fixtures.json"],
    ] {
        coinv().args(args).assert().code(2);
    }
}

#[test]
fn output_flag_writes_file_and_text_has_no_color() {
    let path = std::env::temp_dir().join(format!("coinv-out-{}.txt", std::process::id()));
    coinv()
        .args(["verify", "--suite", "golden", "--out", "text", "--output", path.to_str().unwrap()])
        .assert()
        .success()
        .stdout("");
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.ends_with("pass: 21 checks, 0 skipped\n"));
    assert!(!text.contains('\x1b'));
}

#[test]
fn wilson_command() {
    let rec = &lines(&stdout(&["wilson", "--n", "3", "--k", "3", "--s", "2"]))[0];
    assert_eq!(rec["equal"], true);
    assert_eq!(rec["partition"], "2,1");
    assert_eq!(rec["hilbert"], serde_json::json!([1, 2]));
}
