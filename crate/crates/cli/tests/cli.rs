use std::process::{Command, Output};

use affine_permutation::{enumerate_box, AffinePermutation};
use dars::DarsTuple;

fn dars(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dars")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_main_example() {
    let o = dars(&["compute", "--window", "10,3,-3,12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"p":"1,3/2/4","q":"1,2/3/4","lambda":[6,6,5],"n0":7,"n":4,"index":3}"#);
}

#[test]
fn compute_identity_gives_single_rows() {
    let o = dars(&["compute", "--window", "1,2,3"]);
    let t: DarsTuple = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(t.pbar.to_string(), "1,2,3");
    assert_eq!(t.qbar.to_string(), "1,2,3");
    assert!(t.lambda.is_empty());
}

#[test]
fn embed_check_agrees_with_classical() {
    let o = dars(&["compute", "--window", "3,6,5,2,1,4", "--embed-check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["lambda"], serde_json::json!([]));
    assert_eq!(lines[0]["n0"], 2);
    assert_eq!(lines[1]["classical_p"], "1,4/2,5/3/6");
    assert_eq!(lines[1]["classical_q"], "1,2/3,6/4/5");
    assert_eq!(lines[1]["rows_match"], true);
}

#[test]
fn embed_check_rejects_a_genuinely_affine_window() {
    let o = dars(&["compute", "--window", "10,3,-3,12", "--embed-check"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_window_is_a_usage_error() {
    for w in ["1,1", "x", "1"] {
        assert_eq!(dars(&["compute", "--window", w]).status.code(), Some(2), "{w}");
    }
    assert_eq!(dars(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn invert_main_example() {
    let o = dars(&["invert", "--p", "1,3/2/4", "--q", "1,2/3/4", "--lambda", "6,6,5", "--n0", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[10,3,-3,12]");
}

#[test]
fn invert_rejects_column_slide() {
    for n0 in ["2", "3", "5"] {
        let o = dars(&["invert", "--p", "2/1", "--q", "2/1", "--lambda", "1", "--n0", n0]);
        assert_eq!(o.status.code(), Some(4));
        assert!(stderr(&o).contains("(2)(b)"), "{}", stderr(&o));
    }
}

#[test]
fn validate_reports_each_condition() {
    let o = dars(&["validate", "--p", "2/1", "--q", "2/1", "--lambda", "1", "--n0", "3"]);
    assert_eq!(o.status.code(), Some(4));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let failed: Vec<&str> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "fail")
        .map(|r| r["condition"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["(2)(b)"]);
    let ok = dars(&["validate", "--p", "1,3/2/4", "--q", "1,2/3/4", "--lambda", "6,6,5", "--n0", "7"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn invert_of_compute_on_a_box() {
    for w in enumerate_box(3, -2, 4, None).unwrap().into_iter().step_by(7) {
        let o = dars(&["compute", "--window", &w.to_string()]);
        let t: DarsTuple = serde_json::from_str(stdout(&o).trim()).unwrap();
        let lambda: Vec<String> = t.lambda.parts().iter().map(usize::to_string).collect();
        let back = dars(&[
            "invert",
            "--p",
            &t.pbar.to_string(),
            "--q",
            &t.qbar.to_string(),
            "--lambda",
            &lambda.join(","),
            "--n0",
            &t.n0.to_string(),
        ]);
        assert_eq!(stdout(&back).trim().parse::<AffinePermutation>().unwrap(), w);
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(dars(&["verify", "--n", "1"]).status.code(), Some(2));
    assert_eq!(dars(&["verify", "--n", "3", "--max-length", "99"]).status.code(), Some(3));
    let o = dars(&["verify", "--n", "2", "--suite", "roundtrip"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.len() > 10);
    assert!(lines[..lines.len() - 1].iter().all(|l| l["suite"] == "roundtrip" && l["pass"] == true));
    assert_eq!(lines.last().unwrap()["summary"]["roundtrip"]["failed"], 0);
}

#[test]
fn verify_all_on_rank_three() {
    let o = dars(&["verify", "--n", "3", "--max-length", "8", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o).lines().last().unwrap_or(""));
}

#[test]
fn verify_reverse_roundtrip_and_box() {
    let o = dars(&["verify", "--n", "2", "--suite", "reverse-roundtrip", "--max-lambda", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = dars(&["verify", "--n", "2", "--lo", "-3", "--hi", "4", "--suite", "symmetry"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn enumerate_lists_windows_with_tuples() {
    let o = dars(&["enumerate", "--n", "2", "--max-length", "2", "--indices", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    // 1, s0, s1, s0s1, s1s0
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().any(|l| l["window"] == "[1,2]" && l["tuple"]["n0"] == 2));
}

#[test]
fn evac_commands() {
    let o = dars(&["evac", "--tabloid", "1,2,3"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["evacuation"], "1,2,3");
    let o = dars(&["evac", "--window", "10,3,-3,12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(dars(&["evac"]).status.code(), Some(2));
}

#[test]
fn classical_command() {
    let o = dars(&["classical", "--perm", "365214"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["p"], "1,4/2,5/3/6");
    assert_eq!(v["realizations_agree"], true);
}

#[test]
fn render_formats() {
    let o = dars(&["render", "--window", "10,3,-3,12", "--windows", "1..8", "--format", "svg", "--colors", "--labels"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("<svg"));
    let o = dars(&["render", "--window", "10,3,-3,12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["w"], "[10,3,-3,12]");
    let o = dars(&["render", "--window", "1,2,3", "--labels", "--partitions"]);
    assert!(stdout(&o).contains("lambda^3"));
    let o = dars(&["render", "--window", "10,3,-3,12", "--windows", "-9..1"]);
    assert_eq!(o.status.code(), Some(2));
}
