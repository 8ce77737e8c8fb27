use std::path::Path;
use std::process::{Command, Output};

fn hnt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hnt"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn build_group_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("rep.hc");
    let group = dir.path().join("diag.hg");
    assert!(
        hnt(&["build", "rep", "--m", "3", "--q", "5", "-o", p(&code)])
            .status
            .success()
    );
    assert!(
        hnt(&["group", "diag", "--m", "3", "--q", "5", "-o", p(&group)])
            .status
            .success()
    );
    let out = hnt(&[
        "analyze",
        "--code",
        p(&code),
        "--group",
        p(&group),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rho"], 2);
    assert_eq!(v["delta"], 3);
    assert_eq!(v["alphabet_group_order"], 120);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["levels"][1]["size"], 60);
}

#[test]
fn non_witness_exits_one() {
    // the single word 000 under the diagonal group: C_2 splits
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("s.hc");
    let group = dir.path().join("d.hg");
    hnt(&["build", "singleton", "--m", "3", "--q", "3", "-o", p(&code)]);
    hnt(&["group", "diag", "--m", "3", "--q", "3", "-o", p(&group)]);
    let out = hnt(&["analyze", "--code", p(&code), "--group", p(&group)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("verdict: false"));
}

#[test]
fn prod_from_inner_file() {
    let dir = tempfile::tempdir().unwrap();
    let inner = dir.path().join("rep.hc");
    hnt(&["build", "rep", "--m", "2", "--q", "3", "-o", p(&inner)]);
    let out = hnt(&["build", "prod", "--inner", p(&inner), "--l", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("4 3"));
    assert_eq!(text.lines().count(), 1 + 9);
}

#[test]
fn project_reports_shape() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("rep.hc");
    hnt(&["build", "rep", "--m", "3", "--q", "5", "-o", p(&code)]);
    let out = hnt(&["--json", "project", "--code", p(&code), "--block", "0,1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["size"], 5);
    assert_eq!(v["delta"], 2);
    assert_eq!(v["rho"], 1);
}

#[test]
fn classify_json() {
    let out = hnt(&[
        "classify",
        "--m",
        "3",
        "--q",
        "3",
        "--strategy",
        "subgroup-orbits",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let sizes: Vec<usize> = v["codes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, vec![3, 6]);
}

#[test]
fn table1_default_params() {
    let out = hnt(&["verify", "table1", "--row", "allpq", "--p", "2", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn exit_codes() {
    assert_eq!(hnt(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(hnt(&["build", "rep", "--m", "3"]).status.code(), Some(4));
    let budget = hnt(&[
        "--budget",
        "10",
        "classify",
        "--m",
        "3",
        "--q",
        "2",
        "--strategy",
        "all-subsets",
    ]);
    assert_eq!(budget.status.code(), Some(3));
    let bad_row = hnt(&["verify", "table1", "--row", "rep", "--m", "3", "--q", "3"]);
    assert_eq!(bad_row.status.code(), Some(4));
    // 27 vertices is past the all-subsets bound
    let too_big = hnt(&[
        "classify",
        "--m",
        "3",
        "--q",
        "3",
        "--strategy",
        "all-subsets",
    ]);
    assert_eq!(too_big.status.code(), Some(4));
}

#[test]
fn claims_filter() {
    let out = hnt(&["claims", "--filter", "table1-*", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 5);
    assert!(claims.iter().all(|c| c["status"] == "PASS"));
}

#[test]
fn rep35_file_and_level_past_covering_radius() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("rep35.hc");
    let group = dir.path().join("diag35.hg");
    assert_eq!(
        hnt(&["build", "rep", "--m", "3", "--q", "5", "-o", p(&code)])
            .status
            .code(),
        Some(0)
    );
    let text = std::fs::read_to_string(&code).unwrap();
    assert_eq!(
        text.lines()
            .skip(1)
            .filter(|l| !l.trim().is_empty())
            .count(),
        5
    );
    hnt(&["group", "diag", "--m", "3", "--q", "5", "-o", p(&group)]);
    let out = hnt(&[
        "analyze",
        "--code",
        p(&code),
        "--group",
        p(&group),
        "--s",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("covering radius"));
}
