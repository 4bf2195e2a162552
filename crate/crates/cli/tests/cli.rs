use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rankmetric"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    assert_eq!(v["schema"], "rankmetric-report/1");
    (out.status.code().unwrap(), v)
}

#[test]
fn verify_main_q3_holds() {
    let (code, v) = json(&["paper", "verify-main", "--q", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["is_mrd"], true);
    assert_eq!(v["report"]["min_distance"], 5);
    assert_eq!(v["report"]["field"]["p"], 3);
}

#[test]
fn verify_main_q4_fails_with_witness() {
    let (code, v) = json(&["paper", "verify-main", "--q", "4"]);
    assert_eq!(code, 1);
    assert_eq!(v["report"]["is_mrd"], false);
    assert_eq!(v["report"]["witness"].as_array().unwrap().len(), 6);
    let text = run(&["paper", "verify-main", "--q", "4"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("witness rank"));
}

#[test]
fn mindist_of_scalar_code() {
    let f = fixture("gabidulin_q2_n6.json");
    let (code, v) = json(&["code", "mindist", "--in", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["min_distance"], 6);
}

#[test]
fn mrd_verdicts_and_strategies() {
    let g = fixture("gabidulin_q2_n6_k2.json");
    let t = fixture("trinomial_q2.json");
    assert_eq!(json(&["code", "mrd", "--in", g.to_str().unwrap()]).0, 0);
    let (code, v) = json(&[
        "code",
        "mrd",
        "--in",
        t.to_str().unwrap(),
        "--strategy",
        "full",
    ]);
    assert_eq!(code, 1);
    assert!(v["report"]["distance"]["witness"].is_array());
    let (code, v) = json(&[
        "code",
        "mindist",
        "--in",
        t.to_str().unwrap(),
        "--early-exit",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["early_exit"], 4);
    assert_eq!(v["report"]["witness_rank"], 4);
}

#[test]
fn dual_roundtrip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let t = fixture("trinomial_q2.json");
    let d = dir.path().join("dual.json");
    let dd = dir.path().join("dual2.json");
    let (code, v) = json(&[
        "code",
        "dual",
        "--in",
        t.to_str().unwrap(),
        "--out",
        d.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["dimension"], 24);
    json(&[
        "code",
        "dual",
        "--in",
        d.to_str().unwrap(),
        "--out",
        dd.to_str().unwrap(),
    ]);
    let (_, a) = json(&["code", "mindist", "--in", dd.to_str().unwrap()]);
    let (_, b) = json(&["code", "mindist", "--in", t.to_str().unwrap()]);
    assert_eq!(a["report"]["min_distance"], b["report"]["min_distance"]);
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run(&["paper", "verify-main"]).status.code(), Some(2));
    assert_eq!(run(&["field", "info", "--p", "4"]).status.code(), Some(2));
    assert_eq!(
        run(&["code", "mindist", "--in", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["linpoly", "rank", "--field", "2^3", "--coeffs", "1,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["linpoly", "rank", "--field", "2^3", "--coeffs", "1,2,99"])
            .status
            .code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "colour=blue\n").unwrap();
    let out = run(&[
        "--config",
        cfg.to_str().unwrap(),
        "field",
        "info",
        "--p",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown key"));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "format=json\ncap=50\n").unwrap();
    let c = cfg.to_str().unwrap();
    let out = run(&["--config", c, "field", "info", "--p", "3", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the table cap"));
    let out = run(&[
        "--config", c, "--cap", "1000", "field", "info", "--p", "3", "--n", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["order"], 81);
    let out = run(&[
        "--config", c, "--cap", "1000", "--format", "text", "field", "info", "--p", "3",
    ]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("F_3"));
}

#[test]
fn json_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("even.json");
    let out = run(&[
        "paper",
        "even-cex",
        "--q",
        "2",
        "--json",
        p.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(v["report"]["kernel_dim"], 4);
    assert_eq!(v["command"], "paper even-cex");
}

#[test]
fn linpoly_commands() {
    let (_, v) = json(&[
        "linpoly", "compose", "--field", "2^3", "--coeffs", "0,1,0", "--with", "0,1,0",
    ]);
    assert_eq!(v["report"]["result"], serde_json::json!([0, 0, 1]));
    let (_, v) = json(&["linpoly", "adjoint", "--field", "2^3", "--coeffs", "0,1,0"]);
    assert_eq!(v["report"]["result"], serde_json::json!([0, 0, 1]));
    let (_, v) = json(&["linpoly", "kernel", "--field", "2^3", "--coeffs", "[1,1,0]"]);
    assert_eq!(v["report"]["kernel_dim"], 1);
    let (_, v) = json(&["linpoly", "rank", "--field", "3^2", "--coeffs", "1,1"]);
    assert_eq!(v["report"]["rank"], 1);
}

#[test]
fn subspace_commands() {
    let (code, v) = json(&[
        "subspace",
        "scattered",
        "--field",
        "3^6",
        "--f",
        "0,1,0,0,0,0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["linear_set"]["size"], 364);
    let (code, v) = json(&["subspace", "family", "--field", "2^6", "--name", "u4"]);
    assert_eq!(code, 1);
    assert_eq!(v["report"]["linear_set"]["is_scattered"], false);
    let (_, v) = json(&[
        "subspace",
        "stabiliser",
        "--field",
        "2^6",
        "--f",
        "0,1,0,0,0,0",
    ]);
    assert_eq!(v["report"]["order"], 63);
}

#[test]
fn trinomial_scans() {
    assert_eq!(json(&["paper", "relscan", "--q", "3", "--full-gamma"]).0, 0);
    let (code, v) = json(&["paper", "relscan", "--q", "2"]);
    assert_eq!(code, 1);
    assert!(!v["report"]["system_solutions"]
        .as_array()
        .unwrap()
        .is_empty());
    let (code, v) = json(&["paper", "hirschfeld", "--q", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["report"].as_array().unwrap().len(), 13);
    let (code, v) = json(&[
        "paper",
        "table1",
        "--row",
        "2",
        "--q",
        "3",
        "--first-k",
        "1",
    ]);
    assert_eq!(code, 0);
    let coeffs = v["report"]["hits"][0]["coeffs"].clone();
    let list: Vec<String> = coeffs
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let (code, v) = json(&[
        "paper",
        "table1-verify",
        "--n",
        "3",
        "--q",
        "3",
        "--coeffs",
        &list.join(","),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["min_distance"], 5);
}

#[test]
fn output_independent_of_workers() {
    let args = |w: &'static str| {
        vec![
            "--workers",
            w,
            "--format",
            "json",
            "--seed",
            "3",
            "paper",
            "table1",
            "--row",
            "3",
            "--q",
            "3",
            "--mode",
            "random",
            "--trials",
            "300",
        ]
    };
    let a = run(&args("1"));
    let b = run(&args("8"));
    assert_eq!(a.status.code(), b.status.code());
    assert_eq!(a.stdout, b.stdout);

    let r = |w: &'static str| {
        run(&[
            "--workers",
            w,
            "--format",
            "json",
            "repro",
            "--q-set",
            "3",
            "--criteria",
            "5,8,10",
        ])
    };
    let (a, b) = (r("1"), r("8"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn repro_subset() {
    let (code, v) = json(&[
        "repro",
        "--q-set",
        "2,3",
        "--criteria",
        "2,6,11",
        "--property-cases",
        "10",
    ]);
    let rows = v["report"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["pass"], true);
    assert_eq!(rows[1]["pass"], true);
    assert_eq!(rows[2]["pass"], false);
    assert_eq!(code, 1);
    assert!(rows[0]["detail"].as_str().unwrap().contains("q=2"));
    assert!(!rows[0]["detail"].as_str().unwrap().contains("q=4"));
}
