use std::path::PathBuf;
use std::process::{Command, Output};

fn lab(args: &[&str], dir: &PathBuf) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pants-lab"))
        .args(args)
        .current_dir(dir)
        .env("PANTS_LAB_CACHE", PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-cache"))
        .output()
        .unwrap()
}

fn workdir(name: &str) -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn farey_distance_prints() {
    let out = lab(&["farey-distance", "0/1", "3/5"], &workdir("farey"));
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2");
    assert_eq!(lab(&["farey-distance", "1/0", "x"], &workdir("farey")).status.code(), Some(2));
}

#[test]
fn convexity_run_is_reproducible() {
    let dir = workdir("convexity");
    let args = ["audit-convexity", "--n", "5", "--q", "1,2", "--norm", "4", "--max-dq", "4", "--out", "a"];
    let first = lab(&args, &dir);
    assert_eq!(first.status.code(), Some(0));
    let a = std::fs::read(dir.join("a.json")).unwrap();
    let again = lab(&args, &dir);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(a, std::fs::read(dir.join("a.json")).unwrap());
    let json: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert!(json["pairs"].as_array().unwrap().iter().all(|r| r["verdict"] == "corroborated-complete"));
    let tsv = std::fs::read_to_string(dir.join("a.tsv")).unwrap();
    assert!(tsv.starts_with("index\td_Q\t"));
    let report = lab(&["report", "a.json"], &dir);
    assert_eq!(report.status.code(), Some(0));
    assert!(String::from_utf8(report.stdout).unwrap().contains("corroborated-complete"));
}

#[test]
fn flat_grid_three() {
    let dir = workdir("flat");
    assert_eq!(lab(&["audit-flat", "--n", "6", "--grid", "3"], &dir).status.code(), Some(0));
}

#[test]
fn lipschitz_run() {
    let dir = workdir("lipschitz");
    let out = lab(&["audit-lipschitz", "--n", "5", "--q", "1,2", "--norm", "3", "--starts", "10"], &dir);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_configs_exit_two() {
    let dir = workdir("bad");
    for args in [
        &["audit-convexity", "--n", "9", "--norm", "4"][..],
        &["audit-convexity", "--n", "5", "--q", "1,3", "--norm", "4"],
        &["audit-convexity", "--n", "6", "--q", "1,2", "--norm", "3"],
        &["audit-convexity", "--n", "5", "--norm", "0"],
        &["build-catalog", "--n", "5"],
        &["report", "missing.json"],
    ] {
        assert_eq!(lab(args, &dir).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn catalog_build_reports_sizes() {
    let out = lab(&["build-catalog", "--n", "5", "--norm", "1"], &workdir("build"));
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("n=5 norm=1 curves=5 pants_decompositions=5"));
}
