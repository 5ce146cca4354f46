use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burau-sieve"))
        .args(args)
        .env("BURAU_SIEVE_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn skeleton_row_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        dir.path(),
        &[
            "skeleton",
            "--p",
            "2",
            "--min-poly",
            "t^3+t+1",
            "--type",
            "I",
            "--ambient",
            "bu3",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["signature"], "(9;1,0;1^2 7^1)");
    assert_eq!(v["genus"], 0);
    assert_eq!(v["edges"], 9);
}

#[test]
fn skeleton_p3() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        dir.path(),
        &["skeleton", "--p", "3", "--min-poly", "t^2+2t+2"],
    );
    assert_eq!(json(&out)["signature"], "(10;0,1;1^2 8^1)");
}

#[test]
fn cached_and_cold_runs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "skeleton",
        "--p",
        "43",
        "--min-poly",
        "t+4",
        "--ambient",
        "b3",
    ];
    let cold = run(dir.path(), &args);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let warm = run(dir.path(), &args);
    assert_eq!(cold.stdout, warm.stdout);
    let uncached = run(dir.path(), &[&args[..], &["--no-cache"]].concat());
    assert_eq!(cold.stdout, uncached.stdout);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let reducible = run(dir.path(), &["skeleton", "--p", "2", "--min-poly", "t^2+1"]);
    assert_eq!(reducible.status.code(), Some(2));
    let low = run(dir.path(), &["sieve", "--n-range", "6..7"]);
    assert_eq!(low.status.code(), Some(2));
    let row = run(dir.path(), &["table", "--verify", "--row", "99"]);
    assert_eq!(row.status.code(), Some(2));
    let tag = run(
        dir.path(),
        &[
            "skeleton",
            "--p",
            "2",
            "--min-poly",
            "t^3+t+1",
            "--type",
            "V",
        ],
    );
    assert_eq!(tag.status.code(), Some(2));
}

#[test]
fn state_cap_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        dir.path(),
        &[
            "skeleton",
            "--p",
            "43",
            "--min-poly",
            "t+4",
            "--state-cap",
            "10",
            "--no-cache",
        ],
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn table_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["table", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], 13);
    let one = run(dir.path(), &["table", "--verify", "--row", "4"]);
    assert_eq!(json(&one)["rows"][0]["row"], "p=5 N=8");
}

#[test]
fn addendum_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["addendum"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pairsPassed"], 78);
    assert_eq!(v["conjugacy"].as_array().unwrap().len(), 13);
}

#[test]
fn sieve_n7_contains_table_roots() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["sieve", "--n-range", "7..7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let mut found = Vec::new();
    for block in v["results"].as_array().unwrap() {
        assert_eq!(block["N"], 7);
        for t in block["triples"].as_array().unwrap() {
            found.push((
                t["p"].as_u64().unwrap(),
                t["minPoly"].as_str().unwrap().to_string(),
            ));
        }
    }
    for (p, m) in [(2, "t^3+t+1"), (2, "t^3+t^2+1"), (29, "t+7"), (43, "t+41")] {
        assert!(found.contains(&(p, m.to_string())), "missing ({p}, {m})");
    }
}

#[test]
fn sieve_with_genus_filter_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["sieve", "--n-range", "11..26", "--genus-zero"];
    let a = run(dir.path(), &args);
    let b = run(dir.path(), &args);
    assert_eq!(a.stdout, b.stdout);
    let ns: std::collections::BTreeSet<u64> = json(&a)["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["N"].as_u64().unwrap())
        .collect();
    assert_eq!(ns.into_iter().collect::<Vec<_>>(), vec![12, 15, 18]);
}

#[test]
fn sieve_config_without_informative_set() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    // {id} is too small at N = 7 and the search is disabled
    std::fs::write(&config, r#"{"sets": {"7": [["id"]]}, "search_max_len": 0}"#).unwrap();
    let out = run(
        dir.path(),
        &[
            "sieve",
            "--n-range",
            "7..7",
            "--config",
            config.to_str().unwrap(),
        ],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn factors_of_phi9_mod_19() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["factors", "--n", "9", "--p", "19"]);
    let factors: Vec<String> = json(&out)["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["factor"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(factors, ["t+4", "t+5", "t+6", "t+9", "t+16", "t+17"]);
}
