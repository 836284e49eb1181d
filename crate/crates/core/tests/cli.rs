use std::process::{Command, Output};

fn qblocks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qblocks")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qblocks(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    qblocks(args).status.code().expect("exit code")
}

#[test]
fn worked_example() {
    let l = ["-e", "3", "-s", "1", "4,3,3,1"];
    let with = |cmd: &str| stdout(&[&[cmd][..], &l[..]].concat());
    assert_eq!(with("core").trim(), "4,2,1,1");
    assert_eq!(with("quotient").trim(), "-|-|1");
    assert_eq!(with("weight").trim(), "1");
    assert_eq!(with("block").lines().next(), Some("3,5,3"));
    assert_eq!(with("abacus"), "2 O·|O··\n1 OO|OO·\n0 O·|···\n");
}

#[test]
fn bounds() {
    assert_eq!(stdout(&["bound", "5", "5", "--exact"]).trim(), "15");
    assert_eq!(stdout(&["bound", "4", "5", "--closed"]).trim(), "9");
    assert_eq!(stdout(&["bound", "3", "8", "--bounds"]).trim(), "8 8");
    let row = stdout(&["bound", "2", "1-8", "--exact"]);
    let got: Vec<&str> = row.lines().map(str::trim).collect();
    assert_eq!(got, ["2 1 0", "2 2 1", "2 3 1", "2 4 2", "2 5 2", "2 6 3", "2 7 3", "2 8 4"]);
}

#[test]
fn blocks_and_shift() {
    let s = stdout(&["score", "-e", "2", "-S", "0,1", "1,1"]);
    assert!(s.contains("weight 2") && s.contains("block yes") && s.contains("core-block no"), "{s}");
    let s = stdout(&["shift", "-e", "4", "--ehat", "2", "--block", "1,1,1,1"]);
    assert!(s.contains("stuttering yes") && s.contains("class block-not-core"), "{s}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["weight", "-e", "2", "3,1"]), 0);
    assert_eq!(code(&["core", "-e", "0", "4,3"]), 1);
    assert_eq!(code(&["core", "-e", "3", "4,5"]), 2);
    assert_eq!(code(&["verify", "nosuch"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["bound", "8", "12", "--exact"]), 3);
}

#[test]
fn json_output() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "core", "-e", "3", "-s", "1", "4,3,3,1"])).unwrap();
    assert_eq!(v["core"], "4,2,1,1");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "bound", "5", "5", "--exact"])).unwrap();
    assert_eq!(v[0]["N"], "15");
}

#[test]
fn verify_reports() {
    for suite in ["theorem0", "spectra"] {
        let out = qblocks(&["--format", "json", "verify", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["passed"], true);
        assert!(!v["reports"][0]["cases"].as_array().unwrap().is_empty());
    }
}

#[test]
fn deterministic() {
    let a = stdout(&["--format", "json", "verify", "roundtrips", "--seed", "7"]);
    let b = stdout(&["--format", "json", "verify", "roundtrips", "--seed", "7"]);
    assert_eq!(a, b);
}
