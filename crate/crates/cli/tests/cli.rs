use std::process::{Command, Output};

use promaton::Machine;
use serde_json::Value;

fn promaton(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_promaton"))
        .args(args)
        .env_remove("PROMATON_MAX_DFA_STATES")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

#[test]
fn build_evenodd_afa() {
    let out = promaton(&["build", "evenodd-afa", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["type"], "afa");
    assert_eq!(v["states"], 23);
}

#[test]
fn verify_lasvegas_trios() {
    let out = promaton(&["verify", "lv-trios", "--n", "2", "--r", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "solves");
    assert_eq!(v["measured"]["min_success"], "1/2");
}

#[test]
fn minsize_evenodd_one() {
    let out = promaton(&["minsize", "--kind", "unary-dfa", "--problem", "evenodd", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["measured"]["value"], "4");
    assert_eq!(v["witness"]["states"], 4);
}

#[test]
fn exit_codes() {
    assert_eq!(promaton(&["reproduce-all", "--tier", "medium"]).status.code(), Some(2));
    assert_eq!(promaton(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(promaton(&["build", "evenodd-dfa"]).status.code(), Some(2));
    assert_eq!(promaton(&["build", "evenodd-dfa", "--k", "12", "--max-dfa-states", "64"]).status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"type\": \"dfa\"").unwrap();
    let out = promaton(&["simulate", "--machine", bad.to_str().unwrap(), "--word", "a"]);
    assert_eq!(out.status.code(), Some(4));

    // a 4-cycle cannot tell 4 from 12 apart
    let small = dir.path().join("small.json");
    let out = promaton(&["build", "evenodd-dfa", "--k", "1", "-o", small.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = promaton(&["verify", "promise", "--machine", small.to_str().unwrap(), "--problem", "evenodd", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "fails");
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_promaton"))
        .args(["build", "evenodd-dfa", "--k", "4"])
        .env("PROMATON_MAX_DFA_STATES", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let pfa = dir.path().join("pfa.json");
    promaton(&["build", "up-pfa", "--p", "9/10", "-o", pfa.to_str().unwrap()]);
    let run = |seed: &str, jobs: &str| {
        promaton(&["prob", "mc", "--machine", pfa.to_str().unwrap(), "--word", "aaa", "--trials", "20000", "--seed", seed, "--jobs", jobs]).stdout
    };
    assert_eq!(run("5", "1"), run("5", "4"));
    assert_ne!(run("5", "2"), run("6", "2"));
    let a = promaton(&["minsize", "--kind", "unary-dfa", "--problem", "up", "--p", "9/10"]).stdout;
    let b = promaton(&["minsize", "--kind", "unary-dfa", "--problem", "up", "--p", "9/10"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn emitted_machines_round_trip() {
    let builds: &[&[&str]] = &[
        &["evenodd-dfa", "--k", "2"],
        &["evenodd-afa", "--k", "2"],
        &["evenodd-afa-epsfree", "--k", "3"],
        &["parity-dfa"],
        &["trios-dfa", "--n", "2", "--r", "1"],
        &["trios-2dfa", "--n", "2", "--r", "1"],
        &["trios-pfa", "--n", "2", "--r", "2"],
        &["up-pfa", "--p", "3/5"],
        &["up-dfa", "--p", "9/10"],
    ];
    for b in builds {
        let mut args = vec!["build"];
        args.extend_from_slice(b);
        let out = promaton(&args);
        assert_eq!(out.status.code(), Some(0), "{b:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let machine = Machine::from_json(&text).unwrap();
        assert_eq!(machine.to_json().trim_end(), text.trim_end(), "{b:?}");
    }
}

#[test]
fn conversions_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let afa = dir.path().join("afa.json");
    let dfa = dir.path().join("dfa.json");
    promaton(&["build", "evenodd-afa", "--k", "2", "-o", afa.to_str().unwrap()]);
    let out = promaton(&["convert", "--from", afa.to_str().unwrap(), "--algorithm", "unary-afa-dfa", "-o", dfa.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let min = json(&promaton(&["convert", "--from", dfa.to_str().unwrap(), "--algorithm", "minimize"]));
    assert_eq!(min["states"], 8);
    let sim = json(&promaton(&["simulate", "--machine", dfa.to_str().unwrap(), "--word", &"a".repeat(16)]));
    assert_eq!(sim["accepted"], true);

    let v = json(&promaton(&["bounds", "--formula", "afa-to-dfa", "--n", "2"]));
    assert_eq!(v["value"], "256");
    let v = json(&promaton(&["bounds", "--formula", "svfa-to-dfa", "--n", "7"]));
    assert_eq!(v["value"], "10");
}

#[test]
fn probability_commands() {
    let v = json(&promaton(&["prob", "expeq-params", "--c", "3", "--m", "1", "--n", "1"]));
    assert_eq!(v["a"], "1/972");
    assert_eq!(v["t"], 1944);
    let v = json(&promaton(&["prob", "expeq-compose", "--a", "1/2", "--r", "1/4", "--t", "2"]));
    assert_eq!(v["mode"], "exact");
    assert_eq!(v["distribution"]["neutral"], "1/16");
    assert_eq!(v["distribution"]["accept"], "5/8");
    let v = json(&promaton(&["prob", "expeq-compose", "--c", "100", "--m", "1", "--n", "1", "--side", "yes"]));
    assert_eq!(v["mode"], "enclosure");
    let out = promaton(&["prob", "lasvegas", "--n", "3", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["measured"]["min_success"], "5/9");
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = promaton(&["verify", "disjoint", "--problem", "trios", "--n", "2", "--r", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["verdict"], "solves");
}
