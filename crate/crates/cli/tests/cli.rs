use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dihedral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dihedral")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dihedral(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn act_examples() {
    assert_eq!(stdout(&["act", "1", "W(1;5)"]), "W(1;5)\n");
    assert_eq!(stdout(&["act", "res3*ind3 - 3", "W(1;5)"]), "0\n");
    assert_eq!(stdout(&["act", "ind3", "V(1,1;5) + W(2;5)"]), "V(1,1;15) + W(2;15) + W(3;15) + W(5;15) + W(7;15)\n");
}

#[test]
fn exit_codes() {
    assert_eq!(dihedral(&["act", "res4", "V(1,1;5)"]).status.code(), Some(2));
    assert_eq!(dihedral(&["act", "res3", "W(0;5)"]).status.code(), Some(2));
    assert_eq!(dihedral(&["normalform", "res3", "--primes", "3,4"]).status.code(), Some(2));
    assert_eq!(dihedral(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(dihedral(&["verify", "nosuch"]).status.code(), Some(2));
    assert_eq!(dihedral(&["verify", "diagram"]).status.code(), Some(0));
    assert_eq!(dihedral(&["translate", "phi-inv", "--prime", "3", "--base", "5", "--steps", "1", "W(1;45)"]).status.code(), Some(2));
}

#[test]
fn json_is_stable() {
    let args = ["normalform", "ind3*res5^2*res3*ind5", "--format", "json"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    let d = stdout(&["diagram", "45", "--primes", "3", "--seeds", "5", "--format", "json"]);
    assert_eq!(d, stdout(&["diagram", "45", "--primes", "3", "--seeds", "5", "--format", "json"]));
}

#[test]
fn printed_forms_parse_back() {
    let nf = stdout(&["normalform", "res7*ind3*res3^2*ind7", "--primes", "3,5,7", "--seeds", "1"]);
    let again = stdout(&["normalform", nf.trim(), "--primes", "3,5,7", "--seeds", "1"]);
    assert_eq!(nf, again);
    let v = stdout(&["act", "ind5*res5*ind3*res3", "V(1,1;15)"]);
    assert_eq!(stdout(&["act", "1", v.trim()]), v);
}

#[test]
fn reads_stdin_and_writes_files() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dihedral"))
        .args(["normalform", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"res5*ind5\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2*(res3*ind3) - 1\n");

    let path = std::env::temp_dir().join(format!("dihedral-{}.dot", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["diagram", "15", "--primes", "3", "--seeds", "5", "--format", "dot", "--out", p]), "");
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(dot.starts_with("graph diagram {"));
    assert_eq!(dot.matches("rank=same").count(), 2);
}

#[test]
fn nadir_report() {
    let out = stdout(&["nadir", "ind5*res5*ind3*res3"]);
    assert!(out.contains("p=3: terminus 0, nadir -1"));
    assert!(out.ends_with("total nadir: false []\n"));
    let out = stdout(&["nadir", "ind3*ind5*res3*res5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total_nadir"], true);
}
