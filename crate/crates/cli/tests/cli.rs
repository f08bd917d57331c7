use std::io::Write;
use std::process::{Command, Output, Stdio};

fn partcat(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_partcat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const VANISHING: &str = "field Q
n 2
type 3 -> 0
1*P(3->0)[{1},{2},{3}]
-1*P(3->0)[{1,3},{2}]
-1*P(3->0)[{1,2},{3}]
-1*P(3->0)[{1},{2,3}]
2*P(3->0)[{1,2,3}]
";

#[test]
fn dims_table_contains_end_dimension() {
    let o = partcat(&["dims", "--n", "3", "--max", "3"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    let row1 = text.lines().find(|l| l.starts_with("1\t")).unwrap();
    assert_eq!(row1.split('\t').nth(2), Some("3"));
    let o = partcat(&["dims", "--n", "3", "--max", "3", "--json"], "");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["hom_dim"][1][1], "3");
}

#[test]
fn reduce_kills_the_vanishing_combination() {
    let o = partcat(&["reduce", "--n", "2", "-"], VANISHING);
    assert!(o.status.success());
    assert!(stdout(&o).contains("# 0-morphism"));
}

#[test]
fn psi_of_multiplication() {
    let o = partcat(&["psi", "--n", "2", "-"], "P(2->1)[{1,2,1'}]\n");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["rows"].as_u64(), v["cols"].as_u64()), (Some(2), Some(4)));
    assert_eq!(v["entries"], serde_json::json!([[0, 0, "1/1"], [1, 3, "1/1"]]));
}

#[test]
fn compose_and_tensor_files() {
    let dir = tempfile::tempdir().unwrap();
    let j = dir.path().join("j.txt");
    std::fs::write(&j, "n 2\nJP(2->0; n=2)[{1},{2}]J(#1,#2)\n").unwrap();
    let s = "P(2->2)[{1,2'},{2,1'}]\n";
    let o = partcat(&["compose", "--n", "2", j.to_str().unwrap(), "-"], s);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("-1*JP(2->0; n=2)[{1},{2}]J(#1,#2)"));
    let o = partcat(&["tensor", "--n", "2", j.to_str().unwrap(), "-"], "P(1->1)[{1,1'}]\n");
    assert!(o.status.success());
    assert!(stdout(&o).contains("type 3 -> 1"));
    let o = partcat(&["compose", "-", "-"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn xbasis_round_trip() {
    let o = partcat(&["xbasis", "-"], VANISHING);
    let x = stdout(&o);
    assert!(x.contains("basis x"));
    assert!(x.ends_with("1*P(3->0)[{1},{2},{3}]\n"));
    let o = partcat(&["xbasis", "-"], &x);
    let back = stdout(&o);
    assert_eq!(back.lines().count(), VANISHING.lines().count());
    for line in VANISHING.lines() {
        assert!(back.contains(line), "{line}");
    }
}

#[test]
fn orbits_and_bases() {
    let o = partcat(&["orbits", "--n", "3", "--k", "3", "--json"], "");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);
    let o = partcat(&["bases", "--n", "2", "--k", "3"], "");
    assert_eq!(stdout(&o).lines().filter(|l| !l.starts_with('#')).count(), 8);
}

#[test]
fn verify_suites() {
    let o = partcat(&["verify", "relations", "golden", "--n", "2", "--json"], "");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    let o = partcat(&["verify", "faithfulness", "--n", "2", "--k", "2", "--seed", "11", "--samples", "5"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("seed=11"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str], input: &str| partcat(args, input).status.code();
    assert_eq!(code(&["reduce", "-"], "P(1->1)[{1,1\n"), Some(3));
    assert_eq!(code(&["reduce", "--n", "2", "-"], "P(1->1)[{1,1\n"), Some(3));
    assert_eq!(code(&["compose", "--n", "2", "-", "/dev/null"], "P(1->1)[{1,1'}]\n"), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let id = dir.path().join("id.txt");
    std::fs::write(&id, "P(1->1)[{1,1'}]\n").unwrap();
    assert_eq!(code(&["compose", "--n", "2", id.to_str().unwrap(), "-"], "P(1->2)[{1,1'},{2'}]\n"), Some(4));
    assert_eq!(code(&["reduce", "--n", "5", "--field", "F3", "-"], "P(3->0)[{1},{2},{3}]\n"), Some(5));
    assert_eq!(code(&["reduce", "/nonexistent/file"], ""), Some(6));
    assert_eq!(code(&["orbits", "--n", "6", "--k", "1"], ""), Some(7));
    assert_eq!(code(&["orbits", "--n", "2", "--k", "9"], ""), Some(7));
    assert_eq!(code(&["frobnicate"], ""), Some(2));
    assert_eq!(code(&["dims", "--field", "F4"], ""), Some(2));
    let o = partcat(&["reduce", "-"], "P(1->1)[{1,1\n");
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 1, column"), "{err}");
}
