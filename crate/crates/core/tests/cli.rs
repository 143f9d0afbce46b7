use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stabcover"))
        .args(args)
        .env_remove("STABCOVER_SEED")
        .env_remove("STABCOVER_SAMPLES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn cd4() -> String {
    let out = run(&["gen", "--rank2", "--paper-cd4"], None);
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gen_then_chambers() {
    let out = run(&["chambers"], Some(&cd4()));
    assert_eq!(out.status.code(), Some(0));
    let chambers = json(&out);
    assert_eq!(chambers.as_array().unwrap().len(), 8);
    assert_eq!(chambers[0]["signs"], "++++");
    assert_eq!(chambers[0]["rays"], serde_json::json!([[1, 0], [0, 1]]));
}

#[test]
fn empty_path_kmatrix_is_identity() {
    let out = run(&["kmatrix"], Some(&cd4()));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["entries"], serde_json::json!([[1, 0], [0, 1]]));
}

#[test]
fn verify_is_byte_identical() {
    let arr = cd4();
    let a = run(&["verify", "--suite", "ktheory", "--seed", "7"], Some(&arr));
    let b = run(&["verify", "--suite", "ktheory", "--seed", "7"], Some(&arr));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 7);
}

#[test]
fn env_overrides_flags() {
    let arr = cd4();
    let out = Command::new(env!("CARGO_BIN_EXE_stabcover"))
        .args(["verify", "--suite", "graph"])
        .env("STABCOVER_SEED", "11")
        .env("STABCOVER_SAMPLES", "5")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(arr.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    let report = json(&out);
    assert_eq!(report["seed"], 11);
    assert_eq!(report["config"]["samples"], 5);
}

#[test]
fn bad_input_exits_one_and_names_the_field() {
    let out = run(&["chambers"], Some(r#"{"rank": 2, "kind": "custom"}"#));
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["message"].as_str().unwrap().contains("normals"));

    let out = run(&["locate", "[[0,1,0,1],[0,1,1,1]]"], Some(&cd4()));
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["verify", "--samples", "0"], Some(&cd4()));
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["no-such-command"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn subcommands_emit_json() {
    let arr = cd4();
    let out = run(&["word-eq", "0 5 8 13", "1 2 7 10"], Some(&arr));
    assert_eq!(json(&out)["verdict"], "equal");

    let out = run(&["galleries", "0", "7"], Some(&arr));
    assert_eq!(json(&out)["galleries"].as_array().unwrap().len(), 2);

    let out = run(&["graph", "--dot"], Some(&arr));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("digraph"));

    let point = r#"{"base":{"source":0,"letters":[]},"charge":[[0,1,1,1],[0,1,2,1]]}"#;
    let out = run(&["deck", point, "--loop", "0 4"], Some(&arr));
    let moved = json(&out);
    assert_eq!(moved["base"]["letters"], serde_json::json!([[0, 1], [4, 1]]));
    let p1 = json(&run(&["project", point], Some(&arr)));
    let p2 = json(&run(&["project", &moved.to_string()], Some(&arr)));
    assert_eq!(p1["projection"], p2["projection"]);

    let rect = r#"[[[1,1,1,1],[0,1,10,1]],[[1,1,-1,1],[0,1,10,1]],[[-1,1,-1,1],[0,1,10,1]],[[-1,1,1,1],[0,1,10,1]],[[1,1,1,1],[0,1,10,1]]]"#;
    let out = json(&run(&["monodromy", rect], Some(&arr)));
    assert_eq!(out["text"], "0 4");

    let out = json(&run(&["presentation"], Some(&arr)));
    assert_eq!(out["abelianization"]["free_rank"], 4);
}

#[test]
fn emitted_arrangements_reparse() {
    for args in [&["gen", "--coxeter", "A3"][..], &["gen", "--coxeter", "D4", "--restrict", "0"], &["gen", "--rank2", "6"]] {
        let out = run(args, None);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let back = run(&["chambers"], Some(&text));
        assert_eq!(back.status.code(), Some(0), "{args:?}");
    }
}
