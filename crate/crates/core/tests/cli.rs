use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nahopf")).args(args).output().unwrap()
}

fn data(name: &str) -> String {
    format!("{}/data/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn passing_inputs_exit_zero() {
    for (cmd, file) in [("check-lie", "sl2"), ("integrate", "aff1"), ("hypo", "heisenberg_tilted"), ("pseudo", "sl2"), ("hta", "hta_zero")] {
        let o = run(&[cmd, &data(file), "--degree", "4"]);
        assert_eq!(o.status.code(), Some(0), "{cmd} {file}:\n{}", stdout(&o));
        assert!(stdout(&o).ends_with("status: pass\n"));
    }
}

#[test]
fn mathematical_failures_exit_one() {
    let o = run(&["check-lie", &data("not_antisymmetric")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
    let o = run(&["hypo", &data("sl2_borel_like"), "--degree", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("N_g(c) + c"));
    let o = run(&["pseudo", &data("sl2_prt1_violation"), "--degree", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(PRT1)"));
    let o = run(&["hta", &data("hta_sl2"), "--degree", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("warning: quotient collapses"));
}

#[test]
fn input_errors_exit_two() {
    let dir = std::env::temp_dir().join("nahopf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"basis\": [\"x\"], \"brackets\": [[0, 3, {}]]}").unwrap();
    assert_eq!(run(&["check-lie", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(run(&["check-lie", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["check-lie", "/nonexistent/input.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn json_report_is_valid_and_uses_fractions() {
    let o = run(&["hta", &data("hta_class2"), "--degree", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    let text = stdout(&o);
    assert!(text.contains("-1/1"));
    assert!(text.contains("<1;y,z> = -y∗z - y·z"));
}
