use std::process::{Command, Output};

use serde_json::Value;
use sumprod::{rat_parse, verify_sum_cubes, verify_sum_product, Triple};

fn sumprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sumprod"))
        .args(args)
        .env_remove("SUMPROD_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid json line"))
        .collect()
}

fn xyz(v: &Value) -> Triple {
    let get = |k: &str| rat_parse(v[k].as_str().unwrap()).unwrap();
    Triple::new(get("x"), get("y"), get("z"))
}

#[test]
fn classify_reports() {
    let o = sumprod(&["--format", "json", "classify", "1", "2", "3"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["verdict"], "Elliptic");
    assert_eq!(v["torsion"], "ZxZ3");
    assert_eq!(v["solutions_infinite"], "Yes");
    assert_eq!(v["curve"]["discriminant"], "11664");

    let v = &json_lines(&sumprod(&["--format", "json", "classify", "3", "10", "24"]))[0];
    assert_eq!(v["torsion"], "Z12");
    assert_eq!(v["solutions_infinite"], "Unknown");
    assert_eq!(
        v["first_violations"][0],
        serde_json::json!(["3", "24", "10"])
    );

    let v = &json_lines(&sumprod(&["--format", "json", "classify", "8", "-27", "1"]))[0];
    assert_eq!(v["verdict"], "GenusZero");
    assert_eq!(v["family"]["t"], "3");
}

#[test]
fn solve_positive() {
    let o = sumprod(&[
        "solve",
        "1",
        "2",
        "3",
        "--limit",
        "1",
        "--positive",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 1);
    assert_eq!(
        xyz(&lines[0]),
        Triple::new(
            rat_parse("49/15").unwrap(),
            rat_parse("54/35").unwrap(),
            rat_parse("25/21").unwrap()
        )
    );
    assert_eq!(lines[0]["verified"], true);
    assert_eq!(lines[0]["source"]["kind"], "group");
    assert_eq!(lines[0]["source"]["m"], 3);
}

#[test]
fn solve_lines_reverify() {
    let reference = Triple::new(1, 2, 3);
    let o = sumprod(&["--format", "json", "solve", "1", "2", "3", "--limit", "20"]);
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 20);
    for v in &lines {
        assert!(verify_sum_product(&reference, &xyz(v)));
    }
    let o = sumprod(&[
        "--format", "json", "solve", "1", "2", "3", "--limit", "8", "--cubes",
    ]);
    for v in &json_lines(&o) {
        assert!(verify_sum_cubes(&reference, &xyz(v)));
    }
}

#[test]
fn solve_cubes_nontrivial() {
    let o = sumprod(&[
        "--format",
        "json",
        "solve",
        "1",
        "2",
        "3",
        "--limit",
        "1",
        "--cubes",
        "--nontrivial",
    ]);
    let v = &json_lines(&o)[0];
    assert_eq!(
        (v["x"].as_str(), v["y"].as_str(), v["z"].as_str()),
        (Some("15/2"), Some("-10"), Some("17/2"))
    );
}

#[test]
fn solve_condition_violation_names_permutation() {
    let o = sumprod(&["solve", "3", "10", "24", "--positive"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(3, 24, 10)"));
    let o = sumprod(&["solve", "1", "-2", "4", "--positive"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn solve_cap_exhaustion() {
    let o = sumprod(&["solve", "1", "2", "3", "--positive", "--cap", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_sumprod"))
        .args(["solve", "1", "2", "3", "--positive"])
        .env("SUMPROD_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn param_and_verify() {
    assert_eq!(
        stdout(&sumprod(&["param", "second", "1", "1"])).trim(),
        "(1, -2, 4)"
    );
    assert_eq!(
        stdout(&sumprod(&["param", "first", "1", "1"])).trim(),
        "(8, -1, -10)"
    );
    let o = sumprod(&["param", "genus0", "1", "3", "--u", "1"]);
    assert!(stdout(&o).contains("(3, -24, 3)"));
    let o = sumprod(&["param", "first", "--invert", "8", "-1", "-10"]);
    assert_eq!(stdout(&o).trim(), "r = 1, t = 1");
    assert_eq!(
        sumprod(&["param", "first", "1", "-1"]).status.code(),
        Some(4)
    );

    assert_eq!(
        sumprod(&["verify", "1", "2", "3", "-3/2", "8", "-1/2"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        sumprod(&["verify", "1", "2", "3", "1", "1", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        sumprod(&["verify", "1", "2", "3", "15/2", "-10", "17/2", "--cubes"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn oracle_lines() {
    let o = sumprod(&["oracle", "1", "2", "3", "--height", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(-3/2, -1/2, 8)\n(1, 2, 3)\n");
}

#[test]
fn parse_errors_name_the_argument() {
    let o = sumprod(&["classify", "1", "x", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("<B>"));
    let o = sumprod(&["verify", "1", "2", "3", "1", "2", "3/0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("<Z>"));
    assert_eq!(sumprod(&["frobnicate"]).status.code(), Some(2));
}
