//! End-to-end checks of the command-line surface: exit codes, file formats,
//! and deterministic output.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn sdot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("sdot-test-{}-{}", std::process::id(), name));
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_filter_runs_the_inclusion_chain() {
    let out = sdot(&["verify", "--max-n", "2", "--filter", "sigma-chain"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(
        stdout.contains("5 claims: 5 passed, 0 failed"),
        "{}",
        stdout
    );
}

#[test]
fn verify_unknown_filter_exits_two() {
    let out = sdot(&["verify", "--max-n", "2", "--filter", "no-such-prefix"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_max_n_exits_two() {
    let out = sdot(&["verify", "--max-n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_output_is_deterministic() {
    let a = sdot(&["verify", "--max-n", "2", "--filter", "cofiber-square"]);
    let b = sdot(&[
        "verify",
        "--max-n",
        "2",
        "--filter",
        "cofiber-square",
        "--jobs",
        "4",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_writes_a_machine_readable_report() {
    let path = write_temp("report.json", "");
    let out = sdot(&[
        "verify",
        "--max-n",
        "2",
        "--filter",
        "pointed-inclusions",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["summary"]["total"], 3);
    assert_eq!(report["summary"]["failed"], 0);
    assert_eq!(report["claims"][0]["verdict"], "pass");
    fs::remove_file(path).ok();
}

#[test]
fn k0_swindle_presentation_is_trivial() {
    let path = write_temp(
        "swindle.json",
        r#"{"generators": ["x"], "cofiber": [["x", "x", "x"]]}"#,
    );
    let out = sdot(&["k0", path.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["rank"], 0);
    assert_eq!(value["torsion"].as_array().unwrap().len(), 0);
    fs::remove_file(path).ok();
}

#[test]
fn k0_bad_file_exits_two() {
    let path = write_temp("bad.json", "{ not json");
    let out = sdot(&["k0", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    fs::remove_file(path).ok();
}

#[test]
fn nerve_then_sub2_pipeline() {
    let poset = write_temp(
        "interval.json",
        r#"{"poset": {"objects": [0, 1], "covers": [[0, 1]]}}"#,
    );
    let out = sdot(&["nerve", poset.to_str().unwrap(), "--dim", "3"]);
    assert!(out.status.success());
    let nerve_json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(nerve_json["levels"][0].as_array().unwrap().len(), 2);
    assert_eq!(nerve_json["levels"][1].as_array().unwrap().len(), 3);

    let nerve_path = write_temp("nerve.json", &String::from_utf8(out.stdout).unwrap());
    let out = sdot(&["sub2", nerve_path.to_str().unwrap(), "--dim", "1"]);
    assert!(out.status.success());
    let sub2_json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // Vertices of the subdivision are the three level-1 simplices.
    assert_eq!(sub2_json["levels"][0].as_array().unwrap().len(), 3);

    // Insufficient truncation is an input error.
    let out = sdot(&["sub2", nerve_path.to_str().unwrap(), "--dim", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = sdot(&["cylinder", nerve_path.to_str().unwrap(), "--dim", "1"]);
    assert!(out.status.success());
    let bundle: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(bundle["cylinder"]["levels"].is_array());
    assert!(bundle["e0"]["components"].is_array());
    fs::remove_file(poset).ok();
    fs::remove_file(nerve_path).ok();
}

#[test]
fn classify_and_comma_on_a_functor_file() {
    // t: e -> [1] hitting the target: a cosieve.
    let functor = write_temp(
        "functor.json",
        r#"{
            "source": {"poset": {"objects": ["*"], "covers": []}},
            "target": {"poset": {"objects": [0, 1], "covers": [[0, 1]]}},
            "object_map": [["*", 1]]
        }"#,
    );
    let out = sdot(&["classify", functor.to_str().unwrap()]);
    assert!(out.status.success());
    let class: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(class["cosieve"], true);
    assert_eq!(class["sieve"], false);

    let out = sdot(&["comma", functor.to_str().unwrap(), "--object", "1"]);
    assert!(out.status.success());
    let bundle: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // (t/1) has the single object (*, 1 -> 1).
    assert_eq!(
        bundle["comma"]["poset"]["objects"]
            .as_array()
            .unwrap()
            .len(),
        1
    );

    let out = sdot(&["comma", functor.to_str().unwrap(), "--object", "7"]);
    assert_eq!(out.status.code(), Some(2));
    fs::remove_file(functor).ok();
}
