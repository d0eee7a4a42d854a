//! End-to-end acceptance gate for the command-line binary: the worked
//! example files must produce schema-valid, byte-stable reports with the
//! agreement flag set, and the documented exit codes must come out of the
//! error paths.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_munnlab"))
}

fn testdata(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("testdata").join(name)
}

fn run(args: &[&str]) -> Output {
    let mut cmd = bin();
    cmd.args(args);
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout_str(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("utf-8 stdout")
}

/// Field-by-field check against the published report schema.
fn validate_report(v: &Value) {
    assert_eq!(v["schema"], "munnlab-report/1");
    assert!(v["command"].is_string());
    assert!(v["seed"].is_u64());
    assert!(v["field"]["characteristic"].is_u64());
    let mode = v["field"]["mode"].as_str().unwrap();
    assert!(["auto", "explicit", "split"].contains(&mode));
    for t in v["triples"].as_array().expect("triples array") {
        let row = t.as_array().unwrap();
        assert_eq!(row.len(), 3);
        assert!(row.iter().all(Value::is_u64));
    }
    let graph = v["graph"].as_object().expect("graph object");
    assert!(graph["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .all(Value::is_string));
    for e in graph["edges"].as_array().unwrap() {
        assert_eq!(e["ends"].as_array().unwrap().len(), 2);
        assert_eq!(e["value"].as_array().unwrap().len(), 2);
    }
    for c in graph["components"].as_array().unwrap() {
        let class = c["class"].as_str().unwrap();
        assert!(["Dynkin", "Euclidean", "Indefinite"].contains(&class));
        assert!(c["name"].is_string());
    }
    for side in ["case", "graph"] {
        let verdict = &v["verdicts"][side];
        let kind = verdict["kind"].as_str().unwrap();
        assert!(["Finite", "Tame", "Wild"].contains(&kind));
        assert!(verdict["evidence"].is_string());
    }
    assert!(v["agreement"].is_boolean());
}

/// Runs the same invocation twice and insists on byte-identical stdout.
fn stable_run(args: &[&str]) -> Output {
    let first = run(args);
    let second = run(args);
    assert_eq!(
        first.stdout, second.stdout,
        "stdout not byte-stable for {args:?}"
    );
    first
}

#[test]
fn criterion_8_cli_end_to_end() {
    let started = Instant::now();

    let expectations = [
        ("finite_c1.toml", "Finite", "3.3(1a)"),
        ("tame_c2.toml", "Tame", "3.3(2a)"),
        ("wild_raw.toml", "Wild", "2.3(3)"),
    ];
    for (file, kind, evidence) in expectations {
        let path = testdata(file);
        let path = path.to_str().unwrap();
        let out = stable_run(&["classify", "--json", path]);
        assert_eq!(code(&out), 0, "{file} should classify cleanly");
        let report: Value = serde_json::from_str(stdout_str(&out)).expect("valid JSON");
        validate_report(&report);
        assert_eq!(report["verdicts"]["case"]["kind"], kind, "{file}");
        assert_eq!(report["verdicts"]["case"]["evidence"], evidence, "{file}");
        assert_eq!(report["verdicts"]["graph"]["kind"], kind, "{file}");
        assert_eq!(report["agreement"], true, "{file}");
        // The text rendering must be deterministic too.
        let text = stable_run(&["classify", path]);
        assert_eq!(code(&text), 0);
        assert!(stdout_str(&text).contains("agreement: yes"));
    }

    // Documented exit codes. 2: invalid input (two problem forms at once).
    let dir = std::env::temp_dir();
    let bad = dir.join("munnlab-accept-bad.toml");
    std::fs::write(
        &bad,
        "raw_triples = [[1, 1, 1]]\n\n[group]\nbuiltin = \"cyclic(2)\"\n",
    )
    .unwrap();
    let out = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2, "conflicting forms should exit 2");

    // 3: modular case (characteristic divides the group order).
    let modular = dir.join("munnlab-accept-modular.toml");
    std::fs::write(
        &modular,
        "sandwich = [[\"e\"]]\n\n[field]\nchar = 3\n\n[group]\nbuiltin = \"symmetric(3)\"\n",
    )
    .unwrap();
    let out = run(&["classify", modular.to_str().unwrap()]);
    assert_eq!(code(&out), 3, "modular case should exit 3");

    // Census on the finite example agrees with the root-count expectation;
    // on the wild example it is refused without --force.
    let finite = testdata("finite_c1.toml");
    let out = stable_run(&["census", "--json", finite.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(stdout_str(&out)).unwrap();
    assert_eq!(report["census"]["count"], 5);
    assert_eq!(report["census"]["expected"], 5);
    assert_eq!(report["census"]["matches"], true);
    let wild = testdata("wild_raw.toml");
    let out = run(&["census", wild.to_str().unwrap()]);
    assert_eq!(code(&out), 2, "non-Dynkin census without --force should exit 2");

    // DOT output is part of the stable surface.
    let tame = testdata("tame_c2.toml");
    let out = stable_run(&["graph", "--dot", tame.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout_str(&out).starts_with("graph valued {"));

    let elapsed = started.elapsed();
    println!(
        "criterion 8 (cli end to end): pass — 3 worked examples schema-valid, byte-stable, agreement true; exit codes 0/2/3 observed in {elapsed:.2?}"
    );
    assert!(elapsed.as_secs() < 5, "criterion 8 exceeded its time bound");
}
