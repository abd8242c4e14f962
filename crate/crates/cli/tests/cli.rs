use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

use auslab_core::enumerate_subgroups;

fn auslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_auslab"))
        .args(args)
        .env_remove("AUSLAB_DEFAULT_DEGREE")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a json report")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn cyclic_rotation_group_is_iso() {
    let out = auslab(&["auslander", "--n", "3", "--group", "rot(1)", "--degree", "14"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["payload"]["verdict_empirical"], "Iso");
    assert_eq!(v["payload"]["agree"], true);
    assert_eq!(v["payload"]["pertinency"], 2);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn relations_suite_exits_zero() {
    let out = auslab(&["verify", "--suite", "relations", "--n", "4", "--degree", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["payload"]["all_hold"], true);
}

#[test]
fn other_suites_exit_zero() {
    for suite in ["structure", "orbits", "smash"] {
        let out = auslab(&["verify", "--suite", suite, "--n", "4", "--degree", "10"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{suite}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn scan_table_rows_and_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("scan");
    let out = auslab(&[
        "scan",
        "--n-list",
        "3,4",
        "--all-dihedral-subgroups",
        "--degree",
        "20",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_path(out_dir.join("scan.csv")).unwrap();
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        auslab::scan::CSV_HEADER.to_vec()
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    for (n, not_iso) in [(3, 1), (4, 2)] {
        let of_n: Vec<_> = rows.iter().filter(|r| r[0] == *n.to_string()).collect();
        assert_eq!(of_n.len(), enumerate_subgroups(n).unwrap().len());
        assert_eq!(of_n.iter().filter(|r| &r[7] == "NotIso").count(), not_iso);
        for r in &of_n {
            assert_eq!(&r[9], "true");
            assert_eq!(&r[7] == "NotIso", &r[3] == "true");
            if &r[7] == "NotIso" {
                assert_eq!(&r[4], "-1");
            }
        }
    }
    let report = read_json(&out_dir.join("scan.json"));
    assert_eq!(report["payload"]["rows"].as_array().unwrap().len(), rows.len());
}

#[test]
fn reports_are_deterministic_and_sorted() {
    let dir = tempfile::tempdir().unwrap();
    let mut payloads = Vec::new();
    for run in ["a", "b"] {
        let out_dir = dir.path().join(run);
        let out = auslab(&[
            "auslander",
            "--n",
            "4",
            "--group",
            "rot(2),refl(0)",
            "--degree",
            "12",
            "--out",
            out_dir.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        let text = std::fs::read_to_string(out_dir.join("auslander.json")).unwrap();
        let mut v: Value = serde_json::from_str(&text).unwrap();
        // keys come out in sorted order, so a round trip reproduces the file
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
        assert!(v["metadata"]["elapsed_ms"].is_u64());
        v.as_object_mut().unwrap().remove("metadata");
        payloads.push(v);
    }
    assert_eq!(payloads[0], payloads[1]);
}

#[test]
fn inconclusive_growth_is_a_verification_failure() {
    let out = auslab(&["auslander", "--n", "5", "--group", "rot(1),refl(0)", "--degree", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    assert_eq!(v["status"], "verification_failure");
    assert_eq!(v["payload"]["verdict_empirical"], "Unknown");
}

#[test]
fn usage_errors_exit_one() {
    let cases: [&[&str]; 6] = [
        &["auslander", "--n", "3", "--group", "rot(1"],
        &["auslander", "--n", "3", "--group", "scalar(2;1,1;1,1,1)"],
        &[
            "auslander",
            "--n",
            "3",
            "--group",
            "scalar(2;1,1,1;1,1,1)",
            "--degree",
            "1",
        ],
        &["hilbert", "--n", "2"],
        &["scan", "--n-list", "3", "--all-dihedral-subgroups"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = auslab(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = auslab(&["auslander", "--n", "3", "--group", "rot(1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 5"));
}

#[test]
fn invariants_checks_need_a_presented_group() {
    let out = auslab(&[
        "invariants",
        "--n",
        "4",
        "--group",
        "rot(1)",
        "--degree",
        "6",
        "--check-presentation",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = auslab(&[
        "invariants",
        "--n",
        "4",
        "--group",
        "rot(2),refl(0)",
        "--degree",
        "10",
        "--check-presentation",
        "--check-free-module",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["payload"]["presentation"]["passes"], true);
    assert_eq!(v["payload"]["free_module"]["passes"], true);
    assert_eq!(v["payload"]["dims"][3], 4);
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let out = auslab(&[flag]);
        assert_eq!(out.status.code(), Some(0));
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn default_degree_comes_from_the_environment() {
    let run = |val: &str| {
        Command::new(env!("CARGO_BIN_EXE_auslab"))
            .args(["hilbert", "--n", "3"])
            .env("AUSLAB_DEFAULT_DEGREE", val)
            .output()
            .unwrap()
    };
    let out = run("5");
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["inputs"]["degree"], 5);
    assert_eq!(v["payload"]["totals"], serde_json::json!([3, 6, 9, 12, 15, 18]));
    assert_eq!(run("five").status.code(), Some(1));
    let explicit = auslab(&["hilbert", "--n", "3", "--degree", "2"]);
    assert_eq!(json_of(&explicit)["inputs"]["degree"], 2);
}

#[test]
fn hilbert_matrix_and_flagged_series() {
    let out = auslab(&["hilbert", "--n", "4", "--degree", "16", "--matrix"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let p = &v["payload"];
    assert_eq!(p["recurrence"]["holds"], true);
    assert_eq!(p["inverse_square_series"]["agrees"], false);
    assert_eq!(p["oracle_max_degree"], 14);
    let m = p["matrix"][16].as_array().unwrap();
    let total: u64 = m
        .iter()
        .flat_map(|r| r.as_array().unwrap())
        .map(|x| x.as_u64().unwrap())
        .sum();
    assert_eq!(total, 4 * 17);
}

#[test]
fn scalar_group_reports_exact_conductor() {
    let out = auslab(&[
        "auslander",
        "--n",
        "3",
        "--group",
        "scalar(4;1,1,1;3,3,3)",
        "--degree",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["payload"]["group"]["conductor"], 4);
    assert_eq!(v["payload"]["verdict_empirical"], "Iso");
    assert_eq!(v["payload"]["verdict_classifier"], Value::Null);
}
