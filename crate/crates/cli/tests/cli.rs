//! End-to-end tests of the `twistcube` binary: exit codes, output shapes,
//! file output, and batch mode.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistcube"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout should be JSON")
}

#[test]
fn check_reports_conditions() {
    let out = run(&[
        "check", "--type", "A2", "--word", "1,2,1", "--mult", "1,1,1",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["reduced"], true);
    assert_eq!(v["condition_P"], true);
    assert_eq!(v["condition_P_prime"], true);

    let out = run(&[
        "check", "--type", "A2", "--word", "1,2,1", "--mult", "0,1,1",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["condition_P"], false);
    assert_eq!(v["condition_P_prime"], true);
}

#[test]
fn polytope_json_shape() {
    let out = run(&[
        "polytope", "--type", "A2", "--word", "1,2,1", "--mult", "0,1,1",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 3);
    assert_eq!(v["is_lattice"], false);
    let vertices = v["vertices"].as_array().unwrap();
    assert!(vertices.iter().any(|w| w
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .eq(["0/1", "0/1", "1/2"])));
    assert_eq!(v["lattice_points"].as_array().unwrap().len(), 8);
}

#[test]
fn polytope_hrep_has_two_rows_per_coordinate() {
    let out = run(&[
        "polytope", "--type", "A2", "--word", "1,2,1", "--mult", "1,1,1", "--format", "hrep",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.is_empty()).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.contains("<=")));
}

#[test]
fn character_methods_agree() {
    let args = |m: &str| {
        vec![
            "character".to_string(),
            "--type".into(),
            "A2".into(),
            "--word".into(),
            "1,2,1".into(),
            "--mult".into(),
            "1,1,1".into(),
            "--method".into(),
            m.to_string(),
        ]
    };
    let mut terms = Vec::new();
    for m in ["path", "demazure", "cube"] {
        let a = args(m);
        let out = run(&a.iter().map(String::as_str).collect::<Vec<_>>());
        let v = stdout_json(&out);
        assert_eq!(v["dimension"], 13);
        terms.push(v["terms"].clone());
    }
    assert_eq!(terms[0], terms[1]);
    assert_eq!(terms[1], terms[2]);
}

#[test]
fn verify_passes_on_good_instance() {
    let out = run(&[
        "verify", "--type", "B2", "--word", "1,2,1", "--mult", "1,1,1",
    ]);
    let v = stdout_json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert!(checks.iter().any(|c| c["name"]
        .as_str()
        .unwrap()
        .starts_with("dilation_counts_r3")));
}

#[test]
fn verify_skips_hypothesis_bound_checks() {
    let out = run(&[
        "verify",
        "--type",
        "A2",
        "--word",
        "1,2,1",
        "--mult",
        "0,1,1",
        "--dilations",
        "1",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["condition_P"], false);
    let checks = v["checks"].as_array().unwrap();
    let skipped: Vec<&str> = checks
        .iter()
        .filter(|c| c["skipped"] == true)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(skipped.contains(&"lattice_tableau_bijection"));
    assert!(skipped.contains(&"lattice_polytope"));
    // The character identity needs no hypotheses and must still run and pass.
    let path_check = checks
        .iter()
        .find(|c| c["name"] == "path_character_equals_demazure")
        .unwrap();
    assert_eq!(path_check["skipped"], false);
    assert_eq!(path_check["passed"], true);
}

#[test]
fn nobody_exit_codes_and_orientation() {
    let out = run(&[
        "nobody", "--type", "A2", "--word", "1,2,1", "--mult", "1,1,1",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["hypotheses_met"], true);
    assert_eq!(v["opposite"], true);

    // Hypotheses unmet: exit code 2 plus a warning, with the reversed
    // fractional vertex (1/2, 0, 0).
    let out = run(&[
        "nobody", "--type", "A2", "--word", "1,2,1", "--mult", "0,1,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["hypotheses_met"], false);
    assert!(v["warning"]
        .as_str()
        .unwrap()
        .contains("condition_P: false"));
    assert!(v["polytope"]["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .any(|w| w
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_str().unwrap())
            .eq(["1/2", "0/1", "0/1"])));

    let out = run(&[
        "nobody",
        "--type",
        "A2",
        "--word",
        "1,2,1",
        "--mult",
        "1,1,1",
        "--no-opposite",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["opposite"], false);
}

#[test]
fn input_errors_exit_three() {
    for args in [
        vec!["check", "--type", "Z9", "--word", "1", "--mult", "1"],
        vec!["check", "--type", "A2", "--word", "1,2", "--mult", "1"],
        vec!["check", "--type", "A2", "--word", "3", "--mult", "1"],
        vec!["check", "--type", "A2", "--word", "1", "--mult", "-1"],
        vec!["check", "--word", "1", "--mult", "1"],
        vec!["polytope", "--type", "A2", "--word", "oops", "--mult", "1"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(3), "args: {:?}", args);
    }
}

#[test]
fn custom_cartan_file_and_out_flag() {
    let dir = std::env::temp_dir();
    let cartan_path = dir.join("twistcube_test_g2.json");
    let out_path = dir.join("twistcube_test_out.json");
    std::fs::write(&cartan_path, r#"{"rank": 2, "matrix": [[2, -1], [-3, 2]]}"#).unwrap();

    let out = run(&[
        "check",
        "--cartan",
        cartan_path.to_str().unwrap(),
        "--word",
        "2,1,2",
        "--mult",
        "1,1,1",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["reduced"], true);

    // The same matrix under the built-in name must agree.
    let builtin = run(&[
        "check", "--type", "G2", "--word", "2,1,2", "--mult", "1,1,1",
    ]);
    assert_eq!(stdout_json(&builtin), v);
}

#[test]
fn batch_mode_reports_per_job() {
    let dir = std::env::temp_dir();
    let jobs_path = dir.join("twistcube_test_jobs.json");
    std::fs::write(
        &jobs_path,
        r#"[
            {"type": "A2", "word": [1, 2, 1], "mult": [1, 1, 1]},
            {"type": "A2", "word": [1, 2, 1], "mult": [0, 1, 1]},
            {"cartan": {"rank": 2, "matrix": [[2, -1], [-1, 2]]}, "word": [1, 2], "mult": [1, 1]}
        ]"#,
    )
    .unwrap();
    let out = run(&["batch", jobs_path.to_str().unwrap()]);
    let v = stdout_json(&out);
    let jobs = v.as_array().unwrap();
    assert_eq!(jobs.len(), 3);
    assert_eq!(jobs[0]["lattice_count"], 13);
    assert_eq!(jobs[0]["tableau_count"], 13);
    assert_eq!(jobs[1]["condition_P"], false);
    assert_eq!(jobs[1]["lattice_count"], 8);
    assert_eq!(jobs[2]["reduced"], true);

    let bad = dir.join("twistcube_test_jobs_bad.json");
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(
        run(&["batch", bad.to_str().unwrap()]).status.code(),
        Some(3)
    );
}
