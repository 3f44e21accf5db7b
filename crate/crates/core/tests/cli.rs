use std::fs;
use std::process::{Command, Output};

fn splab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_prints_one_row() {
    let o = splab(&["solve", "--h", "0.7", "--lambda", "1", "--vb", "0.1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("h,lambda,gamma,mu0,v_B,kind,classification,price"));
    assert_eq!(lines[1], "0.7,1,0.5,0.5,0.1,pooling,R3,0.55,,,0.4675,0.3575,3");
    assert!(!text.contains('\r'));
}

#[test]
fn usage_errors_exit_with_2() {
    assert_eq!(splab(&["solve", "--h", "0.3"]).status.code(), Some(2));
    assert_eq!(splab(&["solve", "--h", "0.5:1"]).status.code(), Some(2));
    assert_eq!(splab(&["regions", "--h", "0.5:1:1"]).status.code(), Some(2));
    assert_eq!(splab(&["solve", "--h", "0.5:1:3"]).status.code(), Some(2));
    assert_eq!(splab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        splab(&["solve", "--config", "/nonexistent.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_failure_exits_with_3() {
    // A single Monte-Carlo draw at an interior price cannot match the
    // analytic demand within four standard errors of zero.
    let o = splab(&[
        "verify",
        "--h",
        "0.8",
        "--lambda",
        "0.5",
        "--draws",
        "1",
        "--grid-points",
        "101",
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    let o = splab(&["verify", "--h", "0.6:1:3", "--draws", "20000", "--grid-points", "1001"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("spec.json");
    fs::write(
        &cfg,
        r#"{"h": {"min": 0.5, "max": 1.0, "steps": 11}, "lambda": 1.0, "v_B": 0.1, "output": "json"}"#,
    )
    .unwrap();
    let cfg = cfg.to_str().unwrap();

    let o = splab(&["regions", "--config", cfg]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 11);
    assert_eq!(rows[0]["classification"], "R1");
    assert_eq!(rows[10]["classification"], "R3");

    let o = splab(&["regions", "--config", cfg, "--format", "csv", "--lambda", "0"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().nth(1).unwrap().starts_with("0.5,0,"));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for out in [&a, &b] {
        let o = splab(&[
            "regions",
            "--h",
            "0.5:1:51",
            "--lambda",
            "0:1:51",
            "--vb",
            "0.1",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let a = fs::read(a).unwrap();
    assert_eq!(a, fs::read(b).unwrap());
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 51 * 51 + 1);

    let args = [
        "verify",
        "--h",
        "0.7:0.9:2",
        "--draws",
        "5000",
        "--grid-points",
        "501",
        "--seed",
        "9",
        "--format",
        "json",
    ];
    assert_eq!(splab(&args).stdout, splab(&args).stdout);
}

#[test]
fn every_subcommand_runs() {
    for args in [
        vec!["sweep", "--h", "0.5:1:3", "--gamma", "0.7", "--vb", "0"],
        vec!["sweep", "--h", "0.5:1:3", "--mu0", "0.7", "--vb", "0.05"],
        vec!["compare", "--h", "0.5:1:6"],
        vec!["compare", "--h", "0.5:1:6", "--curves"],
        vec!["thresholds", "--h", "0.8", "--lambda", "0:1:3"],
    ] {
        let o = splab(&args);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(stdout(&o).lines().count() >= 2);
    }
    let o = splab(&["compare", "--h", "0.5:1:6", "--curves"]);
    assert_eq!(
        stdout(&o).lines().next().unwrap(),
        "h,profit_G_naive,profit_G_soph,profit_B_naive,profit_B_soph"
    );
}
