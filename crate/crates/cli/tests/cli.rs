//! Smoke tests of the installed binary: subcommands, flag overrides, exit
//! codes and the emitted file layout.

use std::path::Path;
use std::process::Command;

fn dcso_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dcso"))
}

#[test]
fn list_problems_prints_the_catalog() {
    let out = dcso_bin().arg("list-problems").output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("F1 "));
    assert!(stdout.contains("CEC10"));
    assert!(stdout.contains("qaplib"));
}

#[test]
fn run_emits_reports_and_honors_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("exp.toml");
    std::fs::write(
        &config_path,
        r#"
            runs = 5
            population_size = 8
            max_iter = 25
            base_seed = 3

            [[problems]]
            benchmark = "F16"

            [[algorithms]]
            kind = "dcso"

            [[algorithms]]
            kind = "de"
        "#,
    )
    .unwrap();

    let out_dir = dir.path().join("results");
    let out = dcso_bin()
        .args(["run", "--config"])
        .arg(&config_path)
        .args(["--output-dir"])
        .arg(&out_dir)
        .args(["--runs", "2", "--seed", "11", "--quiet"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );

    let runs = std::fs::read_to_string(out_dir.join("runs.csv")).unwrap();
    // --runs override: 1 problem x 2 algorithms x 2 runs + header
    assert_eq!(runs.lines().count(), 5);
    assert!(runs.lines().skip(1).all(|l| l.contains(",11,")));

    let summary = std::fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    assert!(summary.starts_with("problem,algorithm,mean,std,elapsed_s\n"));
    assert_eq!(summary.lines().count(), 3);

    let pvalues = std::fs::read_to_string(out_dir.join("pvalues.csv")).unwrap();
    assert!(pvalues.starts_with("problem,algorithm,p_value\n"));
    assert!(pvalues.contains("F16,de,"));

    let ranks = std::fs::read_to_string(out_dir.join("ranks.csv")).unwrap();
    assert!(ranks.starts_with("problem,dcso,de\n"));
    assert!(ranks.lines().last().unwrap().starts_with("overall,"));

    let trace = std::fs::read_to_string(
        out_dir
            .join("convergence")
            .join("F16")
            .join("dcso")
            .join("run0.csv"),
    )
    .unwrap();
    assert!(trace.starts_with("iteration,best_so_far\n"));
    assert_eq!(trace.lines().count(), 26); // header + 25 iterations

    // report on the saved artifacts succeeds and leaves them unchanged
    let before = std::fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    let out = dcso_bin()
        .args(["report", "--output-dir"])
        .arg(&out_dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let after = std::fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    assert_eq!(before, after);
}

#[test]
fn bad_config_fails_with_nonzero_exit() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("exp.toml");
    std::fs::write(
        &config_path,
        r#"
            [[problems]]
            benchmark = "F99"

            [[algorithms]]
            kind = "dcso"
        "#,
    )
    .unwrap();
    let out = dcso_bin()
        .args(["run", "--config"])
        .arg(&config_path)
        .output()
        .unwrap();
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("F99"), "diagnostic names the bad problem");
}

#[test]
fn missing_config_file_fails() {
    let out = dcso_bin()
        .args(["run", "--config", "/does/not/exist.toml"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn report_requires_saved_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dcso_bin()
        .args(["report", "--output-dir"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn qap_runs_reference_bundled_data_by_path() {
    let dir = tempfile::tempdir().unwrap();
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/qaplib/ste36c.dat");
    let config_path = dir.path().join("exp.toml");
    std::fs::write(
        &config_path,
        format!(
            r#"
                runs = 1
                population_size = 8
                max_iter = 10
                [[problems]]
                qaplib = "{}"
                [[algorithms]]
                kind = "cso"
            "#,
            data.display()
        ),
    )
    .unwrap();
    let out_dir = dir.path().join("out");
    let out = dcso_bin()
        .args(["run", "--config"])
        .arg(&config_path)
        .arg("--output-dir")
        .arg(&out_dir)
        .arg("--quiet")
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let runs = std::fs::read_to_string(out_dir.join("runs.csv")).unwrap();
    assert!(runs.contains("ste36c,cso,0,"));
    // diversity recording defaults off for QAP problems
    assert!(!out_dir.join("diversity").exists());
}
