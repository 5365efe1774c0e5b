//! End-to-end tests of the `linktau` binary: output contract, exit codes
//! and the JSON report shape.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn kirk_path() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/kirk.lmap").to_string()
}

fn fixture(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linktau"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn last_line(output: &Output) -> String {
    stdout(output)
        .lines()
        .last()
        .unwrap_or_default()
        .to_string()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().unwrap()
}

#[test]
fn sigma_on_the_bundled_dataset() {
    let output = run(&["sigma", &kirk_path()]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(last_line(&output), "RESULT: (0, t^2 + -4*t + 3)");
    assert!(stdout(&output).contains("sigma_minus = t^2 + -4*t + 3"));
}

#[test]
fn sigma_on_an_empty_document() {
    let path = fixture("empty.lmap", "linkmap empty\n");
    let output = run(&["sigma", &path]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(last_line(&output), "RESULT: (0, 0)");
}

#[test]
fn tau_phi_tau_and_omega_values() {
    let output = run(&["tau", &kirk_path()]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(last_line(&output), "RESULT: s*t^2 + s*t + s + 1");
    assert!(stdout(&output).contains("I(W2) = s*t^2"));

    let output = run(&["phi-tau", &kirk_path()]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(last_line(&output), "RESULT: 1 + t");
    assert!(stdout(&output).contains("Phi(I(W3)) = 0"));

    let output = run(&["omega", &kirk_path()]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(last_line(&output), "RESULT: 1");
}

#[test]
fn tau_without_disks_is_zero() {
    let path = fixture("nodisks.lmap", "linkmap nodisks\ndp+ a sign=+1 n=1\n");
    let output = run(&["tau", &path]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(last_line(&output), "RESULT: 0");
}

#[test]
fn unframed_disk_is_a_usage_error() {
    let path = fixture(
        "unframed.lmap",
        "linkmap u\n\
         dp+ a sign=+1 n=0\n\
         dp+ b sign=-1 n=0\n\
         pair P = a b\n\
         disk W pair=P primary=1 framed=0\nend\n",
    );
    for command in ["tau", "phi-tau", "omega"] {
        let output = run(&[command, &path]);
        assert_eq!(exit_code(&output), 2, "{command}");
        assert!(stderr(&output).contains("not framed"), "{command}");
    }
}

#[test]
fn malformed_files_and_usage_errors_exit_2() {
    let path = fixture("malformed.lmap", "garbage\n");
    let output = run(&["sigma", &path]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr(&output).contains("missing linkmap header"));

    let output = run(&["sigma", "/nonexistent/x.lmap"]);
    assert_eq!(exit_code(&output), 2);

    let output = run(&["sigma"]);
    assert_eq!(exit_code(&output), 2);

    let output = run(&["not-a-command"]);
    assert_eq!(exit_code(&output), 2);

    let output = run(&["check-relations", "--kmax", "-3"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn json_reports_mirror_the_text_reports() {
    let output = run(&["sigma", &kirk_path(), "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    let mut lines = text.lines();
    let body: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(body["sigma_plus"], "0");
    assert_eq!(body["sigma_minus"], "t^2 + -4*t + 3");
    assert_eq!(body["result"], "(0, t^2 + -4*t + 3)");
    assert_eq!(lines.next().unwrap(), "RESULT: (0, t^2 + -4*t + 3)");

    let output = run(&["verify-paper", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    let body: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    let checks = body["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    assert!(checks.iter().all(|c| c["status"] == "PASS"));
    assert_eq!(body["result"], "PASS");
    assert_eq!(text.lines().last().unwrap(), "RESULT: PASS");
}

#[test]
fn check_relations_counts_and_passes() {
    let output = run(&["check-relations", &kirk_path()]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("checked 31108 relator instances with kmax=50"));
    assert_eq!(last_line(&output), "RESULT: ok");

    let output = run(&["check-relations", "--kmax", "0"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).contains("checked 3 relator instances"));
}

#[test]
fn check_relations_reports_surviving_relators() {
    let path = fixture("badsphere.lmap", "linkmap bad\nsphere B eps=+1 w2=1\nend\n");
    let output = run(&["check-relations", &path, "--kmax", "2"]);
    assert_eq!(exit_code(&output), 1);
    let text = stdout(&output);
    assert!(
        text.contains("phi survives on R4 k=0 g=-1: image 1"),
        "{text}"
    );
    assert_eq!(last_line(&output), "RESULT: FAIL");
}

#[test]
fn wall_report_lists_every_sphere() {
    let output = run(&["wall", &kirk_path()]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("A1: lambda_disc = t + 1, lambda_sphere = -t^2 + 1, lambda_tilde = 0"));
    assert!(text.contains("A5: lambda_disc = 2*t + 2"));
    assert_eq!(last_line(&output), "RESULT: [0, 0, 0, 0, 0]");

    let path = fixture("nospheres.lmap", "linkmap none\n");
    let output = run(&["wall", &path]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "RESULT: []\n");
}

#[test]
fn pi2_follows_the_handle_count() {
    let output = run(&["pi2", &kirk_path()]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(last_line(&output), "RESULT: 5");

    let path = fixture("nohandles.lmap", "linkmap h0\n");
    let output = run(&["pi2", &path]);
    assert_eq!(last_line(&output), "RESULT: 0");

    let path = fixture("threehandles.lmap", "linkmap h3\nhandles 3\n");
    let output = run(&["pi2", &path]);
    assert_eq!(last_line(&output), "RESULT: 3");
}

#[test]
fn verify_paper_passes_on_the_bundled_dataset() {
    let output = run(&["verify-paper"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 9);
    assert_eq!(last_line(&output), "RESULT: PASS");
}

#[test]
fn verify_paper_fails_when_a_disk_is_deleted() {
    let full = fs::read_to_string(kirk_path()).unwrap();
    let tampered: String = {
        let mut out = String::new();
        let mut in_w1 = false;
        for line in full.lines() {
            if line.starts_with("disk W1 ") {
                in_w1 = true;
            }
            let drop = in_w1 || line.starts_with("dp+ p1") || line.starts_with("pair P1 ");
            if in_w1 && line == "end" {
                in_w1 = false;
            }
            if !drop {
                out.push_str(line);
                out.push('\n');
            }
        }
        out
    };
    let path = fixture("no_w1.lmap", &tampered);
    let output = run(&["verify-paper", &path]);
    assert_eq!(exit_code(&output), 1);
    let text = stdout(&output);
    assert!(text.contains("FAIL phi-tau"), "{text}");
    assert!(text.contains("total t"), "{text}");
    assert!(text.contains("PASS sigma"), "{text}");
    assert_eq!(last_line(&output), "RESULT: FAIL");
}

#[test]
fn verify_paper_fails_when_a_sigma_sign_flips() {
    let full = fs::read_to_string(kirk_path()).unwrap();
    let tampered = full.replace("dp- q1 sign=+1", "dp- q1 sign=-1");
    assert_ne!(full, tampered);
    let path = fixture("flip.lmap", &tampered);
    let output = run(&["verify-paper", &path]);
    assert_eq!(exit_code(&output), 1);
    let text = stdout(&output);
    assert!(text.contains("FAIL sigma"), "{text}");
    assert_eq!(last_line(&output), "RESULT: FAIL");
}

#[test]
fn verify_paper_reports_an_insufficient_window() {
    let output = run(&["verify-paper", "--window", "1"]);
    assert_eq!(exit_code(&output), 1);
    assert!(stdout(&output).contains("FAIL tau-nonzero"));
}
