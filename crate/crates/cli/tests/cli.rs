//! End-to-end tests that drive the compiled binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const W1: &str = r#"{"moduli":[6],"weights":[11,25,42,45,31,14]}"#;
const W2: &str = r#"{"moduli":[6],"weights":[10,17,35,46,39,21]}"#;
const OMEGA6: &str =
    r#"{"moduli":[6],"weights":[784,82.33333333333333,0,0,0,82.33333333333333]}"#;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_diffrakt"));
    c.env_remove("DIFFRAKT_CAP");
    c
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = cmd.output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

#[test]
fn diffract_reports_the_intensity_profile() {
    let dir = tempfile::tempdir().unwrap();
    let rho = write(dir.path(), "w1.json", W1);
    let (code, out, _) = run(bin().args(["diffract", "--in"]).arg(&rho));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let w = v["weights"].as_array().unwrap();
    assert_eq!(w[0].as_f64().unwrap(), 784.0);
    assert!((w[1].as_f64().unwrap() - 247.0 / 3.0).abs() < 1e-9);
    assert!(w[2].as_f64().unwrap().abs() < 1e-20);
    assert!((w[5].as_f64().unwrap() - 247.0 / 3.0).abs() < 1e-9);
    assert_eq!(v["tol"].as_f64().unwrap(), 1e-9);
}

#[test]
fn diffract_csv_lists_every_point() {
    let dir = tempfile::tempdir().unwrap();
    let rho = write(dir.path(), "w1.json", W1);
    let (code, out, _) = run(bin().args(["diffract", "--format", "csv", "--in"]).arg(&rho));
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "x0,weight");
    assert!(lines[1].starts_with("0,784"));
}

#[test]
fn extract_recovers_the_phase_parameter() {
    let dir = tempfile::tempdir().unwrap();
    let rho = write(dir.path(), "w1.json", W1);
    let (code, out, _) = run(bin().args(["extract", "--in"]).arg(&rho));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let angle = v["form"]["free_angles"][0].as_f64().unwrap();
    assert!((angle - 0.443099).abs() < 1e-5);
    assert_eq!(v["negated"].as_bool().unwrap(), false);
    assert_eq!(v["form"]["basis"]["free_reps"][0][0].as_i64().unwrap(), 1);
}

#[test]
fn solve_describes_the_family_and_sweeps_it() {
    let dir = tempfile::tempdir().unwrap();
    let omega = write(dir.path(), "omega.json", OMEGA6);
    let (code, out, _) = run(bin().args(["solve", "--in"]).arg(&omega));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p"].as_u64().unwrap(), 1);
    assert_eq!(v["q"].as_u64().unwrap(), 0);
    assert_eq!(v["class_group"].as_str().unwrap(), "U(1)");
    assert_eq!(v["generates_full_dual"].as_bool().unwrap(), true);
    assert_eq!(v["sample"]["moduli"][0].as_i64().unwrap(), 6);

    let (code, out, _) = run(bin()
        .args(["solve", "--format", "csv", "--samples", "4", "--in"])
        .arg(&omega));
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "t,w0,w1,w2,w3,w4,w5");
    assert!(lines[1].starts_with("0,"));
}

#[test]
fn homometric_compares_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", W1);
    let b = write(dir.path(), "b.json", W2);
    let c = write(
        dir.path(),
        "c.json",
        r#"{"moduli":[6],"weights":[1,0,0,0,0,0]}"#,
    );
    let (code, out, _) = run(bin().args(["homometric", "--in"]).arg(&a).arg("--with").arg(&b));
    assert_eq!(code, 0);
    assert_eq!(out, "homometric: true\n");
    let (code, out, _) = run(bin().args(["homometric", "--in"]).arg(&a).arg("--with").arg(&c));
    assert_eq!(code, 0);
    assert_eq!(out, "homometric: false\n");
}

#[test]
fn moments_locates_the_first_divergence() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", W1);
    let b = write(dir.path(), "b.json", W2);
    let (code, out, _) = run(bin().args(["moments", "--in"]).arg(&a).arg("--with").arg(&b));
    assert_eq!(code, 0);
    assert!(out.contains("same solution class: false"));
    assert!(out.contains("translation: none"));
    assert!(out.contains("moments agree through order 5"));
    assert!(out.contains("first divergent moment: 6"));

    // a density is trivially in its own class
    let (code, out, _) = run(bin().args(["moments", "--in"]).arg(&a).arg("--with").arg(&a));
    assert_eq!(code, 0);
    assert!(out.contains("same solution class: true"));
    assert!(out.contains("translation: (0)"));
}

#[test]
fn moments_refuses_unrelated_densities() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", W1);
    let c = write(
        dir.path(),
        "c.json",
        r#"{"moduli":[6],"weights":[1,0,0,0,0,0]}"#,
    );
    let (code, out, err) = run(bin().args(["moments", "--in"]).arg(&a).arg("--with").arg(&c));
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("not homometric"));
}

#[test]
fn relators_summarizes_the_lattice() {
    let dir = tempfile::tempdir().unwrap();
    let omega = write(dir.path(), "omega.json", OMEGA6);
    let (code, out, _) = run(bin().args(["relators", "--in"]).arg(&omega));
    assert_eq!(code, 0);
    assert!(out.contains("group: Z/6"));
    assert!(out.contains("spectrum: 3 points including zero"));
    assert!(out.contains("free pairs: 1"));
    assert!(out.contains("lattice index: 6"));
    assert!(out.contains("relation: [6]"));
    assert!(out.contains("shortest generating length: 6"));
    assert!(out.contains("covering number: 3 (length bound 7)"));
    assert!(out.contains("class group: U(1)"));
}

#[test]
fn relators_notes_the_unique_class() {
    let dir = tempfile::tempdir().unwrap();
    let omega = write(
        dir.path(),
        "omega2.json",
        r#"{"moduli":[2],"weights":[1,1]}"#,
    );
    let (code, out, _) = run(bin().args(["relators", "--in"]).arg(&omega));
    assert_eq!(code, 0);
    assert!(out.contains("class group: trivial"));
    assert!(out.contains("translate of one solution"));
}

#[test]
fn process_verify_passes_on_a_seeded_model() {
    let dir = tempfile::tempdir().unwrap();
    let omega = write(dir.path(), "omega.json", OMEGA6);
    let (code, out, _) = run(bin()
        .args(["process-verify", "--seed", "42", "--in"])
        .arg(&omega));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["group"].as_str().unwrap(), "Z/6");
    assert_eq!(v["state_count"].as_u64().unwrap(), 6);
    assert!(v["roundtrip_residual"].as_f64().unwrap() < 1e-8);
}

#[test]
fn gm_check_accepts_integers_and_rejects_surds() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.json", W1);
    let (code, out, _) = run(bin().args(["gm-check", "--in"]).arg(&good));
    assert_eq!(code, 0);
    assert!(out.contains("rational weights: true"));
    assert!(out.contains("moment bound: 6"));
    assert!(out.contains("compatible: true"));

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"moduli":[5],"weights":[2,0.6180339887498949,-1.618033988749895,-1.618033988749895,0.6180339887498949]}"#,
    );
    let (code, out, _) = run(bin().args(["gm-check", "--in"]).arg(&bad));
    assert_eq!(code, 0);
    assert!(out.contains("rational weights: false"));
    assert!(out.contains("closure violations: (1) x2"));
    assert!(out.contains("moment bound: 4"));
    assert!(out.contains("compatible: false"));
}

#[test]
fn circle_check_reports_unimodularity() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "circle.json",
        r#"{"values":[[1,0.25],[-1,0.75],[3,0.37],[-3,0.63]],"window":8}"#,
    );
    let (code, out, _) = run(bin().args(["circle-check", "--in"]).arg(&input));
    assert_eq!(code, 0);
    assert!(out.contains("frequency pairs: 2"));
    assert!(out.contains("coefficients: 17"));
    assert!(out.contains("unimodular: true"));
}

#[test]
fn demos_run_clean() {
    for name in ["m1", "m2", "m3", "m4", "m5", "z6", "circle"] {
        let (code, out, err) = run(bin().args(["demo", name]));
        assert_eq!(code, 0, "demo {name}: {err}");
        assert!(out.contains("all checks passed"), "demo {name}");
        assert!(!out.contains("FAIL"), "demo {name}");
    }
}

#[test]
fn malformed_input_exits_two_with_no_output() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "not json at all");
    let (code, out, err) = run(bin().args(["diffract", "--in"]).arg(&bad));
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("invalid input"));

    let missing = dir.path().join("missing.json");
    let (code, out, _) = run(bin().args(["diffract", "--in"]).arg(&missing));
    assert_eq!(code, 2);
    assert!(out.is_empty());
}

#[test]
fn asymmetric_support_is_rejected_without_partial_output() {
    let dir = tempfile::tempdir().unwrap();
    let omega = write(
        dir.path(),
        "skew.json",
        r#"{"moduli":[6],"weights":[1,2,0,0,0,0]}"#,
    );
    let (code, out, err) = run(bin().args(["solve", "--in"]).arg(&omega));
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("not centrally symmetric"));
}

#[test]
fn caps_stop_oversized_groups() {
    let dir = tempfile::tempdir().unwrap();
    let rho = write(dir.path(), "w1.json", W1);
    let (code, out, err) = run(bin()
        .env("DIFFRAKT_CAP", "5")
        .args(["diffract", "--in"])
        .arg(&rho));
    assert_eq!(code, 4);
    assert!(out.is_empty());
    assert!(err.contains("exceeds cap"));

    // an explicit flag wins over the environment
    let (code, _, _) = run(bin()
        .env("DIFFRAKT_CAP", "5")
        .args(["diffract", "--cap", "1000", "--in"])
        .arg(&rho));
    assert_eq!(code, 0);

    let (code, _, err) = run(bin()
        .env("DIFFRAKT_CAP", "many")
        .args(["diffract", "--in"])
        .arg(&rho));
    assert_eq!(code, 2);
    assert!(err.contains("DIFFRAKT_CAP"));
}

#[test]
fn usage_errors_exit_sixty_four() {
    let (code, _, _) = run(bin().args(["diffract", "--nonsense"]));
    assert_eq!(code, 64);
    let (code, _, _) = run(bin().args(["no-such-command"]));
    assert_eq!(code, 64);
    let (code, _, _) = run(&mut bin());
    assert_eq!(code, 64);
    let (code, _, _) = run(bin().arg("--help"));
    assert_eq!(code, 0);
}

#[test]
fn out_flag_matches_stdout_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let rho = write(dir.path(), "w1.json", W1);
    let (code, stdout, _) = run(bin().args(["diffract", "--in"]).arg(&rho));
    assert_eq!(code, 0);
    let target = dir.path().join("omega.json");
    let (code, piped, _) = run(bin()
        .args(["diffract", "--in"])
        .arg(&rho)
        .arg("--out")
        .arg(&target));
    assert_eq!(code, 0);
    assert!(piped.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), stdout);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let omega = write(dir.path(), "omega.json", OMEGA6);
    let first = run(bin().args(["solve", "--format", "csv", "--samples", "7", "--in"]).arg(&omega));
    let second = run(bin().args(["solve", "--format", "csv", "--samples", "7", "--in"]).arg(&omega));
    assert_eq!(first, second);
    assert_eq!(first.0, 0);
}
