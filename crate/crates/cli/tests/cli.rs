use std::path::Path;
use std::process::{Command, Output};

fn qkak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qkak")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn assert_error(o: &Output, code: i32) {
    assert_eq!(o.status.code(), Some(code), "stderr: {}", stderr(o));
    let err = stderr(o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("qkak: error: "), "{err}");
    assert!(o.stdout.is_empty());
}

fn csv_field(out: &str, column: &str) -> f64 {
    let mut lines = out.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let i = header.iter().position(|h| *h == column).unwrap();
    row[i].parse().unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

const SWEEP: &str = "[model]\nc = 1, 0, 0\n\n[grid]\nomega1 = 0, 1, 2\nomega2 = 0, 1, 2\nt = 0.7\n";

#[test]
fn capability_ising_csv() {
    let o = qkak(&["capability", "--c", "1,0,0", "--t", "0.7", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("h,theta_x,theta_y,theta_z,lambda_1"));
    assert!((csv_field(&out, "h") - 0.7).abs() < 1e-14);
    assert_eq!(csv_field(&out, "theta_y"), 0.0);
}

#[test]
fn capability_engines_agree() {
    let args = ["capability", "--c", "0.8,-0.3,0.4", "--omega1", "1.2", "--omega2", "0.5", "--t", "2.3"];
    let run = |engine: &str| {
        let mut a = args.to_vec();
        a.extend(["--engine", engine, "--format", "csv"]);
        csv_field(&stdout(&qkak(&a)), "h")
    };
    assert!((run("generic") - run("closed-form")).abs() < 1e-12);
}

#[test]
fn capability_text_is_aligned() {
    let o = qkak(&["capability", "--c", "1,0,0", "--t", "0.7"]);
    let out = stdout(&o);
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("h "));
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn decompose_unitary_file() {
    let dir = tempfile::tempdir().unwrap();
    // CNOT, whose canonical coordinates are (π/4, 0, 0).
    let body = "# CNOT\n1 0 0 0 0 0 0 0\n0 0 1 0 0 0 0 0\n0 0 0 0 0 0 1 0\n0 0 0 0 1 0 0 0\n";
    let path = write(dir.path(), "cnot.txt", body);
    let o = qkak(&["decompose", "--unitary", &path, "--format", "csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!((csv_field(&out, "theta_x") - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
    assert!(csv_field(&out, "theta_y").abs() < 1e-12);
    assert!(csv_field(&out, "theta_z").abs() < 1e-12);
}

#[test]
fn decompose_non_unitary_file() {
    let dir = tempfile::tempdir().unwrap();
    let body = "2 0 0 0 0 0 0 0\n0 0 1 0 0 0 0 0\n0 0 0 0 1 0 0 0\n0 0 0 0 0 0 1 0\n";
    let path = write(dir.path(), "bad.txt", body);
    assert_error(&qkak(&["decompose", "--unitary", &path]), 5);
}

#[test]
fn decompose_malformed_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.txt", "1 0 0 0\n");
    let o = qkak(&["decompose", "--unitary", &path]);
    assert_error(&o, 3);
}

#[test]
fn missing_file_is_io_error() {
    let o = qkak(&["decompose", "--unitary", "/nonexistent/u.txt"]);
    assert_error(&o, 4);
    assert!(stderr(&o).contains("/nonexistent/u.txt"));
}

#[test]
fn usage_error_is_clap_code() {
    let o = qkak(&["capability", "--t", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_model() {
    assert_error(&qkak(&["capability", "--c", "1,0,0", "--omega1", "-1", "--t", "1"]), 5);
    assert_error(&qkak(&["capability", "--c", "1,0,0", "--n", "1,1,0", "--t", "1"]), 5);
}

#[test]
fn closed_form_rejects_tilted_fields() {
    let o = qkak(&[
        "capability", "--c", "1,0,0", "--omega1", "1", "--n", "1,0,0", "--t", "1", "--engine", "closed-form",
    ]);
    assert_error(&o, 6);
}

#[test]
fn extremal_times_degenerate_coupling() {
    assert_error(&qkak(&["extremal-times", "--c", "0,0,1"]), 7);
}

#[test]
fn extremal_times_csv() {
    let o = qkak(&["extremal-times", "--c", "1,0.5,0", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k,t,branch,condition"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    let t: f64 = first[1].parse().unwrap();
    assert!((t - std::f64::consts::PI / 3.0).abs() < 1e-14);
}

#[test]
fn optimal_state_reaches_unit_concurrence() {
    let o = qkak(&["optimal-state", "--c", "1,0.5,0.2", "--omega1", "0.4", "--t", "1.1", "--bell", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let line = out.lines().find(|l| l.starts_with("output_concurrence")).unwrap();
    let c: f64 = line.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!((c - 1.0).abs() < 1e-10);
}

#[test]
fn sweep_to_file_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "s.ini", SWEEP);
    let out = dir.path().join("s.csv").to_string_lossy().into_owned();
    let o = qkak(&["sweep", &cfg, "--output", &out]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let file = std::fs::read_to_string(&out).unwrap();
    assert!(file.starts_with("# qkak "));
    let data: Vec<&str> = file.lines().filter(|l| !l.starts_with('#')).collect();
    assert!(data[0].starts_with("omega1,omega2,t,h"));
    assert_eq!(data.len(), 1 + 4);

    let o = qkak(&["sweep", &cfg, "--engine", "both"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert!(header.ends_with("h_closed,abs_dev"));
}

#[test]
fn sweep_peak_summary_goes_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "s.ini", SWEEP);
    let o = qkak(&["sweep", &cfg, "--peaks"]);
    assert!(o.status.success());
    assert!(!o.stderr.is_empty());
    assert!(!stdout(&o).contains("global"));
}

#[test]
fn sweep_rejects_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "s.ini", SWEEP);
    assert_error(&qkak(&["sweep", &cfg, "--format", "text"]), 3);
}

#[test]
fn sweep_config_errors_report_location() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "s.ini", "[model]\nc = 1, 0, 0\nbogus = 3\n");
    let o = qkak(&["sweep", &cfg]);
    assert_error(&o, 3);
    assert!(stderr(&o).contains('3'), "{}", stderr(&o));
}

#[test]
fn ensemble_seed_is_reproducible() {
    let args = ["ensemble", "--count", "2", "--seed", "5", "--grid-steps", "5"];
    let a = qkak(&args);
    let b = qkak(&args);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let c = qkak(&["ensemble", "--count", "2", "--seed", "6", "--grid-steps", "5"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn ensemble_forced_draw() {
    let o = qkak(&["ensemble", "--count", "0", "--grid-steps", "5", "--force", "1,0,0;0,0,1;0,0,1;0.7"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 2);
}

#[test]
fn ensemble_requires_draws() {
    assert_error(&qkak(&["ensemble", "--count", "0"]), 3);
}
