mod common;

use std::io::Write;
use std::process::{Command, Output};

use common::poly;
use homfly::report::{BatchEntry, ComputeReport, Status};

fn homfly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homfly")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn batch_file(lines: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(lines.as_bytes()).unwrap();
    f
}

#[test]
fn compute_all_methods_agree() {
    let o = homfly(&["compute", "1 1 1", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2*a^-2 - a^-4 + a^-2*z^2");
}

#[test]
fn compute_trivial_link() {
    let o = homfly(&["compute", "", "--strands", "3"]);
    assert_eq!(stdout(&o).trim(), "a^2*z^-2 - 2*z^-2 + a^-2*z^-2");
}

#[test]
fn compute_accepts_leading_negative_token() {
    let o = homfly(&["compute", "-1 2 -1 2", "--method", "jaeger-dual"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "a^2 - 1 + a^-2 - z^2");
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(homfly(&["compute", "0"]).status.code(), Some(2));
    assert_eq!(homfly(&["compute", "1 x"]).status.code(), Some(2));
    assert_eq!(homfly(&["compute", "1 3", "--strands", "3"]).status.code(), Some(2));
    assert_eq!(homfly(&["compute", "1", "--method", "bogus"]).status.code(), Some(2));
    assert_eq!(homfly(&["verify", "1", "--samples", "0"]).status.code(), Some(2));
}

#[test]
fn compute_json_round_trips() {
    let o = homfly(&["compute", "1 -2 1 -2", "--method", "all", "--json"]);
    let text = stdout(&o);
    let report: ComputeReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.homfly.len(), 4);
    assert!(report.methods_agree);
    assert_eq!(report.polynomial(), &poly("a^2 - 1 + a^-2 - z^2"));
    assert_eq!(serde_json::to_string(&report).unwrap(), text.trim());
    assert!(text.starts_with("{\"word\":\"1 -2 1 -2\",\"strands\":3,"), "{text}");
}

#[test]
fn analyze_running_example() {
    let o = homfly(&["analyze", "-1 3 -2 -4 -4 -4 1 -3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("(1 4)(2)(3 5)"), "{text}");
    assert!(text.contains("1 4 2 3 5"), "{text}");
}

#[test]
fn analyze_figure_eight_certificate() {
    let text = stdout(&homfly(&["analyze", "1 -2 1 -2"]));
    assert!(text.contains("braid index = 3"), "{text}");
    let o = homfly(&["analyze", "1 2 -1 2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    serde_json::from_str::<ComputeReport>(&stdout(&o)).unwrap();
}

#[test]
fn verify_trefoil_passes() {
    let o = homfly(&["verify", "1 1 1", "--moves", "all", "--samples", "50", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = homfly(&["verify", "1 -3 2 2", "--moves", "mirror"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_catches_corruption() {
    let o = homfly(&["verify", "1 1 1", "--corrupt"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("reproducer: homfly"));
}

#[test]
fn batch_preserves_order_under_any_job_count() {
    let f = batch_file("# header\n1 1 1\n\n1 -2 1 -2\n3;1 1\n0\n2;1 1 1 # trailing\n");
    let path = f.path().to_str().unwrap();
    let serial = homfly(&["batch", path, "--jobs", "1", "--json"]);
    let parallel = homfly(&["batch", path, "--jobs", "4", "--json"]);
    assert_eq!(serial.stdout, parallel.stdout);
    assert_eq!(serial.status.code(), Some(2));
    let entries: Vec<BatchEntry> = stdout(&serial).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let lines: Vec<usize> = entries.iter().map(|e| e.line).collect();
    assert_eq!(lines, vec![2, 4, 5, 6, 7]);
    assert_eq!(entries[3].status, Status::InputError);
    let hopf = poly("a^-1*z + a^-1*z^-1 - a^-3*z^-1");
    let delta = poly("a*z^-1 - a^-1*z^-1");
    assert_eq!(entries[2].report.as_ref().unwrap().polynomial(), &(&hopf * &delta));
}

#[test]
fn batch_text_and_empty_file() {
    let f = batch_file("1 1 1\n1 -2 1 -2\n");
    let o = homfly(&["batch", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1: 2*a^-2 - a^-4 + a^-2*z^2\n2: a^2 - 1 + a^-2 - z^2\n");
    let empty = batch_file("");
    let o = homfly(&["batch", empty.path().to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(homfly(&["batch", "/nonexistent/words.txt"]).status.code(), Some(2));
}

#[test]
fn selftest_small_and_degenerate() {
    let o = homfly(&["selftest", "--max-crossings", "4", "--max-strands", "3", "--samples", "30", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("four-method equality"));
    let o = homfly(&["selftest", "--max-crossings", "0", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("trivial links"));
    let o = homfly(&["selftest", "--max-crossings", "3", "--max-strands", "2", "--samples", "5", "--corrupt"]);
    assert_eq!(o.status.code(), Some(3));
}
