//! End-to-end tests of the `verma` binary.

use std::process::{Command, Output};
use verma::cli::Record;

fn verma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verma")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn single_record(o: &Output) -> Record {
    let text = stdout(o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1, "{text}");
    Record::parse(lines[0]).unwrap()
}

/// A temporary file removed on drop.
struct TempFile(std::path::PathBuf);

impl TempFile {
    fn new(contents: &str) -> Self {
        use std::sync::atomic::{AtomicUsize, Ordering};
        static N: AtomicUsize = AtomicUsize::new(0);
        let name = format!("verma-cli-{}-{}.txt", std::process::id(), N.fetch_add(1, Ordering::Relaxed));
        let path = std::env::temp_dir().join(name);
        std::fs::write(&path, contents).unwrap();
        TempFile(path)
    }

    fn as_str(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

#[test]
fn simple_b8_reports_witness() {
    let o = verma(&["simple", "B8", "--crossed", "2,5", "--lambda", "2,1,2,-1,-3,4,2,1"]);
    assert!(o.status.success());
    let r = single_record(&o);
    assert_eq!(r.get("simple"), Some("false"));
    assert_eq!(r.get("classical"), Some("false"));
    assert!(r.get("nonvanishing").unwrap().split(';').any(|b| b == "(0,0,0,0,1,1,0,0)"));
    assert!(r.get("witness_beta").is_some());
}

#[test]
fn simple_small_examples() {
    let r = single_record(&verma(&["simple", "B2", "--crossed", "1", "--lambda", "1/2,1/2"]));
    assert_eq!(r.get("simple"), Some("true"));
    let r = single_record(&verma(&["simple", "A2", "--crossed", "1,2", "--lambda", "1,0,-1"]));
    assert_eq!(r.get("simple"), Some("false"));
    let r = single_record(&verma(&["simple", "A2", "--included", "1", "--lambda", "1,0,-1"]));
    assert_eq!(r.get("crossed"), Some("2"));
}

#[test]
fn coeffs_rows() {
    let r = single_record(&verma(&["coeffs", "A2", "--crossed", "2", "--lambda", "1,0,-1"]));
    assert_eq!(r.get("row"), Some("(0,-1,1):-1;(1,-1,0):1"));
    let r = single_record(&verma(&["coeffs", "B3", "--crossed", "2", "--lambda", "1,0,1"]));
    assert_eq!(r.get("row"), Some("(0,-1,1):1"));
    let r = single_record(&verma(&["coeffs", "A2", "--crossed", "2", "--lambda", "3/2,1/2,-2"]));
    assert_eq!(r.get("row"), Some(""));
}

#[test]
fn reduce_reports_label() {
    let r = single_record(&verma(&["reduce", "B3", "--crossed", "2", "--lambda", "1,0,1", "--beta", "e1+e2"]));
    assert_eq!(r.get("label"), Some("(B3,2,2)"));
    assert_eq!(r.get("simple"), Some("false"));
    let r = single_record(&verma(&["reduce", "B2", "--crossed", "1", "--lambda", "1/2,1/2", "--beta", "1,0"]));
    assert_eq!(r.get("label"), Some("(B2,1,2)"));
    let r = single_record(&verma(&["reduce", "A2", "--crossed", "2", "--lambda", "1,0,-1", "--beta", "e2-e3"]));
    assert_eq!(r.get("label"), Some("(A1,1,1)"));
}

#[test]
fn basics_output() {
    let r = single_record(&verma(&["basics", "--system", "G2", "--i", "1", "--j", "1"]));
    assert_eq!(r.get("weights").unwrap().split(';').count(), 2);
    let dot = stdout(&verma(&["basics", "--system", "E7", "--i", "4", "--j", "4", "--dot"]));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 5);
}

#[test]
fn verify_single_table() {
    let o = verma(&["verify", "--tables", "11"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let last = Record::parse(text.lines().last().unwrap()).unwrap();
    assert_eq!(last.get("failed"), Some("0"));
}

#[test]
fn input_errors_exit_one() {
    let o = verma(&["simple", "A2", "--crossed", "1", "--lambda", "1.5,0,-1.5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column"));
    // Outside Λ_I⁺.
    let o = verma(&["simple", "A2", "--crossed", "2", "--lambda", "0,1,-1"]);
    assert_eq!(o.status.code(), Some(1));
    // Wrong dimension.
    let o = verma(&["simple", "B3", "--crossed", "2", "--lambda", "1,0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn batch_mode() {
    let empty = TempFile::new("");
    let o = verma(&["batch", "--file", empty.as_str()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());

    let good = TempFile::new("# comment\n\nB8; crossed=2,5; lambda=2,1,2,-1,-3,4,2,1; cmd=simple\n");
    let o = verma(&["batch", "--file", good.as_str()]);
    assert!(o.status.success());
    let r = single_record(&o);
    assert_eq!(r.get("line"), Some("3"));
    assert_eq!(r.get("simple"), Some("false"));

    let bad = TempFile::new("B2; crossed=1; lambda=1/2,1/2; cmd=simple\nB2; crossed=1; lambda=0.5,0.5; cmd=simple\n");
    let o = verma(&["batch", "--file", bad.as_str()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let records: Vec<Record> = text.lines().map(|l| Record::parse(l).unwrap()).collect();
    assert_eq!(records.len(), 2);
    assert_eq!(records[0].get("simple"), Some("true"));
    assert!(records[1].get("error").is_some());
    assert_eq!(records[1].get("line"), Some("2"));
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let args = ["coeffs", "C3", "--crossed", "1", "--lambda", "3,2,1"];
    let a = stdout(&verma(&args));
    let b = stdout(&verma(&args));
    assert_eq!(a, b);
    for line in a.lines() {
        let r = Record::parse(line).unwrap();
        assert_eq!(r.to_string(), line);
    }
}
