use std::process::{Command, Output};

use posgroup_cli::record::OutputRecord;

fn posgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posgroup")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn record(args: &[&str]) -> OutputRecord {
    let o = posgroup(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn has_violation(rec: &OutputRecord, order: &str, count: &str) -> bool {
    rec.violations.iter().any(|v| v.order == order && v.count == count)
}

#[test]
fn symmetric_four_both_methods() {
    let rec = record(&["spectrum", "--family", "symmetric", "--n", "4", "--method", "both", "--format", "json"]);
    let two = rec.spectrum.iter().find(|e| e.order == "2").unwrap();
    assert_eq!(two.count, "9");
    assert_eq!(rec.order, "24");
    assert!(!rec.pos);
}

#[test]
fn trivial_cyclic() {
    let rec = record(&["spectrum", "--family", "cyclic", "--m", "1"]);
    assert_eq!(rec.spectrum.len(), 1);
    assert_eq!((rec.spectrum[0].order.as_str(), rec.spectrum[0].count.as_str()), ("1", "1"));
    assert!(rec.pos);
}

#[test]
fn dihedral_nine_csv() {
    let o = posgroup(&["spectrum", "--family", "dihedral", "--n", "9", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "family,n,order,count\ndihedral,9,1,1\ndihedral,9,2,9\ndihedral,9,3,2\ndihedral,9,9,6\n"
    );
}

#[test]
fn table_format() {
    let o = posgroup(&["check", "--family", "symmetric", "--n", "4", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violation: 9 elements of order 2"));
}

#[test]
fn check_expectations() {
    assert_eq!(posgroup(&["check", "--family", "dihedral", "--n", "27", "--expect", "pos"]).status.code(), Some(0));
    assert_eq!(posgroup(&["check", "--family", "dihedral", "--n", "28", "--expect", "pos"]).status.code(), Some(1));
    assert_eq!(
        posgroup(&["check", "--family", "symmetric", "--n", "3", "--expect", "non-pos"]).status.code(),
        Some(1)
    );
}

#[test]
fn check_witnesses() {
    let s5 = record(&["check", "--family", "symmetric", "--n", "5"]);
    assert!(!s5.pos && has_violation(&s5, "2", "25"));
    let q3 = record(&["check", "--family", "quaternion", "--n", "3"]);
    assert!(!q3.pos && has_violation(&q3, "4", "6"));
    let z = record(&["check", "--family", "z2power", "--alpha", "2", "--t", "2", "--cross-check"]);
    assert!(!z.pos && has_violation(&z, "4", "12"));
}

#[test]
fn large_symmetric_uses_counting_evidence() {
    let rec = record(&["check", "--family", "symmetric", "--n", "200"]);
    assert!(!rec.pos);
    assert!(rec.spectrum.is_empty());
    let evidence = rec.evidence.as_ref().unwrap();
    assert_eq!(evidence.n, 200);
    assert_eq!(rec.violations.len(), 1);
    assert_eq!(rec.violations[0].count, evidence.d.to_string());
    // Smallest prime above 50 is 53, and 200 = 3 * 53 + 41.
    assert_eq!((evidence.p, evidence.r), (53, 41));
}

fn scan(args: &[&str]) -> Vec<(String, bool)> {
    let o = posgroup(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    reader
        .records()
        .map(|row| {
            let row = row.unwrap();
            (row[1].to_string(), row[3].parse().unwrap())
        })
        .collect()
}

fn pos_params(rows: &[(String, bool)]) -> Vec<String> {
    rows.iter().filter(|(_, pos)| *pos).map(|(p, _)| p.clone()).collect()
}

#[test]
fn dihedral_scan() {
    let rows = scan(&["scan", "--family", "dihedral", "--from", "2", "--to", "100"]);
    assert_eq!(rows.len(), 99);
    assert_eq!(pos_params(&rows), ["3", "9", "27", "81"]);
}

#[test]
fn symmetric_scan() {
    let rows = scan(&["scan", "--family", "symmetric", "--from", "3", "--to", "12"]);
    assert_eq!(pos_params(&rows), ["3"]);
}

#[test]
fn quaternion_scan() {
    let rows = scan(&["scan", "--family", "quaternion", "--from", "3", "--to", "12"]);
    assert_eq!(rows.len(), 10);
    assert!(pos_params(&rows).is_empty());
}

#[test]
fn scan_is_deterministic_across_runs_and_jobs() {
    let args = ["scan", "--family", "dihedral", "--from", "2", "--to", "300", "--format", "json"];
    let first = stdout(&posgroup(&args));
    assert_eq!(first, stdout(&posgroup(&args)));
    let mut parallel = args.to_vec();
    parallel.extend(["--jobs", "4"]);
    assert_eq!(first, stdout(&posgroup(&parallel)));
    assert_eq!(first.lines().count(), 299);
}

#[test]
fn scan_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.csv");
    let o = posgroup(&["scan", "--family", "cyclic", "--from", "1", "--to", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("family,m,group_order,pos,violations\ncyclic,1,1,true,\n"));
}

#[test]
fn json_round_trip_is_stable() {
    let o = posgroup(&["check", "--family", "symmetric", "--n", "30"]);
    let text = stdout(&o);
    let rec: OutputRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(rec.to_json(), text);
}

#[test]
fn exit_codes() {
    // Bad arguments.
    assert_eq!(posgroup(&["spectrum", "--family", "dihedral", "--n", "1"]).status.code(), Some(2));
    assert_eq!(posgroup(&["spectrum", "--family", "symmetric"]).status.code(), Some(2));
    assert_eq!(posgroup(&["bogus"]).status.code(), Some(2));
    assert_eq!(posgroup(&["scan", "--family", "cyclic", "--from", "5", "--to", "1"]).status.code(), Some(2));
    assert_eq!(posgroup(&["verify", "wilson", "--p", "9"]).status.code(), Some(2));
    assert_eq!(posgroup(&["verify", "lemma3.1", "--p", "5", "--r", "7"]).status.code(), Some(2));
    // Budget refusal.
    let o = posgroup(&["spectrum", "--family", "symmetric", "--n", "11", "--method", "brute"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
    assert_eq!(
        posgroup(&["spectrum", "--family", "symmetric", "--n", "91"]).status.code(),
        Some(3)
    );
    // I/O failure.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let o = posgroup(&["scan", "--family", "cyclic", "--from", "1", "--to", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    // Help is not an error.
    assert_eq!(posgroup(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_four_blocks_fraction() {
    let o = posgroup(&["verify", "lemma3.3", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("3840/7060"), "{text}");
    assert!(text.contains("SUMMARY lemma3.3 cases=1 ok=1 known_anomalies=0 failed=0"), "{text}");
}

#[test]
fn verify_known_anomaly() {
    let o = posgroup(&["verify", "lemma3.1", "--p", "3", "--r", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("KNOWN-ANOMALY lemma3.1"), "{text}");
    assert!(text.contains("known_anomalies=1 failed=0"));
}

#[test]
fn verify_default_ranges_pass() {
    for subject in ["prop2.1", "thm2.1", "prop2.2", "lemma3.1", "lemma3.2", "lemma3.3", "thm3.1"] {
        let o = posgroup(&["verify", subject, "--quiet"]);
        assert_eq!(o.status.code(), Some(0), "{subject}: {}", stdout(&o));
        assert!(stdout(&o).contains("failed=0"), "{subject}");
    }
}

#[test]
fn verify_json_lines() {
    let o = posgroup(&["verify", "wilson", "--p-max", "30", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 30);
    assert!(lines[..29].iter().all(|v| v["status"] == "OK" && v["subject"] == "wilson"));
    assert_eq!(lines[29]["failed"], 0);
    assert_eq!(lines[29]["cases"], 29);
}

#[test]
fn verify_symmetric_fallback() {
    let o = posgroup(&["verify", "thm3.1", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("witness=2:75"), "{text}");
    assert!(text.contains("lemma=KNOWN-ANOMALY"), "{text}");
}

#[test]
fn verify_coverage_range() {
    let o = posgroup(&["verify", "coverage", "--n-min", "8", "--n-max", "2000", "--quiet"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "SUMMARY coverage cases=1993 ok=1993 known_anomalies=0 failed=0");
}
