use std::process::{Command, Output};

fn logdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logdeg"))
        .args(args)
        .env_remove("LOGDEG_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn degree_n3_prints_80() {
    let o = logdeg(&["degree", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("80"), "{}", stdout(&o));
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        &["degree", "--n", "2"][..],
        &["table", "--from", "5", "--to", "4"],
        &["degree", "--n", "3", "--workers", "0"],
        &["degree", "--n", "3", "--format", "xml"],
        &["frobnicate"],
    ] {
        assert_eq!(logdeg(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn resource_cap_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_logdeg"))
        .args(["degree", "--n", "6"])
        .env("LOGDEG_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(logdeg(&["degree", "--n", "13"]).status.code(), Some(2));
}

#[test]
fn json_lines_schema() {
    let o = logdeg(&[
        "table", "--from", "3", "--to", "4", "--format", "json", "--check",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["n"], 3);
    assert_eq!(rows[0]["degree"], "80");
    assert_eq!(rows[0]["pre_division_total"], "480");
    assert_eq!(rows[1]["degree"], "4035");
    assert!(rows[1]["term_count"].as_u64().unwrap() > 0);
    assert!(rows[1]["elapsed_ms"].is_u64());
}

#[test]
fn csv_table_with_check() {
    let o = logdeg(&[
        "table", "--from", "3", "--to", "5", "--format", "csv", "--check",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,degree,pre_division_total,term_count,elapsed_ms")
    );
    let degrees: Vec<&str> = lines.map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(degrees, ["80", "4035", "165984"]);
}

#[test]
fn selfcheck_and_oracle_pass() {
    assert_eq!(logdeg(&["selfcheck", "--n", "3"]).status.code(), Some(0));
    let o = logdeg(&["oracle", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn dump_classes_goes_to_stdout_in_text_mode() {
    let o = logdeg(&["degree", "--n", "3", "--dump-classes"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().count() > 1);
}
