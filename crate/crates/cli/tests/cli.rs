//! End-to-end tests driving the `eids` binary over the bundled samples.

use eids_cli::render::{kv_tokens, parse_machine_report, report_all, report_get, token_get};
use std::path::PathBuf;
use std::process::Command;

fn eids(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_eids"))
        .args(args)
        .output()
        .expect("binary launches");
    (
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
        out.status.code().expect("process exits normally"),
    )
}

fn sample(name: &str) -> String {
    format!("{}/samples/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn temp_file(name: &str, content: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, content).expect("temp file writes");
    path.display().to_string()
}

#[test]
fn check_reports_type_line_and_passes() {
    let (stdout, _, code) = eids(&["check", &sample("essential_cone.eids")]);
    assert_eq!(code, 0, "{stdout}");
    assert!(
        stdout.contains("determinantal (2,3,2), dim 4, IDS: yes, smoothable: no"),
        "{stdout}"
    );
    assert!(stdout.contains("corank at origin: 1"), "{stdout}");
    assert!(stdout.contains("essential isolation: verified"), "{stdout}");
}

#[test]
fn check_machine_surface_is_smoothable() {
    let (stdout, _, code) = eids(&["check", &sample("surface_c4.eids"), "--machine"]);
    assert_eq!(code, 0);
    let fields = parse_machine_report(&stdout).unwrap();
    assert_eq!(report_get(&fields, "format"), Some("eids-report 1"));
    assert_eq!(report_get(&fields, "smoothable"), Some("yes"));
    assert_eq!(report_get(&fields, "determinantal"), Some("yes"));
    assert_eq!(report_get(&fields, "dim"), Some("2"));
    assert_eq!(report_get(&fields, "status"), Some("ok"));
    assert_eq!(report_all(&fields, "stratum").len(), 2);
}

#[test]
fn malformed_entry_exits_4_with_byte_position() {
    let text = "vars: x, y\nt: 1\nmatrix:\n  y^2-x^%\n";
    let file = temp_file("malformed.eids", text);
    let (_, stderr, code) = eids(&["check", &file]);
    assert_eq!(code, 4);
    assert!(stderr.contains("syntax error at byte 32"), "{stderr}");
    assert_eq!(text.as_bytes()[32], b'%');
}

#[test]
fn missing_file_exits_4() {
    let (_, stderr, code) = eids(&["check", "/nonexistent/nowhere.eids"]);
    assert_eq!(code, 4);
    assert!(stderr.contains("cannot read"), "{stderr}");
}

#[test]
fn machine_error_report_goes_to_stdout() {
    let (stdout, _, code) = eids(&["check", "/nonexistent/nowhere.eids", "--machine"]);
    assert_eq!(code, 4);
    let fields = parse_machine_report(&stdout).unwrap();
    assert_eq!(report_get(&fields, "status"), Some("error"));
    assert!(report_get(&fields, "error").unwrap().contains("cannot read"));
}

#[test]
fn invariants_of_the_twisted_surface() {
    let (stdout, _, code) = eids(&["invariants", &sample("twisted_c4.eids"), "--machine"]);
    assert_eq!(code, 0, "{stdout}");
    let fields = parse_machine_report(&stdout).unwrap();
    let mut seen = Vec::new();
    for line in report_all(&fields, "invariant") {
        let tokens = kv_tokens(line);
        seen.push((
            token_get(&tokens, "name").unwrap().to_string(),
            token_get(&tokens, "value").unwrap().parse::<i64>().unwrap(),
        ));
    }
    assert!(seen.contains(&("mu".to_string(), 1)), "{seen:?}");
    assert!(seen.contains(&("md".to_string(), 3)), "{seen:?}");
    assert!(seen.contains(&("nu".to_string(), 1)), "{seen:?}");
}

#[test]
fn invariants_of_the_cusp_round_trip_exactly() {
    let (stdout, _, code) = eids(&["invariants", &sample("cusp.eids"), "--machine"]);
    assert_eq!(code, 0, "{stdout}");
    let fields = parse_machine_report(&stdout).unwrap();
    let lines = report_all(&fields, "invariant");
    assert!(!lines.is_empty());
    let mut by_name = Vec::new();
    for line in lines {
        let tokens = kv_tokens(line);
        let name = token_get(&tokens, "name").unwrap().to_string();
        let value: i64 = token_get(&tokens, "value").unwrap().parse().unwrap();
        assert_eq!(token_get(&tokens, "prov"), Some("computed"));
        assert_eq!(token_get(&tokens, "seed").unwrap().parse::<u64>(), Ok(0));
        by_name.push((name, value));
    }
    assert!(by_name.contains(&("mu".to_string(), 2)), "{by_name:?}");
    assert!(by_name.contains(&("tau".to_string(), 2)), "{by_name:?}");
    assert!(by_name.contains(&("m0".to_string(), 2)), "{by_name:?}");
}

#[test]
fn eu_of_the_surface_is_minus_one() {
    let (stdout, _, code) = eids(&["eu", &sample("surface_c4.eids"), "--machine"]);
    assert_eq!(code, 0, "{stdout}");
    let fields = parse_machine_report(&stdout).unwrap();
    assert_eq!(report_get(&fields, "eu"), Some("-1"));
    assert_eq!(report_get(&fields, "regime"), Some("smoothable"));
    for line in report_all(&fields, "invariant") {
        let tokens = kv_tokens(line);
        assert_eq!(token_get(&tokens, "prov"), Some("computed"));
    }
}

#[test]
fn eu_fast_path_in_eight_variables() {
    let (stdout, _, code) = eids(&["eu", &sample("corank1_c8.eids")]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("eu = 2 [regime: corank1-fast-path]"), "{stdout}");
}

#[test]
fn eu_budget_exhaustion_exits_3() {
    let text = "vars: x, y, z, w, v, u\nt: 2\nmatrix:\n  x, y, z\n  w, v, u^2+y^4\n";
    let file = temp_file("e6_bare.eids", text);
    let (_, stderr, code) = eids(&["eu", &file, "--max-work", "20000"]);
    assert_eq!(code, 3, "{stderr}");
    assert!(stderr.contains("work budget exceeded"), "{stderr}");
}

#[test]
fn eu_supplied_value_survives_any_budget() {
    let (stdout, _, code) = eids(&[
        "eu",
        &sample("e6_supplied.eids"),
        "--max-work",
        "20000",
        "--machine",
    ]);
    assert_eq!(code, 0, "{stdout}");
    let fields = parse_machine_report(&stdout).unwrap();
    assert_eq!(report_get(&fields, "eu"), Some("0"));
    let inputs = report_all(&fields, "invariant");
    assert_eq!(inputs.len(), 1);
    let tokens = kv_tokens(inputs[0]);
    assert_eq!(token_get(&tokens, "name"), Some("chi_tilde"));
    assert_eq!(token_get(&tokens, "value"), Some("-1"));
    assert_eq!(token_get(&tokens, "prov"), Some("supplied"));
}

#[test]
fn eu_missing_input_names_the_invariant() {
    let text = "vars: a, b, c, d, e\nt: 2\nmatrix:\n  a, b\n  c, d+e^2\n";
    let file = temp_file("g225.eids", text);
    let (stdout, _, code) = eids(&["eu", &file, "--machine"]);
    assert_eq!(code, 2, "{stdout}");
    let fields = parse_machine_report(&stdout).unwrap();
    assert_eq!(report_get(&fields, "status"), Some("error"));
    assert!(report_get(&fields, "error").unwrap().contains("`chi_tilde`"));
}

#[test]
fn unknown_supplied_invariant_exits_4() {
    let text = "vars: x, y\nt: 1\nmatrix:\n  y^2-x^3\nsupplied: euler_class = 1\n";
    let file = temp_file("bad_supplied.eids", text);
    let (_, stderr, code) = eids(&["eu", &file]);
    assert_eq!(code, 4);
    assert!(stderr.contains("euler_class"), "{stderr}");
}

#[test]
fn corpus_single_row_matches_and_is_reproducible() {
    let first = eids(&["corpus-run", "--only", "t1r01", "--machine"]);
    let second = eids(&["corpus-run", "--only", "t1r01", "--machine"]);
    assert_eq!(first.2, 0, "{}", first.0);
    assert_eq!(first.0, second.0, "corpus output must be byte-identical per seed");
    let fields = parse_machine_report(&first.0).unwrap();
    let entries = report_all(&fields, "entry");
    assert_eq!(entries.len(), 1);
    let tokens = kv_tokens(entries[0]);
    assert_eq!(token_get(&tokens, "verdict"), Some("MATCH"));
    assert_eq!(token_get(&tokens, "expected"), Some("2"));
    assert_eq!(token_get(&tokens, "got"), Some("2"));
}

#[test]
fn corpus_suspect_row_is_skipped_with_note() {
    let (stdout, _, code) = eids(&["corpus-run", "--only", "a-k-dagger", "--machine"]);
    assert_eq!(code, 0, "{stdout}");
    let fields = parse_machine_report(&stdout).unwrap();
    let entries = report_all(&fields, "entry");
    assert_eq!(entries.len(), 1);
    let tokens = kv_tokens(entries[0]);
    assert_eq!(token_get(&tokens, "id"), Some("t1r03"));
    assert_eq!(token_get(&tokens, "verdict"), Some("SKIPPED(suspect)"));
    assert!(token_get(&tokens, "note").unwrap().contains("negative"));
}

#[test]
fn corpus_filter_without_hits_is_empty_success() {
    let (stdout, _, code) = eids(&["corpus-run", "--only", "zzz-no-such-row", "--machine"]);
    assert_eq!(code, 0);
    let fields = parse_machine_report(&stdout).unwrap();
    assert!(report_all(&fields, "entry").is_empty());
    assert_eq!(
        report_get(&fields, "summary"),
        Some("summary: match=0 supplied-match=0 mismatch=0 skipped=0")
            .map(|s| s.trim_start_matches("summary: "))
    );
}

#[test]
fn seed_changes_are_accepted_and_stable_in_value() {
    let (a, _, code_a) = eids(&["eu", &sample("surface_c4.eids"), "--seed", "7", "--machine"]);
    assert_eq!(code_a, 0);
    let fields = parse_machine_report(&a).unwrap();
    assert_eq!(report_get(&fields, "eu"), Some("-1"));
    assert_eq!(report_get(&fields, "seed"), Some("7"));
}
