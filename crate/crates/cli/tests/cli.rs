use std::path::Path;
use std::process::{Command, Output};

use hopf_cli::{load, AlgebraDocument, Loaded, Settings};

fn hopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn finite(source: &str) -> hopf_cli::FiniteSource {
    match load(source, &Settings::default()).unwrap() {
        Loaded::Finite(src) => src,
        Loaded::Laurent { .. } => panic!("expected a finite source"),
    }
}

#[test]
fn verify_presets_exit_zero() {
    for args in [
        &["verify", "preset:sweedler4", "--xi", "1"][..],
        &["verify", "preset:sweedler4", "--xi", "0"],
        &["verify", "group:C2"],
        &["verify", "group:C4"],
        &["verify", "preset:laurent", "--window", "5"],
    ] {
        let o = hopf(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
        assert!(stdout(&o).lines().last().unwrap().starts_with("result: pass"), "{args:?}");
    }
}

#[test]
fn spec_compute_examples() {
    assert_eq!(stdout(&hopf(&["compute", "preset:sweedler4", "--xi", "1", "u"])), "u = g\n");
    assert_eq!(stdout(&hopf(&["compute", "preset:sweedler4", "--xi", "0", "a"])), "a = g\n");
    let table = stdout(&hopf(&["compute", "preset:laurent", "alpha", "--window", "3"]));
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 14);
    // δ_{j,0}(−1)ⁱ
    for i in -3i64..=3 {
        let g = match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        };
        let x = if i == 0 { "x".to_string() } else { format!("{g}x") };
        let sign = if i % 2 == 0 { "1" } else { "-1" };
        assert!(lines.contains(&format!("alpha({g}) = {sign}").as_str()), "{table}");
        assert!(lines.contains(&format!("alpha({x}) = 0").as_str()), "{table}");
    }
}

#[test]
fn spec_check_examples() {
    let o = hopf(&["check", "preset:sweedler4", "--xi", "1", "uv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["[pass] uv = vu", "[pass] vu = a·b_α", "[pass] a·b_α = a·a_α", "  uv = 1", "  a·a_α = 1"] {
        assert!(text.contains(line), "missing {line:?} in\n{text}");
    }
    assert_eq!(hopf(&["check", "preset:laurent", "main3", "--window", "4"]).status.code(), Some(0));

    let text = stdout(&hopf(&["check", "preset:sweedler4", "--xi", "1", "minimal"]));
    assert!(text.contains("L = H = true"), "{text}");
    assert!(text.contains("[pass] a_L = a_H ⇔ α_L = α_H|L"), "{text}");
    let text = stdout(&hopf(&["check", "preset:sweedler4", "--xi", "0", "minimal"]));
    assert!(text.contains("basis L = [1, g]") && text.contains("L = H = false"), "{text}");
}

#[test]
fn missing_counit_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"name": "C2", "basis": ["1", "g"],
            "mult": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]],
            "comult": [[0,0,0,1],[1,1,1,1]],
            "counit": [[0,1]]}"#,
    )
    .unwrap();
    let o = hopf(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("counit: missing entries"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"name\": \"x\",\n \"basis\": [1, }").unwrap();
    let o = hopf(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn failing_axiom_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c2.json");
    // g·g = g breaks the antipode axiom
    std::fs::write(
        &path,
        r#"{"name": "C2", "basis": ["1", "g"],
            "mult": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,1,1]],
            "comult": [[0,0,0,1],[1,1,1,1]],
            "counit": [[0,1],[1,1]]}"#,
    )
    .unwrap();
    let o = hopf(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[fail]"));
}

#[test]
fn document_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for source in ["sweedler4", "group:C2", "group:C4"] {
        let o = hopf(&["compute", source, "--emit-document"]);
        assert_eq!(o.status.code(), Some(0));
        let path = dir.path().join("doc.json");
        std::fs::write(&path, &o.stdout).unwrap();
        let reparsed = finite(path.to_str().unwrap());
        let original = finite(source);
        assert_eq!(reparsed, original, "{source}");
        let again = AlgebraDocument::emit(&reparsed).to_json() + "\n";
        assert_eq!(again, stdout(&o));
        assert_eq!(hopf(&["verify", path.to_str().unwrap()]).status.code(), Some(0));
    }
    assert_eq!(hopf(&["compute", "laurent", "--emit-document"]).status.code(), Some(2));
}

#[test]
fn prime_field_runs() {
    let o = hopf(&["verify", "sweedler4", "--field", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(hopf(&["verify", "sweedler4", "--field", "4"]).status.code(), Some(2));
    assert_eq!(hopf(&["verify", "sweedler4", "--field", "7", "--xi", "1/7"]).status.code(), Some(2));
}

#[test]
fn json_and_timestamps() {
    let o = hopf(&["check", "group:C2", "cor25", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "check cor25");
    assert_eq!(v["result"], "pass");
    assert!(v.get("generated_unix").is_none());
    let o = hopf(&["check", "group:C2", "cor25", "--json", "--timestamps"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["generated_unix"].as_u64().unwrap() > 0);
    let o = hopf(&["verify", "group:C2", "--timestamps"]);
    assert!(stdout(&o).starts_with("generated at unix time "));
}

#[test]
fn text_output_is_deterministic() {
    let a = hopf(&["verify", "laurent", "--window", "3"]);
    let b = hopf(&["verify", "laurent", "--window", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn missing_prerequisites() {
    let o = hopf(&["check", "laurent", "uv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("needs an R-matrix"));
    assert_eq!(hopf(&["compute", "sweedler4"]).status.code(), Some(2));
    assert_eq!(hopf(&["check", "sweedler4", "nonsense"]).status.code(), Some(2));
    assert_eq!(hopf(&["verify", "preset:nothing"]).status.code(), Some(2));
    assert!(!Path::new("preset:nothing").exists());
}
