use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_shadow-bracket"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn lucas_column() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/a004146.txt")
}

#[test]
fn bracket_examples() {
    assert_eq!(
        ok(&["bracket", "--generator", "T", "--n", "1", "--closure"]),
        "x^3+2x^2+x\n"
    );
    assert_eq!(
        ok(&["bracket", "--generator", "T", "--n", "0"]),
        "[1,0,0,0,0]\n"
    );
    assert_eq!(ok(&["bracket", "--word", "X1 X2"]), "[1,1,1,0,1]\n");
    assert_eq!(
        ok(&["bracket", "--generator", "T", "--n", "2"]),
        "[1,x+3,x+3,1,2x+4]\n"
    );
}

#[test]
fn bracket_from_diagram_file() {
    let pd = data("x1.json");
    let pd = pd.to_str().unwrap();
    assert_eq!(ok(&["bracket", "--pd", pd]), "[1,1,0,0,0]\n");
    assert_eq!(
        ok(&["bracket", "--pd", pd, "--n", "2", "--closure"]),
        ok(&["bracket", "--word", "X1 X1", "--closure"])
    );
}

#[test]
fn closed_diagram_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("circles.json");
    fs::write(
        &path,
        r#"{"crossings": [], "boundary": [], "free_loops": 3}"#,
    )
    .unwrap();
    let path = path.to_str().unwrap();
    assert_eq!(ok(&["bracket", "--pd", path]), "x^3\n");
    assert_eq!(
        run(&["bracket", "--pd", path, "--n", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["table", "--pd", path]).status.code(), Some(2));
}

#[test]
fn json_tuple_round_trips() {
    let json = ok(&[
        "bracket",
        "--generator",
        "E",
        "--n",
        "3",
        "--format",
        "json",
    ]);
    let text = ok(&["bracket", "--generator", "E", "--n", "3"]);
    assert_eq!(ok(&["bracket", "--tuple", json.trim()]), text);
    assert_eq!(
        ok(&["bracket", "--tuple", json.trim(), "--format", "json"]),
        json
    );
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    for key in ["a", "b", "c", "d", "e"] {
        assert!(value[key].is_array(), "{key}");
    }
}

#[test]
fn tuple_input_powers() {
    let t = r#"{"a":[1],"b":[1],"c":[1],"d":[],"e":[1]}"#;
    assert_eq!(
        ok(&["bracket", "--tuple", t, "--n", "4", "--closure"]),
        ok(&["bracket", "--generator", "T", "--n", "4", "--closure"])
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bracket", "--generator", "Q"][..],
        &["bracket", "--word", "X3"],
        &["bracket", "--tuple", "{not json"],
        &["bracket"],
        &["bracket", "--generator", "T", "--word", "X1"],
        &["bracket", "--pd", "/nonexistent/diagram.json"],
        &["gf", "--generator", "T", "--format", "csv"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn crossing_limit_refusal() {
    let pd = data("x1.json");
    let out = run(&[
        "bracket",
        "--pd",
        pd.to_str().unwrap(),
        "--max-crossings",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("crossing"));
    let out = run(&[
        "verify",
        "--oracle",
        "--generator",
        "E",
        "--max-n",
        "2",
        "--max-crossings",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let out = ok(&["verify", "--tables", "--generator", "C", "--rows", "6"]);
    assert!(out.starts_with("PASS"), "{out}");
    let out = ok(&["verify", "--oracle", "--generator", "T", "--max-n", "5"]);
    assert!(out.starts_with("PASS"), "{out}");
    let out = ok(&["verify", "--charpoly", "--generator", "E"]);
    assert!(out.starts_with("PASS"), "{out}");
}

#[test]
fn verify_all_suites() {
    let out = ok(&["verify", "--max-n", "3"]);
    assert_eq!(out.lines().count(), 12, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}

#[test]
fn table_formats() {
    assert_eq!(
        ok(&[
            "table",
            "--generator",
            "T",
            "--rows",
            "2",
            "--format",
            "csv"
        ]),
        "0,0,0,1\n0,1,2,1\n0,5,8,3\n"
    );
    let text = ok(&["table", "--generator", "C", "--rows", "6"]);
    assert_eq!(text.lines().count(), 7);
    let json = ok(&[
        "table",
        "--generator",
        "T",
        "--rows",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(json, "[[0,0,0,1],[0,1,2,1],[0,5,8,3]]\n");
    let b = ok(&[
        "table",
        "--generator",
        "T",
        "--rows",
        "1",
        "--format",
        "bfile",
    ]);
    assert_eq!(b, "0 0\n1 0\n2 0\n3 1\n4 0\n5 1\n6 2\n7 1\n");
}

#[test]
fn word_and_generator_tables_agree() {
    assert_eq!(
        ok(&["table", "--word", "X1 X2", "--rows", "8"]),
        ok(&["table", "--generator", "T", "--rows", "8"])
    );
}

#[test]
fn gf_terms_match_brackets() {
    let out = ok(&["gf", "--generator", "C", "--terms", "3"]);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("G(y) = "));
    for (n, l) in lines.enumerate() {
        let closure = ok(&[
            "bracket",
            "--generator",
            "C",
            "--n",
            &n.to_string(),
            "--closure",
        ]);
        assert_eq!(l, format!("{n}: {}", closure.trim()));
    }
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "gf",
        "--generator",
        "T",
        "--terms",
        "2",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(
        json["series"],
        serde_json::json!([[0, 0, 0, 1], [0, 1, 2, 1], [0, 5, 8, 3]])
    );
}

#[test]
fn charpoly_output() {
    let out = ok(&["charpoly", "--generator", "T"]);
    assert!(out.contains("p = 2x+3\n"), "{out}");
    assert!(out.contains("q^2 = 4x+5\n"), "{out}");
    assert!(out.contains("det(M - λI) = -λ^5+"), "{out}");
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["charpoly", "--generator", "E", "--format", "json"])).unwrap();
    assert_eq!(json["charpoly"].as_array().unwrap().len(), 6);
}

#[test]
fn export_and_compare_column() {
    let lucas = lucas_column();
    let lucas = lucas.to_str().unwrap();
    let out = ok(&[
        "export",
        "--generator",
        "T",
        "--column",
        "1",
        "--compare",
        lucas,
    ]);
    assert!(out.starts_with("PASS compare: 11 entries"), "{out}");

    let dir = tempfile::tempdir().unwrap();
    let written = dir.path().join("column.txt");
    ok(&[
        "export",
        "--generator",
        "T",
        "--column",
        "1",
        "--out",
        written.to_str().unwrap(),
    ]);
    let body = fs::read_to_string(&written).unwrap();
    assert!(body.starts_with("0 0\n1 1\n2 5\n"));
    assert!(body.ends_with("10 15125\n"));

    // A shifted offset no longer lines up with the reference.
    let out = run(&[
        "export",
        "--generator",
        "T",
        "--column",
        "1",
        "--offset",
        "1",
        "--compare",
        lucas,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL"));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0 0\n1 2\n").unwrap();
    let out = run(&[
        "export",
        "--generator",
        "T",
        "--column",
        "1",
        "--compare",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("index 1"));

    fs::write(&bad, "0 zero\n").unwrap();
    let out = run(&[
        "export",
        "--generator",
        "T",
        "--column",
        "1",
        "--compare",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_csv_column_and_triangle() {
    assert_eq!(
        ok(&[
            "export",
            "--generator",
            "T",
            "--rows",
            "3",
            "--column",
            "1",
            "--format",
            "csv"
        ]),
        "0\n1\n5\n16\n"
    );
    assert_eq!(
        ok(&[
            "export",
            "--generator",
            "T",
            "--rows",
            "2",
            "--format",
            "csv"
        ]),
        ok(&[
            "table",
            "--generator",
            "T",
            "--rows",
            "2",
            "--format",
            "csv"
        ])
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "table",
            "--generator",
            "E",
            "--rows",
            "5",
            "--format",
            "json",
        ][..],
        &["gf", "--generator", "C", "--format", "json"],
        &["charpoly", "--generator", "E"],
        &["export", "--generator", "C", "--rows", "6"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
