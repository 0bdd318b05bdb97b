use std::process::{Command, Output};

fn girthlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girthlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = girthlab(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn girth_of_unlifted_mother() {
    let out = stdout(&["girth", "--a", "3", "--b", "2", "--c", "2", "--m", "1"]);
    assert!(out.starts_with("girth 6\n"), "{out}");
}

#[test]
fn gmax_of_first_table_row() {
    assert_eq!(
        stdout(&["gmax", "--a", "3", "--b", "3", "--c", "2"]),
        "40\n"
    );
    let json = stdout(&[
        "gmax", "--a", "5", "--b", "3", "--c", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["gmax"], 52);
}

#[test]
fn verify_table_flags_1650_row() {
    let out = stdout(&["verify-table"]);
    let row = out
        .lines()
        .find(|l| l.starts_with("b=3 c=6 a=3 m=60 n=1650"))
        .expect("row present");
    assert!(row.contains("code-length"), "{row}");

    let json = stdout(&["verify-table", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rec = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["b"] == 3 && r["c"] == 6 && r["a"] == 3)
        .unwrap();
    assert_eq!(rec["computed_n"], 1620);
    assert_eq!(rec["claimed_n"], 1650);
}

#[test]
fn build_prints_example_matrix() {
    let out = stdout(&["build", "--a", "3", "--b", "2", "--c", "2"]);
    let first: Vec<&str> = out.lines().collect();
    assert_eq!(first.len(), 8);
    assert_eq!(first[0], "1 0 1 0 0 0 0 0 0 1");
    let dot = stdout(&["build", "--a", "3", "--b", "2", "--c", "2", "--dot"]);
    assert!(dot.starts_with("graph bsg {"));
}

#[test]
fn sweep_emits_csv() {
    let out = stdout(&[
        "sweep", "--c", "2", "--a-min", "3", "--a-max", "3", "--b-min", "3", "--b-max", "3",
        "--format", "csv",
    ]);
    assert_eq!(out, "a,b,c,gmax\n3,3,2,40\n");
}

#[test]
fn search_then_girth_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let result = dir.path().join("search.json");
    stdout(&[
        "search",
        "--a",
        "3",
        "--b",
        "3",
        "--c",
        "2",
        "--m",
        "30",
        "--format",
        "json",
        "--out",
        result.to_str().unwrap(),
    ]);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&result).unwrap()).unwrap();
    assert_eq!(v["status"], "found");
    assert_eq!(v["achieved_girth"], 40);
    let slopes: Vec<String> = v["slopes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.to_string())
        .collect();

    let alist = dir.path().join("code.alist");
    let joined = slopes.join(",");
    let code = [
        "--a", "3", "--b", "3", "--c", "2", "--m", "30", "--slopes", &joined,
    ];
    let mut export = vec!["export-alist"];
    export.extend_from_slice(&code);
    export.extend_from_slice(&["--out", alist.to_str().unwrap()]);
    stdout(&export);
    let out = stdout(&[
        "girth",
        "--alist",
        alist.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(out, "rows,n,girth\n360,450,40\n");
}

#[test]
fn lift_json_describes_code() {
    let json = stdout(&[
        "lift", "--a", "3", "--b", "2", "--c", "2", "--m", "5", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["n"], 50);
    assert_eq!(v["rows"], 40);
    assert_eq!(v["slopes"].as_array().unwrap().len(), 10);
}

#[test]
fn errors_are_one_line_and_nonzero() {
    for args in [
        &["gmax", "--a", "1", "--b", "3", "--c", "2"][..],
        &[
            "search",
            "--a",
            "3",
            "--b",
            "3",
            "--c",
            "2",
            "--m",
            "30",
            "--target-girth",
            "42",
        ],
        &[
            "girth", "--a", "3", "--b", "2", "--c", "2", "--m", "5", "--slopes", "1,2",
        ],
        &["girth", "--alist", "/nonexistent/file.alist"],
    ] {
        let out = girthlab(args);
        assert!(!out.status.success(), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("girthlab: error:"));
    }
    let err = String::from_utf8(
        girthlab(&[
            "search",
            "--a",
            "3",
            "--b",
            "3",
            "--c",
            "2",
            "--m",
            "30",
            "--target-girth",
            "42",
        ])
        .stderr,
    )
    .unwrap();
    assert!(err.contains("40"), "{err}");
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_girthlab"))
            .env("GIRTHLAB_THREADS", threads)
            .args([
                "search",
                "--a",
                "3",
                "--b",
                "2",
                "--c",
                "2",
                "--m",
                "11",
                "--strategy",
                "hybrid",
                "--target-girth",
                "24",
                "--seed",
                "5",
                "--format",
                "json",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
    let bad = Command::new(env!("CARGO_BIN_EXE_girthlab"))
        .env("GIRTHLAB_THREADS", "many")
        .args(["gmax", "--a", "3", "--b", "3", "--c", "2"])
        .output()
        .unwrap();
    assert!(!bad.status.success());
}
