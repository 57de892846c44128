use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gvbounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bounds_range_gives_one_row_per_length() {
    let o = run(&["bounds", "--n", "4..6", "--d", "3"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,d,q,w,formula,exact_num,exact_den,log2,floor,aux");
    assert_eq!(lines.len(), 4);
}

#[test]
fn bounds_json_winner_floor() {
    let o = run(&["bounds", "--n", "4", "--d", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 1);
    assert_eq!(rows[0]["floor"], "2");
}

#[test]
fn bounds_all_lists_every_formula() {
    let o = run(&["bounds", "--n", "8", "--d", "3", "--all"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for id in ["GV", "VARSHAMOV", "TOLHUIZEN", "FABRIS2", "BGS", "THEOREM1"] {
        assert!(text.contains(&format!(",{id},")), "{id} missing");
    }
}

#[test]
fn invalid_params_exit_2() {
    assert_eq!(code(&run(&["bounds", "--n", "4", "--d", "9"])), 2);
    assert_eq!(code(&run(&["bounds", "--n", "6..4", "--d", "3"])), 2);
    assert_eq!(code(&run(&["asym", "--lambda", "0.5"])), 2);
    assert_eq!(code(&run(&["color", "--n", "4", "--d", "0"])), 2);
}

#[test]
fn truncated_table_exits_3_with_marker() {
    let o = run(&["bounds", "--n", "4..8", "--d", "3", "--budget", "2"]);
    assert_eq!(code(&o), 3);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().last().unwrap().contains("TRUNCATED"));
}

#[test]
fn sphere_cross_checks() {
    let o = run(&["sphere", "--n", "4", "--d", "3", "--oracle"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("4,3,2,,edges,30,30,PASS"));
    assert!(stderr(&o).contains("edges 30 = 30 PASS"));

    let o = run(&["sphere", "--n", "3", "--d", "2", "--q", "3", "--oracle"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("3,2,3,,edges,3,3,PASS"));

    let o = run(&["sphere", "--n", "6", "--d", "2", "--w", "3", "--oracle"]);
    assert_eq!(code(&o), 0);
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn sphere_large_instance_skips_oracle() {
    let o = run(&["sphere", "--n", "40", "--d", "12"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("oracle skipped"));
    assert!(stdout(&o).contains("SKIPPED"));
    assert_eq!(code(&run(&["sphere", "--n", "40", "--d", "12", "--oracle"])), 3);
}

#[test]
fn asym_threshold_and_closeup() {
    let o = run(&["asym", "--epsilon", "1e-6", "--lambda", "0.999", "--range", "0.499:0.5:1e-6"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1002);
    let err = stderr(&o);
    let value: f64 = err
        .split("delta* = ")
        .nth(1)
        .and_then(|s| s.split_whitespace().next())
        .unwrap()
        .parse()
        .unwrap();
    assert!((0.4994..0.5).contains(&value), "{err}");
    assert!(err.contains("binding = g"));

    // Default lambda is 0.999.
    let o = run(&["asym", "--range", "0.3:0.3:0.1"]);
    assert!(stderr(&o).contains("lambda=0.999"));
}

#[test]
fn construct_greedy_writes_codebook() {
    let o = run(&["construct", "--n", "5", "--d", "3", "--method", "greedy"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "# n=5 d=3 q=2 size=4 mindist=3\n00000\n00111\n11001\n11110\n");
    assert!(stderr(&o).contains("GV floor 2"));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 3] = [
        &["construct", "--n", "12", "--d", "4", "--method", "hl", "--seed", "7"],
        &["bounds", "--n", "10..14", "--d", "3..5", "--all", "--format", "json"],
        &["asym", "--range", "0.4:0.5:0.001"],
    ];
    for (k, args) in cases.iter().enumerate() {
        let a = dir.path().join(format!("{k}a"));
        let b = dir.path().join(format!("{k}b"));
        for p in [&a, &b] {
            let mut full = args.to_vec();
            full.extend(["--out", path_str(p)]);
            assert_eq!(code(&run(&full)), 0);
        }
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), "{args:?}");
    }
}

#[test]
fn budget_failure_leaves_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("code.txt");
    let o = run(&["construct", "--n", "25", "--d", "3", "--out", path_str(&out)]);
    assert_eq!(code(&o), 3);
    assert!(!out.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn color_and_verify() {
    let o = run(&["color", "--n", "5", "--d", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["colors"].as_array().unwrap().len(), 32);
    assert!(stderr(&o).contains("proper PASS"));

    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    run(&["construct", "--n", "7", "--d", "3", "--out", path_str(&good)]);
    let o = run(&["verify", path_str(&good)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("mindist,>=3,3,PASS"));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "# n=5 d=3 q=2 size=2 mindist=3\n00000\n00011\n").unwrap();
    assert_eq!(code(&run(&["verify", path_str(&bad)])), 1);

    let junk = dir.path().join("junk.txt");
    std::fs::write(&junk, "00000\n").unwrap();
    assert_eq!(code(&run(&["verify", path_str(&junk)])), 2);
}
