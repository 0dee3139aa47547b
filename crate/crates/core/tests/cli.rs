use std::process::Command;

fn apollonian(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_apollonian"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn count_all_methods_agree() {
    let (code, out, _) = apollonian(&["count", "-n", "2", "--method", "all"]);
    assert_eq!(code, 0);
    let values: Vec<&str> = out
        .lines()
        .skip(2)
        .map(|l| l.split(": ").nth(1).unwrap())
        .collect();
    assert_eq!(values, vec!["1445"; 3]);
}

#[test]
fn entropy_residual_at_ten() {
    let (code, out, _) = apollonian(&["entropy", "-n", "10"]);
    assert_eq!(code, 0);
    let line = out.lines().find(|l| l.starts_with("# residual")).unwrap();
    let value: f64 = line.rsplit(' ').next().unwrap().parse().unwrap();
    assert!(value < 1e-3 && value > 1e-4, "{line}");
    assert!(out.contains("# limit ln(15)/2 = 1.35402510055110503300"));
}

#[test]
fn classify_one_prints_the_seed_table() {
    let (code, out, _) = apollonian(&["classify", "-n", "1"]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("class\tcount\nA\t3\nB\t1\nB'\t1\nB''\t1\nC\t1\nD\t3\nE\t1\nF\t3\ns\t16\n")
    );
}

#[test]
fn exit_codes() {
    assert_eq!(apollonian(&["count", "--method", "bogus", "-n", "1"]).0, 2);
    assert_eq!(apollonian(&["generate", "-n", "2", "--format", "csv"]).0, 2);
    assert_eq!(apollonian(&["generate", "-n", "17"]).0, 3);
    assert_eq!(
        apollonian(&["count", "-n", "6", "--method", "kirchhoff"]).0,
        3
    );
    assert_eq!(apollonian(&["classify", "-n", "3"]).0, 3);
}

#[test]
fn usage_errors_print_nothing_on_stdout() {
    let (_, out, err) = apollonian(&["entropy", "-n", "4", "--precision", "3"]);
    assert!(out.is_empty());
    assert!(err.contains("precision"));
}

#[test]
fn verify_small_bound_passes() {
    let (code, out, _) = apollonian(&["verify", "-n", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() == 11);
}

#[test]
fn verify_default_bounds_pass() {
    let (code, out, _) = apollonian(&["verify"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("11 checks, 0 failed\n"));
}

#[test]
fn generate_is_byte_identical() {
    let a = apollonian(&["generate", "-n", "3", "--format", "json"]);
    let b = apollonian(&["generate", "-n", "3", "--format", "json"]);
    assert_eq!(a, b);
    let dot = apollonian(&[
        "generate",
        "-n",
        "2",
        "--format",
        "dot",
        "--construction",
        "merged",
    ])
    .1;
    assert!(dot.contains("0 -- 1 [hub_edge=true"));
}
