use std::path::PathBuf;
use std::process::Command;

use delta_matroid::format::parse_set_system;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

struct Run {
    status: i32,
    stdout: String,
    stderr: String,
}

fn dmat(args: &[&str]) -> Run {
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(file) => data(file).display().to_string(),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_dmat")).args(&args).output().unwrap();
    Run {
        status: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn slide_steps_match_golden_files() {
    for (trace, expected) in [
        ("@step1.trace", "step1.expected"),
        ("@step2.trace", "step2.expected"),
        ("@example.trace", "example.expected"),
    ] {
        let r = dmat(&["slide", "@example.dm", "--trace", trace]);
        assert_eq!(r.status, 0, "{}", r.stderr);
        assert_eq!(r.stdout, golden(expected));
    }
}

#[test]
fn check_verdicts() {
    let r = dmat(&["check", "@example.dm"]);
    assert_eq!((r.status, r.stdout.as_str()), (0, "delta-matroid: yes\nmatroid: no\n"));
    let r = dmat(&["check", "@empty.dm"]);
    assert_eq!((r.status, r.stdout.as_str()), (0, "delta-matroid: yes\nmatroid: yes\n"));
    let r = dmat(&["check", "@bad.dm"]);
    assert_eq!((r.status, r.stdout.as_str()), (1, "delta-matroid: no\nmatroid: no\n"));
    let r = dmat(&["--quiet", "check", "@bad.dm"]);
    assert_eq!((r.status, r.stdout.as_str()), (1, "delta-matroid: no\n"));
}

#[test]
fn binary_certificate() {
    let r = dmat(&["binary", "@example.dm"]);
    assert_eq!((r.status, r.stdout), (0, golden("binary.expected")));
    let r = dmat(&["binary", "@u24.dm"]);
    assert_eq!((r.status, r.stdout.as_str()), (1, "not binary\n"));
}

#[test]
fn canon_output() {
    let r = dmat(&["canon", "@example.dm"]);
    assert_eq!(r.status, 0);
    let mut lines = r.stdout.lines();
    assert_eq!(lines.next(), Some("canonical: i=1 j=1 k=0 l=1"));
    let rest: Vec<&str> = lines.collect();
    let split = rest.iter().position(|l| l.starts_with("ground:")).unwrap();
    assert!(rest[..split].iter().all(|l| l.starts_with("slide: ")));
    let final_system = parse_set_system(&rest[split..].join("\n")).unwrap();

    // replaying the printed trace through `slide` gives the printed system
    let dir = std::env::temp_dir().join(format!("dmat-canon-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let trace = dir.join("canon.trace");
    std::fs::write(&trace, rest[..split].join("\n")).unwrap();
    let replay = dmat(&["slide", "@example.dm", "--trace", trace.to_str().unwrap()]);
    assert_eq!(parse_set_system(&replay.stdout).unwrap(), final_system);
    std::fs::remove_dir_all(&dir).unwrap();

    let r = dmat(&["canon", "@u24.dm"]);
    assert_eq!((r.status, r.stderr.as_str()), (1, "dmat: not binary\n"));
    let r = dmat(&["--quiet", "canon", "@example.dm"]);
    assert_eq!(r.stdout, "canonical: i=1 j=1 k=0 l=1\n");
}

#[test]
fn system_outputs_round_trip() {
    let r = dmat(&["twist", "@example.dm", "--set", "1"]);
    assert_eq!((r.status, r.stdout), (0, golden("twist1.expected")));
    let r = dmat(&["dual", "@example.dm"]);
    let original = parse_set_system(&golden("example.dm")).unwrap();
    assert_eq!(parse_set_system(&r.stdout).unwrap(), original.dual());
    let r = dmat(&["minor", "@example.dm", "--delete", "1", "--contract", "2"]);
    assert_eq!(r.stdout, "ground: 3 4\nfeasible:\nfeasible: 3 4\n");
    let r = dmat(&["minor", "@example.dm", "--delete", "1", "--contract", "1"]);
    assert_eq!(r.status, 1);
}

#[test]
fn profile_output() {
    let r = dmat(&["profile", "@example.dm"]);
    assert_eq!(r.stdout, "min: 1\nmax: 3\nparity: even\nloops:\neverywhere:\n");
}

#[test]
fn graphs() {
    let r = dmat(&["from-graph", "@k4.graph"]);
    assert_eq!(r.status, 0);
    let m = parse_set_system(&r.stdout).unwrap();
    assert_eq!(m.len(), 16);
    assert!(m.check_ea().unwrap());
    let r = dmat(&["check", "@k4.graph"]);
    assert_eq!(r.status, 2);
}

#[test]
fn error_exit_codes() {
    let r = dmat(&["check", "@unknown.dm"]);
    assert_eq!(r.status, 2);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
    assert_eq!(r.stderr.lines().count(), 1);

    let r = dmat(&["slide", "@example.dm", "--trace", "@unknown.trace"]);
    assert_eq!(r.status, 2);
    assert!(r.stderr.contains("line 1"));

    let r = dmat(&["twist", "@example.dm", "--set", "9"]);
    assert_eq!((r.status, r.stderr.as_str()), (1, "dmat: unknown element `9`\n"));

    assert_eq!(dmat(&["check", "@missing.dm"]).status, 2);
    assert_eq!(dmat(&["census", "-n", "5"]).status, 2);
    assert_eq!(dmat(&["frobnicate"]).status, 2);
    assert_eq!(dmat(&["--help"]).status, 0);
}

#[test]
fn census_command() {
    let r = dmat(&["census", "-n", "2", "--dump"]);
    assert_eq!(r.status, 0);
    assert!(r.stdout.contains("delta_matroids: 15\n"));
    assert!(r.stdout.contains("failures: 0\n"));
    assert!(r.stdout.lines().any(|l| l.starts_with("delta-matroids") && l.ends_with(" 15")));
}

#[test]
fn in_process_run() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let status = delta_matroid::cli::run(
        ["dmat", "check", data("example.dm").to_str().unwrap()],
        &mut out,
        &mut err,
    );
    assert_eq!(status, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "delta-matroid: yes\nmatroid: no\n");
    assert!(err.is_empty());
}
