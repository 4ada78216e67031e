//! End-to-end checks of the command-line surface: formats, exit codes,
//! determinism, and the compute/verify round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tverberg"))
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("tverberg-cli-test-{}-{name}", std::process::id()));
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn generate_grid_line() {
    let out = run(&["generate", "--dist", "grid", "--d", "1", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n2\n3\n4\n5\n");
}

#[test]
fn generate_is_deterministic_per_seed() {
    let a = tmp("det-a.txt");
    let b = tmp("det-b.txt");
    for path in [&a, &b] {
        let out = run(&[
            "generate", "--dist", "cube", "--d", "2", "--n", "4", "--seed", "7", "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert!(!bytes_a.is_empty());
    assert_eq!(bytes_a, bytes_b);

    let c = tmp("det-c.txt");
    let out = run(&[
        "generate", "--dist", "cube", "--d", "2", "--n", "4", "--seed", "8", "--out",
        c.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_ne!(bytes_a, std::fs::read(&c).unwrap());
}

#[test]
fn generate_cube_stays_in_range() {
    let out = run(&["generate", "--dist", "cube", "--d", "3", "--n", "1000", "--seed", "1"]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        for tok in line.split(',') {
            let v: f64 = tok.parse().unwrap();
            assert!((0.0..1.0).contains(&v), "{v} out of range");
        }
    }
}

#[test]
fn compute_median_case_and_verify_round_trip() {
    let pts = tmp("median-pts.txt");
    let cert = tmp("median-cert.json");
    assert!(run(&[
        "generate", "--dist", "grid", "--d", "1", "--n", "5", "--out",
        pts.to_str().unwrap(),
    ])
    .status
    .success());

    let out = run(&[
        "compute", "--input", pts.to_str().unwrap(), "--algo", "simple", "--out",
        cert.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let summary = stdout(&out);
    assert!(summary.contains("depth=3"), "{summary}");
    assert!(summary.contains("guarantee=3"), "{summary}");

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(json["center"][0], 3.0);
    assert_eq!(json["depth"], 3);

    let out = run(&[
        "verify", "--points", pts.to_str().unwrap(), "--cert", cert.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("certificate valid"));
}

#[test]
fn compute_simple_meets_bound_and_bootstrap_verifies() {
    let pts = tmp("cube32-pts.txt");
    let cert = tmp("cube32-cert.json");
    assert!(run(&[
        "generate", "--dist", "cube", "--d", "2", "--n", "32", "--seed", "1", "--out",
        pts.to_str().unwrap(),
    ])
    .status
    .success());

    let out = run(&[
        "compute", "--input", pts.to_str().unwrap(), "--algo", "simple", "--out",
        cert.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("depth=8"), "{}", stdout(&out));

    let out = run(&[
        "compute", "--input", pts.to_str().unwrap(), "--algo", "bootstrap", "--out",
        cert.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let verify = run(&[
        "verify", "--points", pts.to_str().unwrap(), "--cert", cert.to_str().unwrap(),
    ]);
    assert!(verify.status.success());
}

#[test]
fn every_algorithm_round_trips_through_verify() {
    let pts = tmp("roundtrip-pts.txt");
    let cert = tmp("roundtrip-cert.json");
    assert!(run(&[
        "generate", "--dist", "cube", "--d", "2", "--n", "9", "--seed", "5", "--out",
        pts.to_str().unwrap(),
    ])
    .status
    .success());
    for algo in ["simple", "better", "ms", "bootstrap", "brute"] {
        let out = run(&[
            "compute", "--input", pts.to_str().unwrap(), "--algo", algo, "--out",
            cert.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "compute failed for {algo}");
        let verify = run(&[
            "verify", "--points", pts.to_str().unwrap(), "--cert", cert.to_str().unwrap(),
        ]);
        assert!(verify.status.success(), "verify failed for {algo}: {}", stdout(&verify));
    }
}

#[test]
fn zero_tolerance_rejects_rounded_certificates() {
    let pts = tmp("tol0-pts.txt");
    let cert = tmp("tol0-cert.json");
    assert!(run(&[
        "generate", "--dist", "cube", "--d", "2", "--n", "32", "--seed", "3", "--out",
        pts.to_str().unwrap(),
    ])
    .status
    .success());
    assert!(run(&[
        "compute", "--input", pts.to_str().unwrap(), "--algo", "simple", "--out",
        cert.to_str().unwrap(),
    ])
    .status
    .success());

    let out = run(&[
        "verify", "--points", pts.to_str().unwrap(), "--cert", cert.to_str().unwrap(),
        "--tol", "0",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
}

#[test]
fn duplicated_index_fails_check_a() {
    let pts = tmp("dup-pts.txt");
    let cert = tmp("dup-cert.json");
    assert!(run(&[
        "generate", "--dist", "grid", "--d", "1", "--n", "6", "--out", pts.to_str().unwrap(),
    ])
    .status
    .success());
    assert!(run(&[
        "compute", "--input", pts.to_str().unwrap(), "--algo", "simple", "--out",
        cert.to_str().unwrap(),
    ])
    .status
    .success());

    // Duplicate the first index of part 0 into part 1.
    let mut json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let stolen = json["parts"][0]["indices"][0].clone();
    json["parts"][1]["indices"].as_array_mut().unwrap().push(stolen);
    json["parts"][1]["weights"].as_array_mut().unwrap().push(serde_json::json!(0.0));
    std::fs::write(&cert, serde_json::to_string(&json).unwrap()).unwrap();

    let out = run(&[
        "verify", "--points", pts.to_str().unwrap(), "--cert", cert.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("check (a)") && text.contains("FAIL"), "{text}");
}

#[test]
fn parse_error_exits_2() {
    let pts = tmp("bad-pts.txt");
    std::fs::write(&pts, "1,2\nnot-a-number\n").unwrap();
    let cert = tmp("bad-cert.json");
    let out = run(&[
        "compute", "--input", pts.to_str().unwrap(), "--algo", "simple", "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["compute", "--input", "/nonexistent/file.txt", "--algo", "simple"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn brute_cap_exits_3_and_env_overrides() {
    let pts = tmp("cap-pts.txt");
    let cert = tmp("cap-cert.json");
    assert!(run(&[
        "generate", "--dist", "grid", "--d", "1", "--n", "20", "--out", pts.to_str().unwrap(),
    ])
    .status
    .success());
    let out = run(&[
        "compute", "--input", pts.to_str().unwrap(), "--algo", "brute", "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));

    // A tighter cap via the environment rejects even small instances.
    let small = tmp("cap-small.txt");
    assert!(run(&[
        "generate", "--dist", "grid", "--d", "1", "--n", "6", "--out", small.to_str().unwrap(),
    ])
    .status
    .success());
    let out = bin()
        .env("TVERBERG_BRUTE_CAP", "5")
        .args([
            "compute", "--input", small.to_str().unwrap(), "--algo", "brute", "--out",
            cert.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bench_emits_sorted_csv_with_ratio_at_least_one() {
    let out = run(&[
        "bench", "--dims", "1,2", "--sizes", "64", "--seeds", "2", "--algos", "simple,ms",
        "--dist", "cube",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "algorithm,d,n,seed,depth,guarantee,ratio,wall_ms");
    let rows: Vec<Vec<String>> =
        lines.map(|l| l.split(',').map(|s| s.to_string()).collect()).collect();
    assert_eq!(rows.len(), 2 * 2 * 2);
    let keys: Vec<(String, usize, usize, u64)> = rows
        .iter()
        .map(|r| (r[0].clone(), r[1].parse().unwrap(), r[2].parse().unwrap(), r[3].parse().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted, "rows must be emitted in sorted order");
    for r in &rows {
        let ratio: f64 = r[6].parse().unwrap();
        assert!(ratio >= 1.0, "ratio below one in row {r:?}");
    }
}
