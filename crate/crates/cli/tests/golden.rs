//! Report schema snapshots on canned instances; timing is disabled.

mod common;

use common::*;

fn check(name: &str, args: &[&str]) {
    let out = run(args);
    assert!(out.code == 0, "{name}: {}", out.stderr);
    assert_eq!(out.stdout, golden(name), "{name} drifted from its snapshot");
}

#[test]
fn solve_star_json() {
    check("solve_star.jsonl", &["solve", "--graph", "star3.txt", "--oracle", "--no-timing"]);
}

#[test]
fn solve_kite_mtds_json() {
    check(
        "solve_kite_mtds.jsonl",
        &["solve", "--graph", "kite.txt", "--problem", "mtds", "--m", "2", "--oracle", "--no-timing"],
    );
}

#[test]
fn solve_kite_wppicds_csv() {
    check(
        "solve_kite_wppicds.csv",
        &["solve", "--graph", "kite.txt", "--problem", "wppicds", "--oracle", "--no-timing", "--format", "csv"],
    );
}

#[test]
fn experiment_json() {
    check(
        "experiment_wppitds.jsonl",
        &[
            "experiment", "--n", "6", "--p", "1/2", "--weights", "rand:3", "--connected", "--count", "5", "--seed", "7",
            "--problem", "wppitds", "--oracle", "--no-timing",
        ],
    );
}

#[test]
fn gapscan_json() {
    check("gapscan_c5.jsonl", &["gapscan", "--graph", "c5.txt", "--problem", "wppicds"]);
}

#[test]
fn diffuse_json() {
    check("diffuse_kite.jsonl", &["diffuse", "--graph", "kite.txt", "--seed", "1"]);
}
