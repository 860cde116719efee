//! End-to-end tests of the `netcompress` binary: flag handling, file
//! outputs, exit codes, and byte-level determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn netcompress(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netcompress"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn generate_ws_ring_writes_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let out = netcompress(
        &["generate", "--kind", "ws", "--n", "10", "--k", "2", "--p", "0", "--out", "ring.edges"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let text = fs::read_to_string(dir.path().join("ring.edges")).unwrap();
    assert_eq!(text.lines().count(), 10);
    assert!(stdout(&out).contains("nodes: 10"));
    assert!(stdout(&out).contains("edges: 10"));
}

#[test]
fn generate_ba_edge_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = netcompress(
        &["generate", "--kind", "ba", "--n", "100", "--m", "4", "--out", "ba.edges"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = fs::read_to_string(dir.path().join("ba.edges")).unwrap();
    assert_eq!(text.lines().count(), 390);
}

#[test]
fn generate_er_impossible_is_runtime_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = netcompress(
        &["generate", "--kind", "er", "--n", "3", "--p", "0", "--out", "er.edges"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("ConnectivityRetriesExhausted"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn generate_missing_param_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = netcompress(&["generate", "--kind", "ba", "--n", "10", "--out", "x"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--m"));
}

#[test]
fn compress_c6_writes_trajectory_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("c6.edges"), "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap();
    let out = netcompress(
        &[
            "compress", "--in", "c6.edges", "--p-rew", "0.34", "--method", "effective",
            "--out", "run",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = fs::read_to_string(dir.path().join("run/trajectory_effective.csv")).unwrap();
    assert!(csv.lines().count() >= 4, "expected >= 3 steps plus header");
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("run/summary_effective.json")).unwrap())
            .unwrap();
    assert_eq!(summary["planned_steps"], 3);
    assert_eq!(summary["conservation"]["degree_sequence_preserved"], true);
}

#[test]
fn compress_too_small_fraction_is_invalid_config() {
    let dir = tempfile::tempdir().unwrap();
    let edges: String = (0..50).map(|i| format!("{} {}\n", i, (i + 1) % 50)).collect();
    fs::write(dir.path().join("c50.edges"), edges).unwrap();
    let out = netcompress(
        &["compress", "--in", "c50.edges", "--p-rew", "0.001", "--out", "run"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("InvalidConfig"), "{}", stderr(&out));
}

#[test]
fn compress_both_methods_writes_two_trajectories() {
    let dir = tempfile::tempdir().unwrap();
    let gen = netcompress(
        &["generate", "--kind", "ws", "--n", "30", "--k", "4", "--p", "0.5", "--out", "g.edges"],
        dir.path(),
    );
    assert!(gen.status.success());
    let out = netcompress(
        &[
            "compress", "--in", "g.edges", "--p-rew", "0.2", "--method", "both", "--seed", "3",
            "--metrics", "avg_distance,clustering,fiedler", "--out", "run",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    for file in [
        "run/trajectory_effective.csv",
        "run/trajectory_random.csv",
        "run/summary_effective.json",
        "run/summary_random.json",
    ] {
        assert!(dir.path().join(file).exists(), "{file} missing");
    }
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("run/summary_effective.json")).unwrap())
            .unwrap();
    assert!(summary["final"]["fiedler"].is_number());
}

#[test]
fn compress_rerun_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let gen = netcompress(
        &["generate", "--kind", "ws", "--n", "40", "--k", "4", "--p", "0.5", "--out", "g.edges"],
        dir.path(),
    );
    assert!(gen.status.success());
    for out_dir in ["a", "b"] {
        let out = netcompress(
            &[
                "compress", "--in", "g.edges", "--p-rew", "0.25", "--method", "both", "--seed",
                "11", "--out", out_dir,
            ],
            dir.path(),
        );
        assert!(out.status.success());
    }
    for file in ["trajectory_effective.csv", "trajectory_random.csv"] {
        assert_eq!(
            fs::read(dir.path().join("a").join(file)).unwrap(),
            fs::read(dir.path().join("b").join(file)).unwrap(),
            "{file} not reproducible"
        );
    }
}

#[test]
fn compress_reads_flat_config_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let c8: String = (0..8).map(|i| format!("{} {}\n", i, (i + 1) % 8)).collect();
    fs::write(dir.path().join("c8.edges"), c8).unwrap();
    fs::write(
        dir.path().join("run.conf"),
        "# experiment\nin = c8.edges\np-rew = 0.9\nmethod = effective\nout = from-config\n",
    )
    .unwrap();
    // The explicit --p-rew beats the config value; in/out/method come from
    // the file.
    let out = netcompress(
        &["compress", "--config", "run.conf", "--p-rew", "0.5"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let summary: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("from-config/summary_effective.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(summary["rewiring_fraction"], 0.5);
}

#[test]
fn compress_with_constraint_file() {
    let dir = tempfile::tempdir().unwrap();
    let gen = netcompress(
        &["generate", "--kind", "ws", "--n", "24", "--k", "4", "--p", "0.3", "--out", "g.edges"],
        dir.path(),
    );
    assert!(gen.status.success());
    // Ring coordinates with a generous radius.
    let mut attrs = String::from("# label threshold x y\n");
    for i in 0..24 {
        let t = i as f64 / 24.0 * std::f64::consts::TAU;
        attrs.push_str(&format!("{i} 1.2 {} {}\n", t.cos(), t.sin()));
    }
    fs::write(dir.path().join("attrs.txt"), attrs).unwrap();
    let out = netcompress(
        &[
            "compress", "--in", "g.edges", "--p-rew", "0.3", "--constraints", "attrs.txt",
            "--out", "run",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("run/summary_effective.json")).unwrap())
            .unwrap();
    assert_eq!(summary["conservation"]["connected"], true);
}

#[test]
fn reproduce_s5_schema_and_trend() {
    let dir = tempfile::tempdir().unwrap();
    let out = netcompress(
        &[
            "reproduce", "--figure", "s5", "--scale", "desk", "--n", "60", "--seeds", "2",
            "--out", "figs",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = fs::read_to_string(dir.path().join("figs/s5.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "p_rew,method,seed,avg_distance");
    // 6 fractions x 2 methods x 2 seeds.
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 24);
    assert!(dir.path().join("figs/s5_README.txt").exists());

    // The guided column's mean distance never rises with the fraction.
    let mut by_fraction: Vec<(f64, f64, usize)> = Vec::new();
    for row in &rows {
        if row[1] == "effective" {
            let p: f64 = row[0].parse().unwrap();
            let d: f64 = row[3].parse().unwrap();
            match by_fraction.iter_mut().find(|(q, ..)| *q == p) {
                Some(entry) => {
                    entry.1 += d;
                    entry.2 += 1;
                }
                None => by_fraction.push((p, d, 1)),
            }
        }
    }
    let means: Vec<f64> = by_fraction.iter().map(|(_, sum, k)| sum / *k as f64).collect();
    for pair in means.windows(2) {
        assert!(
            pair[1] <= pair[0] + 1e-9,
            "guided distance rose along the sweep: {means:?}"
        );
    }
}

#[test]
fn reproduce_s1_and_s8_smoke() {
    let dir = tempfile::tempdir().unwrap();
    let out = netcompress(
        &["reproduce", "--figure", "s1", "--seeds", "1", "--out", "figs"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = fs::read_to_string(dir.path().join("figs/s1.csv")).unwrap();
    assert!(csv.starts_with("network_kind,n,seed,avg_distance\n"));
    // 4 sizes x 2 kinds x 1 seed.
    assert_eq!(csv.lines().count(), 9);

    let out = netcompress(
        &["reproduce", "--figure", "s8", "--n", "30", "--seeds", "1", "--out", "figs"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = fs::read_to_string(dir.path().join("figs/s8.csv")).unwrap();
    assert!(csv.starts_with("p_rew,network_kind,seed,avg_distance\n"));
    // 5 fractions x 3 kinds x 1 seed.
    assert_eq!(csv.lines().count(), 16);
}

#[test]
fn reproduce_s10_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = netcompress(
        &[
            "reproduce", "--figure", "s10", "--n", "30", "--seeds", "1", "--out", "figs",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = fs::read_to_string(dir.path().join("figs/s10.csv")).unwrap();
    assert!(csv.starts_with("p_rew,network_kind,seed,clustering,fiedler\n"));
}

#[test]
fn reproduce_s7_without_data_is_missing_dataset() {
    let dir = tempfile::tempdir().unwrap();
    let out = netcompress(&["reproduce", "--figure", "s7", "--out", "figs"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("MissingDataset"), "{}", stderr(&out));
}

#[test]
fn reproduce_s7_with_data_extracts_largest_component() {
    let dir = tempfile::tempdir().unwrap();
    // A small "real" network: a connected body plus a stray component.
    let mut text = String::new();
    for i in 0..30 {
        text.push_str(&format!("n{} n{}\n", i, (i + 1) % 30));
        text.push_str(&format!("n{} n{}\n", i, (i + 7) % 30));
    }
    text.push_str("x1 x2\n");
    fs::write(dir.path().join("pin.edges"), text).unwrap();
    let out = netcompress(
        &[
            "reproduce", "--figure", "s7", "--data", "pin.edges", "--seeds", "1", "--out", "figs",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(
        fs::read_to_string(dir.path().join("figs/s7_README.txt"))
            .unwrap()
            .contains("30 nodes in largest component of 32")
    );
}

#[test]
fn unknown_figure_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = netcompress(&["reproduce", "--figure", "s99", "--out", "figs"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = netcompress(&["--help"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("generate"));
}
