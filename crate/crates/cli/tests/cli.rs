use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn penergy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_penergy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn energy_of_star() {
    let out = penergy(&["energy", "star:5", "--p", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["energy"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    assert_eq!(v["graph6"], "Ds_");
}

#[test]
fn energy_rejects_bad_exponent_and_graph() {
    assert_eq!(
        penergy(&["energy", "star:5", "--p", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        penergy(&["energy", "wheel:5", "--p", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(penergy(&["energy", "A", "--p", "1"]).status.code(), Some(2));
    assert_eq!(penergy(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn compare_triangle_with_path() {
    let out = penergy(&[
        "compare",
        "complete:3",
        "star:3",
        "--p",
        "1",
        "--method",
        "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let direct = v["direct"].as_f64().unwrap();
    assert!((direct - (4.0 - 2.0 * 2f64.sqrt())).abs() < 1e-9);
    assert!(v["abs_difference"].as_f64().unwrap() < 1e-6);
    assert_eq!(v["formula"], "cj");
}

#[test]
fn compare_above_two_picks_a_radix() {
    let v = json(&penergy(&["compare", "path:5", "star:5", "--p", "3"]));
    assert_eq!(v["r"], 4);
    assert_eq!(v["experimental"], false);
    assert!(v["abs_difference"].as_f64().unwrap() < 1e-6);
    let v = json(&penergy(&[
        "compare", "path:4", "star:4", "--p", "3.5", "--r", "6",
    ]));
    assert_eq!(v["experimental"], true);
    assert!(v["abs_difference"].as_f64().unwrap() < 1e-6);
}

#[test]
fn compare_usage_errors() {
    assert_eq!(
        penergy(&["compare", "path:4", "star:5", "--p", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        penergy(&["compare", "path:4", "star:4", "--p", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        penergy(&["compare", "path:4", "star:4", "--p", "2", "--method", "direct"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        penergy(&["compare", "path:4", "star:4", "--p", "1", "--r", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        penergy(&["compare", "path:4", "star:4", "--p", "3", "--r", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn energy_integral_and_limits() {
    let v = json(&penergy(&["energy-integral", "cycle:6", "--p", "1"]));
    assert_eq!(v["method"], "coulson");
    assert!((v["energy"].as_f64().unwrap() - 8.0).abs() < 1e-6);
    assert_eq!(
        penergy(&["energy-integral", "cycle:6", "--p", "2.5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn non_convergence_exit_status() {
    let out = penergy(&[
        "energy-integral",
        "complete:8",
        "--p",
        "0.3",
        "--tol",
        "1e-300",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["converged"], false);
}

#[test]
fn bounds_on_star_and_cycle() {
    let out = penergy(&["bounds", "star:6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["violations"].as_array().unwrap().is_empty());
    let hong = &v["reports"][0];
    assert_eq!(hong["name"], "hong");
    assert_eq!(hong["equality"], "tight");
    let out = penergy(&["bounds", "cycle:5", "--p", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("name,p,lhs,rhs,margin,holds,equality"));
    // cycle:5 is not bipartite, so no lower-bound rows
    assert!(!text.contains("bipartite_lower"));
    assert_eq!(penergy(&["bounds", "C?"]).status.code(), Some(2));
}

#[test]
fn claim_and_probe() {
    let v = json(&penergy(&["claim", "star:6"]));
    assert_eq!(v["holds"], true);
    assert!(v["min_margin"].as_f64().unwrap().abs() < 1e-9);
    let v = json(&penergy(&[
        "probe16",
        "cycle:4",
        "path:4",
        "--grid",
        "0.001,0.099,50,log",
    ]));
    assert!(v["min_margin"].as_f64().unwrap() < 0.0);
}

#[test]
fn gen_writes_graph6_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("five.g6");
    let out = penergy(&[
        "gen",
        "--n",
        "5",
        "--jobs",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 21);
    assert_eq!(penergy(&["gen", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn verify_generated_corpus() {
    let out = penergy(&["verify", "--n", "5", "--p", "1.5", "--target", "star"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["reports"][0];
    assert_eq!(r["graph_count"], 21);
    assert_eq!(r["unique_minimizer"], true);
    assert!(r["violations"].as_array().unwrap().is_empty());
}

#[test]
fn verify_reports_violations() {
    // The path is not the minimizer of E_1.
    let out = penergy(&["verify", "--n", "5", "--p", "1", "--target", "path"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["reports"][0]["regime"], "exploration");
    let out = penergy(&["verify", "--n", "4", "--p", "1", "--target", "cycle"]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "unsupported target exits with usage"
    );
    let out = penergy(&["verify", "--n", "5", "--p", "4", "--target", "path"]);
    assert_eq!(out.status.code(), Some(0));
    let out = penergy(&["verify", "--n", "5", "--p", "4", "--target", "star"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.g6");
    fs::write(&good, "BW\nBw\nB?\n").unwrap();
    let out = penergy(&["verify", "--in", good.to_str().unwrap(), "--p", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["reports"][0]["graph_count"], 2);

    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "BW\nB\nBw\n").unwrap();
    let path = bad.to_str().unwrap();
    let out = penergy(&["verify", "--in", path, "--p", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = penergy(&["verify", "--in", path, "--p", "1", "--skip-bad-lines"]);
    assert_eq!(out.status.code(), Some(0));

    let mixed = dir.path().join("mixed.g6");
    fs::write(&mixed, "BW\nCF\n").unwrap();
    let out = penergy(&["verify", "--in", mixed.to_str().unwrap(), "--p", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn edge_list_argument() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.txt");
    fs::write(&path, "0 1\n1 2\n2 3\n3 0\n").unwrap();
    let v = json(&penergy(&["energy", path.to_str().unwrap(), "--p", "2"]));
    assert!((v["energy"].as_f64().unwrap() - 8.0).abs() < 1e-9);
}

#[test]
fn integrand_csv() {
    let out = penergy(&[
        "integrand",
        "complete:3",
        "star:3",
        "--p",
        "1",
        "--grid",
        "0.1,10,5,log",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("z,integrand"));
    assert_eq!(lines.count(), 5);
}
