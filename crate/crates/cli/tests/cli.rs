use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_immanant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (out.status.code().unwrap(), v)
}

fn atlas(name: &str) -> String {
    format!("{}/../../data/atlas/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn star_hook_polynomial_leads_with_dimension() {
    let (code, v) = json(&[
        "poly",
        "--graph",
        "family:star:4",
        "--matrix",
        "L",
        "--partition",
        "hook:2",
    ]);
    assert_eq!(code, 0);
    let c = &v["results"][0]["coefficients"];
    assert_eq!(c[0], "3");
    assert_eq!(c.as_array().unwrap().len(), 5);
    assert_eq!(v["inputs"]["matrix"], "L");
    assert_eq!(v["inputs"]["partition"], "hook:2");
}

#[test]
fn star_degree_suite_passes() {
    let out = run(&[
        "verify",
        "--suite",
        "star-degree",
        "--max-n",
        "6",
        "--beta",
        "1",
        "--gamma",
        "-1",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn single_edge_linear_coefficient() {
    // one edge on three vertices, beta = gamma = 1, hook (2,1): trace * C(2,1)
    let (code, v) = json(&[
        "coeff",
        "--graph",
        "g6:B_",
        "--matrix",
        "lincomb:1,1",
        "--partition",
        "hook:2",
        "--r",
        "1",
    ]);
    assert_eq!(code, 0);
    let res = &v["results"][0];
    assert_eq!(res["value"], "4");
    assert_eq!(res["closed_form"], "4");
    assert_eq!(res["agrees"], true);
}

#[test]
fn json_round_trips_through_recomputation() {
    let (_, first) = json(&[
        "poly",
        "--graph",
        "family:kbip:2,3",
        "--matrix",
        "Aalpha",
        "--alpha",
        "1/3",
        "--partition",
        "3,2",
    ]);
    let res = &first["results"][0];
    let graph = format!("g6:{}", res["graph6"].as_str().unwrap());
    let matrix = first["inputs"]["matrix"].as_str().unwrap().to_string();
    let parts: Vec<String> = res["partition"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p.to_string())
        .collect();
    let parts = parts.join(",");
    let (_, second) = json(&[
        "poly",
        "--graph",
        &graph,
        "--matrix",
        &matrix,
        "--partition",
        &parts,
    ]);
    assert_eq!(second["results"][0]["coefficients"], res["coefficients"]);
    for c in res["coefficients"].as_array().unwrap() {
        assert!(c.is_string());
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        run(&["poly", "--graph", "g6:~", "--partition", "hook:1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["poly", "--graph", "family:star:4", "--partition", "3,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "poly",
            "--graph",
            "family:star:4",
            "--matrix",
            "lincomb",
            "--beta",
            "0.5",
            "--gamma",
            "1",
            "--partition",
            "4"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn caps_exit_three() {
    let out = run(&["poly", "--graph", "family:path:12", "--partition", "hook:3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn failing_suite_exits_one() {
    let out = run(&["verify", "--suite", "laplace", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("witness"), "{text}");
}

#[test]
fn verify_json_lists_checks() {
    let (code, v) = json(&["verify", "--suite", "characters", "--max-n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    let checks = v["suites"][0]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "row orthogonality"));
}

#[test]
fn characters_and_census() {
    let (_, v) = json(&[
        "char",
        "--partition",
        "hook:2",
        "--n",
        "3",
        "--class",
        "1,1,1",
    ]);
    assert_eq!(v["values"][0]["value"], "2");
    let (_, v) = json(&["census", "--graph", "family:complete:3", "--r", "2"]);
    assert_eq!(v["results"][0]["total"], 12);
    let out = run(&["census", "--graph", "family:cycle:4", "--format", "csv"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("graph6,r,type,count"));
}

#[test]
fn file_sources_stream_every_graph() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# two graphs\nB_\n\nBw").unwrap();
    let src = format!("file:{}", f.path().display());
    let (code, v) = json(&["poly", "--graph", &src, "--matrix", "A", "--partition", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
}

#[test]
fn search_on_cubic_graphs() {
    let (code, v) = json(&["search", "--input", &atlas("cubic6.g6"), "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["graphs_read"], 2);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["adjacency_buckets"], v["lincomb_buckets"]);

    let empty = tempfile::NamedTempFile::new().unwrap();
    let path = empty.path().display().to_string();
    let (code, v) = json(&["search", "--input", &path]);
    assert_eq!(code, 0);
    assert_eq!(v["graphs_read"], 0);

    assert_eq!(
        run(&["search", "--input", "/nonexistent.g6"]).status.code(),
        Some(2)
    );
}

#[test]
fn single_five_cycle_is_one_bucket() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "Dhc").unwrap();
    let (code, v) = json(&[
        "search",
        "--input",
        &f.path().display().to_string(),
        "--n",
        "5",
        "--degree",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["adjacency_buckets"].as_array().unwrap().len(), 1);
}
