//! End-to-end tests driving the binary through its public interface.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const PINEAPPLE: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n0 5\n";
const TWIN_PAIR_SIX: &str = "0 1\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n4 5\n";
const UNION_K1_TO_K4: &str = "n 10\n1 2\n3 4\n3 5\n4 5\n6 7\n6 8\n6 9\n7 8\n7 9\n8 9\n";

fn run(args: &[&str], stdin: &str) -> Output {
    run_with_env(args, stdin, &[])
}

fn run_with_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_skelkit"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (key, value) in env {
        cmd.env(key, value);
    }
    let mut child = cmd.spawn().expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classes_json_on_pineapple() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["classes", "--json"], PINEAPPLE)).unwrap();
    let sizes: Vec<usize> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["members"].as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, vec![3, 2, 1]);
    assert_eq!(v["classes"][0]["kind"], "clique");
}

#[test]
fn graph6_input_is_accepted() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["classes", "--format", "g6", "--json"], "D?{")).unwrap();
    assert_eq!(v["classes"][0]["members"], serde_json::json!([0, 1, 2, 3]));

    // Same pineapple as the edge-list fixture, in graph6 form.
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["classes", "--format", "g6", "--json"], "E~a?")).unwrap();
    let sizes: Vec<usize> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["members"].as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, vec![3, 2, 1]);
}

#[test]
fn multiplicity_human_phrase() {
    let text = stdout(&["multiplicity"], UNION_K1_TO_K4);
    assert_eq!(text, "-1 is an eigenvalue with multiplicity 6\n");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["multiplicity", "--json"], UNION_K1_TO_K4)).unwrap();
    assert_eq!(v["minus_one_multiplicity"], 6);
    assert_eq!(v["rank_i_plus_a"], 4);
    assert_eq!(v["skeleton_vertices"], 4);
    assert_eq!(v["lambda"], 0);
    assert_eq!(v["n"], 10);
}

#[test]
fn sep_subcommands_on_the_twin_pair_fixture() {
    assert_eq!(stdout(&["sep-order"], TWIN_PAIR_SIX), "|SEP| = 2\n");
    let member = stdout(&["sep-member", "--perm", "(2 3)"], TWIN_PAIR_SIX);
    assert!(member.starts_with("member: true"));
    let v: serde_json::Value = serde_json::from_str(&stdout(
        &["sep-member", "--perm", "(0 5)", "--json"],
        TWIN_PAIR_SIX,
    ))
    .unwrap();
    assert_eq!(v["member"], false);
}

#[test]
fn skeleton_and_structure_output() {
    let dot = stdout(&["skeleton", "--dot"], PINEAPPLE);
    assert!(dot.contains("K_3"));
    assert!(dot.starts_with("graph skeleton {"));

    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["skeleton", "--json"], PINEAPPLE)).unwrap();
    assert_eq!(v["nodes"][0]["size"], 3);

    // Structure of the pineapple is the 4-vertex star.
    let s: serde_json::Value =
        serde_json::from_str(&stdout(&["structure", "--json"], PINEAPPLE)).unwrap();
    assert_eq!(s["n"], 4);
    assert_eq!(s["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn primegraph_and_series_json() {
    let k7: String = (0..7)
        .flat_map(|i| ((i + 1)..7).map(move |j| format!("{i} {j}\n")))
        .collect();
    let pg: serde_json::Value =
        serde_json::from_str(&stdout(&["primegraph", "--json"], &k7)).unwrap();
    assert_eq!(pg["vertices"], serde_json::json!([2, 3, 5, 7]));
    assert_eq!(pg["edges"], serde_json::json!([[2, 3], [2, 5]]));

    let series: serde_json::Value =
        serde_json::from_str(&stdout(&["series", "--json"], &k7)).unwrap();
    assert_eq!(series["length"], 2);
    assert_eq!(series["minimal"]["vertices"], serde_json::json!([2]));
}

#[test]
fn enumerate_counts_and_determinism() {
    let all5 = stdout(&["enumerate", "-n", "5", "--json"], "");
    let codes: Vec<String> = serde_json::from_str(&all5).unwrap();
    assert_eq!(codes.len(), 34);

    let csv = stdout(&["enumerate", "-n", "4", "--skeletons", "--csv"], "");
    let lines: Vec<&str> = csv.trim().lines().collect();
    assert_eq!(lines[0], "graph6,name,rank,lambda");
    assert_eq!(lines.len(), 7); // header + six entries
    assert!(lines.iter().any(|l| l.ends_with(",C_4,4,0")));
    assert!(lines.iter().any(|l| l.ends_with(",K_{2,2},4,0")));

    // Byte-identical reruns, with and without a thread cap.
    assert_eq!(all5, stdout(&["enumerate", "-n", "5", "--json"], ""));
    let capped = run_with_env(
        &["enumerate", "-n", "5", "--json"],
        "",
        &[("SKELKIT_THREADS", "1")],
    );
    assert!(capped.status.success());
    assert_eq!(String::from_utf8(capped.stdout).unwrap(), all5);
}

#[test]
fn catalog_groups_by_rank() {
    let text = stdout(&["catalog", "-n", "3"], "");
    assert_eq!(text, "rank 1: K_1\nrank 2: 2K_1\nrank 3: 3K_1, P_3\n");
}

#[test]
fn exit_codes() {
    // Parse error: self-loop.
    let out = run(&["classes"], "0 0\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    // Capacity error: enumeration past the supported size.
    let out = run(&["enumerate", "-n", "9"], "");
    assert_eq!(out.status.code(), Some(3));

    // Argument error: bad permutation.
    let out = run(&["sep-member", "--perm", "(0 99)"], TWIN_PAIR_SIX);
    assert_eq!(out.status.code(), Some(2));

    // Unknown subcommand is a usage error.
    let out = run(&["frobnicate"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classes_dot_is_colored_and_stable() {
    let dot = stdout(&["classes", "--dot"], PINEAPPLE);
    assert!(dot.starts_with("graph g {"));
    assert!(dot.contains("fillcolor"));
    assert_eq!(dot, stdout(&["classes", "--dot"], PINEAPPLE));
}
