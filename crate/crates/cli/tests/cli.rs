use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use p6c4::generators::petersen;
use p6c4::Graph;
use p6c4_cli::format::{to_dimacs, to_edge_list};
use tempfile::TempDir;

fn p6c4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p6c4"))
        .args(args)
        .output()
        .expect("run binary")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn colors_petersen_within_bound() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "petersen.txt", &to_edge_list(&petersen()));
    let out = p6c4(&["color", file.to_str().unwrap(), "--json", "--verify-class"]);
    let v = json(&out);
    assert_eq!(v["palette"], 3);
    assert_eq!(v["guarantee"]["status"], "in-class, bound 3 satisfied");
    assert_eq!(v["guarantee"]["omega"], 2);
    assert_eq!(v["assignment"].as_array().unwrap().len(), 10);
}

#[test]
fn color_output_verifies() {
    let dir = TempDir::new().unwrap();
    let (g, _) = petersen().blow_up(&[2; 10]).unwrap();
    let file = write(dir.path(), "g.col", &to_dimacs(&g));
    let f = file.to_str().unwrap();
    for extra in [&[][..], &["--json"][..]] {
        let mut args = vec!["color", f];
        args.extend_from_slice(extra);
        let out = p6c4(&args);
        assert!(out.status.success());
        let coloring = write(dir.path(), "phi", &stdout(&out));
        let check = p6c4(&["verify", f, coloring.to_str().unwrap()]);
        assert!(check.status.success(), "{}", stdout(&check));
        assert!(stdout(&check).contains("palette 6"));
    }
}

#[test]
fn verify_rejects_bad_coloring() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "k3.txt", "0 1\n1 2\n2 0\n");
    let phi = write(dir.path(), "phi", "0 1\n1 1\n2 2\n");
    let out = p6c4(&[
        "verify",
        file.to_str().unwrap(),
        phi.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["proper"], false);
    assert_eq!(v["conflicts"][0], serde_json::json!([0, 1]));
}

#[test]
fn decompose_clique_is_one_leaf() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "k5.txt", &to_edge_list(&Graph::complete(5)));
    let v = json(&p6c4(&["decompose", file.to_str().unwrap(), "--json"]));
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0]["kind"], "leaf-clique");
    assert_eq!(comps[0]["vertices"], serde_json::json!([0, 1, 2, 3, 4]));
    assert!(comps[0].get("children").is_none());
    assert_eq!(v["internal_nodes"], 0);
}

#[test]
fn decompose_reports_input_ids() {
    let dir = TempDir::new().unwrap();
    // Isolated vertex 0, then a bowtie on 1..=5 centred at 3.
    let file = write(dir.path(), "g.txt", "n 6\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n");
    let v = json(&p6c4(&["decompose", file.to_str().unwrap(), "--json"]));
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 2);
    assert_eq!(comps[1]["kind"], "cutset-split");
    assert_eq!(comps[1]["cutset"], serde_json::json!([3]));
    let leaves: Vec<_> = comps[1]["children"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["vertices"].clone())
        .collect();
    assert!(leaves.contains(&serde_json::json!([1, 2, 3])));
    assert!(leaves.contains(&serde_json::json!([3, 4, 5])));
}

#[test]
fn check_class_finds_c4() {
    let dir = TempDir::new().unwrap();
    let file = write(
        dir.path(),
        "c4.col",
        "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ne 4 5\n",
    );
    let v = json(&p6c4(&["check-class", file.to_str().unwrap(), "--json"]));
    assert_eq!(v["verdict"], "not-in-class");
    let w: Vec<usize> = serde_json::from_value(v["c4_witness"].clone()).unwrap();
    assert_eq!(w.len(), 4);
    let mut sorted = w.clone();
    sorted.sort();
    assert_eq!(sorted, vec![0, 1, 2, 3]);
}

#[test]
fn user_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "loop.col", "p edge 2 1\ne 1 1\n");
    let out = p6c4(&["color", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2") && err.contains("self-loop"), "{err}");
    assert_eq!(p6c4(&["color", "/nonexistent/file"]).status.code(), Some(1));
    assert_eq!(p6c4(&["color"]).status.code(), Some(1));
}

#[test]
fn output_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let (g, _) = petersen().blow_up(&[1, 2, 3, 1, 2, 3, 1, 2, 3, 1]).unwrap();
    let file = write(
        dir.path(),
        "g.txt",
        &to_edge_list(&g.disjoint_union(&petersen())),
    );
    let f = file.to_str().unwrap();
    for cmd in ["color", "decompose", "check-class", "stats", "audit"] {
        let a = p6c4(&[cmd, f, "--json", "--verify-class"]);
        let b = p6c4(&[cmd, f, "--json", "--verify-class", "--parallel"]);
        assert!(
            a.status.success(),
            "{cmd}: {}",
            String::from_utf8_lossy(&a.stderr)
        );
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn generate_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        dir.path(),
        "spec.json",
        r#"{"seed": 3, "random": {"samples": 5, "n_min": 4, "n_max": 8, "p_min": 0.2, "p_max": 0.6, "max_attempts": 1000},
            "blowups": {"samples": 5, "max_class_size": 2, "max_clique": 2, "max_n": 30}, "chordal": null, "glued": null}"#,
    );
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for out in [&a, &b] {
        let run = p6c4(&[
            "generate",
            "--out",
            out.to_str().unwrap(),
            "--spec",
            spec.to_str().unwrap(),
        ]);
        assert!(
            run.status.success(),
            "{}",
            String::from_utf8_lossy(&run.stderr)
        );
    }
    let manifest = fs::read_to_string(a.join("manifest.json")).unwrap();
    assert_eq!(
        manifest,
        fs::read_to_string(b.join("manifest.json")).unwrap()
    );
    let v: serde_json::Value = serde_json::from_str(&manifest).unwrap();
    let graphs = v["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 10);
    for entry in graphs {
        let file = entry["file"].as_str().unwrap();
        let text = fs::read_to_string(a.join(file)).unwrap();
        assert_eq!(text, fs::read_to_string(b.join(file)).unwrap());
        let check = json(&p6c4(&[
            "check-class",
            a.join(file).to_str().unwrap(),
            "--json",
        ]));
        assert_eq!(check["verdict"], "in-class");
    }
}

#[test]
fn export_dot_and_stats() {
    let dir = TempDir::new().unwrap();
    let file = write(dir.path(), "c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = p6c4(&["export-dot", file.to_str().unwrap(), "--color"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("graph G {") && dot.contains("0 -- 4;"));
    assert!(dot.contains("fillcolor=3"));
    let v = json(&p6c4(&["stats", file.to_str().unwrap(), "--json"]));
    assert_eq!(
        (v["n"].as_u64(), v["m"].as_u64(), v["twin_classes"].as_u64()),
        (Some(5), Some(5), Some(5))
    );
}
