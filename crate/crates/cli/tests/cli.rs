use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use clap::Parser;
use ktri_cli::{run, Cli};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn ktri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktri"))
        .args(args)
        .env_remove("KTRI_GUARD")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = ktri(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Runs the command in-process and returns `(status, stdout, stderr)`.
fn run_in_process(args: &[&str], stdin: &str) -> (i32, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("ktri").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = run(&cli, &mut stdin.as_bytes(), &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn check_golden(name: &str, got: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("KTRI_BLESS").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {name}"));
    assert_eq!(got, want, "golden file {name}");
}

fn fixture_arg(name: &str) -> String {
    fixtures().join(name).to_str().unwrap().to_string()
}

#[test]
fn count_methods_agree() {
    for method in ["det", "tree", "brute"] {
        assert_eq!(stdout(&["count", "--k", "2", "--n", "8", "--method", method]), "84\n");
        assert_eq!(stdout(&["count", "--k", "3", "--n", "8", "--method", method]), "4\n");
    }
    assert_eq!(stdout(&["count", "--k", "2", "--n", "20"]), "80419959684900\n");
}

#[test]
fn map_hexagon() {
    let dir = tempfile::tempdir().unwrap();
    let hex = dir.path().join("hex.tri");
    std::fs::write(&hex, "k=2 n=6\n1-4,3-6\n").unwrap();
    assert_eq!(stdout(&["map", "--input", hex.to_str().unwrap()]), "NNEE\nNENE\n");
    assert_eq!(stdout(&["map", "--object", "k=2 n=6;1-4,3-6"]), "NNEE\nNENE\n");
}

#[test]
fn unmap_fourteen_gon() {
    let want = std::fs::read_to_string(fixtures().join("fourteen_gon.tri")).unwrap();
    assert_eq!(stdout(&["unmap", "--input", &fixture_arg("fourteen_gon.pair")]), want);
}

#[test]
fn map_trace() {
    let out = ktri(&["map", "--trace", "--input", &fixture_arg("fourteen_gon.tri")]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "NNENNEENNNENENEENEEE\nNENNEENNNEEENNNENEEE\n");
    check_golden("map_trace_fourteen_gon.txt", &String::from_utf8(out.stderr).unwrap());
}

#[test]
fn renderings() {
    check_golden(
        "render_fourteen_gon.txt",
        &stdout(&["render", "--input", &fixture_arg("fourteen_gon.tri")]),
    );
    check_golden(
        "render_fourteen_gon_pair_shifted.txt",
        &stdout(&["render", "--shifted", "--input", &fixture_arg("fourteen_gon.pair")]),
    );
    check_golden(
        "render_fourteen_gon_pair.txt",
        &stdout(&["render", "--input", &fixture_arg("fourteen_gon.pair")]),
    );
    check_golden("render_hexagon.txt", &stdout(&["render", "--object", "k=2 n=6;1-4,2-5"]));
    check_golden("render_pentagon.txt", &stdout(&["render", "--object", "k=2 n=5;-"]));
    check_golden("render_nonagon_k3.txt", &stdout(&["render", "--input", &fixture_arg("nonagon_k3.tri")]));
    check_golden("render_ne_pair.txt", &stdout(&["render", "--object", "NE;NE"]));
    check_golden("render_nnee_nene_shifted.txt", &stdout(&["render", "--shifted", "--object", "NNEE;NENE"]));
}

#[test]
fn tree_dumps() {
    check_golden("tree_k2_n7.txt", &stdout(&["tree", "--k", "2", "--n", "7"]));
    check_golden("tree_pairs_n7.txt", &stdout(&["tree", "--k", "2", "--n", "7", "--pairs"]));
    check_golden("tree_k3_n9.txt", &stdout(&["tree", "--k", "3", "--n", "9"]));
}

#[test]
fn tree_levels_follow_the_counts() {
    let dump = stdout(&["tree", "--k", "2", "--n", "8"]);
    let mut per_level = [0usize; 4];
    for line in dump.lines() {
        let level: usize = line.split('\t').next().unwrap().parse().unwrap();
        per_level[level] += 1;
    }
    assert_eq!(per_level, [1, 3, 14, 84]);
}

#[test]
fn parents_and_children() {
    check_golden("children_heptagon.txt", &stdout(&["children", "--input", &fixture_arg("heptagon.tri")]));
    check_golden("children_nonagon_k3.txt", &stdout(&["children", "--input", &fixture_arg("nonagon_k3.tri")]));
    check_golden("children_nnee_nene.txt", &stdout(&["children", "--object", "NNEE;NENE"]));
    assert_eq!(stdout(&["parent", "--object", "k=2 n=6;1-4,3-6"]), "k=2 n=5\n-\n");
    assert_eq!(stdout(&["parent", "--object", "NNEE;NENE"]), "NE\nNE\n");
    let fourteen = stdout(&["parent", "--input", &fixture_arg("fourteen_gon.tri")]);
    assert_eq!(fourteen.lines().count(), 2);
    assert!(fourteen.starts_with("k=2 n=13\n"));
}

#[test]
fn enumerate_lists() {
    let tree = stdout(&["enumerate", "--k", "2", "--n", "7"]);
    let brute = stdout(&["enumerate", "--k", "2", "--n", "7", "--method", "brute"]);
    assert_eq!(tree, brute);
    assert_eq!(tree.lines().count(), 15);
    assert!(tree.starts_with("k=2 n=7\n"));
    let tuples = stdout(&["enumerate", "--k", "2", "--n", "7", "--tuples"]);
    assert_eq!(tuples.lines().count(), 14);
    assert!(tuples.lines().all(|l| l.split(' ').count() == 2));
}

#[test]
fn exit_statuses() {
    assert_eq!(ktri(&["count", "--k", "2"]).status.code(), Some(2));
    assert_eq!(ktri(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ktri(&["map", "--object", "x", "--input", "y"]).status.code(), Some(2));
    assert_eq!(ktri(&["count", "--k", "2", "--n", "4"]).status.code(), Some(1));
    let bad = ktri(&["unmap", "--object", "NENE;NNEE"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error: "));
    assert_eq!(ktri(&["map", "--object", "k=3 n=8;1-5"]).status.code(), Some(1));
    assert_eq!(ktri(&["map", "--input", "/nonexistent/file.tri"]).status.code(), Some(1));
}

#[test]
fn guard_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_ktri"))
        .args(["count", "--k", "2", "--n", "9", "--method", "brute"])
        .env("KTRI_GUARD", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&["count", "--k", "2", "--n", "9", "--method", "brute"]), "594\n");
}

#[test]
fn stdin_input() {
    assert_eq!(run_in_process(&["map", "--input", "-"], "k=2 n=6\n1-4,3-6\n"), (0, "NNEE\nNENE\n".into(), String::new()));
}

#[test]
fn map_then_unmap_is_the_identity() {
    for n in 5..=9 {
        let n_arg = n.to_string();
        let (status, listing, _) = run_in_process(&["enumerate", "--k", "2", "--n", &n_arg], "");
        assert_eq!(status, 0);
        let mut lines = listing.lines();
        let header = lines.next().unwrap();
        for list in lines {
            let file = format!("{header}\n{list}\n");
            let (s1, pair, _) = run_in_process(&["map", "--input", "-"], &file);
            let (s2, back, _) = run_in_process(&["unmap", "--input", "-"], &pair);
            assert_eq!((s1, s2), (0, 0));
            assert_eq!(back, file);
        }
    }
}

#[test]
fn output_is_deterministic() {
    let heptagon = fixture_arg("heptagon.tri");
    let fourteen = fixture_arg("fourteen_gon.pair");
    let commands: Vec<Vec<&str>> = vec![
        vec!["enumerate", "--k", "3", "--n", "9"],
        vec!["count", "--k", "3", "--n", "10", "--method", "tree"],
        vec!["map", "--input", &heptagon],
        vec!["unmap", "--input", &fourteen],
        vec!["parent", "--input", &heptagon],
        vec!["children", "--input", &heptagon],
        vec!["tree", "--k", "2", "--n", "7"],
        vec!["verify", "--k", "3", "--n-max", "9"],
        vec!["render", "--input", &heptagon],
    ];
    for args in &commands {
        let a = ktri(args);
        let b = ktri(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
    }
}

#[test]
fn verify_passes() {
    let (status, out, _) = run_in_process(&["verify", "--k", "2", "--n-max", "9"], "");
    assert_eq!(status, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("pass ")));
    assert!(out.lines().count() > 50);
}
