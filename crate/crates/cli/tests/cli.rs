use std::path::Path;
use std::process::{Command, Output};

use wheeler_lcp::fixtures::{DNA_FOREST, DNA_LCP_STAR};
use wheeler_lcp::{gen_random_graph, oracle_lcp_full};

fn wlcp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wlcp"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn by_position_text(values: &[u64]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(k, d)| format!("{}\t{d}\n", k + 2))
        .collect()
}

#[test]
fn validate_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let fig = write(dir.path(), "fig.txt", DNA_FOREST);
    let o = wlcp(&["validate", &fig]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("wheeler pseudoforest: yes"));

    let dec = write(dir.path(), "dec.txt", "2 2 2\n1 1 2\n1 2 1\n");
    let o = wlcp(&["validate", &dec]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("axiom 2"));

    let missing = dir.path().join("missing.txt");
    assert_eq!(
        wlcp(&["validate", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let bad = write(dir.path(), "bad.txt", "0 0 1\n");
    assert_eq!(wlcp(&["validate", &bad]).status.code(), Some(2));
    assert_eq!(
        wlcp(&["validate", &dec, "--mode", "graph"]).status.code(),
        Some(0)
    );
}

#[test]
fn lcp_star_stream_and_index_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let fig = write(dir.path(), "fig.txt", DNA_FOREST);
    let idx = dir.path().join("fig.idx");
    let o = wlcp(&["lcp-star", &fig, "--emit-index", idx.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("2\t0\n7\t0\n10\t0\n"));
    let o = wlcp(&[
        "lcp-star",
        idx.to_str().unwrap(),
        "--from-index",
        "--by-position",
    ]);
    assert_eq!(stdout(&o), by_position_text(&DNA_LCP_STAR));
    let o = wlcp(&["oracle", "--star", &fig]);
    assert_eq!(stdout(&o), by_position_text(&DNA_LCP_STAR));
}

#[test]
fn duplicate_strings_fail_semantically() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write(dir.path(), "dup.txt", "3 3 1\n1 1 0\n2 2 1\n3 3 1\n");
    assert_eq!(wlcp(&["lcp-star", &dup]).status.code(), Some(1));
}

#[test]
fn mode_flags_are_checked_before_io() {
    assert_eq!(
        wlcp(&["lcp", "/does/not/exist", "--semi-dfa"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wlcp(&["gen", "--adversarial", "3", "--pseudoforest", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(wlcp(&["gen"]).status.code(), Some(2));
}

#[test]
fn gen_and_bench_shapes() {
    let o = wlcp(&["gen", "--adversarial", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("10 10 "));
    let o = wlcp(&["bench", "--ks", "8,16,32"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,n,sigma,baseline_steps,algo1_steps,wall_ns");
    assert_eq!(lines.len(), 4);
}

#[test]
fn lcp_matches_oracle_on_random_graphs() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..30 {
        let g = gen_random_graph(8, 12, 3, seed).unwrap();
        let path = write(dir.path(), "g.txt", &g.to_text());
        let a = wlcp(&["lcp", &path]);
        let b = wlcp(&["oracle", &path]);
        assert!(a.status.success() && b.status.success());
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(stdout(&a), oracle_lcp_full(&g).to_text());
    }
}

#[test]
fn semi_dfa_route_and_expand() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let order = dir.path().join("order.txt");
    let (g, order) = (g.to_str().unwrap(), order.to_str().unwrap());
    assert!(wlcp(&[
        "gen",
        "--semi-dfa",
        "12",
        "--sigma",
        "3",
        "--seed",
        "5",
        "--order-out",
        order,
        "-o",
        g
    ])
    .status
    .success());
    assert_eq!(
        wlcp(&["validate", g, "--mode", "semi-dfa", "--order", order])
            .status
            .code(),
        Some(0)
    );
    let map = dir.path().join("map.txt");
    let gis = dir.path().join("gis.txt");
    let fast = wlcp(&["lcp", g, "--semi-dfa", "--order", order]);
    let slow = wlcp(&[
        "lcp",
        g,
        "--map",
        map.to_str().unwrap(),
        "--gis",
        gis.to_str().unwrap(),
    ]);
    assert_eq!(fast.stdout, slow.stdout);

    let star = wlcp(&["lcp-star", gis.to_str().unwrap()]);
    let star_path = write(dir.path(), "star.txt", &stdout(&star));
    let expanded = wlcp(&[
        "expand",
        "--gis",
        gis.to_str().unwrap(),
        "--map",
        map.to_str().unwrap(),
        "--lcp-star",
        &star_path,
    ]);
    assert_eq!(expanded.stdout, slow.stdout);
}
