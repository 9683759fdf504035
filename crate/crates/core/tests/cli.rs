use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use domgame::io::from_graph6;

fn domgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domgame"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn play(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domgame"))
        .arg("play")
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn generated(args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    let o = domgame(&full);
    assert!(o.status.success());
    stdout(&o).trim().to_string()
}

#[test]
fn value_on_files_and_literals() {
    let dir = tempfile::tempdir().unwrap();
    let p7 = write(dir.path(), "path7.g6", &generated(&["--family", "path", "--n", "7"]));
    let k2 = write(dir.path(), "k2.g6", "Ag\n");
    let p6 = write(dir.path(), "p6.txt", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
    for (variant, graph, want) in [("z", &p7, "3"), ("ll", &k2, "3"), ("dom", &p6, "3")] {
        let o = domgame(&["value", "--variant", variant, "--first", "d", "--graph", graph]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), format!("{want}\n"));
    }
    let o = domgame(&["value", "--variant", "z", "--first", "s", "--graph", "Ag"]);
    assert_eq!(stdout(&o), "1\n");
    let o = domgame(&["value", "--variant", "dom", "--graph", &p6, "--covered", "0,1,2,3"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn exit_codes_separate_error_classes() {
    assert_eq!(
        domgame(&["value", "--variant", "z", "--graph", "C!!"]).status.code(),
        Some(2)
    );
    assert_eq!(
        domgame(&["value", "--variant", "nope", "--graph", "Ag"]).status.code(),
        Some(2)
    );
    assert_eq!(
        domgame(&["value", "--variant", "z", "--graph", "B?"]).status.code(),
        Some(3)
    );
    let o = domgame(&["value", "--variant", "l", "--graph", "IhCGGC@?G", "--memo-cap", "1"]);
    assert_eq!(o.status.code(), Some(4));
    let o = domgame(&["value", "--variant", "dom", "--graph", "Ag", "--covered", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn profile_records_are_flat_and_stable() {
    let p6 = generated(&["--family", "path", "--n", "6"]);
    let o = domgame(&["profile", "--graph", &p6]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(
        (v["gamma_t"].as_u64(), v["dom_d"].as_u64(), v["z_d"].as_u64()),
        (Some(4), Some(3), Some(3))
    );
    let o = domgame(&["profile", "--graph", "Ag"]);
    let k2: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(
        (k2["z_d"].as_u64(), k2["l_d"].as_u64(), k2["ll_d"].as_u64()),
        (Some(1), Some(2), Some(3))
    );
    let keys = |x: &serde_json::Value| x.as_object().unwrap().keys().cloned().collect::<Vec<_>>();
    assert_eq!(keys(&v), keys(&k2));
    assert_eq!(keys(&v).len(), 12);
    assert!(v.as_object().unwrap().values().all(|x| x.is_u64()));
    let o = domgame(&["profile", "--graph", "Ag", "--format", "tsv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("gamma\tgamma_t\tdom_d"));
    assert_eq!(lines[1].split('\t').count(), 12);
}

#[test]
fn generate_families() {
    let g = from_graph6(generated(&["--family", "cycle_power", "--N", "8", "--n", "2"]).as_bytes()).unwrap();
    assert_eq!((g.n(), g.min_degree(), g.max_degree()), (8, 4, 4));
    let h = from_graph6(generated(&["--family", "hamming", "--m", "2", "--n", "3"]).as_bytes()).unwrap();
    assert_eq!((h.n(), h.edge_count()), (6, 9));
    let hat = from_graph6(generated(&["--family", "hat", "--graph", "Bw"]).as_bytes()).unwrap();
    assert_eq!(hat.n(), 16);
    let b = from_graph6(generated(&["--family", "bridge", "--m", "3", "--n", "4"]).as_bytes()).unwrap();
    assert_eq!((b.n(), b.edge_count()), (7, 11));
    let o = domgame(&["generate", "--family", "star", "--n", "3", "--format", "edgelist"]);
    assert_eq!(stdout(&o), "4 3\n0 1\n0 2\n0 3\n");
    assert_eq!(
        domgame(&["generate", "--family", "wheel", "--n", "3"]).status.code(),
        Some(6)
    );
}

const TABLE_4_TO_12: &str = "n\tT\teq_gg\teq_tg\teq_gamma\tgt_gammat\tlt_gammat
4\t2\t2\t0\t2\t0\t1
5\t3\t3\t1\t2\t0\t1
6\t6\t5\t1\t4\t0\t2
7\t11\t10\t3\t6\t0\t3
8\t23\t19\t3\t11\t0\t6
9\t47\t40\t7\t16\t1\t8
10\t106\t84\t11\t29\t5\t21
11\t235\t186\t21\t47\t20\t41
12\t551\t412\t38\t84\t60\t103
";

#[test]
fn census_table_and_cache() {
    let o = domgame(&["census", "--min", "4", "--max", "12"]);
    assert_eq!(stdout(&o), TABLE_4_TO_12);
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let out = dir.path().join("table.tsv");
    let detail = dir.path().join("detail.tsv");
    let args = |extra: &[&str]| {
        let mut a = vec!["census", "--min", "4", "--max", "8", "--cache", cache.to_str().unwrap()];
        a.extend_from_slice(extra);
        a.iter().map(|s| s.to_string()).collect::<Vec<_>>()
    };
    let run = |a: Vec<String>| {
        let refs: Vec<&str> = a.iter().map(String::as_str).collect();
        assert!(domgame(&refs).status.success());
    };
    run(args(&[
        "--out",
        out.to_str().unwrap(),
        "--detail",
        detail.to_str().unwrap(),
        "--jobs",
        "2",
    ]));
    let first = fs::read_to_string(&out).unwrap();
    assert!(TABLE_4_TO_12.starts_with(&first));
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 5);
    let d = fs::read_to_string(&detail).unwrap();
    assert_eq!(d.lines().count(), 1 + 2 + 3 + 6 + 11 + 23);
    assert!(d.lines().skip(1).all(|l| !l.contains('-')));
    run(args(&["--out", out.to_str().unwrap()]));
    assert_eq!(fs::read_to_string(&out).unwrap(), first);
}

#[test]
fn conjecture_scan_passes() {
    let o = domgame(&["conjecture", "--max-order", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PASS 0 counterexamples\n");
}

#[test]
fn verify_writes_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.jsonl");
    let o = domgame(&["verify", "--suite", "spotvalues", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    let mut claims = std::collections::BTreeSet::new();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass", "{line}");
        assert!(v["graph"].is_string());
        assert!(v.as_object().unwrap().values().all(|x| !x.is_object() && !x.is_array()));
        claims.insert(v["claim"].as_str().unwrap().to_string());
    }
    for c in [
        "hierarchy",
        "path_formula",
        "cycle_power_formula",
        "hamming_values",
        "bridge_values",
        "hat_values",
    ] {
        assert!(claims.contains(c), "{c}");
    }
    let again = dir.path().join("again.jsonl");
    domgame(&[
        "verify",
        "--suite",
        "spotvalues",
        "--out",
        again.to_str().unwrap(),
        "--jobs",
        "1",
    ]);
    assert_eq!(fs::read_to_string(&again).unwrap(), text);
}

#[test]
fn play_against_the_engine() {
    let o = play(&["--variant", "z", "--as", "dominator", "--graph", "Bw"], "1\n");
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("game over after 1 moves\n"));

    // the engine opens on 0; replaying it is a null move in the LL-game
    let o = play(&["--variant", "ll", "--as", "staller", "--graph", "Ag"], "0\n");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("engine plays 0"));
    assert!(text.ends_with("game over after 3 moves\n"), "{text}");

    let o = play(&["--variant", "z", "--as", "dominator", "--graph", "Bw"], "7\n1\n");
    let text = stdout(&o);
    assert!(text.contains("illegal move \"7\""));
    assert_eq!(text.matches("dominated: {}").count(), 1);
    assert!(text.ends_with("game over after 1 moves\n"));

    let o = play(&["--variant", "dom", "--as", "dominator", "--graph", "Bw"], "");
    assert_eq!(o.status.code(), Some(5));
}
