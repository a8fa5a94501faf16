use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use optimal1p::{make_xw, random_optimal};
use optimal1p_io::formats::{edgelist, rotation};
use optimal1p_io::manifest;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_optimal1p"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("optimal1p-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = cmd.output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

fn recognize(path: &Path, extra: &[&str]) -> (i32, String, String) {
    run(bin().arg("recognize").arg(path).args(extra))
}

#[test]
fn wheel_is_accepted_with_k() {
    let dir = scratch("xw");
    let f = dir.join("xw6.edges");
    std::fs::write(&f, edgelist::write(&make_xw(6).unwrap().0)).unwrap();
    let (code, out, _) = recognize(&f, &[]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "optimal-1-planar k=6");
}

#[test]
fn k6_is_rejected_on_edge_count() {
    let dir = scratch("k6");
    let f = dir.join("k6.edges");
    let mut s = String::from("6 15\n");
    for a in 0..6 {
        for b in a + 1..6 {
            s += &format!("{a} {b}\n");
        }
    }
    std::fs::write(&f, s).unwrap();
    let (code, out, _) = recognize(&f, &[]);
    assert_eq!(code, 1);
    assert!(out.contains("precheck: edge count"), "{out}");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = scratch("parse");
    let f = dir.join("bad.edges");
    std::fs::write(&f, "4 2\n0 1\n2 x\n").unwrap();
    let (code, _, err) = recognize(&f, &[]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.edges:3:3:"), "{err}");
    let (code, _, _) = run(bin().arg("recognize"));
    assert_eq!(code, 2);
}

#[test]
fn impossible_sizes_exit_2() {
    for n in ["7", "9"] {
        let (code, _, err) = run(bin().args(["generate", "random", "--n", n]));
        assert_eq!(code, 2);
        assert!(err.contains("none exist for n < 8 or n = 9"), "{err}");
    }
}

#[test]
fn generate_xw_and_enumerate() {
    let (code, out, _) = run(bin().args(["generate", "xw", "--k", "5"]));
    assert_eq!(code, 0);
    assert_eq!(edgelist::parse(&out).unwrap().n(), 12);
    let (code, out, _) = run(bin().args(["generate", "enumerate", "--n", "12"]));
    assert_eq!((code, out.trim()), (0, "3"));
    let (_, out, _) = run(bin().args(["generate", "enumerate", "--n", "9"]));
    assert_eq!(out.trim(), "0");
}

#[test]
fn random_pipeline_with_artifacts() {
    let dir = scratch("random");
    let (code, _, _) = run(bin()
        .args(["generate", "random", "--n", "1000", "--seed", "7", "--format", "graph6", "--out"])
        .arg(&dir));
    assert_eq!(code, 0);
    let entries = manifest::parse(&std::fs::read_to_string(dir.join("manifest.tsv")).unwrap()).unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!((entries[0].n, entries[0].m), (1000, 3992));
    let g6 = dir.join(&entries[0].file);
    let (emb, tr, dot) = (dir.join("e.rot"), dir.join("t.txt"), dir.join("e.dot"));
    let (code, out, _) = run(bin()
        .arg("recognize")
        .arg(&g6)
        .arg("--emit-embedding")
        .arg(&emb)
        .arg("--trace")
        .arg(&tr)
        .arg("--dot")
        .arg(&dot)
        .arg("--stats"));
    assert_eq!(code, 0);
    assert!(out.lines().last().unwrap().starts_with("optimal-1-planar k="));
    let unsuccessful: u64 = out
        .split_whitespace()
        .find_map(|t| t.strip_prefix("unsuccessful="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(unsuccessful <= 4000);
    let emb = rotation::parse(&std::fs::read_to_string(emb).unwrap()).unwrap();
    let g = optimal1p_io::Format::Graph6.parse(&std::fs::read_to_string(&g6).unwrap()).unwrap();
    optimal1p::verify_embedding(&g, &emb).unwrap();
    assert_eq!(emb.crossings.len(), 998);
    assert!(std::fs::read_to_string(tr).unwrap().lines().count() > 0);
    assert_eq!(std::fs::read_to_string(dot).unwrap().matches("doublecircle").count(), 2);
}

#[test]
fn mutants_are_rejected_by_every_algorithm() {
    let dir = scratch("mutate");
    let src = dir.join("g.edges");
    std::fs::write(&src, edgelist::write(&random_optimal(60, 3).unwrap().graph)).unwrap();
    let out = dir.join("m");
    let (code, _, _) = run(bin()
        .args(["generate", "mutate", "--seed", "5", "--count", "5", "--input"])
        .arg(&src)
        .arg("--out")
        .arg(&out));
    assert_eq!(code, 0);
    let entries = manifest::parse(&std::fs::read_to_string(out.join("manifest.tsv")).unwrap()).unwrap();
    let mut rejected = 0;
    for e in &entries {
        let codes: Vec<i32> = ["linear", "quadratic", "sr-only"]
            .iter()
            .map(|a| recognize(&out.join(&e.file), &["--algorithm", a]).0)
            .collect();
        assert_eq!(codes[0], codes[1]);
        rejected += usize::from(codes[0] == 1);
    }
    assert!(rejected >= 4);
}

#[test]
fn sr_only_rejects_separating_cycle() {
    let dir = scratch("five");
    let gen = optimal1p::random_optimal_with(30, 1, optimal1p::Mix::CubesLast(1)).unwrap();
    let f = dir.join("g.edges");
    std::fs::write(&f, edgelist::write(&gen.graph)).unwrap();
    assert_eq!(recognize(&f, &[]).0, 0);
    let (code, out, _) = recognize(&f, &["--algorithm", "sr-only"]);
    assert_eq!(code, 1);
    assert!(out.contains("separating 4-cycle"), "{out}");
}

#[test]
fn bench_prints_csv() {
    let (code, out, _) = run(bin().args(["bench", "--sizes", "8,200", "--repeats", "1"]));
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,algorithm,repeats,median_seconds,accepted");
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
}
