use std::fs;
use std::process::{Command, Output};

use partition_lattice::fca::{format, standard_context};

fn plattice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plattice"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = plattice(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn partition_listings() {
    assert_eq!(
        stdout(&["partitions", "--n", "5"]),
        "5\n4,1\n3,2\n3,1,1\n2,2,1\n2,1,1,1\n1,1,1,1,1\n"
    );
    assert_eq!(stdout(&["partitions", "--n", "1"]), "1\n");
    assert_eq!(stdout(&["partitions", "--n", "4"]).lines().count(), 5);
    assert_eq!(stdout(&["partitions", "--n", "8"]).lines().count(), 22);
    assert_eq!(
        stdout(&["partitions", "--n", "2", "--format", "tuple"]),
        "(2)\n(1,1)\n"
    );
}

#[test]
fn irreducible_lists_and_counts() {
    assert_eq!(
        stdout(&["irreducibles", "--n", "6"]),
        "6\n5,1\n4,1,1\n3,3\n3,1,1,1\n2,2,2\n2,2,1,1\n2,1,1,1,1\n"
    );
    assert_eq!(stdout(&["irreducibles", "--n", "1"]), "");
    assert_eq!(stdout(&["irreducibles", "--n", "12", "--count"]), "29\n");
    assert_eq!(
        stdout(&["irreducibles", "--n", "12", "--kind", "meet", "--count"]),
        "29\n"
    );
    assert_eq!(
        stdout(&["irreducibles", "--n", "6", "--kind", "meet"]),
        "5,1\n4,2\n4,1,1\n3,3\n3,1,1,1\n2,2,2\n2,1,1,1,1\n1,1,1,1,1,1\n"
    );
}

#[test]
fn context_to_file_respects_force() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l6.cxt");
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["context", "--n", "6", "--out", p]), "");
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("B\n\n8\n8\n\n2,1,1,1,1\n"));
    assert!(text.ends_with(".......X\n........\n"));

    let again = plattice(&["context", "--n", "6", "--out", p, "--format", "csv"]);
    assert!(!again.status.success());
    assert!(String::from_utf8_lossy(&again.stderr).contains("--force"));
    assert_eq!(fs::read_to_string(&path).unwrap(), text);

    stdout(&[
        "context", "--n", "6", "--out", p, "--format", "csv", "--force",
    ]);
    assert!(fs::read_to_string(&path)
        .unwrap()
        .starts_with(",\"1,1,1,1,1,1\""));
}

#[test]
fn parallel_context_matches_sequential() {
    let seq = stdout(&["context", "--n", "25"]);
    let par = stdout(&["--parallel", "context", "--n", "25"]);
    assert_eq!(seq, par);
}

#[test]
fn concepts_count_and_listing() {
    assert_eq!(stdout(&["concepts", "--n", "20"]), "627\n");
    assert_eq!(stdout(&["concepts", "--n", "6"]), "11\n");
    assert_eq!(stdout(&["concepts", "--n", "2"]), "2\n");
    let listing = stdout(&["concepts", "--n", "6", "--list"]);
    let mut lines = listing.lines();
    assert_eq!(lines.next().unwrap(), "11");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 11);
    assert!(rows.iter().all(|l| l.split('\t').count() == 4));
    assert_eq!(
        rows[0],
        "8\t0\t2,1,1,1,1 2,2,1,1 2,2,2 3,1,1,1 3,3 4,1,1 5,1 6\t"
    );
}

#[test]
fn size_guards_and_bad_input() {
    let out = plattice(&["concepts", "--n", "41"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
    assert!(!plattice(&["hasse", "--n", "21"]).status.success());
    assert!(!plattice(&["partitions", "--n", "0"]).status.success());
    assert!(!plattice(&["irreducibles", "--n", "five"]).status.success());
    assert!(!plattice(&["bench", "--n", "2"]).status.success());
}

#[test]
fn verify_reports_every_check() {
    let text = stdout(&["verify", "--n", "8"]);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "|J| = 0,1,2,4,6,8,11,14");
    let checks: Vec<&str> = lines.collect();
    assert!(checks.len() >= 10);
    assert!(checks.iter().all(|l| l.starts_with("PASS")), "{text}");
}

#[test]
fn hasse_marks_irreducibles_and_pentagon() {
    let l6 = stdout(&["hasse", "--n", "6"]);
    assert_eq!(l6.matches("label=").count(), 11);
    assert_eq!(l6.matches(" -> ").count(), 12);
    assert!(!l6.contains("color=red"));
    let l2 = stdout(&["hasse", "--n", "2"]);
    assert_eq!(
        (l2.matches("label=").count(), l2.matches(" -> ").count()),
        (2, 1)
    );

    let dot = stdout(&["hasse", "--n", "7"]);
    assert!(dot.starts_with("digraph L7 {"));
    assert_eq!(dot.matches("label=").count(), 15);
    assert!(dot.trim_end().ends_with('}'));
    assert_eq!(dot.matches("fillcolor=gray").count(), 11);
    assert_eq!(dot.matches("color=red").count(), 5);
    assert_eq!(dot.matches(" -> ").count(), build_edge_count(7));
    assert!(dot.contains("label=\"(3,2,1,1)\", color=red"));
}

/// Cover pairs of `L_n`, recounted from the plain partition listing.
fn build_edge_count(n: u32) -> usize {
    let listed = stdout(&["partitions", "--n", &n.to_string(), "--format", "plain"]);
    let parts: Vec<Vec<u32>> = listed
        .lines()
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    let leq = |a: &[u32], b: &[u32]| {
        let (mut sa, mut sb) = (0, 0);
        (0..a.len().max(b.len())).all(|i| {
            sa += a.get(i).copied().unwrap_or(0);
            sb += b.get(i).copied().unwrap_or(0);
            sa <= sb
        })
    };
    let mut edges = 0;
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate() {
            if i == j || !leq(b, a) {
                continue;
            }
            let between = parts
                .iter()
                .enumerate()
                .any(|(k, c)| k != i && k != j && leq(b, c) && leq(c, a));
            if !between {
                edges += 1;
            }
        }
    }
    edges
}

#[test]
fn bench_prints_a_row_per_size() {
    let text = stdout(&["bench", "--n", "8", "--n", "16", "--repeats", "1"]);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].trim_start().starts_with('8') && rows[0].trim_end().ends_with('-'));
}

#[test]
fn context_formats_import_back() {
    let text = stdout(&["context", "--n", "7"]);
    let ctx = format::parse_cxt(&text).unwrap();
    assert_eq!(ctx, standard_context(7).unwrap());
    assert_eq!((ctx.objects().len(), ctx.attributes().len()), (11, 11));

    let csv = stdout(&["context", "--n", "6", "--format", "csv"]);
    let ctx6 = format::parse_csv(&csv).unwrap();
    assert_eq!(ctx6, standard_context(6).unwrap());
    assert_eq!(ctx6.cross_count(), 30);

    assert_eq!(stdout(&["context", "--n", "1"]), "B\n\n0\n0\n\n");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let commands: [&[&str]; 5] = [
        &["partitions", "--n", "9"],
        &["irreducibles", "--n", "15", "--kind", "meet"],
        &["context", "--n", "12", "--format", "csv"],
        &["concepts", "--n", "9", "--list"],
        &["hasse", "--n", "8"],
    ];
    for args in commands {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn verify_single_weight_is_trivial() {
    let text = stdout(&["verify", "--n", "1"]);
    assert!(text.starts_with("|J| = 0\n"));
    assert!(text.lines().skip(1).all(|l| l.starts_with("PASS")));
}
