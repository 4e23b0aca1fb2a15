//! End-to-end tests of the `unsharp` binary: exit codes, report text,
//! serialization output, and the machine-readable `RESULT` line.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn unsharp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unsharp"))
        .args(args)
        .output()
        .expect("the binary should spawn")
}

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    p.to_str().expect("utf-8 path").to_string()
}

fn temp_file(name: &str, content: &str) -> String {
    let mut p = std::env::temp_dir();
    p.push(format!("unsharp-test-{}-{name}", std::process::id()));
    fs::write(&p, content).expect("temp file writable");
    p.to_str().expect("utf-8 path").to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("terminated normally")
}

#[test]
fn validate_lawful_file_exits_zero() {
    let o = unsharp(&["validate", &fixture("six_element.urp")]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0, "stderr: {}", stderr(&o));
    assert!(out.contains("law R3.forward: pass"));
    assert!(out.contains("law R3.backward: pass"));
    assert!(out.contains("law R3-equivalence: pass"));
    assert!(out.contains("property divisibility: holds"));
    assert!(out.contains("property idempotence: holds"));
    assert!(out.trim_end().ends_with("RESULT pass 0"));
}

#[test]
fn validate_catalog_reference_exits_zero() {
    let o = unsharp(&["validate", "catalog:mo", "2"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0);
    assert!(out.contains("law omp.orthogonal-joins: pass"));
    assert!(out.contains("law omp.orthomodular-law: pass"));
    assert!(out.contains("law omp.complementation: pass"));
    assert!(out.trim_end().ends_with("RESULT pass 0"));
}

#[test]
fn mutated_implication_entry_fails_with_triple_witness() {
    let o = unsharp(&["validate", &fixture("mutant.urp")]);
    let out = stdout(&o);
    assert_eq!(code(&o), 1);
    assert!(out.contains("law R3.backward: FAIL"), "{out}");
    assert!(out.contains("x=0, y=a, z=a"), "{out}");
    assert!(out.contains("RESULT fail 2"), "{out}");
}

#[test]
fn order_cycle_is_a_parse_error() {
    let o = unsharp(&["validate", &fixture("cycle.urp")]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).is_empty());
    let err = stderr(&o);
    assert!(err.contains("line 5"), "{err}");
    assert!(err.contains("antisymmetry"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    let o = unsharp(&["validate", "catalog:hilbert", "3"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("hilbert"));

    let o = unsharp(&["validate", &fixture("six_element.urp"), "3"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("catalog:<name>"));

    let o = unsharp(&["validate", "no-such-file.urp"]);
    assert_eq!(code(&o), 2);

    let o = unsharp(&["search", "--size", "9"]);
    assert_eq!(code(&o), 2);

    let o = unsharp(&["convert", "--to-omp", "catalog:boolean", "2"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--to-omp expects a urp input"));

    // Unknown flags are rejected by the argument parser with the same code.
    let o = unsharp(&["validate", "--frobnicate", "x"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn roundtrip_through_the_residuated_structure_is_identity() {
    let o = unsharp(&["roundtrip", "catalog:even_subsets", "6"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0, "stderr: {}", stderr(&o));
    assert!(out.contains("P(R(P)) = P: equal"), "{out}");
    assert!(out.contains("RESULT pass 0"));
}

#[test]
fn roundtrip_through_the_poset_is_identity() {
    let o = unsharp(&["roundtrip", &fixture("six_element.urp")]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0);
    assert!(out.contains("R(P(R)) = R: equal"), "{out}");
}

#[test]
fn convert_to_urp_emits_a_lawful_structure_file() {
    let o = unsharp(&["convert", "--to-urp", "catalog:mo", "2"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0);
    assert!(out.starts_with("structure urp mo-2\n"), "{out}");
    assert!(out.contains("odot a1 a1 a1"), "{out}");
    assert!(out.contains("imp a1 a1 a1' 1"), "{out}");

    let path = temp_file("converted.urp", &out);
    let o = unsharp(&["validate", &path]);
    assert_eq!(
        code(&o),
        0,
        "converted output must validate: {}",
        stdout(&o)
    );
    assert!(stdout(&o).contains("RESULT pass 0"));
}

#[test]
fn convert_to_omp_recovers_the_carrier() {
    let o = unsharp(&["convert", "--to-omp", &fixture("six_element.urp")]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0);
    assert!(out.starts_with("structure omp mo2-residuated\n"), "{out}");
    assert!(out.contains("le 0 a"));
    assert!(!out.contains("odot"), "an omp file carries no tables");
}

#[test]
fn catalog_lists_entries_and_serializes_deterministically() {
    let o = unsharp(&["catalog"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0);
    for name in ["boolean", "even-subsets", "mo", "mo2-residuated"] {
        assert!(out.contains(name), "missing {name} in: {out}");
    }

    // The checked-in fixture was produced by this very command, so the
    // serializer is pinned byte-for-byte.
    let o = unsharp(&["catalog", "mo2-residuated"]);
    assert_eq!(code(&o), 0);
    let expected = fs::read_to_string(fixture("six_element.urp")).unwrap();
    assert_eq!(stdout(&o), expected);
}

#[test]
fn export_dot_draws_cover_edges_only() {
    let o = unsharp(&["export-dot", &fixture("chain2.urp")]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0);
    assert_eq!(out.matches("->").count(), 1, "{out}");

    let o = unsharp(&["export-dot", "catalog:even_subsets", "4"]);
    let out = stdout(&o);
    assert_eq!(out.matches("->").count(), 12, "{out}");

    let o = unsharp(&["export-dot", "catalog:mo2-residuated", "--show-involution"]);
    let out = stdout(&o);
    let dashed = out.lines().filter(|l| l.contains("style=dashed")).count();
    let solid = out
        .lines()
        .filter(|l| l.contains("->") && !l.contains("dashed"))
        .count();
    assert_eq!((solid, dashed), (8, 3), "{out}");
}

#[test]
fn implication_table_prints_one_line_per_pair() {
    let o = unsharp(&["imp-table", "catalog:mo2-residuated"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0);
    assert!(out.contains("a -> a = {a', 1}"), "{out}");
    assert!(out.contains("1 -> 1 = {0, a, a', b, b', 1}"), "{out}");
    assert_eq!(out.lines().count(), 36 + 1, "36 pairs plus the RESULT line");

    // The stored table and the formula agree entry-for-entry on this
    // structure, so both input kinds print the same lines.
    let from_formula = unsharp(&["imp-table", "catalog:mo", "2"]);
    let renamed = stdout(&from_formula)
        .replace("a1'", "a'")
        .replace("a2'", "b'")
        .replace("a1", "a")
        .replace("a2", "b");
    assert_eq!(renamed, out);
}

#[test]
fn search_reports_counts_and_streams_representatives() {
    let o = unsharp(&["search", "--size", "6"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0);
    assert!(
        out.contains("size 6 class orthomodular: 3 labeled candidates, 1 isomorphism class"),
        "{out}"
    );

    let o = unsharp(&[
        "search",
        "--size",
        "4",
        "--class",
        "bounded-involutive",
        "--canonical",
    ]);
    let out = stdout(&o);
    assert!(out.contains("3 isomorphism classes"), "{out}");
    assert_eq!(out.matches("structure omp").count(), 3, "{out}");
    assert_eq!(out.matches("\nend\n").count(), 3, "{out}");

    // The long class names are accepted as aliases.
    let o = unsharp(&["search", "--size", "4", "--class", "orthomodular-poset"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("1 isomorphism class"));
}

#[test]
fn search_results_do_not_depend_on_worker_count() {
    let one = unsharp(&["search", "--size", "6", "--canonical", "--jobs", "1"]);
    let four = unsharp(&["search", "--size", "6", "--canonical", "--jobs", "4"]);
    assert_eq!(stdout(&one), stdout(&four));
    assert_eq!(code(&one), 0);
}

#[test]
fn stress_run_passes_on_small_sizes() {
    let o = unsharp(&["search", "--size", "6", "--stress", "--jobs", "2"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0, "{out}");
    assert!(out.contains("structures tested:"), "{out}");
    assert!(out.trim_end().ends_with("RESULT pass 0"), "{out}");
}

#[test]
fn derived_imp_marker_cross_checks_stored_entries() {
    let stored = fs::read_to_string(fixture("six_element.urp")).unwrap();

    let marked = stored.replace(
        "structure urp mo2-residuated",
        "structure urp mo2-residuated derived-imp",
    );
    let path = temp_file("derived-ok.urp", &marked);
    let o = unsharp(&["validate", &path]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("law implication-table.matches-formula: pass"));

    let mutated = marked.replace("imp a a a' 1", "imp a a a'");
    let path = temp_file("derived-bad.urp", &mutated);
    let o = unsharp(&["validate", &path]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(
        out.contains("law implication-table.matches-formula: FAIL"),
        "{out}"
    );
    assert!(out.contains("a -> a stored as"), "{out}");
}
