//! End-to-end checks of the command-line surface: exit codes, the spec
//! file round trip, and report determinism.

use std::path::{Path, PathBuf};

use hopfcoh::cli::run_capture;
use hopfcoh::specfile;

fn specs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs")
}

fn run(args: &[&str]) -> (i32, String) {
    let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    run_capture(&owned)
}

fn spec(name: &str) -> String {
    specs_dir().join(name).display().to_string()
}

#[test]
fn shipped_specs_roundtrip_bit_exactly() {
    for entry in std::fs::read_dir(specs_dir()).expect("specs directory") {
        let path = entry.expect("dir entry").path();
        if path.extension().and_then(|e| e.to_str()) != Some("spec") {
            continue;
        }
        let text = std::fs::read_to_string(&path).expect("readable");
        let doc = specfile::parse(&text).expect("parses");
        assert_eq!(
            specfile::to_canonical_json(&doc),
            text,
            "canonical round trip for {}",
            path.display()
        );
        specfile::load(&path).expect("passes axiom checks");
    }
}

#[test]
fn check_command() {
    let (code, report) = run(&["check", &spec("h4_f3.spec")]);
    assert_eq!(code, 0);
    assert!(report.contains("verdict: ok"));

    let (code, _) = run(&["check", &spec("e2_module_f3.spec")]);
    assert_eq!(code, 0);
}

#[test]
fn cohomology_commands() {
    let e2 = spec("e2_over_h4_f3.spec");
    let (code, report) = run(&["h0", &e2]);
    assert_eq!(code, 0);
    assert!(report.contains("H0 order: 2"));

    let (code, report) = run(&["z1", &e2]);
    assert_eq!(code, 0);
    assert!(report.contains("Z1 count: 6"));

    let (code, report) = run(&["h1", &e2]);
    assert_eq!(code, 0);
    assert!(report.contains("H1 classes: 2"));
    assert!(!report.contains("via"));

    let (code, report) = run(&["h1", &e2, "--witnesses"]);
    assert_eq!(code, 0);
    assert!(report.contains("via"));

    // a bare Hopf spec computes over itself
    let (code, report) = run(&["h1", &spec("h4_f3.spec")]);
    assert_eq!(code, 0);
    assert!(report.contains("H1 classes: 1"));
}

#[test]
fn torsor_and_comparison_commands() {
    let (code, report) = run(&["torsors", &spec("e2_over_h4_f3.spec")]);
    assert_eq!(code, 0);
    assert!(report.contains("torsor classes: 2"));

    let (code, report) = run(&["compare-group", &spec("ks3_over_kz2_f3.spec")]);
    assert_eq!(code, 0);
    assert!(report.contains("verdict: ok"));

    let (code, report) = run(&["compare-restricted", &spec("e2_module_f3.spec")]);
    assert_eq!(code, 0);
    assert!(report.contains("verdict: ok"));

    let (code, report) = run(&["bridge-torsors", &spec("k_over_kz2_f3.spec")]);
    assert_eq!(code, 0);
    assert!(report.contains("2 (Hopf) vs 2 (classical)"));
}

#[test]
fn exact_sequence_command() {
    let incl = spec("incl_k_e2_f3.json");
    let (code, report) = run(&[
        "exact-seq",
        &spec("k_over_h4_f3.spec"),
        &spec("e2_over_h4_f3.spec"),
        "--incl",
        &incl,
    ]);
    assert_eq!(code, 0);
    assert!(report.contains("verdict: ok"));
    assert!(report.contains("six-term extension checked: false"));

    let incl = spec("incl_k_kz2_f3.json");
    let (code, report) = run(&[
        "exact-seq",
        &spec("k_over_kz2_f3.spec"),
        &spec("kz2_f3.spec"),
        "--incl",
        &incl,
    ]);
    assert_eq!(code, 0);
    assert!(report.contains("six-term extension checked: true"));
}

#[test]
fn exit_codes() {
    // budget exceeded
    let (code, _) = run(&["h1", &spec("e2_over_h4_f3.spec"), "--budget", "10"]);
    assert_eq!(code, 3);

    // usage errors
    let (code, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["h1"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["h1", "/nonexistent/path.spec"]);
    assert_eq!(code, 2);

    // parse error on an empty file
    let dir = std::env::temp_dir().join("hopfcoh-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.spec");
    std::fs::write(&empty, "").unwrap();
    let (code, _) = run(&["h1", empty.to_str().unwrap()]);
    assert_eq!(code, 2);

    // axiom failure in the input is a verification mismatch
    let broken = dir.join("broken.spec");
    let text = std::fs::read_to_string(specs_dir().join("h4_f3.spec")).unwrap();
    let mut doc = specfile::parse(&text).unwrap();
    doc.algebra.unit = vec![
        specfile::ScalarRepr::Int(0),
        specfile::ScalarRepr::Int(1),
        specfile::ScalarRepr::Int(0),
        specfile::ScalarRepr::Int(0),
    ];
    std::fs::write(&broken, specfile::to_canonical_json(&doc)).unwrap();
    let (code, report) = run(&["check", broken.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(report.contains("FAIL"));
    let (code, _) = run(&["h1", broken.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn reports_are_deterministic_across_threads() {
    let e2 = spec("e2_over_h4_f3.spec");
    let (code1, a) = run(&["h1", &e2, "--witnesses", "--format", "json", "--threads", "1"]);
    let (code2, b) = run(&["h1", &e2, "--witnesses", "--format", "json", "--threads", "4"]);
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    assert_eq!(a, b);
    // and the output is valid JSON
    let parsed: serde_json::Value = serde_json::from_str(&a).expect("valid json");
    assert_eq!(parsed["classes"], 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("hopfcoh-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("h0.json");
    let (code, rendered) = run(&[
        "h0",
        &spec("e2_over_h4_f3.spec"),
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&out).unwrap();
    assert_eq!(written, rendered);
}
