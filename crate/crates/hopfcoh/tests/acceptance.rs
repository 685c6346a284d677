//! Acceptance suite: every published worked example recomputed and
//! checked, with the stated per-criterion time bounds, plus byte-level
//! determinism of reports across worker counts. Run with
//! `cargo test --test acceptance -- --nocapture` to see one line per
//! criterion.

use hopfcoh::enumerate::Limits;
use hopfcoh::{cli, suite};

#[test]
fn acceptance_criteria() {
    let limits = Limits::default();
    let rows = suite::run_computational(&limits).expect("suite runs");
    let mut all_ok = true;
    for row in &rows {
        let ok = row.passed && row.within_limit();
        println!(
            "criterion {:>2}: {} [{} ms ≤ {} ms] {}",
            row.id,
            if ok { "PASS" } else { "FAIL" },
            row.elapsed_ms,
            row.limit_ms,
            row.label
        );
        if !ok {
            println!("  expected: {}", row.expected);
            println!("  computed: {}", row.computed);
        }
        all_ok &= ok;
    }

    // criterion 10: the full report is byte-identical across 1, 2, and
    // 8 worker threads
    let mut outputs = Vec::new();
    for threads in ["1", "2", "8"] {
        let args: Vec<String> = [
            "paper-examples",
            "--format",
            "json",
            "--threads",
            threads,
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        let (code, report) = cli::run_capture(&args);
        assert_eq!(code, 0, "paper-examples exits 0 with {threads} threads");
        outputs.push(report);
    }
    let identical = outputs.windows(2).all(|w| w[0] == w[1]);
    println!(
        "criterion 10: {} [report bytes identical across 1, 2, 8 workers]",
        if identical { "PASS" } else { "FAIL" }
    );
    all_ok &= identical;

    assert!(all_ok, "all acceptance criteria pass");
}
