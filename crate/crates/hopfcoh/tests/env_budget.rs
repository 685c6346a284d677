//! The HOPFCOH_BUDGET environment variable sets the default enumeration
//! cap. Kept in its own test binary because it mutates process state.

use std::path::Path;

use hopfcoh::cli::run_capture;

#[test]
fn environment_budget_is_honored() {
    let spec = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("specs")
        .join("e2_over_h4_f3.spec")
        .display()
        .to_string();

    std::env::set_var("HOPFCOH_BUDGET", "10");
    let (code, _) = run_capture(&["h1".to_string(), spec.clone()]);
    assert_eq!(code, 3, "tiny budget from the environment");

    // an explicit flag overrides the environment
    let args: Vec<String> = ["h1", &spec, "--budget", "1000000"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let (code, report) = run_capture(&args);
    assert_eq!(code, 0);
    assert!(report.contains("H1 classes: 2"));
    std::env::remove_var("HOPFCOH_BUDGET");
}
