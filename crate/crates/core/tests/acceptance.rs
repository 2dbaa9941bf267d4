//! The acceptance battery: runs every suite check at full level, prints one
//! pass/fail line per criterion, and pins the counted results against the
//! golden files in `golden/` at the workspace root.

use std::collections::BTreeMap;
use std::path::PathBuf;

use hopfproj_core::suite::{verify_suite, CheckStatus, SuiteLevel};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

#[test]
fn acceptance_suite() {
    let report = verify_suite(SuiteLevel::Full);
    let mut failed = Vec::new();
    for c in &report.checks {
        let tag = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "INCONCLUSIVE",
            CheckStatus::Skipped => "SKIP",
        };
        println!(
            "{tag} {} ({} ms) counts={:?}",
            c.check_id, c.wall_ms, c.counts
        );
        if c.status == CheckStatus::Fail {
            failed.push(format!("{}: {:?}", c.check_id, c.failures));
        }
        if c.status == CheckStatus::Skipped {
            failed.push(format!("{}: unexpectedly skipped at full level", c.check_id));
        }
    }
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}

#[test]
fn suite_matches_golden_files() {
    let dir = golden_dir();
    let report = verify_suite(SuiteLevel::Full);
    if std::env::var("UPDATE_GOLDEN").is_ok() {
        std::fs::create_dir_all(&dir).expect("create golden dir");
        for c in &report.checks {
            let path = dir.join(format!("{}.json", c.check_id));
            let mut body = serde_json::to_string_pretty(&c.golden_view()).unwrap();
            body.push('\n');
            std::fs::write(&path, body).expect("write golden file");
        }
        return;
    }
    if !dir.exists() {
        panic!("golden directory missing at {}", dir.display());
    }
    let mut mismatches = Vec::new();
    for c in &report.checks {
        let path = dir.join(format!("{}.json", c.check_id));
        let expected: serde_json::Value = serde_json::from_str(
            &std::fs::read_to_string(&path)
                .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display())),
        )
        .expect("golden file must be valid JSON");
        let actual = c.golden_view();
        if actual != expected {
            mismatches.push(format!(
                "{}: expected {expected}, got {actual}",
                c.check_id
            ));
        }
    }
    assert!(mismatches.is_empty(), "golden drift:\n{}", mismatches.join("\n"));
}

#[test]
fn quick_level_skips_only_the_large_scan() {
    let report = verify_suite(SuiteLevel::Quick);
    let skipped: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Skipped)
        .map(|c| c.check_id.as_str())
        .collect();
    assert_eq!(skipped, vec!["taft9_projection_scan"]);
    assert_eq!(report.failed, 0);
}

#[test]
fn suite_counts_are_stable_across_runs() {
    let a = verify_suite(SuiteLevel::Quick);
    let b = verify_suite(SuiteLevel::Quick);
    let pick = |r: &hopfproj_core::suite::SuiteReport| -> Vec<(String, BTreeMap<String, i64>)> {
        r.checks
            .iter()
            .map(|c| (c.check_id.clone(), c.counts.clone()))
            .collect()
    };
    assert_eq!(pick(&a), pick(&b));
}
