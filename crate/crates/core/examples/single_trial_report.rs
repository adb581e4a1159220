//! One full trial: coloring, exact oracle on a small graph, all checks, JSON.

use gnp_square::harness::{run_trial, TrialConfig};
use gnp_square::verify::Claim;

fn main() {
    let mut cfg = TrialConfig::new(14, 2.5, 3).with_checks(Claim::ALL);
    cfg.overrides.theta = Some(0.5);
    cfg.caps.chromatic_n = 16;
    let report = run_trial(&cfg).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    assert!(report.invariant_violations().is_empty());
}
