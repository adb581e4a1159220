//! Parallel sweep over n with fixed c; writes JSONL and CSV to a directory.
//!
//! cargo run --release --example monte_carlo_sweep -- /tmp/sweep

use gnp_square::harness::{run_sweep, summary_csv, write_sweep_outputs, SweepSpec, TrialConfig};
use gnp_square::verify::Claim;

fn main() {
    let out = std::env::args().nth(1).unwrap_or_else(|| "sweep-out".to_string());
    let spec = SweepSpec {
        ns: vec![1_000, 10_000, 100_000],
        cs: vec![2.0],
        seeds: (0..10).collect(),
        epsilons: vec![0.3, 0.5],
        base: TrialConfig::new(0, 0.0, 0).with_checks([
            Claim::Lemma1,
            Claim::Cor1,
            Claim::Cor2,
            Claim::Lemma3,
            Claim::SparseBounds,
            Claim::AllSubsetsDensity,
        ]),
    };
    let records = run_sweep(&spec, None).expect("non-empty grid");
    write_sweep_outputs(&records, &out).expect("writable output directory");
    print!("{}", summary_csv(&records));
    println!("wrote {out}/trials.jsonl, trials.csv, summary.csv");
}
