//! Trial configuration, orchestration, parallel sweeps and reporting.

mod config;
mod sweep;
mod trial;

pub use config::{OracleCaps, TrialConfig};
pub use sweep::{
    default_threads, parse_jsonl, read_jsonl, run_sweep, summary_csv, summary_header, to_jsonl, trials_csv,
    write_sweep_outputs, SweepError, SweepSpec, TrialRecord, THREADS_ENV, TRIALS_HEADER,
};
pub use trial::{
    coloring_digest, replay, run_on_graph, run_trial, ColoringOutcome, GraphStats, PartitionSizes, Phase,
    SkippedCheck, TrialError, TrialReport,
};
