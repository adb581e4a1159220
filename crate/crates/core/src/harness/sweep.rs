use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{run_trial, TrialConfig, TrialError, TrialReport};
use crate::verify::Claim;

/// Environment variable holding the default number of worker threads.
pub const THREADS_ENV: &str = "GNP_SQUARE_THREADS";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub ns: Vec<usize>,
    pub cs: Vec<f64>,
    pub seeds: Vec<u64>,
    /// Epsilon overrides to sweep; empty keeps the base configuration's.
    #[serde(default)]
    pub epsilons: Vec<f64>,
    pub base: TrialConfig,
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("sweep grid needs at least one value of {0}")]
    EmptyGrid(&'static str),
    #[error("could not build the worker pool: {0}")]
    Pool(String),
    #[error("line {line} of the trial log: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// One JSONL line: a finished trial, or the phase at which it failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TrialRecord {
    Done(Box<TrialReport>),
    Failed { config: Box<TrialConfig>, error: TrialError },
}

impl TrialRecord {
    pub fn config(&self) -> &TrialConfig {
        match self {
            TrialRecord::Done(r) => &r.config,
            TrialRecord::Failed { config, .. } => config,
        }
    }
}

impl SweepSpec {
    /// Trial configurations in grid order: n, then c, then epsilon, then seed.
    pub fn configs(&self) -> Result<Vec<TrialConfig>, SweepError> {
        for (name, empty) in [("n", self.ns.is_empty()), ("c", self.cs.is_empty()), ("seed", self.seeds.is_empty())] {
            if empty {
                return Err(SweepError::EmptyGrid(name));
            }
        }
        let epsilons: Vec<Option<f64>> = if self.epsilons.is_empty() {
            vec![self.base.overrides.epsilon]
        } else {
            self.epsilons.iter().copied().map(Some).collect()
        };
        let mut out = Vec::new();
        for &n in &self.ns {
            for &c in &self.cs {
                for &eps in &epsilons {
                    for &seed in &self.seeds {
                        let mut cfg = self.base.clone();
                        cfg.n = n;
                        cfg.c = c;
                        cfg.seed = seed;
                        cfg.overrides.epsilon = eps;
                        out.push(cfg);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Worker count from [`THREADS_ENV`], or rayon's default when unset or invalid.
pub fn default_threads() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&t| t > 0)
}

/// Runs every grid point, in parallel across trials; the records come back
/// in grid order whatever the schedule.
pub fn run_sweep(spec: &SweepSpec, threads: Option<usize>) -> Result<Vec<TrialRecord>, SweepError> {
    let configs = spec.configs()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads.or_else(default_threads) {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| SweepError::Pool(e.to_string()))?;
    Ok(pool.install(|| {
        configs
            .into_par_iter()
            .map(|config| match run_trial(&config) {
                Ok(report) => TrialRecord::Done(Box::new(report)),
                Err(error) => TrialRecord::Failed {
                    config: Box::new(config),
                    error,
                },
            })
            .collect()
    }))
}

pub fn to_jsonl(records: &[TrialRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        out.push('\n');
    }
    out
}

pub fn parse_jsonl(text: &str) -> Result<Vec<TrialRecord>, SweepError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| SweepError::Parse {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

pub fn read_jsonl(path: impl AsRef<Path>) -> Result<Vec<TrialRecord>, SweepError> {
    let file = io::BufReader::new(fs::File::open(path)?);
    let mut records = Vec::new();
    for (i, line) in file.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(serde_json::from_str(&line).map_err(|e| SweepError::Parse {
            line: i + 1,
            message: e.to_string(),
        })?);
    }
    Ok(records)
}

/// Violation-rate columns, one per claim and sparse-bound part.
const VIOLATION_COLUMNS: [(Claim, Option<&str>, &str); 12] = [
    (Claim::Lemma1, None, "lemma1"),
    (Claim::Lemma2Small, None, "lemma2_small"),
    (Claim::Cor1, None, "cor1"),
    (Claim::Cor2, None, "cor2"),
    (Claim::Lemma3, None, "lemma3"),
    (Claim::SparseBounds, Some("edges"), "sparse_edges"),
    (Claim::SparseBounds, Some("a1"), "sparse_a1"),
    (Claim::SparseBounds, Some("a2"), "sparse_a2"),
    (Claim::SparseBounds, Some("combined"), "sparse_combined"),
    (Claim::SparseBounds, Some("square-edges"), "sparse_square_edges"),
    (Claim::SparseBounds, Some("large-sets"), "sparse_large_sets"),
    (Claim::AllSubsetsDensity, None, "all_subsets_density"),
];

/// Fixed header of the per-trial CSV.
pub const TRIALS_HEADER: &str = "n,c,seed,delta1,q,epsilon,theta,epsilon_clamped,delta_g1,delta_g2,edges_g1,edges_g2,v_eps,w_eps,rest,q_min,colors_used,q_min_ratio,colors_ratio,proper,status";

pub fn summary_header() -> String {
    let mut h = String::from(
        "n,c,epsilon,trials,failed,q_min_ratio_mean,q_min_ratio_min,q_min_ratio_max,colors_ratio_mean,colors_ratio_min,colors_ratio_max",
    );
    for (_, _, name) in VIOLATION_COLUMNS {
        write!(h, ",viol_{name}").unwrap();
    }
    for part in ["edges", "a1", "a2", "combined", "square_edges"] {
        write!(h, ",subset_rate_{part}").unwrap();
    }
    h
}

fn opt<T: std::fmt::Display>(x: Option<T>) -> String {
    x.map_or(String::new(), |v| v.to_string())
}

fn ratio(num: usize, den: usize) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

/// One CSV row per trial.
pub fn trials_csv(records: &[TrialRecord]) -> String {
    let mut out = String::from(TRIALS_HEADER);
    out.push('\n');
    for r in records {
        let cfg = r.config();
        match r {
            TrialRecord::Done(t) => {
                let m = t.coloring.metrics.as_ref();
                let d = t.graph.max_degree_g1;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},ok",
                    cfg.n,
                    cfg.c,
                    cfg.seed,
                    t.params.delta1,
                    t.params.q,
                    t.params.epsilon,
                    t.params.theta,
                    t.params.epsilon_clamped,
                    d,
                    t.graph.max_degree_g2,
                    t.graph.edges_g1,
                    t.graph.edges_g2,
                    t.partition.v_eps,
                    t.partition.w_eps,
                    t.partition.rest,
                    opt(m.map(|m| m.q_min)),
                    opt(m.map(|m| m.colors_used)),
                    opt(m.and_then(|m| ratio(m.q_min, d))),
                    opt(m.and_then(|m| ratio(m.colors_used, d))),
                    t.coloring.succeeded,
                )
                .unwrap();
            }
            TrialRecord::Failed { error, .. } => {
                writeln!(out, "{},{},{},,,,,,,,,,,,,,,,,,failed-{}", cfg.n, cfg.c, cfg.seed, error.phase.key()).unwrap();
            }
        }
    }
    out
}

#[derive(Default)]
struct Stats {
    values: Vec<f64>,
}

impl Stats {
    fn push(&mut self, x: Option<f64>) {
        if let Some(x) = x {
            self.values.push(x);
        }
    }

    fn cells(&self) -> [String; 3] {
        if self.values.is_empty() {
            return Default::default();
        }
        let mean = self.values.iter().sum::<f64>() / self.values.len() as f64;
        let min = self.values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        [mean.to_string(), min.to_string(), max.to_string()]
    }
}

/// One CSV row per `(n, c, epsilon)` cell, computed from the records alone.
pub fn summary_csv(records: &[TrialRecord]) -> String {
    let mut out = summary_header();
    out.push('\n');
    let key = |r: &TrialRecord| {
        let c = r.config();
        (c.n, c.c.to_bits(), c.overrides.epsilon.map(f64::to_bits))
    };
    // Cells in order of first appearance.
    let mut cells: Vec<(_, Vec<&TrialRecord>)> = Vec::new();
    for r in records {
        match cells.iter_mut().find(|(k, _)| *k == key(r)) {
            Some((_, v)) => v.push(r),
            None => cells.push((key(r), vec![r])),
        }
    }
    for (_, rows) in cells {
        let cfg = rows[0].config();
        let done: Vec<&TrialReport> = rows
            .iter()
            .filter_map(|r| match r {
                TrialRecord::Done(t) => Some(&**t),
                TrialRecord::Failed { .. } => None,
            })
            .collect();
        let mut q = Stats::default();
        let mut colors = Stats::default();
        for t in &done {
            let d = t.graph.max_degree_g1;
            let m = t.coloring.metrics.as_ref();
            q.push(m.and_then(|m| ratio(m.q_min, d)));
            colors.push(m.and_then(|m| ratio(m.colors_used, d)));
        }
        write!(
            out,
            "{},{},{},{},{}",
            cfg.n,
            cfg.c,
            opt(cfg.overrides.epsilon),
            rows.len(),
            rows.len() - done.len()
        )
        .unwrap();
        for cell in q.cells().iter().chain(colors.cells().iter()) {
            write!(out, ",{cell}").unwrap();
        }
        for (claim, part, _) in VIOLATION_COLUMNS {
            let verdicts: Vec<bool> = done.iter().filter_map(|t| t.verdict(claim, part).map(|v| v.holds)).collect();
            let failed = verdicts.iter().filter(|&&h| !h).count();
            write!(out, ",{}", opt(ratio(failed, verdicts.len()))).unwrap();
        }
        for part in ["edges", "a1", "a2", "combined", "square-edges"] {
            let (mut trials, mut violations) = (0, 0);
            for t in &done {
                if let Some(tally) = t.verdict(Claim::SparseBounds, Some(part)).and_then(|v| v.tally) {
                    trials += tally.trials;
                    violations += tally.violations;
                }
            }
            write!(out, ",{}", opt(ratio(violations, trials))).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Writes `trials.jsonl`, `trials.csv` and `summary.csv` into `dir`.
pub fn write_sweep_outputs(records: &[TrialRecord], dir: impl AsRef<Path>) -> Result<(), SweepError> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir)?;
    let mut f = fs::File::create(dir.join("trials.jsonl"))?;
    f.write_all(to_jsonl(records).as_bytes())?;
    fs::write(dir.join("trials.csv"), trials_csv(records))?;
    fs::write(dir.join("summary.csv"), summary_csv(records))?;
    Ok(())
}
