use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::TrialConfig;
use crate::coloring::{
    exact_chromatic_number, three_stage_color, validate, Coloring, ColoringError, ListMode, StageMetrics, StuckVertex,
    ValidationReport,
};
use crate::graph::{degeneracy_order, sample_gnp, square, GnpParams, Graph};
use crate::params::{compute_params, AsymptoticParams, Partition};
use crate::rng::GENERATOR_NAME;
use crate::verify::{
    check_cor1, check_cor2, check_lemma1, check_lemma2_small, check_rest_density, check_sparse_bounds,
    check_total_edges, CheckVerdict, Claim,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    Sample,
    Square,
    Params,
    Color,
    Validate,
    Oracle,
    Checks,
}

impl Phase {
    pub fn key(self) -> &'static str {
        match self {
            Phase::Sample => "sample",
            Phase::Square => "square",
            Phase::Params => "params",
            Phase::Color => "color",
            Phase::Validate => "validate",
            Phase::Oracle => "oracle",
            Phase::Checks => "checks",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Serialize, Deserialize)]
#[error("{phase:?} phase failed: {message}")]
pub struct TrialError {
    pub phase: Phase,
    pub message: String,
}

impl TrialError {
    fn new(phase: Phase, err: impl std::fmt::Display) -> Self {
        TrialError {
            phase,
            message: err.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub edges_g1: usize,
    pub edges_g2: usize,
    pub max_degree_g1: usize,
    pub max_degree_g2: usize,
    pub degeneracy_g2: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSizes {
    pub v_eps: usize,
    pub w_eps: usize,
    pub rest: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringOutcome {
    pub succeeded: bool,
    pub metrics: Option<StageMetrics>,
    pub stuck: Option<StuckVertex>,
    pub validation: Option<ValidationReport>,
    /// SHA-256 of the coloring in `v color` text form.
    pub digest: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedCheck {
    pub claim: Claim,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub config: TrialConfig,
    pub generator: String,
    pub graph: GraphStats,
    pub params: AsymptoticParams,
    pub partition: PartitionSizes,
    pub coloring: ColoringOutcome,
    /// `q_min / Δ(G₁)`.
    pub q_min_ratio: Option<f64>,
    /// Exact chromatic number of the square, when within the oracle cap.
    pub chromatic_number: Option<usize>,
    pub checks: Vec<CheckVerdict>,
    pub skipped: Vec<SkippedCheck>,
    /// Densest sampled subset of the square restricted to the rest, as
    /// `(edges, vertices)`, and the exact maximum density `[num, den]`.
    pub densest_sample: Option<(usize, usize)>,
    pub exact_rest_density: Option<(u64, u64)>,
    pub timed_out: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl TrialReport {
    pub fn verdict(&self, claim: Claim, part: Option<&str>) -> Option<&CheckVerdict> {
        self.checks
            .iter()
            .find(|v| v.claim == claim && v.part.as_deref() == part)
    }

    /// Report-level invariants that must hold for every trial; returns a
    /// description of each one that fails.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let c = &self.coloring;
        if let Some(v) = &c.validation {
            if !v.is_proper() {
                out.push(format!("coloring has {} violations", v.num_violations()));
            }
        }
        if let (true, Some(m)) = (c.succeeded, &c.metrics) {
            if self.graph.n > 0 && m.colors_used < self.graph.max_degree_g1 + 1 {
                out.push(format!(
                    "{} colors used, below the clique bound {}",
                    m.colors_used,
                    self.graph.max_degree_g1 + 1
                ));
            }
            if self.config.policy.mode == ListMode::Adaptive && m.q_min > self.graph.max_degree_g2 + 1 {
                out.push(format!("q_min {} exceeds Δ(G₂)+1 = {}", m.q_min, self.graph.max_degree_g2 + 1));
            }
            if let Some(chi) = self.chromatic_number {
                if chi < self.graph.max_degree_g1 + 1 || chi > m.colors_used {
                    out.push(format!("chromatic number {chi} outside [Δ+1, colors used]"));
                }
            }
        }
        if let (Some((e, s)), Some((num, den))) = (self.densest_sample, self.exact_rest_density) {
            if (e as u64) * den > num * s as u64 {
                out.push(format!("sampled density {e}/{s} exceeds the exact maximum {num}/{den}"));
            }
        }
        out
    }
}

pub fn coloring_digest(coloring: &Coloring) -> String {
    let hash = Sha256::digest(coloring.to_text().as_bytes());
    hash.iter().map(|b| format!("{b:02x}")).collect()
}

struct Clock {
    start: Instant,
    last: Instant,
    timeout: Option<f64>,
    timings: Option<BTreeMap<String, f64>>,
}

impl Clock {
    fn new(config: &TrialConfig) -> Self {
        let now = Instant::now();
        Clock {
            start: now,
            last: now,
            timeout: config.timeout_secs,
            timings: config.record_timings.then(BTreeMap::new),
        }
    }

    fn lap(&mut self, phase: Phase) {
        let now = Instant::now();
        if let Some(t) = &mut self.timings {
            *t.entry(phase.key().to_string()).or_default() += (now - self.last).as_secs_f64();
        }
        self.last = now;
    }

    fn expired(&self) -> bool {
        self.timeout.is_some_and(|t| self.start.elapsed().as_secs_f64() > t)
    }
}

/// Samples the graph described by `config` and runs the full trial on it.
pub fn run_trial(config: &TrialConfig) -> Result<TrialReport, TrialError> {
    let started = Instant::now();
    let g1 = sample_gnp(&GnpParams::new(config.n, config.c, config.seed)).map_err(|e| TrialError::new(Phase::Sample, e))?;
    let mut report = run_on_graph(config, &g1)?;
    if let Some(t) = &mut report.timings {
        let total: f64 = t.values().sum();
        t.insert("sample".to_string(), started.elapsed().as_secs_f64() - total);
    }
    Ok(report)
}

/// Runs the trial pipeline on a given base graph: square, parameters,
/// partition, three-stage coloring, validation, optional exact chromatic
/// number and the requested checks.
pub fn run_on_graph(config: &TrialConfig, g1: &Graph) -> Result<TrialReport, TrialError> {
    let mut clock = Clock::new(config);
    let mut config = config.clone();
    config.n = g1.num_vertices();

    let g2 = square(g1);
    let graph = GraphStats {
        n: g1.num_vertices(),
        edges_g1: g1.num_edges(),
        edges_g2: g2.num_edges(),
        max_degree_g1: g1.max_degree(),
        max_degree_g2: g2.max_degree(),
        degeneracy_g2: degeneracy_order(&g2).degeneracy,
    };
    clock.lap(Phase::Square);

    let params = compute_params(g1, config.c, &config.overrides).map_err(|e| TrialError::new(Phase::Params, e))?;
    let partition = Partition::new(g1, &params);
    let sizes = PartitionSizes {
        v_eps: partition.v_eps().len(),
        w_eps: partition.w_eps().len(),
        rest: partition.rest().len(),
    };
    clock.lap(Phase::Params);

    let policy = config.resolved_policy();
    let mut outcome = ColoringOutcome {
        succeeded: false,
        metrics: None,
        stuck: None,
        validation: None,
        digest: None,
    };
    match three_stage_color(g1, &g2, &params, &policy) {
        Ok((coloring, metrics)) => {
            clock.lap(Phase::Color);
            let lists = policy
                .build_lists(g1.num_vertices(), params.q)
                .map_err(|e| TrialError::new(Phase::Validate, e))?;
            let validation = validate(&coloring, &g2, lists.as_ref()).map_err(|e| TrialError::new(Phase::Validate, e))?;
            outcome.succeeded = validation.is_proper();
            outcome.metrics = Some(metrics);
            outcome.validation = Some(validation);
            outcome.digest = Some(coloring_digest(&coloring));
            clock.lap(Phase::Validate);
        }
        Err(ColoringError::Stuck(stuck)) => {
            outcome.stuck = Some(*stuck);
            clock.lap(Phase::Color);
        }
        Err(e) => return Err(TrialError::new(Phase::Color, e)),
    }
    let q_min_ratio = match (&outcome.metrics, graph.max_degree_g1) {
        (Some(m), d) if d > 0 => Some(m.q_min as f64 / d as f64),
        _ => None,
    };

    let mut timed_out = false;
    let mut chromatic_number = None;
    if g1.num_vertices() <= config.caps.chromatic_n {
        if clock.expired() {
            timed_out = true;
        } else {
            chromatic_number =
                Some(exact_chromatic_number(&g2, config.caps.chromatic_n).map_err(|e| TrialError::new(Phase::Oracle, e))?);
            clock.lap(Phase::Oracle);
        }
    }

    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let mut densest_sample = None;
    let mut exact_rest_density = None;
    let check_err = |e: crate::verify::VerifyError| TrialError::new(Phase::Checks, e);
    for &claim in &config.checks {
        if clock.expired() {
            timed_out = true;
            skipped.push(SkippedCheck {
                claim,
                reason: "timeout".to_string(),
            });
            continue;
        }
        match claim {
            Claim::Lemma1 => checks.push(check_lemma1(g1)),
            Claim::Lemma2Small => {
                if g1.num_vertices() > config.caps.lemma2_n {
                    skipped.push(SkippedCheck {
                        claim,
                        reason: format!(
                            "{} vertices exceed the exhaustive cap {}; see cor1/cor2",
                            g1.num_vertices(),
                            config.caps.lemma2_n
                        ),
                    });
                } else {
                    checks.push(
                        check_lemma2_small(g1, &params, config.caps.lemma2_m_max, config.caps.lemma2_n).map_err(check_err)?,
                    );
                }
            }
            Claim::Cor1 => checks.push(check_cor1(g1, &g2, &params).map_err(check_err)?),
            Claim::Cor2 => checks.push(check_cor2(g1, &g2, &params).map_err(check_err)?),
            Claim::Lemma3 => checks.push(check_total_edges(&g2, config.c, g1.num_vertices())),
            Claim::SparseBounds => {
                let r = check_sparse_bounds(g1, &g2, &params, config.c, config.subset_trials, config.subset_seed())
                    .map_err(check_err)?;
                densest_sample = r.densest_sample;
                checks.extend(r.verdicts);
            }
            Claim::AllSubsetsDensity => {
                let (v, exact) = check_rest_density(g1, &g2, &params, config.c).map_err(check_err)?;
                exact_rest_density = exact.map(|r| (*r.numer(), *r.denom()));
                checks.push(v);
            }
        }
    }
    clock.lap(Phase::Checks);

    Ok(TrialReport {
        config,
        generator: GENERATOR_NAME.to_string(),
        graph,
        params,
        partition: sizes,
        coloring: outcome,
        q_min_ratio,
        chromatic_number,
        checks,
        skipped,
        densest_sample,
        exact_rest_density,
        timed_out,
        timings: clock.timings,
    })
}

/// Re-samples the graph of `report`, re-runs the coloring and validation,
/// and checks that both reproduce the recorded digest and verdict.
pub fn replay(report: &TrialReport) -> Result<bool, TrialError> {
    let again = run_trial(&TrialConfig {
        checks: Default::default(),
        caps: crate::harness::OracleCaps {
            chromatic_n: 0,
            ..report.config.caps
        },
        record_timings: false,
        timeout_secs: None,
        ..report.config.clone()
    })?;
    Ok(again.coloring == report.coloring)
}
