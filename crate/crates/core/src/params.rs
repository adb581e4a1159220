//! Degree-derived parameters of the coloring argument and the degree-based
//! vertex sets built from them.
//!
//! All logarithms are natural. Real-valued degree thresholds `αΔ` are
//! applied as `d(v) >= ceil(αΔ)`, which is the same test for integer
//! degrees.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Smallest `n` for which `ln ln ln n` is positive with margin (`n > ceil(e^e)`).
pub const MIN_FORMULA_N: usize = 17;
pub const DEFAULT_EPS_CAP: f64 = 0.5;
pub const LOG_BASE: &str = "natural";

/// Slack for turning products like `(2/3)·9` into integer thresholds.
const CEIL_SLACK: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParamError {
    #[error("theta formula needs n >= {MIN_FORMULA_N}, got n = {0}; supply a theta override")]
    ThetaDomain(usize),
    #[error("override `{name}` out of range: {value}")]
    BadOverride { name: &'static str, value: f64 },
    #[error("alpha must lie in (0, 1], got {0}")]
    BadAlpha(f64),
    #[error("parameters need a graph with at least one vertex")]
    EmptyGraph,
}

pub(crate) fn ceil_threshold(x: f64) -> usize {
    (x - CEIL_SLACK).ceil().max(0.0) as usize
}

/// `4 ln ln ln n / ln ln n`.
pub fn compute_theta(n: usize) -> Result<f64, ParamError> {
    if n < MIN_FORMULA_N {
        return Err(ParamError::ThetaDomain(n));
    }
    let lln = (n as f64).ln().ln();
    Ok(4.0 * lln.ln() / lln)
}

/// User-supplied replacements for formula values.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ParamOverrides {
    pub theta: Option<f64>,
    pub epsilon: Option<f64>,
    pub eps_cap: Option<f64>,
    pub q: Option<usize>,
    pub delta1: Option<usize>,
}

impl ParamOverrides {
    fn validate(&self) -> Result<(), ParamError> {
        let reals = [("theta", self.theta), ("epsilon", self.epsilon), ("eps_cap", self.eps_cap)];
        for (name, value) in reals {
            if let Some(v) = value {
                if !(v.is_finite() && v > 0.0) {
                    return Err(ParamError::BadOverride { name, value: v });
                }
            }
        }
        if let Some(e) = self.epsilon.filter(|&e| e > 1.0) {
            return Err(ParamError::BadOverride { name: "epsilon", value: e });
        }
        for (name, value) in [("q", self.q), ("delta1", self.delta1)] {
            if value == Some(0) {
                return Err(ParamError::BadOverride { name, value: 0.0 });
            }
        }
        Ok(())
    }

    fn any_value_override(&self) -> bool {
        self.theta.is_some() || self.epsilon.is_some() || self.q.is_some() || self.delta1.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParamMode {
    Formula,
    FormulaWithClamp,
    Override,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticParams {
    pub n: usize,
    pub c: f64,
    /// Observed maximum degree of the sampled graph.
    pub delta_obs: usize,
    pub theta: f64,
    pub epsilon: f64,
    pub eps_cap: f64,
    pub delta1: usize,
    pub q: usize,
    pub mode: ParamMode,
    pub epsilon_clamped: bool,
    pub log_base: String,
}

impl AsymptoticParams {
    /// `ceil(2 / ε²)`.
    pub fn k0(&self) -> usize {
        ceil_threshold(2.0 / (self.epsilon * self.epsilon)).max(2)
    }

    /// `floor(n ε² / (20 c))`; the whole vertex count when `c = 0`.
    pub fn s0(&self) -> usize {
        if self.c <= 0.0 {
            return self.n;
        }
        (self.n as f64 * self.epsilon * self.epsilon / (20.0 * self.c)).floor() as usize
    }

    /// Minimum degree for membership in `V_ε`.
    pub fn epsilon_degree(&self) -> usize {
        ceil_threshold(self.epsilon * self.delta_obs as f64)
    }

    pub fn cube_root_theta(&self) -> f64 {
        self.theta.cbrt()
    }

    /// Reports `(log_n(Δ^Δ), 1 - θ, 1 + θ)`: the window holds when the first
    /// value lies between the other two.
    pub fn degree_window(&self) -> (f64, f64, f64) {
        let d = self.delta_obs as f64;
        let exponent = if self.n > 1 && d > 0.0 {
            d * d.ln() / (self.n as f64).ln()
        } else {
            0.0
        };
        (exponent, 1.0 - self.theta, 1.0 + self.theta)
    }
}

/// `ceil((1 + 2θ^{1/3}) Δ)`.
pub fn delta1_for(theta: f64, delta: usize) -> usize {
    ceil_threshold((1.0 + 2.0 * theta.cbrt()) * delta as f64)
}

/// `ceil((1 + 3θ^{1/3}) Δ)`.
pub fn q_for(theta: f64, delta: usize) -> usize {
    ceil_threshold((1.0 + 3.0 * theta.cbrt()) * delta as f64)
}

pub fn compute_params(g1: &Graph, c: f64, overrides: &ParamOverrides) -> Result<AsymptoticParams, ParamError> {
    let n = g1.num_vertices();
    if n == 0 {
        return Err(ParamError::EmptyGraph);
    }
    overrides.validate()?;
    let delta_obs = g1.max_degree();
    let theta = match overrides.theta {
        Some(t) => t,
        None => compute_theta(n)?,
    };
    let eps_cap = overrides.eps_cap.unwrap_or(DEFAULT_EPS_CAP);
    let (epsilon, epsilon_clamped) = match overrides.epsilon {
        Some(e) => (e, false),
        None => {
            let raw = theta.sqrt();
            (raw.min(eps_cap).min(1.0), raw > eps_cap.min(1.0))
        }
    };
    let delta1 = overrides.delta1.unwrap_or_else(|| delta1_for(theta, delta_obs));
    let q = overrides.q.unwrap_or_else(|| q_for(theta, delta_obs));
    let mode = if overrides.any_value_override() {
        ParamMode::Override
    } else if epsilon_clamped {
        ParamMode::FormulaWithClamp
    } else {
        ParamMode::Formula
    };
    Ok(AsymptoticParams {
        n,
        c,
        delta_obs,
        theta,
        epsilon,
        eps_cap,
        delta1,
        q,
        mode,
        epsilon_clamped,
        log_base: LOG_BASE.to_string(),
    })
}

/// `V_α`: vertices of degree at least `α Δ`, ascending.
pub fn high_degree_set(g1: &Graph, alpha: f64) -> Result<Vec<usize>, ParamError> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(ParamError::BadAlpha(alpha));
    }
    if g1.num_vertices() == 0 {
        return Err(ParamError::EmptyGraph);
    }
    let threshold = ceil_threshold(alpha * g1.max_degree() as f64);
    Ok((0..g1.num_vertices())
        .filter(|&v| g1.degree(v) >= threshold)
        .collect())
}

/// `s ∪ N(s)`, ascending.
pub fn closed_neighborhood(g1: &Graph, s: &[usize]) -> Vec<usize> {
    let mut flags = vec![false; g1.num_vertices()];
    for &v in s {
        flags[v] = true;
        for &w in g1.neighbors(v) {
            flags[w] = true;
        }
    }
    flags
        .iter()
        .enumerate()
        .filter_map(|(v, &f)| f.then_some(v))
        .collect()
}

/// Membership in the good-tuple family: every entry in `[ceil(εΔ), Δ]`
/// and the sum at least `(1 + θ^{1/3}) Δ` (compared as reals).
pub fn is_good_tuple(degrees: &[usize], delta_obs: usize, epsilon: f64, theta: f64) -> bool {
    if degrees.is_empty() {
        return false;
    }
    let lo = ceil_threshold(epsilon * delta_obs as f64);
    if degrees.iter().any(|&d| d < lo || d > delta_obs) {
        return false;
    }
    let sum: usize = degrees.iter().sum();
    sum as f64 >= (1.0 + theta.cbrt()) * delta_obs as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Part {
    /// `V_ε`
    High,
    /// `W_ε \ V_ε`
    Neighbor,
    /// `[n] \ W_ε`
    Rest,
}

/// The tripartition that fixes the coloring order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    part: Vec<Part>,
}

impl Partition {
    pub fn new(g1: &Graph, params: &AsymptoticParams) -> Self {
        let v_eps = high_degree_set(g1, params.epsilon).expect("epsilon validated by compute_params");
        let w_eps = closed_neighborhood(g1, &v_eps);
        let mut part = vec![Part::Rest; g1.num_vertices()];
        for v in w_eps {
            part[v] = Part::Neighbor;
        }
        for v in v_eps {
            part[v] = Part::High;
        }
        Partition { part }
    }

    pub fn part(&self, v: usize) -> Part {
        self.part[v]
    }

    fn collect(&self, keep: impl Fn(Part) -> bool) -> Vec<usize> {
        self.part
            .iter()
            .enumerate()
            .filter_map(|(v, &p)| keep(p).then_some(v))
            .collect()
    }

    pub fn v_eps(&self) -> Vec<usize> {
        self.collect(|p| p == Part::High)
    }

    pub fn w_eps(&self) -> Vec<usize> {
        self.collect(|p| p != Part::Rest)
    }

    pub fn w_minus_v(&self) -> Vec<usize> {
        self.collect(|p| p == Part::Neighbor)
    }

    pub fn rest(&self) -> Vec<usize> {
        self.collect(|p| p == Part::Rest)
    }

    pub fn in_v_eps(&self) -> Vec<bool> {
        self.part.iter().map(|&p| p == Part::High).collect()
    }

    pub fn in_w_eps(&self) -> Vec<bool> {
        self.part.iter().map(|&p| p != Part::Rest).collect()
    }
}
