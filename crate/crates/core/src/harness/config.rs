use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::coloring::{ListPolicy, ListSource};
use crate::params::ParamOverrides;
use crate::verify::{Claim, DEFAULT_LEMMA2_CAP};

/// Size limits for the exhaustive parts of a trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OracleCaps {
    /// Largest graph for the exhaustive tuple search.
    pub lemma2_n: usize,
    pub lemma2_m_max: usize,
    /// Largest graph whose square gets an exact chromatic number.
    pub chromatic_n: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            lemma2_n: DEFAULT_LEMMA2_CAP,
            lemma2_m_max: 4,
            chromatic_n: 0,
        }
    }
}

fn default_policy() -> ListPolicy {
    ListPolicy::adaptive()
}

fn default_subset_trials() -> usize {
    100
}

/// One trial: sample `G(n, c/n)`, square it, color it, run checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrialConfig {
    pub n: usize,
    pub c: f64,
    pub seed: u64,
    #[serde(default)]
    pub overrides: ParamOverrides,
    #[serde(default = "default_policy")]
    pub policy: ListPolicy,
    #[serde(default)]
    pub checks: BTreeSet<Claim>,
    #[serde(default = "default_subset_trials")]
    pub subset_trials: usize,
    /// Seed of the subset sampler; the trial seed when absent.
    #[serde(default)]
    pub subset_seed: Option<u64>,
    #[serde(default)]
    pub caps: OracleCaps,
    /// Adds wall-clock times per phase. Off by default so reports stay
    /// byte-identical across runs.
    #[serde(default)]
    pub record_timings: bool,
    /// Skip the phases that remain once this many seconds have passed.
    #[serde(default)]
    pub timeout_secs: Option<f64>,
}

impl TrialConfig {
    pub fn new(n: usize, c: f64, seed: u64) -> Self {
        TrialConfig {
            n,
            c,
            seed,
            overrides: ParamOverrides::default(),
            policy: default_policy(),
            checks: BTreeSet::new(),
            subset_trials: default_subset_trials(),
            subset_seed: None,
            caps: OracleCaps::default(),
            record_timings: false,
            timeout_secs: None,
        }
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = Claim>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.overrides.epsilon = Some(epsilon);
        self
    }

    pub fn subset_seed(&self) -> u64 {
        self.subset_seed.unwrap_or(self.seed)
    }

    /// The list policy with an unset random-list seed replaced by the
    /// trial seed.
    pub fn resolved_policy(&self) -> ListPolicy {
        let mut policy = self.policy;
        if let ListSource::RandomLists { seed, .. } = &mut policy.source {
            seed.get_or_insert(self.seed);
        }
        policy
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
