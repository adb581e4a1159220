//! Checkers for the structural facts behind the coloring bound.
//!
//! Each checker returns a [`CheckVerdict`] instead of asserting. A verdict
//! that fails always carries a witness that can be recounted from the graph
//! alone.

mod density;
mod distance;
mod neighbors;
mod sparse;
mod tuples;

pub use density::{check_all_subsets_density, check_rest_density};
pub use distance::{check_lemma1, closest_pair};
pub use neighbors::{check_cor1, check_cor2, cor1_counts, cor2_counts};
pub use sparse::{
    check_sparse_bounds, check_total_edges, count_type1, count_type2, expected_square_edges, SparseBoundsReport,
    TypeOneCounts,
};
pub use tuples::{check_lemma2_small, DEFAULT_LEMMA2_CAP};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::GraphError;
use crate::params::ParamError;

/// Registry of checks a trial can request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    Lemma1,
    Lemma2Small,
    Cor1,
    Cor2,
    Lemma3,
    SparseBounds,
    AllSubsetsDensity,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::Lemma1,
        Claim::Lemma2Small,
        Claim::Cor1,
        Claim::Cor2,
        Claim::Lemma3,
        Claim::SparseBounds,
        Claim::AllSubsetsDensity,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Lemma1 => "lemma1",
            Claim::Lemma2Small => "lemma2-small",
            Claim::Cor1 => "cor1",
            Claim::Cor2 => "cor2",
            Claim::Lemma3 => "lemma3",
            Claim::SparseBounds => "sparse-bounds",
            Claim::AllSubsetsDensity => "all-subsets-density",
        }
    }

    pub fn from_id(id: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.id() == id)
    }
}

/// How `measured` is compared with `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Less,
    AtMost,
    AtLeast,
}

impl Relation {
    pub fn holds(self, measured: f64, bound: f64) -> bool {
        match self {
            Relation::Less => measured < bound,
            Relation::AtMost => measured <= bound,
            Relation::AtLeast => measured >= bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Statistic {
    /// `None` when nothing was found to measure, e.g. no pair of
    /// high-degree vertices within the search radius.
    pub measured: Option<f64>,
    pub bound: f64,
    pub relation: Relation,
    /// Exact form of `measured` when it is a fraction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl Statistic {
    pub fn new(measured: f64, relation: Relation, bound: f64) -> Self {
        Statistic {
            measured: Some(measured),
            bound,
            relation,
            exact: None,
        }
    }
}

/// Evidence for a verdict, in vertex ids of the graph the checker was given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Witness {
    /// Two vertices and their distance.
    Pair { u: usize, v: usize, distance: usize },
    /// A vertex and the count attributed to it.
    Vertex { vertex: usize, count: usize },
    /// A vertex set, with a distinguished subset where the claim needs one.
    Subset {
        vertices: Vec<usize>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        chosen: Vec<usize>,
    },
    /// A whole-graph count.
    Count { value: usize },
}

/// Violation tally of a sampled claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub trials: usize,
    pub violations: usize,
}

impl Tally {
    pub fn rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.violations as f64 / self.trials as f64
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckVerdict {
    pub claim: Claim,
    /// Sub-claim of a bundled check, e.g. `a1` within `sparse-bounds`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub part: Option<String>,
    pub parameters: BTreeMap<String, f64>,
    pub holds: bool,
    pub vacuous: bool,
    pub statistic: Statistic,
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tally: Option<Tally>,
}

impl CheckVerdict {
    fn new(claim: Claim, statistic: Statistic) -> Self {
        let holds = statistic
            .measured
            .is_none_or(|m| statistic.relation.holds(m, statistic.bound));
        CheckVerdict {
            claim,
            part: None,
            parameters: BTreeMap::new(),
            holds,
            vacuous: false,
            statistic,
            witness: None,
            tally: None,
        }
    }

    fn param(mut self, name: &str, value: f64) -> Self {
        self.parameters.insert(name.to_string(), value);
        self
    }

    fn vacuous(claim: Claim, relation: Relation, bound: f64) -> Self {
        let mut v = CheckVerdict::new(
            claim,
            Statistic {
                measured: None,
                bound,
                relation,
                exact: None,
            },
        );
        v.vacuous = true;
        v
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("exhaustive tuple search allows at most {cap} vertices, graph has {n}; use the cor1/cor2 checks instead")]
    Lemma2Cap { n: usize, cap: usize },
    #[error("square has {square} vertices, base graph has {base}")]
    SquareMismatch { base: usize, square: usize },
    #[error("at least one sampled subset is required")]
    NoTrials,
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn same_vertex_count(g1: &crate::graph::Graph, g2: &crate::graph::Graph) -> Result<(), VerifyError> {
    if g1.num_vertices() != g2.num_vertices() {
        return Err(VerifyError::SquareMismatch {
            base: g1.num_vertices(),
            square: g2.num_vertices(),
        });
    }
    Ok(())
}

fn epsilon_params(v: CheckVerdict, params: &crate::params::AsymptoticParams) -> CheckVerdict {
    v.param("epsilon", params.epsilon)
        .param("theta", params.theta)
        .param("delta", params.delta_obs as f64)
}
