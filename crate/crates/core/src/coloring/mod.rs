//! List assignments, greedy list coloring, the staged pipeline and exact
//! small-instance oracles.

mod choosability;
mod chromatic;
mod greedy;
mod lists;
mod pipeline;
mod validate;

pub use choosability::{is_k_choosable, ChoosabilityCaps, Choosability};
pub use chromatic::{clique_number, exact_chromatic_number, DEFAULT_CHROMATIC_CAP};
pub use greedy::{degeneracy_color, greedy_list_color, Palette};
pub use lists::{ListAssignment, ListMode, ListPolicy, ListSource};
pub use pipeline::{three_stage_color, Stage, StageMetrics, StageStats};
pub use validate::{validate, ValidationReport};

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Color = usize;

/// The first vertex the greedy rule could not color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StuckVertex {
    pub vertex: usize,
    pub list: Vec<Color>,
    /// Distinct colors on already-colored neighbors, ascending.
    pub neighbor_colors: Vec<Color>,
    pub stage: Option<Stage>,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ColoringError {
    #[error("greedy coloring stuck at vertex {} (stage {:?})", .0.vertex, .0.stage)]
    Stuck(Box<StuckVertex>),
    #[error("order is not a permutation of 0..{0}")]
    BadOrder(usize),
    #[error("list assignment covers {lists} vertices but the graph has {n}")]
    SizeMismatch { lists: usize, n: usize },
    #[error("vertex {vertex} has {len} distinct colors, need at least {needed}")]
    ListTooShort { vertex: usize, len: usize, needed: usize },
    #[error("list of vertex {0} repeats a color")]
    RepeatedColor(usize),
    #[error("policy {0} needs an explicit list size")]
    MissingK(&'static str),
    #[error("graph has {n} vertices, oracle cap is {cap}")]
    OracleCap { n: usize, cap: usize },
    #[error("list size {k} exceeds the oracle cap {cap}")]
    OracleListCap { k: usize, cap: usize },
    #[error("malformed coloring line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A (possibly partial) assignment of colors to the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring {
            colors: vec![None; n],
        }
    }

    pub fn from_colors(colors: Vec<Option<Color>>) -> Self {
        Coloring { colors }
    }

    pub fn num_vertices(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: Color) {
        self.colors[v] = Some(c);
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Number of distinct colors in use.
    pub fn num_colors_used(&self) -> usize {
        let mut used: Vec<Color> = self.colors.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// One line per vertex, `v color`, with `-` for uncolored vertices.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(8 * self.colors.len());
        for (v, c) in self.colors.iter().enumerate() {
            match c {
                Some(c) => writeln!(out, "{v} {c}").unwrap(),
                None => writeln!(out, "{v} -").unwrap(),
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ColoringError> {
        let mut colors = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = |message: &str| ColoringError::Parse {
                line: i + 1,
                message: message.to_string(),
            };
            let mut fields = line.split_ascii_whitespace();
            let v: usize = fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad("expected a vertex id"))?;
            if v != colors.len() {
                return Err(bad("vertices must appear in order 0, 1, 2, ..."));
            }
            let c = match fields.next() {
                Some("-") => None,
                Some(t) => Some(t.parse().map_err(|_| bad("color is not an integer"))?),
                None => return Err(bad("missing color")),
            };
            if fields.next().is_some() {
                return Err(bad("expected exactly two fields"));
            }
            colors.push(c);
        }
        Ok(Coloring { colors })
    }
}
