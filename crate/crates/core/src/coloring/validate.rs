use serde::{Deserialize, Serialize};

use super::{Coloring, ColoringError, ListAssignment};
use crate::graph::Graph;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// Edges `(u, v)`, `u < v`, whose endpoints share a color.
    pub monochromatic_edges: Vec<(usize, usize)>,
    /// Colored vertices whose color is missing from their list.
    pub out_of_list: Vec<usize>,
}

impl ValidationReport {
    pub fn is_proper(&self) -> bool {
        self.monochromatic_edges.is_empty() && self.out_of_list.is_empty()
    }

    pub fn num_violations(&self) -> usize {
        self.monochromatic_edges.len() + self.out_of_list.len()
    }
}

/// Lists every conflict of `coloring` on `g2`. Uncolored vertices are not
/// violations.
pub fn validate(
    coloring: &Coloring,
    g2: &Graph,
    lists: Option<&ListAssignment>,
) -> Result<ValidationReport, ColoringError> {
    let n = g2.num_vertices();
    if coloring.num_vertices() != n {
        return Err(ColoringError::SizeMismatch {
            lists: coloring.num_vertices(),
            n,
        });
    }
    if let Some(lists) = lists {
        if lists.len() != n {
            return Err(ColoringError::SizeMismatch { lists: lists.len(), n });
        }
    }
    let mut report = ValidationReport::default();
    for (u, v) in g2.edges() {
        if let (Some(a), Some(b)) = (coloring.color(u), coloring.color(v)) {
            if a == b {
                report.monochromatic_edges.push((u, v));
            }
        }
    }
    if let Some(lists) = lists {
        report.out_of_list = (0..n)
            .filter(|&v| coloring.color(v).is_some_and(|c| !lists.contains(v, c)))
            .collect();
    }
    Ok(report)
}
