//! Three-stage list coloring of the square graph.
//!
//! Stage 1 colors the high-degree vertices, stage 2 their remaining
//! neighbors (both in ascending vertex id), and stage 3 the rest along the
//! reverse minimum-degree elimination order of the square restricted to
//! the rest.

use serde::{Deserialize, Serialize};

use super::greedy::{GreedyColorer, Palette};
use super::{Color, Coloring, ColoringError, ListPolicy};
use crate::graph::{degeneracy_order, Graph};
use crate::params::{AsymptoticParams, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    HighDegree,
    Neighbors,
    Rest,
}

impl Stage {
    pub const ALL: [Stage; 3] = [Stage::HighDegree, Stage::Neighbors, Stage::Rest];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageStats {
    pub stage: Stage,
    pub vertices: usize,
    /// Largest number of already-colored square-neighbors any vertex of
    /// this stage had when it was colored.
    pub max_colored_neighbors: usize,
    /// Distinct colors assigned during this stage.
    pub colors_used: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageMetrics {
    pub stages: Vec<StageStats>,
    pub colors_used: usize,
    /// Smallest list size for which this order cannot get stuck:
    /// one more than the largest colored-neighbor count.
    pub q_min: usize,
    /// List size in force, `None` for the unbounded palette.
    pub list_size: Option<usize>,
}

/// Vertex order of the three stages, tagged with the stage.
pub fn stage_order(g2: &Graph, partition: &Partition) -> Vec<(usize, Stage)> {
    let mut order: Vec<(usize, Stage)> = Vec::with_capacity(g2.num_vertices());
    order.extend(partition.v_eps().into_iter().map(|v| (v, Stage::HighDegree)));
    order.extend(partition.w_minus_v().into_iter().map(|v| (v, Stage::Neighbors)));
    let rest = partition.rest();
    let (restricted, ids) = g2.induced_subgraph(&rest);
    order.extend(
        degeneracy_order(&restricted)
            .coloring_order()
            .into_iter()
            .map(|i| (ids[i], Stage::Rest)),
    );
    order
}

pub fn three_stage_color(
    g1: &Graph,
    g2: &Graph,
    params: &AsymptoticParams,
    policy: &ListPolicy,
) -> Result<(Coloring, StageMetrics), ColoringError> {
    let n = g1.num_vertices();
    if g2.num_vertices() != n {
        return Err(ColoringError::SizeMismatch {
            lists: g2.num_vertices(),
            n,
        });
    }
    let lists = policy.build_lists(n, params.q)?;
    let palette = match &lists {
        Some(l) => Palette::Lists(l),
        None => Palette::Unbounded,
    };

    let partition = Partition::new(g1, params);
    let order = stage_order(g2, &partition);

    let mut greedy = GreedyColorer::new(g2);
    let mut stats: Vec<StageStats> = Stage::ALL
        .iter()
        .map(|&stage| StageStats {
            stage,
            vertices: 0,
            max_colored_neighbors: 0,
            colors_used: 0,
        })
        .collect();
    let mut stage_colors: Vec<Vec<Color>> = vec![Vec::new(); 3];
    let mut max_seen = 0;
    for &(v, stage) in &order {
        let idx = stage as usize;
        let seen = greedy.color_next(v, palette).map_err(|mut s| {
            s.stage = Some(stage);
            ColoringError::Stuck(Box::new(s))
        })?;
        stats[idx].vertices += 1;
        stats[idx].max_colored_neighbors = stats[idx].max_colored_neighbors.max(seen);
        max_seen = max_seen.max(seen);
        stage_colors[idx].push(v);
    }
    let coloring = greedy.finish();
    for (idx, vertices) in stage_colors.iter().enumerate() {
        let mut used: Vec<Color> = vertices.iter().filter_map(|&v| coloring.color(v)).collect();
        used.sort_unstable();
        used.dedup();
        stats[idx].colors_used = used.len();
    }
    let metrics = StageMetrics {
        stages: stats,
        colors_used: coloring.num_colors_used(),
        q_min: max_seen + 1,
        list_size: lists.as_ref().map(|l| l.declared_size()),
    };
    Ok((coloring, metrics))
}
