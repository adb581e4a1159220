use num_rational::Ratio;

use super::{epsilon_params, same_vertex_count, CheckVerdict, Claim, Relation, Statistic, VerifyError, Witness};
use crate::graph::{max_subgraph_density, Graph};
use crate::params::{AsymptoticParams, Partition};

/// Exact test that every vertex subset `S` of `g` spans at most
/// `bound · |S|` edges. The witness is always the densest subset.
pub fn check_all_subsets_density(g: &Graph, bound: f64) -> CheckVerdict {
    if g.num_vertices() == 0 {
        return CheckVerdict::vacuous(Claim::AllSubsetsDensity, Relation::AtMost, bound);
    }
    let densest = max_subgraph_density(g).expect("graph has a vertex");
    let rho = densest.density;
    let mut statistic = Statistic::new(*rho.numer() as f64 / *rho.denom() as f64, Relation::AtMost, bound);
    statistic.exact = Some(format!("{}/{}", rho.numer(), rho.denom()));
    let mut v = CheckVerdict::new(Claim::AllSubsetsDensity, statistic);
    v.witness = Some(Witness::Subset {
        vertices: densest.witness,
        chosen: Vec::new(),
    });
    v
}

/// Runs [`check_all_subsets_density`] on the square restricted to
/// `[n] \ W_ε` with bound `(6 + 2c) ε Δ`, reporting the witness in the
/// original vertex ids. Also returns the exact density when the rest is
/// non-empty.
pub fn check_rest_density(
    g1: &Graph,
    g2: &Graph,
    params: &AsymptoticParams,
    c: f64,
) -> Result<(CheckVerdict, Option<Ratio<u64>>), VerifyError> {
    same_vertex_count(g1, g2)?;
    let rest = Partition::new(g1, params).rest();
    let bound = (6.0 + 2.0 * c) * params.epsilon * params.delta_obs as f64;
    let (restricted, ids) = g2.induced_subgraph(&rest);
    let mut v = check_all_subsets_density(&restricted, bound);
    let mut exact = None;
    if let Some(Witness::Subset { vertices, .. }) = &mut v.witness {
        for x in vertices.iter_mut() {
            *x = ids[*x];
        }
        let e = g2.edges_within(&crate::graph::membership(g2.num_vertices(), vertices));
        exact = Some(Ratio::new(e as u64, vertices.len() as u64));
    }
    let v = epsilon_params(v, params)
        .param("c", c)
        .param("rest_vertices", rest.len() as f64);
    Ok((v, exact))
}
