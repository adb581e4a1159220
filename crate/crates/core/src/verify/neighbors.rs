use super::{epsilon_params, same_vertex_count, CheckVerdict, Claim, Relation, Statistic, VerifyError, Witness};
use crate::graph::Graph;
use crate::params::{AsymptoticParams, Partition};

/// `|N_{g2}(v) ∩ V_ε|` for every vertex.
pub fn cor1_counts(g2: &Graph, in_v_eps: &[bool]) -> Vec<usize> {
    (0..g2.num_vertices())
        .map(|v| g2.neighbors(v).iter().filter(|&&w| in_v_eps[w]).count())
        .collect()
}

/// `|N_{g2}(v) ∩ W_ε|` for every `v ∉ V_ε`; `None` on `V_ε`.
pub fn cor2_counts(g2: &Graph, in_v_eps: &[bool], in_w_eps: &[bool]) -> Vec<Option<usize>> {
    (0..g2.num_vertices())
        .map(|v| (!in_v_eps[v]).then(|| g2.neighbors(v).iter().filter(|&&w| in_w_eps[w]).count()))
        .collect()
}

fn max_count_verdict(claim: Claim, counts: impl Iterator<Item = (usize, usize)>, params: &AsymptoticParams) -> CheckVerdict {
    let bound = params.delta1 as f64;
    // First vertex attaining the maximum.
    let worst = counts.fold(None, |best: Option<(usize, usize)>, (v, c)| match best {
        Some((_, bc)) if bc >= c => best,
        _ => Some((v, c)),
    });
    let mut verdict = match worst {
        Some((vertex, count)) => {
            let mut verdict = CheckVerdict::new(claim, Statistic::new(count as f64, Relation::AtMost, bound));
            if !verdict.holds {
                verdict.witness = Some(Witness::Vertex { vertex, count });
            }
            verdict
        }
        None => CheckVerdict::vacuous(claim, Relation::AtMost, bound),
    };
    verdict = epsilon_params(verdict, params).param("delta1", bound);
    verdict
}

/// Every vertex has at most `Δ₁` square-neighbors in `V_ε`.
pub fn check_cor1(g1: &Graph, g2: &Graph, params: &AsymptoticParams) -> Result<CheckVerdict, VerifyError> {
    same_vertex_count(g1, g2)?;
    let partition = Partition::new(g1, params);
    let counts = cor1_counts(g2, &partition.in_v_eps());
    Ok(max_count_verdict(Claim::Cor1, counts.into_iter().enumerate(), params))
}

/// Every vertex outside `V_ε` has at most `Δ₁` square-neighbors in `W_ε`.
pub fn check_cor2(g1: &Graph, g2: &Graph, params: &AsymptoticParams) -> Result<CheckVerdict, VerifyError> {
    same_vertex_count(g1, g2)?;
    let partition = Partition::new(g1, params);
    let counts = cor2_counts(g2, &partition.in_v_eps(), &partition.in_w_eps());
    Ok(max_count_verdict(
        Claim::Cor2,
        counts.into_iter().enumerate().filter_map(|(v, c)| c.map(|c| (v, c))),
        params,
    ))
}
