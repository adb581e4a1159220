use super::{epsilon_params, CheckVerdict, Claim, Relation, Statistic, VerifyError, Witness};
use crate::graph::Graph;
use crate::params::{is_good_tuple, AsymptoticParams};

pub const DEFAULT_LEMMA2_CAP: usize = 40;

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<u64>,
    eligible_from: usize,
    max_m: usize,
    params: &'a AsymptoticParams,
    /// Largest top-m degree sum over the sets seen so far, and its set.
    best: Option<(usize, u64)>,
    violation: Option<(usize, u64)>,
    examined: usize,
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        (rest != 0).then(|| {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            v
        })
    })
}

impl Search<'_> {
    /// Eligible members of `set` with the largest degrees, at most `m` of
    /// them, ties broken by smaller id.
    fn top_eligible(&self, set: u64, m: usize) -> Vec<usize> {
        let mut eligible: Vec<usize> = bits(set).filter(|&v| self.g.degree(v) >= self.eligible_from).collect();
        eligible.sort_by_key(|&v| (std::cmp::Reverse(self.g.degree(v)), v));
        eligible.truncate(m);
        eligible
    }

    fn examine(&mut self, set: u64) {
        self.examined += 1;
        let s = set.count_ones() as usize;
        let chosen = self.top_eligible(set, self.max_m.min(s));
        let m = chosen.len();
        if m == 0 || s > 3 * m {
            return;
        }
        let degrees: Vec<usize> = chosen.iter().map(|&v| self.g.degree(v)).collect();
        let sum: usize = degrees.iter().sum();
        if self.best.is_none_or(|(b, _)| sum > b) {
            self.best = Some((sum, set));
        }
        if is_good_tuple(&degrees, self.params.delta_obs, self.params.epsilon, self.params.theta) {
            self.violation = Some((sum, set));
        }
    }

    /// Connected sets containing `set`, grown only through vertices above
    /// `anchor` so each set is produced once.
    fn grow(&mut self, set: u64, extension: u64, anchor: usize, limit: usize) {
        self.examine(set);
        if self.violation.is_some() || set.count_ones() as usize == limit {
            return;
        }
        let mut ext = extension;
        let mut closed = set;
        for v in bits(set) {
            closed |= self.adj[v];
        }
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let above = !((2u64 << anchor) - 1);
            let fresh = self.adj[w] & !closed & above;
            self.grow(set | (1 << w), ext | fresh, anchor, limit);
            if self.violation.is_some() {
                return;
            }
        }
    }
}

/// Exhaustive search for a connected set of at most `3m` vertices holding
/// `m` vertices whose degrees form a good tuple, for `m <= min(m_max, 2/ε)`.
///
/// Refuses graphs above `cap` vertices (at most 63).
pub fn check_lemma2_small(
    g1: &Graph,
    params: &AsymptoticParams,
    m_max: usize,
    cap: usize,
) -> Result<CheckVerdict, VerifyError> {
    let n = g1.num_vertices();
    let cap = cap.min(63);
    if n > cap {
        return Err(VerifyError::Lemma2Cap { n, cap });
    }
    let max_m = m_max.min((2.0 / params.epsilon + 1e-9).floor() as usize);
    let bound = (1.0 + params.cube_root_theta()) * params.delta_obs as f64;
    let finish = |v: CheckVerdict| epsilon_params(v, params).param("m_max", max_m as f64);
    if n == 0 || g1.max_degree() == 0 || max_m == 0 {
        return Ok(finish(CheckVerdict::vacuous(Claim::Lemma2Small, Relation::Less, bound)));
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g1.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut search = Search {
        g: g1,
        adj,
        eligible_from: params.epsilon_degree(),
        max_m,
        params,
        best: None,
        violation: None,
        examined: 0,
    };
    let limit = 3 * max_m;
    for anchor in 0..n {
        let above = !((2u64 << anchor) - 1);
        search.grow(1 << anchor, search.adj[anchor] & above, anchor, limit);
        if search.violation.is_some() {
            break;
        }
    }
    let mut verdict = match search.violation.or(search.best) {
        Some((sum, set)) => {
            let mut verdict = CheckVerdict::new(Claim::Lemma2Small, Statistic::new(sum as f64, Relation::Less, bound));
            verdict.holds = search.violation.is_none();
            if !verdict.holds {
                let s = set.count_ones() as usize;
                let mut chosen = search.top_eligible(set, max_m.min(s));
                chosen.sort_unstable();
                verdict.witness = Some(Witness::Subset {
                    vertices: bits(set).collect(),
                    chosen,
                });
            }
            verdict
        }
        None => CheckVerdict::vacuous(Claim::Lemma2Small, Relation::Less, bound),
    };
    verdict = finish(verdict);
    Ok(verdict)
}
