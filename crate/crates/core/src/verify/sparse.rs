use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{epsilon_params, same_vertex_count, CheckVerdict, Claim, Relation, Statistic, Tally, VerifyError, Witness};
use crate::graph::Graph;
use crate::params::{AsymptoticParams, Partition};
use crate::rng::{stream_rng, Stream};

/// `(c²(n−1)(n−2) + c n²) / (2n)`, the mean edge count of the square of
/// `G(n, c/n)` as used in the edge-count bound.
pub fn expected_square_edges(n: usize, c: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let n = n as f64;
    (c * c * (n - 1.0) * (n - 2.0) + c * n * n) / (2.0 * n)
}

/// The square has fewer than `c(c+1)n` edges.
pub fn check_total_edges(g2: &Graph, c: f64, n: usize) -> CheckVerdict {
    let edges = g2.num_edges();
    let bound = c * (c + 1.0) * n as f64;
    let mut v = CheckVerdict::new(Claim::Lemma3, Statistic::new(edges as f64, Relation::Less, bound))
        .param("c", c)
        .param("n", n as f64)
        .param("expected", expected_square_edges(n, c));
    if !v.holds {
        v.witness = Some(Witness::Count { value: edges });
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeOneCounts {
    /// `histogram[k]`: vertices outside the set with exactly `k` neighbors
    /// inside, for `k >= 1`; `histogram[0]` is always 0.
    pub histogram: Vec<usize>,
    /// `Σ_k histogram[k] · k²`.
    pub a1: u64,
}

/// Outside vertices grouped by how many neighbors they have in `s`.
pub fn count_type1(g1: &Graph, s: &[usize]) -> TypeOneCounts {
    let inside = crate::graph::membership(g1.num_vertices(), s);
    let mut outside: Vec<usize> = s
        .iter()
        .flat_map(|&v| g1.neighbors(v).iter().copied())
        .filter(|&w| !inside[w])
        .collect();
    outside.sort_unstable();
    let mut histogram = vec![0usize];
    for run in outside.chunk_by(|a, b| a == b) {
        let k = run.len();
        if histogram.len() <= k {
            histogram.resize(k + 1, 0);
        }
        histogram[k] += 1;
    }
    let a1 = histogram.iter().enumerate().map(|(k, &a)| (a * k * k) as u64).sum();
    TypeOneCounts { histogram, a1 }
}

/// `Σ_{v∈S} d_S(v)(d_S(v)+1)/2`.
pub fn count_type2(g1: &Graph, s: &[usize]) -> u64 {
    let inside = crate::graph::membership(g1.num_vertices(), s);
    s.iter()
        .map(|&v| {
            let d = g1.neighbors(v).iter().filter(|&&w| inside[w]).count() as u64;
            d * (d + 1) / 2
        })
        .sum()
}

/// Per-claim tallies over sampled subsets of `[n] \ W_ε`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparseBoundsReport {
    /// One verdict per part: `edges`, `a1`, `a2`, `combined`,
    /// `square-edges` and `large-sets`.
    pub verdicts: Vec<CheckVerdict>,
    pub sampled_sizes: Vec<usize>,
    /// Densest sampled subset of the square, as `(edges, vertices)`.
    pub densest_sample: Option<(usize, usize)>,
}

impl SparseBoundsReport {
    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn part(&self, name: &str) -> Option<&CheckVerdict> {
        self.verdicts.iter().find(|v| v.part.as_deref() == Some(name))
    }
}

const PARTS: [&str; 5] = ["edges", "a1", "a2", "combined", "square-edges"];

#[derive(Default)]
struct Tracker {
    trials: usize,
    violations: usize,
    /// `(measured / bound, measured, bound, subset)` of the worst trial.
    worst: Option<(f64, f64, f64, Vec<usize>)>,
}

impl Tracker {
    fn record(&mut self, measured: f64, bound: f64, subset: &[usize]) {
        self.trials += 1;
        let violated = measured > bound;
        if violated {
            self.violations += 1;
        }
        let ratio = if bound > 0.0 {
            measured / bound
        } else if measured > 0.0 {
            f64::MAX
        } else {
            0.0
        };
        if self.worst.as_ref().is_none_or(|w| ratio > w.0) {
            // Subsets are kept only when they may become the witness.
            let kept = if violated { subset.to_vec() } else { Vec::new() };
            self.worst = Some((ratio, measured, bound, kept));
        }
    }

    fn verdict(self, part: &str) -> CheckVerdict {
        let (measured, bound, subset) = match self.worst {
            Some((_, m, b, s)) => (Some(m), b, s),
            None => (None, 0.0, Vec::new()),
        };
        let mut v = CheckVerdict::new(
            Claim::SparseBounds,
            Statistic {
                measured,
                bound,
                relation: Relation::AtMost,
                exact: None,
            },
        );
        v.part = Some(part.to_string());
        v.vacuous = self.trials == 0;
        v.holds = self.violations == 0;
        v.tally = Some(Tally {
            trials: self.trials,
            violations: self.violations,
        });
        if !v.holds {
            v.witness = Some(Witness::Subset {
                vertices: subset,
                chosen: Vec::new(),
            });
        }
        v
    }
}

/// Edges of `g` inside `s`, using `flags` (all false on entry and exit).
fn edges_inside(g: &Graph, s: &[usize], flags: &mut [bool]) -> usize {
    for &v in s {
        flags[v] = true;
    }
    let twice: usize = s
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| flags[w]).count())
        .sum();
    for &v in s {
        flags[v] = false;
    }
    twice / 2
}

/// Samples `trials` subsets of `[n] \ W_ε` with sizes log-uniform over
/// `[4, s0]` and tests the per-subset edge bounds on each; also tests the
/// large-set consequence `|E(G₂)| <= 10 k₀ c³ ⌈n / (10 c k₀)⌉`.
pub fn check_sparse_bounds(
    g1: &Graph,
    g2: &Graph,
    params: &AsymptoticParams,
    c: f64,
    trials: usize,
    seed: u64,
) -> Result<SparseBoundsReport, VerifyError> {
    same_vertex_count(g1, g2)?;
    if trials == 0 {
        return Err(VerifyError::NoTrials);
    }
    let n = g1.num_vertices();
    let rest = Partition::new(g1, params).rest();
    let scale = params.epsilon * params.delta_obs as f64;
    let k0 = params.k0();
    let s0 = params.s0();

    let mut trackers: Vec<Tracker> = PARTS.iter().map(|_| Tracker::default()).collect();
    let mut sampled_sizes = Vec::new();
    let mut densest: Option<(usize, usize)> = None;
    if !rest.is_empty() {
        let mut rng = stream_rng(seed, Stream::Subsets);
        let mut flags = vec![false; n];
        let lo = 4.min(rest.len());
        let hi = s0.clamp(lo, rest.len());
        let (ln_lo, ln_hi) = ((lo as f64).ln(), (hi as f64).ln());
        for _ in 0..trials {
            let u: f64 = rng.random();
            let size = ((ln_lo + u * (ln_hi - ln_lo)).exp().round() as usize).clamp(lo, hi);
            let mut subset: Vec<usize> = sample(&mut rng, rest.len(), size).into_iter().map(|i| rest[i]).collect();
            subset.sort_unstable();
            sampled_sizes.push(size);

            let s = size as f64;
            let e = edges_inside(g1, &subset, &mut flags) as f64;
            let a1 = count_type1(g1, &subset).a1 as f64;
            let a2 = count_type2(g1, &subset) as f64;
            let e2 = edges_inside(g2, &subset, &mut flags);
            let combined_bound = (6.0 + 2.0 * c) * scale * s;
            let checks = [
                (e, scale * s / 2.0),
                (a1, 5.0 * scale * s),
                (a2, (2.0 * c + 0.5) * scale * s),
                (e + a1 + a2, combined_bound),
                (e2 as f64, combined_bound),
            ];
            for (tracker, (measured, bound)) in trackers.iter_mut().zip(checks) {
                tracker.record(measured, bound, &subset);
            }
            // Compare e2/size with the best so far exactly.
            if densest.is_none_or(|(de, ds)| e2 * ds > de * size) {
                densest = Some((e2, size));
            }
        }
    }

    let mut verdicts: Vec<CheckVerdict> = trackers
        .into_iter()
        .zip(PARTS)
        .map(|(t, part)| t.verdict(part))
        .collect();

    let edges = g2.num_edges();
    let large = if c > 0.0 && n > 0 {
        let s_large = (n as f64 / (10.0 * c * k0 as f64)).ceil().max(1.0);
        let bound = 10.0 * k0 as f64 * c.powi(3) * s_large;
        let mut v = CheckVerdict::new(Claim::SparseBounds, Statistic::new(edges as f64, Relation::AtMost, bound))
            .param("s_large", s_large);
        v.tally = Some(Tally {
            trials: 1,
            violations: usize::from(!v.holds),
        });
        if !v.holds {
            v.witness = Some(Witness::Count { value: edges });
        }
        v
    } else {
        CheckVerdict::vacuous(Claim::SparseBounds, Relation::AtMost, 0.0)
    };
    verdicts.push(large);
    verdicts.last_mut().unwrap().part = Some("large-sets".to_string());

    for v in &mut verdicts {
        let mut echoed = epsilon_params(v.clone(), params)
            .param("c", c)
            .param("k0", k0 as f64)
            .param("s0", s0 as f64)
            .param("trials", trials as f64)
            .param("seed", seed as f64);
        echoed.parameters.extend(std::mem::take(&mut v.parameters));
        *v = echoed;
    }
    Ok(SparseBoundsReport {
        verdicts,
        sampled_sizes,
        densest_sample: densest,
    })
}
