use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};
use crate::rng::{stream_rng, Stream};

/// Parameters of the binomial random graph with edge probability `c / n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GnpParams {
    pub n: usize,
    pub c: f64,
    pub seed: u64,
}

impl GnpParams {
    pub fn new(n: usize, c: f64, seed: u64) -> Self {
        GnpParams { n, c, seed }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        if !self.c.is_finite() || self.c < 0.0 {
            return Err(GraphError::Parameter(format!("c must be finite and >= 0, got {}", self.c)));
        }
        if self.c > self.n as f64 {
            return Err(GraphError::Parameter(format!(
                "c = {} exceeds n = {} (edge probability above 1)",
                self.c, self.n
            )));
        }
        Ok(())
    }

    /// Edge probability `c / n` (0 for the empty vertex set).
    pub fn p(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.c / self.n as f64
        }
    }
}

/// Samples G(n, c/n) by geometric skipping over the pairs `(w, v)`, `w < v`,
/// taken in order of `v` then `w`, so the expected work is O(n + m).
pub fn sample_gnp(params: &GnpParams) -> Result<Graph, GraphError> {
    params.validate()?;
    let n = params.n;
    let p = params.p();
    if n < 2 || p <= 0.0 {
        return Ok(Graph::empty(n));
    }
    if p >= 1.0 {
        return Ok(Graph::complete(n));
    }

    let mut rng = stream_rng(params.seed, Stream::Graph);
    let log_q = (1.0 - p).ln();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    // Current pair is (w, v) with w < v; w may run past v and carry over.
    let mut v: usize = 1;
    let mut w: i64 = -1;
    loop {
        let r: f64 = rng.random();
        // 1 - r lies in (0, 1], so the logarithm is finite.
        let skip = ((1.0 - r).ln() / log_q).floor();
        w += 1 + if skip >= i64::MAX as f64 { i64::MAX / 2 } else { skip as i64 };
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v >= n {
            break;
        }
        let w_ = w as usize;
        adj[v].push(w_);
        adj[w_].push(v);
    }
    // Lists of larger endpoints are filled in increasing v; lists of
    // smaller endpoints arrive in increasing w. A vertex receives its
    // smaller neighbors (as v) before its larger ones (as w), so every
    // list is already sorted.
    debug_assert!(adj.iter().all(|l| l.windows(2).all(|x| x[0] < x[1])));
    Ok(Graph::from_sorted_adjacency(adj))
}
