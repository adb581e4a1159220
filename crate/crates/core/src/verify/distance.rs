use std::collections::VecDeque;

use super::{CheckVerdict, Claim, Relation, Statistic, Witness};
use crate::graph::Graph;
use crate::params::high_degree_set;

/// Members of `V_{2/3}` must be this far apart.
const LEMMA1_DISTANCE: usize = 10;

/// Closest pair among `members` at distance at most `max_distance`, as
/// `(u, v, distance)` with `u < v`.
///
/// One breadth-first search grows from all members at once to depth
/// `max_distance / 2`, labeling every vertex with its nearest member. A
/// shortest path between two members changes label somewhere, so the
/// minimum of `d(x) + 1 + d(y)` over edges `xy` with different labels is
/// the closest-pair distance.
pub fn closest_pair(g: &Graph, members: &[usize], max_distance: usize) -> Option<(usize, usize, usize)> {
    let n = g.num_vertices();
    let radius = max_distance / 2;
    let mut dist = vec![usize::MAX; n];
    let mut label = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &s in members {
        if dist[s] == usize::MAX {
            dist[s] = 0;
            label[s] = s;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        if dist[v] == radius {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                label[w] = label[v];
                queue.push_back(w);
            }
        }
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for (x, y) in g.edges() {
        if dist[x] == usize::MAX || dist[y] == usize::MAX || label[x] == label[y] {
            continue;
        }
        let d = dist[x] + 1 + dist[y];
        if d > max_distance {
            continue;
        }
        let (a, b) = (label[x].min(label[y]), label[x].max(label[y]));
        if best.is_none_or(|(bu, bv, bd)| (d, a, b) < (bd, bu, bv)) {
            best = Some((a, b, d));
        }
    }
    best
}

/// Every two vertices of degree at least `2Δ/3` are at distance at least 10.
pub fn check_lemma1(g1: &Graph) -> CheckVerdict {
    let bound = LEMMA1_DISTANCE as f64;
    if g1.num_vertices() == 0 {
        return CheckVerdict::vacuous(Claim::Lemma1, Relation::AtLeast, bound);
    }
    let members = high_degree_set(g1, 2.0 / 3.0).expect("non-empty graph and alpha in (0, 1]");
    let mut verdict = match closest_pair(g1, &members, LEMMA1_DISTANCE - 1) {
        Some((u, v, d)) => {
            let mut verdict = CheckVerdict::new(Claim::Lemma1, Statistic::new(d as f64, Relation::AtLeast, bound));
            verdict.witness = Some(Witness::Pair { u, v, distance: d });
            verdict
        }
        None => {
            let mut verdict = CheckVerdict::vacuous(Claim::Lemma1, Relation::AtLeast, bound);
            verdict.vacuous = members.len() <= 1;
            verdict
        }
    };
    verdict = verdict
        .param("alpha", 2.0 / 3.0)
        .param("delta", g1.max_degree() as f64)
        .param("high_degree_vertices", members.len() as f64);
    verdict
}
