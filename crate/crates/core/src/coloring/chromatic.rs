//! Exact chromatic number and clique number for small graphs.

use super::ColoringError;
use crate::graph::Graph;

pub const DEFAULT_CHROMATIC_CAP: usize = 16;
const HARD_CAP: usize = 64;

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.num_vertices())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect()
}

fn check_cap(n: usize, cap: usize) -> Result<(), ColoringError> {
    let cap = cap.min(HARD_CAP);
    if n > cap {
        return Err(ColoringError::OracleCap { n, cap });
    }
    Ok(())
}

fn max_clique(adj: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        if size + rest.count_ones() as usize <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= !(1 << v);
        max_clique(adj, rest & adj[v], size + 1, best);
    }
}

/// Size of a largest clique, by branch and bound over bitmasks.
pub fn clique_number(g: &Graph, cap: usize) -> Result<usize, ColoringError> {
    let n = g.num_vertices();
    check_cap(n, cap)?;
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    max_clique(&adj, all, 0, &mut best);
    Ok(best)
}

/// Whether the vertices, taken in `order`, admit a proper coloring with
/// colors `0..k`. New colors are opened one at a time to skip relabelings.
fn colorable(adj: &[u64], order: &[usize], k: usize) -> bool {
    fn go(adj: &[u64], order: &[usize], i: usize, k: usize, used: usize, color: &mut [usize]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let limit = (used + 1).min(k);
        for c in 0..limit {
            let mut rest = adj[v];
            let mut clash = false;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if color[w] == c {
                    clash = true;
                    break;
                }
            }
            if clash {
                continue;
            }
            color[v] = c;
            if go(adj, order, i + 1, k, used.max(c + 1), color) {
                return true;
            }
            color[v] = usize::MAX;
        }
        false
    }
    let mut color = vec![usize::MAX; adj.len()];
    go(adj, order, 0, k, 0, &mut color)
}

/// Greedy upper bound along the largest-degree-first order.
fn greedy_colors(g: &Graph, order: &[usize]) -> usize {
    let mut color = vec![usize::MAX; g.num_vertices()];
    let mut most = 0;
    for &v in order {
        let mut taken: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
        taken.sort_unstable();
        let mut c = 0;
        for t in taken {
            if t == c {
                c += 1;
            } else if t > c {
                break;
            }
        }
        color[v] = c;
        most = most.max(c + 1);
    }
    most
}

/// Exact chromatic number. Graphs with more than `cap` vertices are refused.
pub fn exact_chromatic_number(g: &Graph, cap: usize) -> Result<usize, ColoringError> {
    let n = g.num_vertices();
    check_cap(n, cap)?;
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = clique_number(g, cap)?;
    let upper = greedy_colors(g, &order);
    let adj = adjacency_masks(g);
    for k in lower..upper {
        if colorable(&adj, &order, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}
