//! Exact k-choosability for very small graphs.
//!
//! A graph is k-choosable when every assignment of k-element lists admits a
//! proper coloring from the lists. The search walks list assignments up to
//! renaming of colors and returns the first one with no proper coloring.

use std::collections::HashMap;

use super::{Color, ColoringError, ListAssignment};
use crate::graph::{degeneracy_order, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChoosabilityCaps {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for ChoosabilityCaps {
    fn default() -> Self {
        ChoosabilityCaps { max_n: 8, max_k: 4 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Choosability {
    Choosable,
    /// Lists of size k admitting no proper coloring.
    Witness(ListAssignment),
}

impl Choosability {
    pub fn is_choosable(&self) -> bool {
        matches!(self, Choosability::Choosable)
    }
}

type Lists = Vec<Vec<Color>>;

pub fn is_k_choosable(g: &Graph, k: usize, caps: ChoosabilityCaps) -> Result<Choosability, ColoringError> {
    let n = g.num_vertices();
    if n > caps.max_n.min(63) {
        return Err(ColoringError::OracleCap { n, cap: caps.max_n.min(63) });
    }
    if k > caps.max_k {
        return Err(ColoringError::OracleListCap { k, cap: caps.max_k });
    }
    if n == 0 {
        return Ok(Choosability::Choosable);
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut search = Search {
        g,
        adj,
        k,
        memo: HashMap::new(),
    };
    match search.solve((1u64 << n) - 1) {
        None => Ok(Choosability::Choosable),
        Some(lists) => Ok(Choosability::Witness(ListAssignment::new(lists, k)?)),
    }
}

struct Search<'g> {
    g: &'g Graph,
    adj: Vec<u64>,
    k: usize,
    memo: HashMap<u64, Option<Lists>>,
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

fn members(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

impl Search<'_> {
    /// `None` when the subgraph induced by `mask` is k-choosable, otherwise
    /// a bad assignment (empty lists outside `mask`).
    fn solve(&mut self, mask: u64) -> Option<Lists> {
        if let Some(hit) = self.memo.get(&mask) {
            return hit.clone();
        }
        let result = self.solve_uncached(mask);
        self.memo.insert(mask, result.clone());
        result
    }

    fn solve_uncached(&mut self, mask: u64) -> Option<Lists> {
        let n = self.g.num_vertices();
        let k = self.k;
        let verts = members(mask);
        if verts.is_empty() {
            return None;
        }
        if k == 0 {
            return Some(vec![Vec::new(); n]);
        }
        let (sub, _) = self.g.induced_subgraph(&verts);
        if degeneracy_order(&sub).degeneracy < k {
            return None;
        }

        // The same k colors everywhere.
        let mut uniform = vec![Vec::new(); n];
        for &v in &verts {
            uniform[v] = (0..k).collect();
        }
        if !self.list_colorable(&verts, &uniform) {
            return Some(uniform);
        }

        // A bad assignment on a proper induced subgraph extends to this one.
        for &v in &verts {
            if let Some(mut lists) = self.solve(mask & !(1 << v)) {
                let fresh = lists.iter().flatten().copied().max().map_or(0, |c| c + 1);
                lists[v] = (fresh..fresh + k).collect();
                return Some(lists);
            }
        }
        if !self.connected(mask) {
            return None;
        }

        let order = self.bfs_order(mask);
        let mut lists = vec![Vec::new(); n];
        if self.enumerate(&order, 0, 0, &mut lists) {
            Some(lists)
        } else {
            None
        }
    }

    fn connected(&self, mask: u64) -> bool {
        let start = mask & mask.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & mask & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == mask
    }

    fn bfs_order(&self, mask: u64) -> Vec<usize> {
        let mut order = Vec::new();
        let mut seen = 0u64;
        for root in members(mask) {
            if seen & (1 << root) != 0 {
                continue;
            }
            seen |= 1 << root;
            let start = order.len();
            order.push(root);
            let mut i = start;
            while i < order.len() {
                let v = order[i];
                for w in members(self.adj[v] & mask & !seen) {
                    seen |= 1 << w;
                    order.push(w);
                }
                i += 1;
            }
        }
        order
    }

    /// Assigns lists to `order[i..]`; on success (a bad assignment found)
    /// leaves it in `lists` and returns true.
    fn enumerate(&self, order: &[usize], i: usize, used: usize, lists: &mut Lists) -> bool {
        if i == order.len() {
            return !self.list_colorable(order, lists);
        }
        let v = order[i];
        let k = self.k;
        let assigned: u64 = order[..=i].iter().fold(0, |m, &u| m | (1 << u));
        let mask: u64 = order.iter().fold(0, |m, &u| m | (1 << u));
        for old in 0..=k.min(used) {
            let mut subset: Vec<Color> = (0..old).collect();
            loop {
                let mut list = subset.clone();
                list.extend(used..used + (k - old));
                lists[v] = list;
                if !self.has_private_color(v, assigned, mask, lists)
                    && self.enumerate(order, i + 1, used + (k - old), lists)
                {
                    return true;
                }
                if !next_combination(&mut subset, used) {
                    break;
                }
            }
        }
        lists[v].clear();
        false
    }

    /// True when `v` or an assigned neighbor of `v` can always be colored
    /// last: it holds a color no neighbor can use, or fewer than k of its
    /// neighbors (unassigned ones counted) share a color with it. Such an
    /// assignment is colorable whenever the graph minus that vertex is,
    /// which the caller has already established.
    fn has_private_color(&self, v: usize, assigned: u64, mask: u64, lists: &Lists) -> bool {
        let mut check = (self.adj[v] & assigned) | (1 << v);
        while check != 0 {
            let u = check.trailing_zeros() as usize;
            check &= check - 1;
            let nbrs = self.adj[u] & mask;
            let open = (nbrs & !assigned).count_ones() as usize;
            let sharing = bits(nbrs & assigned)
                .filter(|&w| lists[u].iter().any(|c| lists[w].binary_search(c).is_ok()))
                .count();
            if open + sharing < self.k {
                return true;
            }
            if open == 0 && lists[u].iter().any(|c| bits(nbrs).all(|w| lists[w].binary_search(c).is_err())) {
                return true;
            }
        }
        false
    }

    fn list_colorable(&self, verts: &[usize], lists: &Lists) -> bool {
        fn go(s: &Search<'_>, verts: &[usize], i: usize, lists: &Lists, color: &mut [Option<Color>]) -> bool {
            if i == verts.len() {
                return true;
            }
            let v = verts[i];
            for &c in &lists[v] {
                if bits(s.adj[v]).any(|w| color[w] == Some(c)) {
                    continue;
                }
                color[v] = Some(c);
                if go(s, verts, i + 1, lists, color) {
                    return true;
                }
                color[v] = None;
            }
            false
        }
        let mut color = vec![None; self.g.num_vertices()];
        go(self, verts, 0, lists, &mut color)
    }
}

/// Advances a sorted subset of `0..n` to the next one of the same size in
/// lexicographic order.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let r = subset.len();
    for i in (0..r).rev() {
        if subset[i] < n - r + i {
            subset[i] += 1;
            for j in i + 1..r {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
