//! Exact maximum subgraph density `max_S e(S)/|S|`.
//!
//! Uses Goldberg's cut network: for a guess `a/b`, the minimum s-t cut has
//! value `2bm + 2(a|S| - b·e(S))` where `S` is the source side, so a cut
//! below `2bm` exposes a set denser than `a/b`. The guess is then raised
//! to that set's density (Dinkelbach iteration) until no denser set exists.
//! Flows run only on components of the core that peeling cannot rule out.
//! Densities are ratios of integers, so the search is exact.

use std::collections::VecDeque;

use num_rational::Ratio;

use super::{degeneracy_order, membership, Graph, GraphError};

#[derive(Debug, Clone, PartialEq)]
pub struct DensestSubgraph {
    pub density: Ratio<u64>,
    /// Sorted vertex set attaining `density`.
    pub witness: Vec<usize>,
}

pub fn max_subgraph_density(g: &Graph) -> Result<DensestSubgraph, GraphError> {
    let n = g.num_vertices();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if g.num_edges() == 0 {
        return Ok(DensestSubgraph {
            density: Ratio::new(0, 1),
            witness: (0..n).collect(),
        });
    }

    // Peeling gives a lower bound and core numbers. Every vertex of a
    // densest set has at least that many neighbors inside it, so the
    // search can stay within the matching core, one component at a time.
    let order = degeneracy_order(g);
    let mut core = vec![0usize; n];
    let mut best = (Ratio::new(0, 1), 0);
    let mut edges_left = g.num_edges() as u64;
    let mut running = 0;
    for (i, (&v, &d)) in order.removal.iter().zip(&order.residual_degrees).enumerate() {
        let density = Ratio::new(edges_left, (n - i) as u64);
        if density > best.0 {
            best = (density, i);
        }
        running = running.max(d);
        core[v] = running;
        edges_left -= d as u64;
    }
    let mut witness = order.removal[best.1..].to_vec();
    witness.sort_unstable();
    let mut best = DensestSubgraph {
        density: best.0,
        witness,
    };

    let threshold = best.density.ceil().to_integer() as usize;
    let kept: Vec<usize> = (0..n).filter(|&v| core[v] >= threshold).collect();
    let (sub, ids) = g.induced_subgraph(&kept);
    for component in components(&sub) {
        let top = component.iter().map(|&v| core[ids[v]]).max().unwrap_or(0);
        if Ratio::from_integer(top as u64) <= best.density {
            continue;
        }
        let (part, _) = sub.induced_subgraph(&component);
        if let Some(found) = improve(&part, best.density) {
            let mut witness: Vec<usize> = found.witness.iter().map(|&v| ids[component[v]]).collect();
            witness.sort_unstable();
            best = DensestSubgraph {
                density: found.density,
                witness,
            };
        }
    }
    Ok(best)
}

/// Dinkelbach iteration from `floor`: the densest subgraph of `g` when it
/// is strictly denser than `floor`. Each cut returns the largest maximizer
/// of `e(S) - guess·|S|`, which contains every densest set, so later
/// iterations run on that set alone.
fn improve(g: &Graph, floor: Ratio<u64>) -> Option<DensestSubgraph> {
    let mut current = floor;
    let mut found = None;
    let mut graph = g.clone();
    let mut ids: Vec<usize> = (0..g.num_vertices()).collect();
    loop {
        let (a, b) = (*current.numer() as i64, *current.denom() as i64);
        let side = denser_side(&graph, a, b);
        if side.is_empty() {
            return found;
        }
        let e = graph.edges_within(&membership(graph.num_vertices(), &side)) as u64;
        let s = side.len() as u64;
        // Strict improvement keeps the iteration finite.
        if (b as u64) * e <= (a as u64) * s {
            return found;
        }
        current = Ratio::new(e, s);
        let (next, local) = graph.induced_subgraph(&side);
        ids = local.iter().map(|&v| ids[v]).collect();
        graph = next;
        found = Some(DensestSubgraph {
            density: current,
            witness: ids.clone(),
        });
    }
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.num_vertices();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut comp = vec![root];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Largest source side (without the source) of a minimum cut for guess `a/b`.
fn denser_side(g: &Graph, a: i64, b: i64) -> Vec<usize> {
    let n = g.num_vertices();
    let (source, sink) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        net.add_edge(source, v, b * g.degree(v) as i64, 0);
        net.add_edge(v, sink, 2 * a, 0);
    }
    for (u, v) in g.edges() {
        net.add_edge(u, v, b, b);
    }
    net.max_preflow(source, sink);
    let reach = net.reaching(sink);
    (0..n).filter(|&v| !reach[v]).collect()
}

/// Arc list where arc `e ^ 1` is the reverse of `e`. Cuts come from the
/// preflow phase of FIFO push-relabel with periodic global relabeling.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, cap: i64, rev_cap: i64) {
        debug_assert!(cap >= 0 && rev_cap >= 0);
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(cap);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(rev_cap);
    }

    /// Exact residual distances to `sink`; unreachable nodes get `nodes`.
    fn sink_distances(&self, sink: usize) -> Vec<usize> {
        let nodes = self.head.len();
        let mut dist = vec![nodes; nodes];
        dist[sink] = 0;
        let mut queue = VecDeque::from([sink]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e ^ 1] > 0 && dist[v] == nodes {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Maximum preflow: its value equals the maximum flow, and the residual
    /// graph separates the same minimum cuts.
    fn max_preflow(&mut self, source: usize, sink: usize) -> i64 {
        let nodes = self.head.len();
        let mut label = self.sink_distances(sink);
        label[source] = nodes;
        let mut excess = vec![0i64; nodes];
        let mut current = vec![0usize; nodes];
        let mut queue = VecDeque::new();
        for i in 0..self.head[source].len() {
            let e = self.head[source][i];
            let (w, c) = (self.to[e], self.cap[e]);
            if c > 0 {
                self.cap[e] = 0;
                self.cap[e ^ 1] += c;
                if excess[w] == 0 && w != sink && w != source {
                    queue.push_back(w);
                }
                excess[w] += c;
            }
        }

        let mut relabels = 0;
        while let Some(v) = queue.pop_front() {
            while excess[v] > 0 && label[v] < nodes {
                if current[v] == self.head[v].len() {
                    let mut low = nodes;
                    for &e in &self.head[v] {
                        if self.cap[e] > 0 {
                            low = low.min(label[self.to[e]] + 1);
                        }
                    }
                    label[v] = low.min(nodes);
                    current[v] = 0;
                    relabels += 1;
                    continue;
                }
                let e = self.head[v][current[v]];
                let w = self.to[e];
                if self.cap[e] > 0 && label[v] == label[w] + 1 {
                    let push = excess[v].min(self.cap[e]);
                    self.cap[e] -= push;
                    self.cap[e ^ 1] += push;
                    excess[v] -= push;
                    if excess[w] == 0 && w != sink && w != source {
                        queue.push_back(w);
                    }
                    excess[w] += push;
                } else {
                    current[v] += 1;
                }
            }
            if relabels >= nodes && !queue.is_empty() {
                relabels = 0;
                label = self.sink_distances(sink);
                label[source] = nodes;
                current.iter_mut().for_each(|c| *c = 0);
                queue = (0..nodes)
                    .filter(|&u| u != source && u != sink && excess[u] > 0 && label[u] < nodes)
                    .collect();
            }
        }
        excess[sink]
    }

    /// Nodes with a residual path to `sink`.
    fn reaching(&self, sink: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[sink] = true;
        let mut queue = VecDeque::from([sink]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e ^ 1] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}
