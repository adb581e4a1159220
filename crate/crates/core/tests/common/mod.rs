//! Brute-force references shared by the integration tests. None of these
//! call into the code they check.

#![allow(dead_code, clippy::needless_range_loop)]

use gnp_square::Graph;

pub const INF: usize = usize::MAX;

/// All-pairs distances by Floyd-Warshall over the adjacency test.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.num_vertices();
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                row[v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Pairs at distance one or two, as a sorted edge list.
pub fn square_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let d = distances(g);
    let n = g.num_vertices();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if d[u][v] == 1 || d[u][v] == 2 {
                out.push((u, v));
            }
        }
    }
    out
}

/// Densest subset by enumerating every non-empty subset: `(edges, size)`.
pub fn densest_by_enumeration(g: &Graph) -> (usize, usize) {
    let n = g.num_vertices();
    assert!(n <= 20);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = (0, 1);
    for mask in 1u32..(1 << n) {
        let e = edges
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count();
        let s = mask.count_ones() as usize;
        if e * best.1 > best.0 * s {
            best = (e, s);
        }
    }
    best
}

/// Largest `k` such that some subgraph has minimum degree `k`, found by
/// repeatedly deleting every vertex of degree below a candidate `k`.
pub fn degeneracy_by_cores(g: &Graph) -> usize {
    let n = g.num_vertices();
    let mut best = 0;
    for k in 1..n {
        let mut alive = vec![true; n];
        loop {
            let drop: Vec<usize> = (0..n)
                .filter(|&v| alive[v] && g.neighbors(v).iter().filter(|&&w| alive[w]).count() < k)
                .collect();
            if drop.is_empty() {
                break;
            }
            for v in drop {
                alive[v] = false;
            }
        }
        if alive.iter().any(|&a| a) {
            best = k;
        } else {
            break;
        }
    }
    best
}

/// For each vertex, how many members of `set` lie at distance one or two.
pub fn near_count(dist: &[Vec<usize>], set: &[bool]) -> Vec<usize> {
    (0..dist.len())
        .map(|v| (0..dist.len()).filter(|&w| set[w] && (dist[v][w] == 1 || dist[v][w] == 2)).count())
        .collect()
}

/// `(histogram, a1)` for outside vertices by scanning every pair.
pub fn type1_by_pairs(g: &Graph, s: &[usize]) -> (Vec<usize>, u64) {
    let n = g.num_vertices();
    let mut histogram = vec![0usize];
    let mut a1 = 0u64;
    for w in (0..n).filter(|w| !s.contains(w)) {
        let k = s.iter().filter(|&&v| g.has_edge(v, w)).count();
        if k == 0 {
            continue;
        }
        if histogram.len() <= k {
            histogram.resize(k + 1, 0);
        }
        histogram[k] += 1;
        a1 += (k * k) as u64;
    }
    (histogram, a1)
}

/// Triples `(v, x, y)` inside `s` with `x <= y` and both adjacent to `v`.
pub fn type2_by_triples(g: &Graph, s: &[usize]) -> u64 {
    let mut count = 0;
    for &v in s {
        for &x in s {
            for &y in s {
                if x <= y && g.has_edge(v, x) && g.has_edge(v, y) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Proper-coloring test straight from the definition.
pub fn is_proper(g: &Graph, colors: &[Option<usize>]) -> bool {
    colors.iter().all(Option::is_some) && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Smallest `k` admitting a proper coloring, by trying every assignment.
pub fn chromatic_by_assignments(g: &Graph) -> usize {
    let n = g.num_vertices();
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}

/// Exact maximum density `(edges, size)` by Dinkelbach iteration over an
/// Edmonds-Karp minimum cut on the whole graph (no pruning of any kind).
pub fn densest_by_plain_flow(g: &Graph) -> (usize, usize) {
    let n = g.num_vertices();
    let m = g.num_edges();
    let mut best = (m, n);
    loop {
        let (a, b) = (best.0 as i64, best.1 as i64);
        // Nodes: 0..n vertices, n source, n + 1 sink. Dense capacity matrix.
        let (s, t) = (n, n + 1);
        let mut cap = vec![vec![0i64; n + 2]; n + 2];
        for v in 0..n {
            cap[s][v] = m as i64 * b;
            cap[v][t] = m as i64 * b + 2 * a - b * g.degree(v) as i64;
        }
        for (u, v) in g.edges() {
            cap[u][v] = b;
            cap[v][u] = b;
        }
        loop {
            let mut parent = vec![usize::MAX; n + 2];
            parent[s] = s;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n + 2 {
                    if parent[v] == usize::MAX && cap[u][v] > 0 {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                let side: Vec<usize> = (0..n).filter(|&v| parent[v] != usize::MAX).collect();
                let e = g.edges().filter(|&(u, v)| side.contains(&u) && side.contains(&v)).count();
                if side.is_empty() || e * best.1 <= best.0 * side.len() {
                    return best;
                }
                best = (e, side.len());
                break;
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                push = push.min(cap[parent[v]][v]);
                v = parent[v];
            }
            let mut v = t;
            while v != s {
                cap[parent[v]][v] -= push;
                cap[v][parent[v]] += push;
                v = parent[v];
            }
        }
    }
}
