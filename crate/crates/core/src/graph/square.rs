use super::Graph;

/// The square of `g`: same vertices, with an edge between every pair at
/// distance one or two in `g`.
///
/// Each vertex's new list is the deduplicated union of its neighbors and
/// their neighbors, so the cost is the number of length-two walks.
pub fn square(g: &Graph) -> Graph {
    let n = g.num_vertices();
    let mut stamp = vec![usize::MAX; n];
    let mut adj = Vec::with_capacity(n);
    let mut scratch = Vec::new();
    for v in 0..n {
        scratch.clear();
        stamp[v] = v;
        for &u in g.neighbors(v) {
            if stamp[u] != v {
                stamp[u] = v;
                scratch.push(u);
            }
            for &w in g.neighbors(u) {
                if stamp[w] != v {
                    stamp[w] = v;
                    scratch.push(w);
                }
            }
        }
        scratch.sort_unstable();
        adj.push(scratch.clone());
    }
    Graph::from_sorted_adjacency(adj)
}
