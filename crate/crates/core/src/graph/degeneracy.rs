use super::Graph;

/// Result of repeatedly deleting a vertex of minimum residual degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrder {
    /// Vertices in the order they were removed.
    pub removal: Vec<usize>,
    /// Residual degree of `removal[i]` at the moment it was removed.
    pub residual_degrees: Vec<usize>,
    pub degeneracy: usize,
}

impl DegeneracyOrder {
    /// Reverse removal order; greedy coloring along it sees at most
    /// `degeneracy` already-colored neighbors per vertex.
    pub fn coloring_order(&self) -> Vec<usize> {
        self.removal.iter().rev().copied().collect()
    }
}

/// Minimum-degree elimination in O(n + m) with lazily cleaned buckets.
/// Ties are broken towards the most recently touched vertex, which is
/// deterministic for a given graph.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    let n = g.num_vertices();
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); g.max_degree() + 1];
    for v in (0..n).rev() {
        buckets[degree[v]].push(v);
    }

    let mut removal = Vec::with_capacity(n);
    let mut residual_degrees = Vec::with_capacity(n);
    let mut degeneracy = 0;
    let mut level = 0;
    while removal.len() < n {
        let v = loop {
            match buckets[level].pop() {
                Some(v) if !removed[v] && degree[v] == level => break v,
                Some(_) => continue,
                None => level += 1,
            }
        };
        removed[v] = true;
        removal.push(v);
        residual_degrees.push(level);
        degeneracy = degeneracy.max(level);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                buckets[degree[w]].push(w);
            }
        }
        level = level.saturating_sub(1);
    }
    DegeneracyOrder {
        removal,
        residual_degrees,
        degeneracy,
    }
}
