use std::collections::VecDeque;

use super::{Graph, GraphError};

/// Breadth-first layers from `root`: layer `t` holds the vertices at
/// distance exactly `t`, for `t <= max_depth`. Each layer is sorted.
pub fn bfs_layers(g: &Graph, root: usize, max_depth: usize) -> Result<Vec<Vec<usize>>, GraphError> {
    let n = g.num_vertices();
    if root >= n {
        return Err(GraphError::VertexOutOfRange { vertex: root, n });
    }
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut layers = vec![vec![root]];
    while layers.len() <= max_depth {
        let mut next = Vec::new();
        for &u in layers.last().unwrap() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        layers.push(next);
    }
    Ok(layers)
}

/// Hop distances from `root`, `None` for unreachable vertices, exploring
/// no deeper than `max_depth`.
pub fn bfs_distances(g: &Graph, root: usize, max_depth: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.num_vertices()];
    dist[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        if d == max_depth {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_center_depth_one() {
        let layers = bfs_layers(&Graph::star(4), 0, 1).unwrap();
        assert_eq!(layers, vec![vec![0], vec![1, 2, 3, 4]]);
    }

    #[test]
    fn path_from_end() {
        let layers = bfs_layers(&Graph::path(5), 0, 9).unwrap();
        assert_eq!(layers, (0..5).map(|v| vec![v]).collect::<Vec<_>>());
    }

    #[test]
    fn depth_limit_is_respected() {
        let layers = bfs_layers(&Graph::path(5), 0, 2).unwrap();
        assert_eq!(layers.len(), 3);
        let d = bfs_distances(&Graph::path(5), 0, 2);
        assert_eq!(d, vec![Some(0), Some(1), Some(2), None, None]);
    }

    #[test]
    fn root_out_of_range() {
        assert!(bfs_layers(&Graph::path(2), 2, 1).is_err());
    }
}
