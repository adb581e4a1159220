use super::{Color, Coloring, ColoringError, ListAssignment, StuckVertex};
use crate::graph::{degeneracy_order, Graph};

/// Where colors come from.
#[derive(Debug, Clone, Copy)]
pub enum Palette<'a> {
    Lists(&'a ListAssignment),
    /// Every vertex may use any non-negative integer.
    Unbounded,
}

/// Colors vertices one at a time, each with the smallest color its palette
/// allows that no already-colored neighbor holds.
pub(crate) struct GreedyColorer<'g> {
    graph: &'g Graph,
    coloring: Coloring,
    scratch: Vec<Color>,
}

impl<'g> GreedyColorer<'g> {
    pub(crate) fn new(graph: &'g Graph) -> Self {
        GreedyColorer {
            graph,
            coloring: Coloring::uncolored(graph.num_vertices()),
            scratch: Vec::new(),
        }
    }

    /// Colors `v`; returns the number of colored neighbors it had.
    pub(crate) fn color_next(&mut self, v: usize, palette: Palette<'_>) -> Result<usize, StuckVertex> {
        self.scratch.clear();
        for &w in self.graph.neighbors(v) {
            if let Some(c) = self.coloring.color(w) {
                self.scratch.push(c);
            }
        }
        let colored_neighbors = self.scratch.len();
        self.scratch.sort_unstable();
        self.scratch.dedup();
        let taken = &self.scratch;
        let chosen = match palette {
            Palette::Unbounded => {
                // Smallest non-negative integer missing from the sorted set.
                let mut mex = 0;
                for &c in taken {
                    if c != mex {
                        break;
                    }
                    mex += 1;
                }
                Some(mex)
            }
            Palette::Lists(lists) => lists
                .list(v)
                .iter()
                .copied()
                .find(|c| taken.binary_search(c).is_err()),
        };
        match chosen {
            Some(c) => {
                self.coloring.set(v, c);
                Ok(colored_neighbors)
            }
            None => Err(StuckVertex {
                vertex: v,
                list: match palette {
                    Palette::Lists(lists) => lists.list(v).to_vec(),
                    Palette::Unbounded => Vec::new(),
                },
                neighbor_colors: taken.clone(),
                stage: None,
            }),
        }
    }

    pub(crate) fn finish(self) -> Coloring {
        self.coloring
    }
}

pub(crate) fn check_permutation(order: &[usize], n: usize) -> Result<(), ColoringError> {
    if order.len() != n {
        return Err(ColoringError::BadOrder(n));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(ColoringError::BadOrder(n));
        }
    }
    Ok(())
}

/// Greedy list coloring of `g2` along `order`.
///
/// A vertex whose list is exhausted by its colored neighbors ends the run
/// with [`ColoringError::Stuck`], carrying the vertex, its list and the
/// conflicting colors.
pub fn greedy_list_color(g2: &Graph, order: &[usize], lists: &ListAssignment) -> Result<Coloring, ColoringError> {
    let n = g2.num_vertices();
    if lists.len() != n {
        return Err(ColoringError::SizeMismatch { lists: lists.len(), n });
    }
    check_permutation(order, n)?;
    let mut greedy = GreedyColorer::new(g2);
    for &v in order {
        greedy
            .color_next(v, Palette::Lists(lists))
            .map_err(|s| ColoringError::Stuck(Box::new(s)))?;
    }
    Ok(greedy.finish())
}

/// Colors `g` from `lists` in reverse minimum-degree elimination order.
/// Lists shorter than `degeneracy + 1` are rejected up front; otherwise
/// every vertex sees at most `degeneracy` colored neighbors and the run
/// cannot get stuck.
pub fn degeneracy_color(g: &Graph, lists: &ListAssignment) -> Result<Coloring, ColoringError> {
    let n = g.num_vertices();
    if lists.len() != n {
        return Err(ColoringError::SizeMismatch { lists: lists.len(), n });
    }
    let order = degeneracy_order(g);
    let needed = order.degeneracy + 1;
    if let Some(v) = (0..n).find(|&v| lists.list(v).len() < needed) {
        return Err(ColoringError::ListTooShort {
            vertex: v,
            len: lists.list(v).len(),
            needed,
        });
    }
    greedy_list_color(g, &order.coloring_order(), lists)
}
