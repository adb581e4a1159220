use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use super::{Color, ColoringError};
use crate::rng::{stream_rng, Stream};

/// Per-vertex color lists, each sorted and free of repeats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
    declared_size: usize,
}

impl ListAssignment {
    /// Validates that every list has at least `declared_size` distinct colors.
    pub fn new(lists: Vec<Vec<Color>>, declared_size: usize) -> Result<Self, ColoringError> {
        let mut sorted = Vec::with_capacity(lists.len());
        for (v, mut list) in lists.into_iter().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(ColoringError::RepeatedColor(v));
            }
            if list.len() < declared_size {
                return Err(ColoringError::ListTooShort {
                    vertex: v,
                    len: list.len(),
                    needed: declared_size,
                });
            }
            sorted.push(list);
        }
        Ok(ListAssignment {
            lists: sorted,
            declared_size,
        })
    }

    /// Every vertex gets `{0, .., k-1}`.
    pub fn shared(n: usize, k: usize) -> Self {
        ListAssignment {
            lists: vec![(0..k).collect(); n],
            declared_size: k,
        }
    }

    /// Every vertex gets `k` distinct colors drawn uniformly from
    /// `0..palette`, using the list stream of `seed`.
    pub fn random(n: usize, k: usize, palette: usize, seed: u64) -> Self {
        assert!(k <= palette, "cannot draw {k} distinct colors from a palette of {palette}");
        let mut rng = stream_rng(seed, Stream::Lists);
        let lists = (0..n)
            .map(|_| {
                let mut list = sample(&mut rng, palette, k).into_vec();
                list.sort_unstable();
                list
            })
            .collect();
        ListAssignment {
            lists,
            declared_size: k,
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn declared_size(&self) -> usize {
        self.declared_size
    }

    pub fn contains(&self, v: usize, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ListMode {
    /// Lists of the formula size `q`.
    FormulaQ,
    /// Lists of a caller-chosen size `k`.
    ExplicitK,
    /// Unbounded shared palette; records how many colors were needed.
    Adaptive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum ListSource {
    SharedPalette,
    /// `palette` defaults to twice the list size; `seed` defaults to the
    /// trial seed (read on its own stream).
    RandomLists {
        #[serde(default)]
        seed: Option<u64>,
        #[serde(default)]
        palette: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ListPolicy {
    pub mode: ListMode,
    #[serde(default)]
    pub k: Option<usize>,
    #[serde(default = "default_source")]
    pub source: ListSource,
}

fn default_source() -> ListSource {
    ListSource::SharedPalette
}

impl ListPolicy {
    pub fn adaptive() -> Self {
        ListPolicy {
            mode: ListMode::Adaptive,
            k: None,
            source: ListSource::SharedPalette,
        }
    }

    pub fn formula_q(source: ListSource) -> Self {
        ListPolicy {
            mode: ListMode::FormulaQ,
            k: None,
            source,
        }
    }

    pub fn explicit(k: usize, source: ListSource) -> Self {
        ListPolicy {
            mode: ListMode::ExplicitK,
            k: Some(k),
            source,
        }
    }

    /// Lists for `n` vertices, or `None` in adaptive mode.
    pub fn build_lists(&self, n: usize, q: usize) -> Result<Option<ListAssignment>, ColoringError> {
        let k = match self.mode {
            ListMode::Adaptive => return Ok(None),
            ListMode::FormulaQ => q,
            ListMode::ExplicitK => match self.k {
                Some(k) if k >= 1 => k,
                _ => return Err(ColoringError::MissingK("explicit-k")),
            },
        };
        Ok(Some(match self.source {
            ListSource::SharedPalette => ListAssignment::shared(n, k),
            ListSource::RandomLists { seed, palette } => {
                let palette = palette.unwrap_or(2 * k).max(k);
                ListAssignment::random(n, k, palette, seed.unwrap_or(0))
            }
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ListAssignment::new(vec![vec![1, 0], vec![2, 3]], 2).is_ok());
        assert_eq!(
            ListAssignment::new(vec![vec![1, 1]], 1),
            Err(ColoringError::RepeatedColor(0))
        );
        assert!(matches!(
            ListAssignment::new(vec![vec![1]], 2),
            Err(ColoringError::ListTooShort { .. })
        ));
    }

    #[test]
    fn random_lists_are_distinct_sorted_and_seeded() {
        let a = ListAssignment::random(50, 4, 8, 3);
        let b = ListAssignment::random(50, 4, 8, 3);
        assert_eq!(a, b);
        for v in 0..50 {
            let l = a.list(v);
            assert_eq!(l.len(), 4);
            assert!(l.windows(2).all(|w| w[0] < w[1]));
            assert!(l.iter().all(|&c| c < 8));
        }
        assert_ne!(a, ListAssignment::random(50, 4, 8, 4));
    }

    #[test]
    fn policy_json_shape() {
        let p = ListPolicy::explicit(
            5,
            ListSource::RandomLists {
                seed: None,
                palette: Some(12),
            },
        );
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"mode":"explicit-k","k":5,"source":{"kind":"random-lists","seed":null,"palette":12}}"#
        );
        let back: ListPolicy = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        let minimal: ListPolicy = serde_json::from_str(r#"{"mode":"adaptive"}"#).unwrap();
        assert_eq!(minimal, ListPolicy::adaptive());
    }
}
