//! Exact clique number and chromatic number for small graphs.
//!
//! Both oracles work on 64-bit adjacency masks, so the hard ceiling is 64
//! vertices; the configured [`OracleLimits`] are usually much lower.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Coloring;
use crate::graph::{Graph, VertexId, VertexSet};

/// Largest graph the mask-based oracles can represent.
pub const MASK_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle limit of {limit}; skip exact verification")]
    TooLarge { n: usize, limit: usize },
    #[error("weight vector has {got} entries for {n} vertices")]
    WeightMismatch { got: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleLimits {
    pub clique: usize,
    pub chromatic: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            clique: 24,
            chromatic: 20,
        }
    }
}

impl OracleLimits {
    /// Same limit for both oracles, clamped to [`MASK_LIMIT`].
    pub fn uniform(limit: usize) -> Self {
        let limit = limit.min(MASK_LIMIT);
        Self {
            clique: limit,
            chromatic: limit,
        }
    }
}

fn check_size(n: usize, limit: usize) -> Result<(), OracleError> {
    let limit = limit.min(MASK_LIMIT);
    if n > limit {
        Err(OracleError::TooLarge { n, limit })
    } else {
        Ok(())
    }
}

/// Vertex order of a degeneracy elimination (repeatedly drop a minimum
/// degree vertex), reversed so dense cores come first.
fn degeneracy_order(g: &Graph) -> Vec<VertexId> {
    let n = g.n();
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertex left");
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    order.reverse();
    order
}

struct CliqueSearch {
    adj: Vec<u64>,
    weight: Vec<usize>,
    best: usize,
    best_set: u64,
}

impl CliqueSearch {
    /// Greedy coloring of `cand`; returns vertices with the cumulative
    /// weight bound of their color class, in increasing bound order.
    fn color_sort(&self, cand: u64) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(cand.count_ones() as usize);
        let mut uncolored = cand;
        let mut bound = 0;
        while uncolored != 0 {
            let mut q = uncolored;
            let mut class_max = 0;
            let mut class = Vec::new();
            while q != 0 {
                let v = q.trailing_zeros() as usize;
                q &= !(1u64 << v);
                q &= !self.adj[v];
                uncolored &= !(1u64 << v);
                class_max = class_max.max(self.weight[v]);
                class.push(v);
            }
            bound += class_max;
            out.extend(class.into_iter().map(|v| (v, bound)));
        }
        out
    }

    fn expand(&mut self, mut cand: u64, cur: u64, cur_weight: usize) {
        if cand == 0 {
            if cur_weight > self.best {
                self.best = cur_weight;
                self.best_set = cur;
            }
            return;
        }
        let sorted = self.color_sort(cand);
        for &(v, bound) in sorted.iter().rev() {
            if cur_weight + bound <= self.best {
                return;
            }
            let bit = 1u64 << v;
            self.expand(cand & self.adj[v], cur | bit, cur_weight + self.weight[v]);
            cand &= !bit;
        }
        if cur_weight > self.best {
            self.best = cur_weight;
            self.best_set = cur;
        }
    }
}

/// Maximum total weight of a clique, with a witness. Ties resolve towards
/// the first clique found in degeneracy order.
pub fn max_weight_clique(g: &Graph, weights: &[usize]) -> Result<(usize, VertexSet), OracleError> {
    check_size(g.n(), MASK_LIMIT)?;
    if weights.len() != g.n() {
        return Err(OracleError::WeightMismatch {
            got: weights.len(),
            n: g.n(),
        });
    }
    let order = degeneracy_order(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj = order
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |acc, &w| acc | (1u64 << position[w]))
        })
        .collect();
    let mut search = CliqueSearch {
        adj,
        weight: order.iter().map(|&v| weights[v]).collect(),
        best: 0,
        best_set: 0,
    };
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    search.expand(all, 0, 0);
    let witness = (0..g.n())
        .filter(|&i| search.best_set & (1u64 << i) != 0)
        .map(|i| order[i])
        .collect();
    Ok((search.best, witness))
}

/// Exact clique number `ω(G)` with a witness clique.
pub fn max_clique_bruteforce(g: &Graph, limit: usize) -> Result<(usize, VertexSet), OracleError> {
    check_size(g.n(), limit)?;
    max_weight_clique(g, &vec![1; g.n()])
}

struct ColorSearch<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    best: Vec<usize>,
    upper: usize,
    lower: usize,
}

impl ColorSearch<'_> {
    fn saturation(&self, v: VertexId) -> usize {
        let mut seen = 0u128;
        let mut count = 0;
        for &w in self.g.neighbors(v) {
            let c = self.colors[w];
            if c != 0 && seen & (1u128 << c) == 0 {
                seen |= 1u128 << c;
                count += 1;
            }
        }
        count
    }

    fn pick(&self) -> Option<VertexId> {
        self.g
            .vertices()
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| {
                let uncolored = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| self.colors[w] == 0)
                    .count();
                (self.saturation(v), uncolored, std::cmp::Reverse(v))
            })
    }

    fn search(&mut self, used: usize) {
        if self.upper == self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.upper {
                self.upper = used;
                self.best = self.colors.clone();
            }
            return;
        };
        let mut forbidden = 0u128;
        for &w in self.g.neighbors(v) {
            forbidden |= 1u128 << self.colors[w];
        }
        let top = (used + 1).min(self.upper - 1);
        for c in 1..=top {
            if forbidden & (1u128 << c) != 0 {
                continue;
            }
            self.colors[v] = c;
            self.search(used.max(c));
            self.colors[v] = 0;
            if self.upper == self.lower {
                return;
            }
        }
    }
}

/// Exact chromatic number with an optimal coloring: DSATUR branch and bound
/// seeded with a maximum clique as lower bound and fixed first colors.
pub fn chromatic_number_bruteforce(
    g: &Graph,
    limit: usize,
) -> Result<(usize, Coloring), OracleError> {
    check_size(g.n(), limit)?;
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    let (omega, clique) = max_weight_clique(g, &vec![1; n])?;
    let greedy = super::greedy_coloring(g);
    let mut search = ColorSearch {
        g,
        colors: vec![0; n],
        best: greedy.colors().to_vec(),
        upper: greedy.palette(),
        lower: omega,
    };
    if search.upper > search.lower {
        for (i, v) in clique.iter().enumerate() {
            search.colors[v] = i + 1;
        }
        search.search(omega);
    }
    let chi = search.upper;
    Ok((chi, Coloring::new(search.best)))
}
