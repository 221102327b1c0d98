//! Immutable simple undirected graphs and the constructive operations used
//! throughout the crate: induced subgraphs, joins, disjoint unions, blow-ups,
//! complements and vertex removal.
//!
//! Every operation is a pure function returning a new [`Graph`]. Vertex ids
//! are dense indices `0..n`; operations that drop vertices re-index the
//! survivors and hand back an explicit [`Relabeling`].

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex inside one particular [`Graph`] value.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("blow-up needs one size per vertex: got {got}, expected {expected}")]
    SizeCountMismatch { got: usize, expected: usize },
    #[error("blow-up size of vertex {0} must be at least 1")]
    ZeroBlowupSize(VertexId),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn singleton(v: VertexId) -> Self {
        Self(vec![v])
    }

    /// The full vertex range `0..n`.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    /// Image of the set under a vertex map.
    pub fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Self {
        self.0.iter().map(|&v| f(v)).collect()
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> Self {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut v: Vec<VertexId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<VertexId>> for VertexSet {
    fn from(v: Vec<VertexId>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a VertexId;
    type IntoIter = std::slice::Iter<'a, VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Correspondence between the vertices of a graph and one derived from it by
/// deleting vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    /// `old_to_new[v]` is the id of `v` in the derived graph, if it survived.
    pub old_to_new: Vec<Option<VertexId>>,
    /// `new_to_old[w]` is the id in the source graph of derived vertex `w`.
    pub new_to_old: Vec<VertexId>,
}

impl Relabeling {
    fn from_kept(n_old: usize, kept: &[VertexId]) -> Self {
        let mut old_to_new = vec![None; n_old];
        for (new, &old) in kept.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        Self {
            old_to_new,
            new_to_old: kept.to_vec(),
        }
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept twice: as sorted neighbor lists for iteration and as
/// bitset rows for constant-time membership.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    rows: Vec<FixedBitSet>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices with the given edges; duplicates collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![FixedBitSet::with_capacity(n); n])
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let rows = (0..n)
            .map(|v| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert_range(..);
                row.set(v, false);
                row
            })
            .collect();
        Self::from_rows(rows)
    }

    fn from_rows(rows: Vec<FixedBitSet>) -> Self {
        let adj: Vec<Vec<VertexId>> = rows.iter().map(|r| r.ones().collect()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Self { adj, rows, m }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Neighborhood of `v` as a bitset row.
    pub fn neighbor_bits(&self, v: VertexId) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v < self.n()
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Whether the vertices of `set` are pairwise adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether the whole graph is complete.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n == 0 || self.m == n * (n - 1) / 2
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::new())
    }

    /// Connected components of `G - removed`.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = FixedBitSet::with_capacity(n);
        for v in removed.iter() {
            seen.insert(v);
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::from(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `set`, re-indexed in increasing order of old id.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Relabeling), GraphError> {
        for v in set.iter() {
            self.check_vertex(v)?;
        }
        let kept = set.as_slice();
        let relabel = Relabeling::from_kept(self.n(), kept);
        let k = kept.len();
        let rows = kept
            .iter()
            .map(|&old| {
                let mut row = FixedBitSet::with_capacity(k);
                for &w in &self.adj[old] {
                    if let Some(nw) = relabel.old_to_new[w] {
                        row.insert(nw);
                    }
                }
                row
            })
            .collect();
        Ok((Self::from_rows(rows), relabel))
    }

    /// `G - v`. Vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: VertexId) -> Result<(Graph, Relabeling), GraphError> {
        self.check_vertex(v)?;
        let kept: VertexSet = self.vertices().filter(|&u| u != v).collect();
        self.induced_subgraph(&kept)
    }

    /// `G - set`.
    pub fn remove_vertices(&self, set: &VertexSet) -> Result<(Graph, Relabeling), GraphError> {
        for v in set.iter() {
            self.check_vertex(v)?;
        }
        let kept: VertexSet = self.vertices().filter(|&u| !set.contains(u)).collect();
        self.induced_subgraph(&kept)
    }

    /// Disjoint union `G + H`; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// Join of `G` and `H`: the disjoint union plus every edge between them.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Graph {
        let (a, b) = (self.n(), other.n());
        let total = a + b;
        let mut rows = Vec::with_capacity(total);
        for v in 0..a {
            let mut row = FixedBitSet::with_capacity(total);
            row.extend(self.adj[v].iter().copied());
            if cross {
                row.insert_range(a..total);
            }
            rows.push(row);
        }
        for v in 0..b {
            let mut row = FixedBitSet::with_capacity(total);
            row.extend(other.adj[v].iter().map(|&w| w + a));
            if cross {
                row.insert_range(..a);
            }
            rows.push(row);
        }
        Self::from_rows(rows)
    }

    /// Replaces every vertex `v` by a clique of `sizes[v]` vertices; cliques
    /// of adjacent vertices are complete to each other, others anti-complete.
    ///
    /// Returns the blown-up graph and, for every new vertex, the vertex of
    /// `self` whose clique it belongs to. New vertices are laid out class by
    /// class in order of the original vertex.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<(Graph, Vec<VertexId>), GraphError> {
        if sizes.len() != self.n() {
            return Err(GraphError::SizeCountMismatch {
                got: sizes.len(),
                expected: self.n(),
            });
        }
        if let Some(v) = sizes.iter().position(|&s| s == 0) {
            return Err(GraphError::ZeroBlowupSize(v));
        }
        let class_of: Vec<VertexId> = sizes
            .iter()
            .enumerate()
            .flat_map(|(v, &s)| std::iter::repeat_n(v, s))
            .collect();
        let mut start = Vec::with_capacity(self.n());
        let mut acc = 0;
        for &s in sizes {
            start.push(acc);
            acc += s;
        }
        let total = acc;
        let class_rows: Vec<FixedBitSet> = self
            .vertices()
            .map(|v| {
                let mut row = FixedBitSet::with_capacity(total);
                row.insert_range(start[v]..start[v] + sizes[v]);
                for &w in &self.adj[v] {
                    row.insert_range(start[w]..start[w] + sizes[w]);
                }
                row
            })
            .collect();
        let rows = class_of
            .iter()
            .enumerate()
            .map(|(x, &v)| {
                let mut row = class_rows[v].clone();
                row.set(x, false);
                row
            })
            .collect();
        Ok((Self::from_rows(rows), class_of))
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = self
            .vertices()
            .map(|v| {
                let mut row = self.rows[v].clone();
                row.toggle_range(..);
                row.set(v, false);
                row
            })
            .collect();
        debug_assert_eq!(self.rows.first().map_or(n, FixedBitSet::len), n);
        Self::from_rows(rows)
    }

    /// Full scan of the structural invariants: symmetry, no loops, cached
    /// edge count, consistency of the two adjacency views.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        let mut degree_sum = 0;
        for v in 0..n {
            if self.rows[v].len() != n || self.rows[v].contains(v) {
                return false;
            }
            if !self.adj[v].windows(2).all(|w| w[0] < w[1]) {
                return false;
            }
            if self.adj[v].len() != self.rows[v].count_ones(..) {
                return false;
            }
            for &w in &self.adj[v] {
                if !self.rows[v].contains(w) || !self.rows[w].contains(v) {
                    return false;
                }
            }
            degree_sum += self.adj[v].len();
        }
        degree_sum == 2 * self.m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> Graph {
        Graph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, [(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, n: 3 }
        );
        assert_eq!(
            Graph::new(3, [(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    #[test]
    fn build_examples() {
        let g = Graph::new(3, []).unwrap();
        assert_eq!((g.n(), g.m()), (3, 0));
        let c5 = cycle(5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
        let g = Graph::new(4, [(0, 1), (0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert!(g.check_invariants());
    }

    #[test]
    fn induced_path_in_cycle() {
        let (p4, map) = cycle(5)
            .induced_subgraph(&VertexSet::from(vec![0, 1, 2, 3]))
            .unwrap();
        assert_eq!(p4.m(), 3);
        assert_eq!(p4.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(map.old_to_new[4], None);
        assert_eq!(map.new_to_old, vec![0, 1, 2, 3]);
    }

    #[test]
    fn induced_subgraph_rejects_foreign_vertices() {
        assert!(cycle(5)
            .induced_subgraph(&VertexSet::from(vec![2, 7]))
            .is_err());
    }

    #[test]
    fn clique_is_hereditary() {
        let (k3, _) = Graph::complete(5)
            .induced_subgraph(&VertexSet::from(vec![0, 2, 4]))
            .unwrap();
        assert!(k3.is_complete());
        assert_eq!(k3.m(), 3);
    }

    #[test]
    fn join_and_union_counts() {
        let wheel = Graph::complete(1).join(&cycle(5));
        assert_eq!(wheel.degree(0), 5);
        assert_eq!(wheel.m(), 10);
        assert_eq!(Graph::empty(0).join(&cycle(5)), cycle(5));
        assert_eq!(Graph::empty(0).disjoint_union(&cycle(5)), cycle(5));

        let p2 = Graph::complete(2);
        let two_p2 = p2.disjoint_union(&p2);
        assert_eq!((two_p2.n(), two_p2.m()), (4, 2));
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(two_k3.m(), 6);
        assert_eq!(two_k3.components().len(), 2);
    }

    #[test]
    fn blow_up_examples() {
        let (g, classes) = cycle(5).blow_up(&[1; 5]).unwrap();
        assert_eq!(g, cycle(5));
        assert_eq!(classes, vec![0, 1, 2, 3, 4]);

        let (k5, classes) = Graph::complete(2).blow_up(&[2, 3]).unwrap();
        assert!(k5.is_complete());
        assert_eq!(k5.n(), 5);
        assert_eq!(classes, vec![0, 0, 1, 1, 1]);
    }

    #[test]
    fn blow_up_rejects_bad_sizes() {
        assert_eq!(
            cycle(5).blow_up(&[1, 1, 0, 1, 1]).unwrap_err(),
            GraphError::ZeroBlowupSize(2)
        );
        assert!(matches!(
            cycle(5).blow_up(&[1, 1]).unwrap_err(),
            GraphError::SizeCountMismatch {
                got: 2,
                expected: 5
            }
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        let comp = c5.complement();
        assert!(comp.degrees().iter().all(|&d| d == 2));
        assert!(comp.is_connected());
    }

    #[test]
    fn remove_vertex_examples() {
        let (k3, map) = Graph::complete(4).remove_vertex(1).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map.new_to_old, vec![0, 2, 3]);
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(g.remove_vertex(2).unwrap().0.m(), 1);
        assert!(g.remove_vertex(3).is_err());
    }

    #[test]
    fn vertex_set_semantics() {
        let mut s: VertexSet = [3, 1, 3, 2].into_iter().collect();
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert!(!s.insert(2));
        assert!(s.insert(0));
        assert!(s.contains(0));
        assert_eq!(
            s.difference(&VertexSet::from(vec![1, 2])).as_slice(),
            &[0, 3]
        );
    }
}
