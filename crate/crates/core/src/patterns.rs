//! Induced-subgraph detection.
//!
//! [`contains_induced`] is the generic backtracking detector; the specialized
//! searches for `C4`, induced paths and induced cycles are cross-checked
//! against it in tests. Chordality uses LexBFS plus an explicit check that
//! the produced ordering really is a perfect elimination ordering.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::graph::{Graph, VertexId, VertexSet};

/// Injective map from pattern vertices to host vertices preserving both
/// adjacency and non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedEmbedding {
    pub map: Vec<VertexId>,
}

impl InducedEmbedding {
    /// Re-checks the induced condition pair by pair.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        let distinct: VertexSet = self.map.iter().copied().collect();
        if distinct.len() != self.map.len() {
            return false;
        }
        (0..pattern.n()).all(|a| {
            (a + 1..pattern.n())
                .all(|b| pattern.has_edge(a, b) == host.has_edge(self.map[a], self.map[b]))
        })
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }
}

/// Pattern vertices in a connected search order: each component is visited
/// breadth-first from its highest-degree vertex, so every vertex after the
/// first of its component has an earlier neighbor.
fn search_order(pattern: &Graph) -> Vec<(VertexId, Option<VertexId>)> {
    let n = pattern.n();
    let mut placed = FixedBitSet::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed.insert(root);
        order.push((root, None));
        let mut head = order.len() - 1;
        while head < order.len() {
            let (u, _) = order[head];
            head += 1;
            for &w in pattern.neighbors(u) {
                if !placed.contains(w) {
                    placed.insert(w);
                    order.push((w, Some(u)));
                }
            }
        }
    }
    order
}

/// Finds an induced copy of `pattern` in `host`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<InducedEmbedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = FixedBitSet::with_capacity(host.n());
    if extend(host, pattern, &order, 0, &mut map, &mut used) {
        Some(InducedEmbedding { map })
    } else {
        None
    }
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[(VertexId, Option<VertexId>)],
    depth: usize,
    map: &mut [VertexId],
    used: &mut FixedBitSet,
) -> bool {
    let Some(&(p, anchor)) = order.get(depth) else {
        return true;
    };
    let need = pattern.degree(p);
    let candidates: Vec<VertexId> = match anchor {
        Some(a) => host.neighbors(map[a]).to_vec(),
        None => host.vertices().collect(),
    };
    for h in candidates {
        if used.contains(h) || host.degree(h) < need {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&(q, _)| pattern.has_edge(p, q) == host.has_edge(h, map[q]));
        if !consistent {
            continue;
        }
        map[p] = h;
        used.insert(h);
        if extend(host, pattern, order, depth + 1, map, used) {
            return true;
        }
        used.set(h, false);
        map[p] = usize::MAX;
    }
    false
}

/// Isomorphism test: equal order and size plus an induced embedding.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    da == db && contains_induced(a, b).is_some()
}

/// Path `P_k` on `0..k`.
pub fn path_pattern(k: usize) -> Graph {
    Graph::new(k, (1..k).map(|i| (i - 1, i))).expect("valid path")
}

/// Cycle `C_k` on `0..k`.
pub fn cycle_pattern(k: usize) -> Graph {
    Graph::new(k, (0..k).map(|i| (i, (i + 1) % k))).expect("valid cycle")
}

/// An induced `C4` as a cyclic vertex sequence `[u, a, v, b]`.
///
/// For every non-adjacent pair `u, v` the common neighborhood is scanned for
/// two non-adjacent members.
pub fn find_c4(g: &Graph) -> Option<[VertexId; 4]> {
    for u in g.vertices() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let mut common = g.neighbor_bits(u).clone();
            common.intersect_with(g.neighbor_bits(v));
            if common.count_ones(..) < 2 {
                continue;
            }
            for a in common.ones() {
                let mut rest = common.clone();
                rest.difference_with(g.neighbor_bits(a));
                if let Some(b) = rest.ones().find(|&b| b > a) {
                    return Some([u, a, v, b]);
                }
            }
        }
    }
    None
}

pub fn is_c4_free(g: &Graph) -> bool {
    find_c4(g).is_none()
}

/// An induced path on `k` vertices, in path order.
///
/// Grows induced paths one endpoint at a time; a candidate must be adjacent
/// to the current end and to no other path vertex.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<Vec<VertexId>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let n = g.n();
    let mut path = Vec::with_capacity(k);
    for s in 0..n {
        path.clear();
        path.push(s);
        let blocked = FixedBitSet::with_capacity(n);
        if grow_path(g, k, &mut path, blocked) {
            return Some(path);
        }
    }
    None
}

/// `blocked` holds every vertex that is on the path or adjacent to a path
/// vertex other than the current end.
fn grow_path(g: &Graph, k: usize, path: &mut Vec<VertexId>, blocked: FixedBitSet) -> bool {
    if path.len() == k {
        return true;
    }
    let end = *path.last().expect("non-empty path");
    let mut next_blocked = blocked;
    next_blocked.insert(end);
    for w in g.neighbors(end) {
        if next_blocked.contains(*w) {
            continue;
        }
        let mut b = next_blocked.clone();
        b.union_with(g.neighbor_bits(end));
        path.push(*w);
        if grow_path(g, k, path, b) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn is_p6_free(g: &Graph) -> bool {
    find_induced_path(g, 6).is_none()
}

/// Both freeness tests at once.
pub fn is_p6_c4_free(g: &Graph) -> bool {
    is_c4_free(g) && is_p6_free(g)
}

/// Visits every induced cycle of length `k` exactly once, in canonical form:
/// the smallest vertex first and the second vertex smaller than the last.
/// The visitor returns `false` to stop early.
pub fn for_each_induced_cycle<F>(g: &Graph, k: usize, mut visit: F)
where
    F: FnMut(&[VertexId]) -> bool,
{
    if k < 4 || k > g.n() {
        return;
    }
    let mut cycle = Vec::with_capacity(k);
    for s in g.vertices() {
        cycle.clear();
        cycle.push(s);
        if !cycle_search(g, k, &mut cycle, &mut visit) {
            return;
        }
    }
}

fn cycle_search<F>(g: &Graph, k: usize, cycle: &mut Vec<VertexId>, visit: &mut F) -> bool
where
    F: FnMut(&[VertexId]) -> bool,
{
    let s = cycle[0];
    let len = cycle.len();
    let end = cycle[len - 1];
    for &w in g.neighbors(end) {
        if w <= s || cycle.contains(&w) {
            continue;
        }
        // w must miss every earlier vertex except the end, and the closing
        // vertex additionally needs the edge back to the start.
        let closing = len + 1 == k;
        let ok = cycle[..len - 1].iter().enumerate().all(|(i, &c)| {
            let adjacent = g.has_edge(w, c);
            if i == 0 {
                adjacent == closing
            } else {
                !adjacent
            }
        });
        if !ok {
            continue;
        }
        if closing {
            if cycle[1] < w {
                cycle.push(w);
                let go_on = visit(cycle);
                cycle.pop();
                if !go_on {
                    return false;
                }
            }
        } else {
            cycle.push(w);
            let go_on = cycle_search(g, k, cycle, visit);
            cycle.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// An induced cycle of length `k`, listed in cycle order.
pub fn find_induced_cycle(g: &Graph, k: usize) -> Option<Vec<VertexId>> {
    let mut found = None;
    for_each_induced_cycle(g, k, |c| {
        found = Some(c.to_vec());
        false
    });
    found
}

/// Every induced cycle of length `k`, each once.
pub fn induced_cycles(g: &Graph, k: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for_each_induced_cycle(g, k, |c| {
        out.push(c.to_vec());
        true
    });
    out
}

/// Whether `seq` is an induced cycle of `g` in the given cyclic order.
pub fn is_induced_cycle(g: &Graph, seq: &[VertexId]) -> bool {
    let k = seq.len();
    if k < 3 || seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let distinct: VertexSet = seq.iter().copied().collect();
    if distinct.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(seq[i], seq[j]) == consecutive
        })
    })
}

/// Lexicographic breadth-first search order via partition refinement.
pub fn lex_bfs(g: &Graph) -> Vec<VertexId> {
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    if g.n() > 0 {
        classes.push(g.vertices().collect());
    }
    let mut order = Vec::with_capacity(g.n());
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        order.push(v);
        let mut refined = Vec::with_capacity(classes.len() * 2);
        for class in classes {
            let (inside, outside): (Vec<_>, Vec<_>) =
                class.into_iter().partition(|&u| g.has_edge(u, v));
            if !inside.is_empty() {
                refined.push(inside);
            }
            if !outside.is_empty() {
                refined.push(outside);
            }
        }
        classes = refined;
    }
    order
}

/// Whether `order` is a perfect elimination ordering: the neighbors of each
/// vertex that come later in the order form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[VertexId]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut position = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        if v >= g.n() || position[v] != usize::MAX {
            return false;
        }
        position[v] = i;
    }
    order.iter().all(|&v| {
        let later: VertexSet = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .collect();
        g.is_clique(&later)
    })
}

/// Chordality: the reverse of a LexBFS order is a perfect elimination
/// ordering exactly when the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let mut order = lex_bfs(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order)
}

/// A vertex whose neighborhood is a clique, lowest index first.
pub fn find_simplicial_vertex(g: &Graph) -> Option<VertexId> {
    g.vertices()
        .find(|&v| g.is_clique(&g.neighbors(v).iter().copied().collect()))
}
