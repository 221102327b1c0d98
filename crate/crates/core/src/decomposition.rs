//! Clique-cutset decomposition of (P6, C4)-free graphs.
//!
//! A connected graph is split along a clique cutset whenever one exists.
//! Atoms are either cliques, joins of a Petersen or `F` blow-up with a
//! clique (the strong-atom leaves), or they lose a minimum-degree vertex and
//! the procedure recurses. The result is a [`DecompTree`] whose nodes keep
//! their graphs together with the map back to root vertex ids.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::oracle::{max_weight_clique, OracleError};
use crate::generators::{f_graph, petersen};
use crate::graph::{Graph, GraphError, VertexId, VertexSet};
use crate::patterns::{is_c4_free, is_isomorphic, is_p6_free};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("input graph is disconnected; decompose each component separately")]
    Disconnected,
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("graph has a clique cutset, expected an atom")]
    NotAnAtom,
    #[error("graph is a clique")]
    IsClique,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Partition of the vertices into classes of true twins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// Classes ordered by their smallest member.
    pub classes: Vec<VertexSet>,
    /// `class_of[v]` is the index of the class containing `v`.
    pub class_of: Vec<usize>,
    /// Smallest member of each class.
    pub representatives: Vec<VertexId>,
    /// Subgraph induced by the representatives; skeleton vertex `i` stands
    /// for class `i`.
    pub skeleton: Graph,
}

impl TwinPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(VertexSet::len).collect()
    }

    /// Checks that `g` is exactly the blow-up of the skeleton by the classes.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.class_of.len() != n || self.skeleton.n() != self.classes.len() {
            return false;
        }
        let covered: usize = self.classes.iter().map(VertexSet::len).sum();
        if covered != n {
            return false;
        }
        for (i, class) in self.classes.iter().enumerate() {
            if class.iter().any(|v| self.class_of[v] != i) {
                return false;
            }
        }
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                let (cu, cv) = (self.class_of[u], self.class_of[v]);
                let expected = cu == cv || self.skeleton.has_edge(cu, cv);
                g.has_edge(u, v) == expected
            })
        })
    }
}

/// Groups vertices by closed neighborhood: `u` and `v` are true twins
/// exactly when `N[u] = N[v]`.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    let mut index: HashMap<Vec<VertexId>, usize> = HashMap::with_capacity(n);
    for v in g.vertices() {
        let ns = g.neighbors(v);
        let split = ns.partition_point(|&w| w < v);
        let mut closed = Vec::with_capacity(ns.len() + 1);
        closed.extend_from_slice(&ns[..split]);
        closed.push(v);
        closed.extend_from_slice(&ns[split..]);
        let next = classes.len();
        let c = *index.entry(closed).or_insert(next);
        if c == next {
            classes.push(Vec::new());
        }
        classes[c].push(v);
        class_of[v] = c;
    }
    let representatives: Vec<VertexId> = classes.iter().map(|c| c[0]).collect();
    let (skeleton, _) = g
        .induced_subgraph(&representatives.iter().copied().collect())
        .expect("representatives are vertices");
    TwinPartition {
        classes: classes.into_iter().map(VertexSet::from).collect(),
        class_of,
        representatives,
        skeleton,
    }
}

/// Vertices adjacent to every other vertex.
pub fn universal_vertices(g: &Graph) -> VertexSet {
    let n = g.n();
    g.vertices().filter(|&v| g.degree(v) + 1 == n).collect()
}

/// Minimum-degree vertex, lowest index on ties.
pub fn min_degree_vertex(g: &Graph) -> Result<VertexId, DecompError> {
    g.vertices()
        .min_by_key(|&v| (g.degree(v), v))
        .ok_or(DecompError::EmptyGraph)
}

/// Minimal elimination ordering by MCS-M.
///
/// Returns the elimination order (first eliminated first) and, for every
/// vertex, its higher neighbors in the minimal triangulation.
pub fn minimal_elimination_ordering(g: &Graph) -> (Vec<VertexId>, Vec<VertexSet>) {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = FixedBitSet::with_capacity(n);
    let mut madj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut picked = Vec::with_capacity(n);
    let mut buckets: Vec<Vec<VertexId>> = vec![Vec::new(); n + 1];
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&u| !numbered.contains(u))
            .max_by_key(|&u| (weight[u], std::cmp::Reverse(u)))
            .expect("unnumbered vertex");
        // Every unnumbered u reachable from v through unnumbered vertices of
        // weight strictly below weight[u] gains a triangulation edge to v.
        let mut reached = numbered.clone();
        reached.insert(v);
        let mut raise = Vec::new();
        for &u in g.neighbors(v) {
            if !reached.contains(u) {
                reached.insert(u);
                raise.push(u);
                buckets[weight[u]].push(u);
            }
        }
        for j in 0..=n {
            while let Some(y) = buckets[j].pop() {
                for &z in g.neighbors(y) {
                    if reached.contains(z) {
                        continue;
                    }
                    reached.insert(z);
                    if weight[z] > j {
                        raise.push(z);
                        buckets[weight[z]].push(z);
                    } else {
                        buckets[j].push(z);
                    }
                }
            }
        }
        for u in raise {
            weight[u] += 1;
            madj[u].push(v);
        }
        numbered.insert(v);
        picked.push(v);
    }
    picked.reverse();
    (picked, madj.into_iter().map(VertexSet::from).collect())
}

/// A clique cutset together with the component of `G - cutset` that the
/// decomposition splits off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCut {
    pub cutset: VertexSet,
    pub component: VertexSet,
}

/// Tarjan's clique-cutset search: scans a minimal elimination ordering and
/// tests each triangulation neighborhood for being a clique of `G` that
/// separates it. Every clique minimal separator shows up as one of these
/// neighborhoods, so no cut is missed. The returned cutset is a minimal
/// separator.
pub fn find_clique_cut(g: &Graph) -> Result<Option<CliqueCut>, DecompError> {
    if g.is_empty() {
        return Err(DecompError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(DecompError::Disconnected);
    }
    let (order, madj) = minimal_elimination_ordering(g);
    for x in order {
        let s = &madj[x];
        if s.is_empty() || !g.is_clique(s) {
            continue;
        }
        let comps = g.components_avoiding(s);
        if comps.len() >= 2 {
            let own = comps
                .into_iter()
                .find(|c| c.contains(x))
                .expect("x lies outside its own cutset");
            return Ok(Some(shrink_cut(g, x, &own)));
        }
    }
    Ok(None)
}

/// Shrinks a separating clique to a minimal separator inside it: the
/// neighborhood of some component on the far side of `N(own)`.
fn shrink_cut(g: &Graph, x: VertexId, own: &VertexSet) -> CliqueCut {
    let boundary = neighborhood(g, own);
    let far = g
        .components_avoiding(&own.union(&boundary))
        .into_iter()
        .next()
        .expect("cutset separates");
    let cutset = neighborhood(g, &far);
    let component = g
        .components_avoiding(&cutset)
        .into_iter()
        .find(|c| c.contains(x))
        .expect("x lies outside the cutset");
    CliqueCut { cutset, component }
}

fn neighborhood(g: &Graph, set: &VertexSet) -> VertexSet {
    set.iter()
        .flat_map(|v| g.neighbors(v).iter().copied())
        .filter(|&w| !set.contains(w))
        .collect()
}

/// A clique whose removal disconnects the connected graph `g`, if any.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<VertexSet>, DecompError> {
    Ok(find_clique_cut(g)?.map(|c| c.cutset))
}

/// Connected, no clique cutset.
pub fn is_atom(g: &Graph) -> Result<bool, DecompError> {
    Ok(find_clique_cut(g)?.is_none())
}

/// (P6, C4)-freeness, tested on the twin skeleton: an induced `P6` or `C4`
/// never contains two true twins, so the graph is free iff its skeleton is.
pub fn in_class(g: &Graph) -> bool {
    let skeleton = twin_partition(g).skeleton;
    is_c4_free(&skeleton) && is_p6_free(&skeleton)
}

pub fn is_petersen(g: &Graph) -> bool {
    g.n() == 10 && is_isomorphic(g, &petersen())
}

pub fn is_f_graph(g: &Graph) -> bool {
    g.n() == 9 && is_isomorphic(g, &f_graph())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SkeletonKind {
    Petersen,
    F,
}

impl SkeletonKind {
    pub fn of(skeleton: &Graph) -> Option<Self> {
        if is_petersen(skeleton) {
            Some(Self::Petersen)
        } else if is_f_graph(skeleton) {
            Some(Self::F)
        } else {
            None
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            Self::Petersen => petersen(),
            Self::F => f_graph(),
        }
    }
}

/// A strong-atom leaf: `join(blow_up(skeleton, sizes), K_|universal|)`.
/// Vertex ids refer to the leaf graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupLeaf {
    pub kind: SkeletonKind,
    /// Number of vertices of the leaf graph.
    pub n: usize,
    /// Twin classes of the non-universal part; class `i` blows up skeleton
    /// vertex `i`.
    pub classes: Vec<VertexSet>,
    pub skeleton: Graph,
    /// The universal vertices, forming the clique part of the join.
    pub universal: VertexSet,
}

impl BlowupLeaf {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(VertexSet::len).collect()
    }

    /// Internal consistency: classes and universal part partition the
    /// vertices and the skeleton has the claimed kind.
    pub fn is_well_formed(&self) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.n);
        for v in self
            .classes
            .iter()
            .flatten()
            .chain(self.universal.as_slice())
        {
            if *v >= self.n || seen.contains(*v) {
                return false;
            }
            seen.insert(*v);
        }
        seen.count_ones(..) == self.n
            && self.classes.iter().all(|c| !c.is_empty())
            && self.skeleton.n() == self.classes.len()
            && SkeletonKind::of(&self.skeleton) == Some(self.kind)
    }

    /// Whether `g` is exactly the join this leaf describes.
    pub fn matches(&self, g: &Graph) -> bool {
        if g.n() != self.n || !self.is_well_formed() {
            return false;
        }
        let mut class_of = vec![usize::MAX; self.n];
        for (i, c) in self.classes.iter().enumerate() {
            for v in c.iter() {
                class_of[v] = i;
            }
        }
        (0..self.n).all(|u| {
            (u + 1..self.n).all(|v| {
                let expected = match (class_of[u], class_of[v]) {
                    (usize::MAX, _) | (_, usize::MAX) => true,
                    (a, b) => a == b || self.skeleton.has_edge(a, b),
                };
                g.has_edge(u, v) == expected
            })
        })
    }
}

/// Leaf test without the atom precondition check.
fn strong_atom_leaf(g: &Graph) -> Option<BlowupLeaf> {
    let universal = universal_vertices(g);
    let (rest, relabel) = g.remove_vertices(&universal).expect("own vertices");
    let tp = twin_partition(&rest);
    let kind = SkeletonKind::of(&tp.skeleton)?;
    let leaf = BlowupLeaf {
        kind,
        n: g.n(),
        classes: tp
            .classes
            .iter()
            .map(|c| c.map(|v| relabel.new_to_old[v]))
            .collect(),
        skeleton: tp.skeleton,
        universal,
    };
    debug_assert!(leaf.matches(g));
    Some(leaf)
}

/// Recognizes a strong atom of the form `join(blow_up(H, sizes), K_k)` with
/// `H` the Petersen graph or `F`. `g` must be an atom and not a clique.
pub fn classify_strong_atom_leaf(g: &Graph) -> Result<Option<BlowupLeaf>, DecompError> {
    if g.is_complete() {
        return Err(DecompError::IsClique);
    }
    if !is_atom(g)? {
        return Err(DecompError::NotAnAtom);
    }
    Ok(strong_atom_leaf(g))
}

/// Which case of the atom classification a graph falls into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtomClassification {
    /// A vertex of degree at most `3/2·ω - 1`.
    Small(VertexId),
    Universal(VertexId),
    PetersenBlowup(TwinPartition),
    FBlowup(TwinPartition),
    /// No case verifies; the input is not a (P6, C4)-free atom.
    NotInClass,
}

impl AtomClassification {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Small(_) => "small",
            Self::Universal(_) => "universal",
            Self::PetersenBlowup(_) => "petersen-blowup",
            Self::FBlowup(_) => "f-blowup",
            Self::NotInClass => "not-in-class",
        }
    }
}

/// `d ≤ 3/2·ω - 1`, in integers.
pub fn is_small_degree(degree: usize, omega: usize) -> bool {
    2 * degree + 2 <= 3 * omega
}

/// Exact clique number via a weighted clique search on the twin skeleton;
/// limited by the skeleton size, not the graph size.
pub fn clique_number(g: &Graph) -> Result<usize, DecompError> {
    let tp = twin_partition(g);
    Ok(max_weight_clique(&tp.skeleton, &tp.sizes())?.0)
}

/// Finds a verified witness for one of: small vertex, universal vertex,
/// Petersen blow-up, `F` blow-up (tested in that order).
pub fn classify_atom(g: &Graph) -> Result<AtomClassification, DecompError> {
    if g.is_empty() {
        return Err(DecompError::EmptyGraph);
    }
    let omega = clique_number(g)?;
    let v = min_degree_vertex(g)?;
    if is_small_degree(g.degree(v), omega) {
        return Ok(AtomClassification::Small(v));
    }
    if let Some(u) = universal_vertices(g).first() {
        return Ok(AtomClassification::Universal(u));
    }
    let tp = twin_partition(g);
    Ok(match SkeletonKind::of(&tp.skeleton) {
        Some(SkeletonKind::Petersen) => AtomClassification::PetersenBlowup(tp),
        Some(SkeletonKind::F) => AtomClassification::FBlowup(tp),
        None => AtomClassification::NotInClass,
    })
}

/// One node of the decomposition tree. `graph` is the node's subgraph and
/// `origin[v]` the root id of its vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub graph: Graph,
    pub origin: Vec<VertexId>,
    pub kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    /// `left` is `G[H1 ∪ K]` for the split-off component `H1`, `right` is
    /// `G - H1`. The cutset is in this node's local ids.
    CutsetSplit {
        cutset: VertexSet,
        left: Box<TreeNode>,
        right: Box<TreeNode>,
    },
    /// `child` is `G - vertex` with the standard re-indexing.
    SmallRemoval {
        vertex: VertexId,
        child: Box<TreeNode>,
    },
    LeafClique,
    LeafJoinBlowup(BlowupLeaf),
}

impl TreeNode {
    pub fn children(&self) -> Vec<&TreeNode> {
        match &self.kind {
            NodeKind::CutsetSplit { left, right, .. } => vec![left, right],
            NodeKind::SmallRemoval { child, .. } => vec![child],
            NodeKind::LeafClique | NodeKind::LeafJoinBlowup(_) => Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(
            self.kind,
            NodeKind::LeafClique | NodeKind::LeafJoinBlowup(_)
        )
    }

    /// Pre-order walk.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a TreeNode)) {
        visit(self);
        for c in self.children() {
            c.walk(visit);
        }
    }
}

/// The decomposition tree of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompTree {
    pub root: TreeNode,
}

impl DecompTree {
    pub fn internal_nodes(&self) -> usize {
        let mut count = 0;
        self.root.walk(&mut |node| {
            if !node.is_leaf() {
                count += 1;
            }
        });
        count
    }

    pub fn leaves(&self) -> Vec<&TreeNode> {
        let mut out = Vec::new();
        self.root.walk(&mut |node| {
            if node.is_leaf() {
                out.push(node);
            }
        });
        out
    }

    pub fn node_count(&self) -> usize {
        let mut count = 0;
        self.root.walk(&mut |_| count += 1);
        count
    }

    pub fn depth(&self) -> usize {
        fn depth(node: &TreeNode) -> usize {
            1 + node.children().into_iter().map(depth).max().unwrap_or(0)
        }
        depth(&self.root)
    }
}

/// Builds the decomposition tree of a connected graph.
///
/// At each node, in order: split on a clique cutset if one exists; stop at
/// a clique; stop at a Petersen/`F` strong-atom leaf; otherwise remove a
/// minimum-degree vertex. Terminates on every input since each step
/// shrinks the graph; the leaf shapes are only guaranteed for
/// (P6, C4)-free inputs.
pub fn build_decomposition_tree(g: &Graph) -> Result<DecompTree, DecompError> {
    if g.is_empty() {
        return Err(DecompError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(DecompError::Disconnected);
    }
    let origin = g.vertices().collect();
    Ok(DecompTree {
        root: build_node(g.clone(), origin)?,
    })
}

fn build_node(graph: Graph, origin: Vec<VertexId>) -> Result<TreeNode, DecompError> {
    if let Some(cut) = find_clique_cut(&graph)? {
        let left_set = cut.component.union(&cut.cutset);
        let (left, lmap) = graph.induced_subgraph(&left_set)?;
        let (right, rmap) = graph.remove_vertices(&cut.component)?;
        let left_origin = lmap.new_to_old.iter().map(|&v| origin[v]).collect();
        let right_origin = rmap.new_to_old.iter().map(|&v| origin[v]).collect();
        let kind = NodeKind::CutsetSplit {
            cutset: cut.cutset,
            left: Box::new(build_node(left, left_origin)?),
            right: Box::new(build_node(right, right_origin)?),
        };
        return Ok(TreeNode {
            graph,
            origin,
            kind,
        });
    }
    if graph.is_complete() {
        return Ok(TreeNode {
            graph,
            origin,
            kind: NodeKind::LeafClique,
        });
    }
    if let Some(leaf) = strong_atom_leaf(&graph) {
        return Ok(TreeNode {
            graph,
            origin,
            kind: NodeKind::LeafJoinBlowup(leaf),
        });
    }
    let vertex = min_degree_vertex(&graph)?;
    let (child, map) = graph.remove_vertex(vertex)?;
    let child_origin = map.new_to_old.iter().map(|&v| origin[v]).collect();
    Ok(TreeNode {
        kind: NodeKind::SmallRemoval {
            vertex,
            child: Box::new(build_node(child, child_origin)?),
        },
        graph,
        origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, f3, shuffle_vertices, tightness_family};
    use rand::SeedableRng;

    fn bowtie() -> Graph {
        // Two triangles sharing vertex 2.
        Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn diamond() -> Graph {
        // Two triangles sharing edge {1, 2}.
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn cutset_examples() {
        assert_eq!(find_clique_cutset(&Graph::complete(5)).unwrap(), None);
        assert_eq!(
            find_clique_cutset(&bowtie()).unwrap(),
            Some(VertexSet::singleton(2))
        );
        assert_eq!(find_clique_cutset(&petersen()).unwrap(), None);
        assert_eq!(
            find_clique_cutset(&diamond()).unwrap(),
            Some(VertexSet::from(vec![1, 2]))
        );
        assert_eq!(
            find_clique_cutset(&Graph::empty(2)).unwrap_err(),
            DecompError::Disconnected
        );
    }

    #[test]
    fn twin_examples() {
        let tp = twin_partition(&Graph::complete(4));
        assert_eq!(tp.classes.len(), 1);
        assert_eq!(tp.skeleton.n(), 1);

        let (g, _) = cycle(5).unwrap().blow_up(&[3, 1, 1, 1, 1]).unwrap();
        let tp = twin_partition(&g);
        assert_eq!(tp.sizes(), vec![3, 1, 1, 1, 1]);
        assert!(is_isomorphic(&tp.skeleton, &cycle(5).unwrap()));
        assert!(tp.verify(&g));

        let tp = twin_partition(&petersen());
        assert_eq!(tp.classes.len(), 10);
    }

    #[test]
    fn universal_examples() {
        let wheel = Graph::complete(1).join(&cycle(5).unwrap());
        assert_eq!(universal_vertices(&wheel), VertexSet::singleton(0));
        assert!(universal_vertices(&cycle(5).unwrap()).is_empty());
        assert_eq!(universal_vertices(&Graph::complete(4)).len(), 4);
    }

    #[test]
    fn named_graph_recognition() {
        assert!(is_petersen(&petersen()));
        assert!(!is_petersen(&cycle(10).unwrap()));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            assert!(is_f_graph(&shuffle_vertices(&f_graph(), &mut rng)));
        }
        assert!(!is_f_graph(&petersen()));
    }

    #[test]
    fn leaf_examples() {
        let leaf = classify_strong_atom_leaf(&petersen()).unwrap().unwrap();
        assert_eq!(leaf.kind, SkeletonKind::Petersen);
        assert_eq!(leaf.sizes(), vec![1; 10]);
        assert!(leaf.universal.is_empty());

        let (b, _) = f_graph().blow_up(&[2; 9]).unwrap();
        let g = b.join(&Graph::complete(3));
        let leaf = classify_strong_atom_leaf(&g).unwrap().unwrap();
        assert_eq!(leaf.kind, SkeletonKind::F);
        assert_eq!(leaf.sizes(), vec![2; 9]);
        assert_eq!(leaf.universal.len(), 3);
        assert!(leaf.matches(&g));

        assert_eq!(classify_strong_atom_leaf(&cycle(5).unwrap()).unwrap(), None);
        assert_eq!(
            classify_strong_atom_leaf(&Graph::complete(3)).unwrap_err(),
            DecompError::IsClique
        );
        assert_eq!(
            classify_strong_atom_leaf(&bowtie()).unwrap_err(),
            DecompError::NotAnAtom
        );
    }

    #[test]
    fn min_degree_examples() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(min_degree_vertex(&star).unwrap(), 1);
        assert_eq!(min_degree_vertex(&cycle(5).unwrap()).unwrap(), 0);
        // In F3 the degree-3 vertices are pentagon vertex 1, y and z.
        let g = f3();
        let v = min_degree_vertex(&g).unwrap();
        assert_eq!((v, g.degree(v)), (0, 3));
        assert_eq!(
            min_degree_vertex(&Graph::empty(0)),
            Err(DecompError::EmptyGraph)
        );
    }

    #[test]
    fn atom_classification_examples() {
        assert!(matches!(
            classify_atom(&petersen()).unwrap(),
            AtomClassification::PetersenBlowup(_)
        ));
        assert!(matches!(
            classify_atom(&f_graph()).unwrap(),
            AtomClassification::FBlowup(_)
        ));
        assert_eq!(
            classify_atom(&cycle(5).unwrap()).unwrap(),
            AtomClassification::Small(0)
        );
        let wp = petersen().join(&Graph::complete(1));
        assert_eq!(
            classify_atom(&wp).unwrap(),
            AtomClassification::Universal(10)
        );
        // Any cycle has ω = 2, so degree 2 is small.
        assert!(matches!(
            classify_atom(&cycle(7).unwrap()).unwrap(),
            AtomClassification::Small(_)
        ));
        // Triangle-free 3-regular graph other than Petersen: the cube.
        let cube = Graph::new(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        assert_eq!(
            classify_atom(&cube).unwrap(),
            AtomClassification::NotInClass
        );
    }

    #[test]
    fn tree_examples() {
        let t = build_decomposition_tree(&Graph::complete(5)).unwrap();
        assert_eq!(t.root.kind, NodeKind::LeafClique);
        assert_eq!(t.node_count(), 1);

        let t = build_decomposition_tree(&diamond()).unwrap();
        let NodeKind::CutsetSplit {
            cutset,
            left,
            right,
        } = &t.root.kind
        else {
            panic!("expected a split, got {:?}", t.root.kind);
        };
        assert_eq!(cutset.as_slice(), &[1, 2]);
        assert_eq!(left.kind, NodeKind::LeafClique);
        assert_eq!(right.kind, NodeKind::LeafClique);
        assert_eq!((left.graph.n(), right.graph.n()), (3, 3));

        let t = build_decomposition_tree(&cycle(5).unwrap()).unwrap();
        let NodeKind::SmallRemoval { vertex: 0, child } = &t.root.kind else {
            panic!("expected removal of vertex 0");
        };
        assert_eq!(child.origin, vec![1, 2, 3, 4]);
        assert!(matches!(child.kind, NodeKind::CutsetSplit { .. }));
        assert!(t.leaves().iter().all(|l| l.kind == NodeKind::LeafClique));
        assert!(t.leaves().iter().all(|l| l.graph.n() == 2));

        let t = build_decomposition_tree(&tightness_family(2).unwrap()).unwrap();
        assert!(matches!(t.root.kind, NodeKind::LeafJoinBlowup(_)));
    }
}
