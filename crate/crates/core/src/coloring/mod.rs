//! The 3/2-approximation coloring and its building blocks.
//!
//! [`approx_color`] evaluates the decomposition tree bottom-up: clique
//! leaves get distinct colors, Petersen/`F` blow-up leaves are colored by
//! peeling one skeleton copy at a time, cutset splits merge the two child
//! colorings on the shared clique and removed vertices are reinserted
//! greedily.

pub mod oracle;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::{build_decomposition_tree, BlowupLeaf, DecompError, NodeKind, TreeNode};
use crate::graph::{Graph, VertexId, VertexSet};
use oracle::{chromatic_number_bruteforce, max_clique_bruteforce, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("graph is not a clique")]
    NotAClique,
    #[error("blow-up leaf failed verification")]
    UnverifiedLeaf,
    #[error("coloring covers {got} vertices, graph has {n}")]
    Partial { got: usize, n: usize },
    #[error("color 0 at vertex {0}; colors start at 1")]
    ZeroColor(VertexId),
    #[error("cutset colors inconsistent: {0}")]
    CutsetMismatch(String),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Total map from vertices to colors `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Self { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: VertexId) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Largest color used.
    pub fn palette(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors actually used.
    pub fn distinct(&self) -> usize {
        self.colors
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c >= 1)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Renumbers colors to `1..=distinct` preserving their relative order.
    pub fn compacted(&self) -> Coloring {
        let used: Vec<usize> = self
            .colors
            .iter()
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        Coloring::new(
            self.colors
                .iter()
                .map(|c| used.binary_search(c).expect("used color") + 1)
                .collect(),
        )
    }
}

/// Greedy first-fit coloring in vertex order.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let mut colors = vec![0; g.n()];
    for v in g.vertices() {
        colors[v] = smallest_free_color(g, &colors, v);
    }
    Coloring::new(colors)
}

fn smallest_free_color(g: &Graph, colors: &[usize], v: VertexId) -> usize {
    let mut taken: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
    taken.sort_unstable();
    taken.dedup();
    let mut c = 1;
    for t in taken {
        if t == c {
            c += 1;
        } else if t > c {
            break;
        }
    }
    c
}

/// Colors `1..=n` for a clique.
pub fn color_clique(g: &Graph) -> Result<Coloring, ColoringError> {
    if !g.is_complete() {
        return Err(ColoringError::NotAClique);
    }
    Ok(Coloring::new((1..=g.n()).collect()))
}

/// Colors a Petersen/`F` blow-up joined with a clique.
///
/// Each connected piece of the blow-up is peeled one layer at a time: a
/// layer takes one vertex from every non-empty class of the piece, so it
/// induces a connected subgraph of the skeleton and gets an optimal coloring
/// with fresh colors. A piece reduced to a single class is a clique and is
/// colored directly. Separate pieces reuse colors. The universal clique part
/// takes fresh colors after everything else.
pub fn color_blowup_leaf(leaf: &BlowupLeaf) -> Result<Coloring, ColoringError> {
    if !leaf.is_well_formed() {
        return Err(ColoringError::UnverifiedLeaf);
    }
    let mut colors = vec![0; leaf.n];
    let mut remaining: Vec<Vec<VertexId>> =
        leaf.classes.iter().map(|c| c.as_slice().to_vec()).collect();
    let used = peel(&leaf.skeleton, &mut remaining, &mut colors)?;
    for (i, u) in leaf.universal.iter().enumerate() {
        colors[u] = used + i + 1;
    }
    Ok(Coloring::new(colors))
}

/// Peels the classes in `remaining` (indexed by skeleton vertex) and returns
/// the highest color used.
fn peel(
    skeleton: &Graph,
    remaining: &mut [Vec<VertexId>],
    colors: &mut [usize],
) -> Result<usize, ColoringError> {
    let mut top = 0;
    // Work items: a set of skeleton vertices and the colors already spent
    // on them.
    let mut work = vec![((0..remaining.len()).collect::<Vec<_>>(), 0)];
    while let Some((active, offset)) = work.pop() {
        let live: VertexSet = active
            .into_iter()
            .filter(|&c| !remaining[c].is_empty())
            .collect();
        if live.is_empty() {
            continue;
        }
        let (sub, map) = skeleton
            .induced_subgraph(&live)
            .map_err(DecompError::from)?;
        for piece in sub.components() {
            let classes: Vec<usize> = piece.iter().map(|i| map.new_to_old[i]).collect();
            if let [only] = classes[..] {
                for (i, &v) in remaining[only].iter().enumerate() {
                    colors[v] = offset + i + 1;
                }
                top = top.max(offset + remaining[only].len());
                remaining[only].clear();
                continue;
            }
            let (layer_graph, _) = skeleton
                .induced_subgraph(&classes.iter().copied().collect())
                .map_err(DecompError::from)?;
            let (chi, layer) = chromatic_number_bruteforce(&layer_graph, layer_graph.n())?;
            for (i, &c) in classes.iter().enumerate() {
                let v = remaining[c].pop().expect("live class");
                colors[v] = offset + layer.color(i);
            }
            top = top.max(offset + chi);
            work.push((classes, offset + chi));
        }
    }
    Ok(top)
}

/// A child coloring together with the parent ids of the child's vertices.
#[derive(Debug, Clone, Copy)]
pub struct ChildColoring<'a> {
    pub coloring: &'a Coloring,
    pub origin: &'a [VertexId],
}

/// Merges the colorings of `G[H1 ∪ K]` and `G - H1` along the clique `K`
/// (parent ids). The right coloring is permuted so it agrees with the left
/// one on `K`; its other colors are sent injectively to the unused colors in
/// increasing order, so the palette is the larger of the two.
pub fn combine_on_clique_cutset(
    parent_n: usize,
    left: ChildColoring<'_>,
    right: ChildColoring<'_>,
    cutset: &VertexSet,
) -> Result<Coloring, ColoringError> {
    let palette = left.coloring.palette().max(right.coloring.palette());
    let mut left_at = vec![0; parent_n];
    for (i, &p) in left.origin.iter().enumerate() {
        left_at[p] = left.coloring.color(i);
    }
    let mut right_at = vec![0; parent_n];
    for (i, &p) in right.origin.iter().enumerate() {
        right_at[p] = right.coloring.color(i);
    }
    // perm[c] = new color of right color c.
    let mut perm = vec![0; palette + 1];
    let mut target_used = vec![false; palette + 1];
    for k in cutset.iter() {
        let (from, to) = (right_at[k], left_at[k]);
        if from == 0 || to == 0 {
            return Err(ColoringError::CutsetMismatch(format!(
                "cutset vertex {k} missing from a child"
            )));
        }
        if (perm[from] != 0 && perm[from] != to) || (perm[from] == 0 && target_used[to]) {
            return Err(ColoringError::CutsetMismatch(format!(
                "cutset colors repeat at vertex {k}"
            )));
        }
        perm[from] = to;
        target_used[to] = true;
    }
    let mut free = (1..=palette).filter(|&c| !target_used[c]);
    for slot in perm.iter_mut().skip(1) {
        if *slot == 0 {
            *slot = free.next().expect("enough free colors");
        }
    }
    let mut colors = left_at;
    for &p in right.origin {
        let c = perm[right_at[p]];
        if colors[p] != 0 && colors[p] != c {
            return Err(ColoringError::CutsetMismatch(format!(
                "vertex {p} shared outside the cutset"
            )));
        }
        colors[p] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(ColoringError::ZeroColor(v));
    }
    Ok(Coloring::new(colors))
}

/// Extends a coloring of `G - v` (standard re-indexing) to `G` by giving
/// `v` the smallest color missing from its neighborhood.
pub fn reinsert_vertex(child: &Coloring, g: &Graph, v: VertexId) -> Coloring {
    let mut colors = Vec::with_capacity(g.n());
    colors.extend_from_slice(&child.colors()[..v]);
    colors.push(0);
    colors.extend_from_slice(&child.colors()[v..]);
    colors[v] = smallest_free_color(g, &colors, v);
    Coloring::new(colors)
}

/// Colors one node of the decomposition tree in its local ids.
pub fn color_tree_node(node: &TreeNode) -> Result<Coloring, ColoringError> {
    match &node.kind {
        NodeKind::LeafClique => color_clique(&node.graph),
        NodeKind::LeafJoinBlowup(leaf) => {
            if !leaf.matches(&node.graph) {
                return Err(ColoringError::UnverifiedLeaf);
            }
            color_blowup_leaf(leaf)
        }
        NodeKind::SmallRemoval { vertex, child } => {
            let inner = color_tree_node(child)?;
            Ok(reinsert_vertex(&inner, &node.graph, *vertex))
        }
        NodeKind::CutsetSplit {
            cutset,
            left,
            right,
        } => {
            let lc = color_tree_node(left)?;
            let rc = color_tree_node(right)?;
            // Children record root ids; translate them to this node's ids.
            let local = local_index(node);
            let lo: Vec<VertexId> = left.origin.iter().map(|r| local[r]).collect();
            let ro: Vec<VertexId> = right.origin.iter().map(|r| local[r]).collect();
            combine_on_clique_cutset(
                node.graph.n(),
                ChildColoring {
                    coloring: &lc,
                    origin: &lo,
                },
                ChildColoring {
                    coloring: &rc,
                    origin: &ro,
                },
                cutset,
            )
        }
    }
}

fn local_index(node: &TreeNode) -> std::collections::HashMap<VertexId, VertexId> {
    node.origin
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, i))
        .collect()
}

/// Proper coloring of any graph; for (P6, C4)-free graphs it uses at most
/// `⌊3/2·ω⌋` colors. Components are colored independently and share colors.
pub fn approx_color(g: &Graph) -> Result<Coloring, ColoringError> {
    let mut colors = vec![0; g.n()];
    for comp in g.components() {
        let (sub, map) = g.induced_subgraph(&comp).map_err(DecompError::from)?;
        let tree = build_decomposition_tree(&sub)?;
        let local = color_tree_node(&tree.root)?;
        for (i, &v) in map.new_to_old.iter().enumerate() {
            colors[v] = local.color(i);
        }
    }
    Ok(Coloring::new(colors))
}

fn check_total(g: &Graph, phi: &Coloring) -> Result<(), ColoringError> {
    if phi.len() != g.n() {
        return Err(ColoringError::Partial {
            got: phi.len(),
            n: g.n(),
        });
    }
    if let Some(v) = phi.colors().iter().position(|&c| c == 0) {
        return Err(ColoringError::ZeroColor(v));
    }
    Ok(())
}

/// Edge-by-edge properness check.
pub fn verify_coloring(g: &Graph, phi: &Coloring) -> Result<bool, ColoringError> {
    check_total(g, phi)?;
    Ok(phi.is_proper(g))
}

/// `⌊3/2·ω⌋`.
pub fn ratio_bound(omega: usize) -> usize {
    3 * omega / 2
}

/// Whether the palette is within `⌊3/2·ω⌋`, with `ω` from the exact oracle.
pub fn verify_ratio(g: &Graph, phi: &Coloring, clique_limit: usize) -> Result<bool, ColoringError> {
    check_total(g, phi)?;
    let (omega, _) = max_clique_bruteforce(g, clique_limit)?;
    Ok(phi.palette() <= ratio_bound(omega))
}
