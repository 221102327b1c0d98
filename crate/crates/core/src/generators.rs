//! Named graphs and seeded test corpora.
//!
//! Fixed graphs use the vertex layouts documented on each constructor. The
//! corpus generator is deterministic: every family draws from its own
//! ChaCha8 stream derived from the corpus seed, so a given [`CorpusSpec`]
//! always yields the same graphs in the same order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::in_class;
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("a path needs at least 1 vertex, got {0}")]
    PathTooShort(usize),
    #[error("blow-up factor must be at least 1")]
    ZeroFactor,
}

/// Cycle vertices `1..5` of the pentagon-based graphs sit at ids `0..5`.
pub const F1_X: VertexId = 5;
pub const F1_Y: VertexId = 6;
pub const F1_Z: VertexId = 7;
pub const F2_X: VertexId = 5;
pub const F2_Y: VertexId = 6;
pub const F2_T: VertexId = 7;
pub const F3_U: VertexId = 8;

/// Petersen graph: outer hexagon `0..6`, then the three chord midpoints
/// `6 ~ {0, 3}`, `7 ~ {1, 4}`, `8 ~ {2, 5}` and the center `9 ~ {6, 7, 8}`.
pub fn petersen() -> Graph {
    Graph::new(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (6, 0),
            (6, 3),
            (7, 1),
            (7, 4),
            (8, 2),
            (8, 5),
            (9, 6),
            (9, 7),
            (9, 8),
        ],
    )
    .expect("static graph")
}

/// The 9-vertex graph `F`: hexagon `u1..u6` at ids `0..6` plus three
/// pairwise non-adjacent vertices, `6 ~ {u6, u1, u2, u3}`,
/// `7 ~ {u2, u3, u4, u5}` and `8 ~ {u4, u5, u6, u1}`.
pub fn f_graph() -> Graph {
    let mut edges: Vec<(VertexId, VertexId)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    for (q, quad) in [(6, [5, 0, 1, 2]), (7, [1, 2, 3, 4]), (8, [3, 4, 5, 0])] {
        edges.extend(quad.iter().map(|&u| (q, u)));
    }
    Graph::new(9, edges).expect("static graph")
}

fn pentagon_edges() -> Vec<(VertexId, VertexId)> {
    (0..5).map(|i| (i, (i + 1) % 5)).collect()
}

/// `F1`: pentagon `1..5` at `0..5`, `x ~ {3, 4, y, z}`, `y ~ {2, 3}`,
/// `z ~ {4, 5}`.
pub fn f1() -> Graph {
    let mut edges = pentagon_edges();
    edges.extend([(F1_Y, 1), (F1_Y, 2), (F1_Z, 3), (F1_Z, 4)]);
    edges.extend([(F1_X, 2), (F1_X, 3), (F1_X, F1_Y), (F1_X, F1_Z)]);
    Graph::new(8, edges).expect("static graph")
}

/// `F2`: pentagon `1..5` at `0..5`, `x ~ {4, 5}`, `y ~ {2, 3}`,
/// `t ~ {5, 1, 2, x, y}`.
pub fn f2() -> Graph {
    let mut edges = pentagon_edges();
    edges.extend([(F2_X, 3), (F2_X, 4), (F2_Y, 1), (F2_Y, 2)]);
    edges.extend([(F2_T, 4), (F2_T, 0), (F2_T, 1), (F2_T, F2_X), (F2_T, F2_Y)]);
    Graph::new(8, edges).expect("static graph")
}

/// `F3`: `F1` plus `u` (id 8) complete to the pentagon.
pub fn f3() -> Graph {
    let base = f1();
    let edges = base.edges().chain((0..5).map(|i| (F3_U, i)));
    Graph::new(9, edges).expect("static graph")
}

/// `C_k` on `0..k` in cyclic order.
pub fn cycle(k: usize) -> Result<Graph, GeneratorError> {
    if k < 3 {
        return Err(GeneratorError::CycleTooShort(k));
    }
    Ok(Graph::new(k, (0..k).map(|i| (i, (i + 1) % k))).expect("valid cycle"))
}

/// `P_k` on `0..k` in path order.
pub fn path(k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 {
        return Err(GeneratorError::PathTooShort(k));
    }
    Ok(Graph::new(k, (1..k).map(|i| (i - 1, i))).expect("valid path"))
}

/// Blow-up of the Petersen graph with every class of size `s`.
pub fn tightness_family(s: usize) -> Result<Graph, GeneratorError> {
    if s == 0 {
        return Err(GeneratorError::ZeroFactor);
    }
    Ok(petersen().blow_up(&[s; 10]).expect("positive sizes").0)
}

/// Relabels `g` by a uniformly random permutation.
pub fn shuffle_vertices<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<VertexId> = g.vertices().collect();
    perm.shuffle(rng);
    Graph::new(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).expect("permuted graph")
}

/// Seeded Erdős–Rényi graphs kept only when (P6, C4)-free.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomFamily {
    pub samples: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub p_min: f64,
    pub p_max: f64,
    /// Draws allowed per emitted graph before giving up on it.
    pub max_attempts: usize,
}

/// Blow-ups of Petersen, `F` and `C5`, joined with a clique.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlowupFamily {
    pub samples: usize,
    pub max_class_size: usize,
    pub max_clique: usize,
    pub max_n: usize,
}

/// Chordal graphs grown by attaching each new vertex to a clique, plus pairs
/// of corpus graphs glued along a shared vertex or edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChordalFamily {
    pub samples: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub max_attempts: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GluedFamily {
    pub samples: usize,
    pub max_n: usize,
    pub max_attempts: usize,
}

/// Parameters of a seeded corpus. Absent families are skipped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub random: Option<RandomFamily>,
    pub blowups: Option<BlowupFamily>,
    pub chordal: Option<ChordalFamily>,
    pub glued: Option<GluedFamily>,
}

impl CorpusSpec {
    /// A mixed corpus of roughly 600 graphs used by the test suites.
    pub fn standard(seed: u64) -> Self {
        Self {
            seed,
            random: Some(RandomFamily {
                samples: 250,
                n_min: 4,
                n_max: 13,
                p_min: 0.1,
                p_max: 0.9,
                max_attempts: 10_000,
            }),
            blowups: Some(BlowupFamily {
                samples: 150,
                max_class_size: 4,
                max_clique: 3,
                max_n: 60,
            }),
            chordal: Some(ChordalFamily {
                samples: 100,
                n_min: 3,
                n_max: 20,
                max_attempts: 10_000,
            }),
            glued: Some(GluedFamily {
                samples: 100,
                max_n: 40,
                max_attempts: 10_000,
            }),
        }
    }

    /// Only the constructive blow-up family, with small class sizes.
    pub fn constructive(seed: u64, samples: usize, max_class_size: usize) -> Self {
        Self {
            seed,
            random: None,
            blowups: Some(BlowupFamily {
                samples,
                max_class_size,
                max_clique: max_class_size,
                max_n: 60,
            }),
            chordal: None,
            glued: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusGraph {
    pub family: String,
    pub params: String,
    #[serde(skip)]
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyYield {
    pub family: String,
    pub requested: usize,
    pub emitted: usize,
    pub rejected: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Corpus {
    pub spec: CorpusSpec,
    pub graphs: Vec<CorpusGraph>,
    pub yields: Vec<FamilyYield>,
}

impl Corpus {
    pub fn is_complete(&self) -> bool {
        self.yields.iter().all(|y| y.emitted == y.requested)
    }
}

fn family_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Generates the corpus described by `spec`. Every emitted graph is
/// (P6, C4)-free; a family whose rejection budget runs out contributes fewer
/// graphs, as reported in [`Corpus::yields`].
pub fn random_p6c4_free(spec: &CorpusSpec) -> Corpus {
    let mut graphs = Vec::new();
    let mut yields = Vec::new();
    if let Some(fam) = &spec.random {
        let mut rng = family_rng(spec.seed, 1);
        yields.push(random_family(fam, &mut rng, &mut graphs));
    }
    if let Some(fam) = &spec.blowups {
        let mut rng = family_rng(spec.seed, 2);
        yields.push(blowup_family(fam, &mut rng, &mut graphs));
    }
    if let Some(fam) = &spec.chordal {
        let mut rng = family_rng(spec.seed, 3);
        yields.push(chordal_family(fam, &mut rng, &mut graphs));
    }
    if let Some(fam) = &spec.glued {
        let mut rng = family_rng(spec.seed, 4);
        yields.push(glued_family(fam, &mut rng, &mut graphs));
    }
    Corpus {
        spec: spec.clone(),
        graphs,
        yields,
    }
}

/// `G(n, p)` sample.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid edges")
}

fn random_family(
    fam: &RandomFamily,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<CorpusGraph>,
) -> FamilyYield {
    let mut emitted = 0;
    let mut rejected = 0;
    'targets: for _ in 0..fam.samples {
        for _ in 0..fam.max_attempts {
            let n = rng.gen_range(fam.n_min..=fam.n_max);
            let p = rng.gen_range(fam.p_min..=fam.p_max);
            let g = gnp(n, p, rng);
            if in_class(&g) {
                out.push(CorpusGraph {
                    family: "random".into(),
                    params: format!("n={n} p={p:.3}"),
                    graph: g,
                });
                emitted += 1;
                continue 'targets;
            }
            rejected += 1;
        }
    }
    FamilyYield {
        family: "random".into(),
        requested: fam.samples,
        emitted,
        rejected,
    }
}

fn random_sizes(rng: &mut ChaCha8Rng, k: usize, max_class: usize, budget: usize) -> Vec<usize> {
    // Shrink the cap until the blow-up fits the vertex budget.
    let mut cap = max_class.max(1);
    loop {
        let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=cap)).collect();
        if sizes.iter().sum::<usize>() <= budget || cap == 1 {
            return sizes;
        }
        cap -= 1;
    }
}

fn blowup_family(
    fam: &BlowupFamily,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<CorpusGraph>,
) -> FamilyYield {
    let bases: [(&str, Graph); 3] = [
        ("petersen", petersen()),
        ("F", f_graph()),
        ("C5", cycle(5).expect("valid cycle")),
    ];
    let mut emitted = 0;
    let mut rejected = 0;
    for i in 0..fam.samples {
        let (name, base) = &bases[i % bases.len()];
        let clique = rng.gen_range(0..=fam.max_clique);
        let budget = fam.max_n.saturating_sub(clique).max(base.n());
        let sizes = random_sizes(rng, base.n(), fam.max_class_size, budget);
        let (blown, _) = base.blow_up(&sizes).expect("positive sizes");
        let g = shuffle_vertices(&blown.join(&Graph::complete(clique)), rng);
        if in_class(&g) {
            out.push(CorpusGraph {
                family: format!("blowup-{name}"),
                params: format!("sizes={sizes:?} clique={clique}"),
                graph: g,
            });
            emitted += 1;
        } else {
            rejected += 1;
        }
    }
    FamilyYield {
        family: "blowup".into(),
        requested: fam.samples,
        emitted,
        rejected,
    }
}

/// Grows a chordal graph: each new vertex is attached to a random clique
/// containing a random earlier vertex, so the reverse insertion order is a
/// perfect elimination ordering.
pub fn random_chordal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        let mut clique = vec![anchor];
        let mut candidates = adj[anchor].clone();
        candidates.shuffle(rng);
        for u in candidates {
            if rng.gen_bool(0.5) && clique.iter().all(|c| adj[u].contains(c)) {
                clique.push(u);
            }
        }
        for c in clique {
            adj[v].push(c);
            adj[c].push(v);
        }
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, ns)| ns.iter().filter(move |&&w| w > u).map(move |&w| (u, w)));
    Graph::new(n, edges.collect::<Vec<_>>()).expect("valid edges")
}

fn chordal_family(
    fam: &ChordalFamily,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<CorpusGraph>,
) -> FamilyYield {
    let mut emitted = 0;
    let mut rejected = 0;
    'targets: for _ in 0..fam.samples {
        for _ in 0..fam.max_attempts {
            let n = rng.gen_range(fam.n_min..=fam.n_max);
            let g = random_chordal(n, rng);
            if in_class(&g) {
                out.push(CorpusGraph {
                    family: "chordal".into(),
                    params: format!("n={n}"),
                    graph: g,
                });
                emitted += 1;
                continue 'targets;
            }
            rejected += 1;
        }
    }
    FamilyYield {
        family: "chordal".into(),
        requested: fam.samples,
        emitted,
        rejected,
    }
}

/// A small in-class piece used as glue material.
fn random_piece(rng: &mut ChaCha8Rng) -> Graph {
    match rng.gen_range(0..5) {
        0 => petersen(),
        1 => f_graph(),
        2 => {
            let sizes: Vec<usize> = (0..5).map(|_| rng.gen_range(1..=2)).collect();
            cycle(5)
                .expect("valid cycle")
                .blow_up(&sizes)
                .expect("positive sizes")
                .0
        }
        3 => petersen().join(&Graph::complete(1)),
        _ => {
            let n = rng.gen_range(3..=8);
            random_chordal(n, rng)
        }
    }
}

/// Identifies the clique `a_side` of `a` with the clique `b_side` of `b`.
fn glue(a: &Graph, a_side: &[VertexId], b: &Graph, b_side: &[VertexId]) -> Graph {
    let mut map = vec![usize::MAX; b.n()];
    for (&x, &y) in b_side.iter().zip(a_side) {
        map[x] = y;
    }
    let mut next = a.n();
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let edges = a.edges().chain(b.edges().map(|(u, v)| (map[u], map[v])));
    Graph::new(next, edges.collect::<Vec<_>>()).expect("valid edges")
}

fn random_clique_of<R: Rng + ?Sized>(g: &Graph, size: usize, rng: &mut R) -> Option<Vec<VertexId>> {
    let v = rng.gen_range(0..g.n());
    if size == 1 {
        return Some(vec![v]);
    }
    let ns = g.neighbors(v);
    if ns.is_empty() {
        return None;
    }
    Some(vec![v, ns[rng.gen_range(0..ns.len())]])
}

fn glued_family(
    fam: &GluedFamily,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<CorpusGraph>,
) -> FamilyYield {
    let mut emitted = 0;
    let mut rejected = 0;
    'targets: for _ in 0..fam.samples {
        for _ in 0..fam.max_attempts {
            let a = random_piece(rng);
            let b = random_piece(rng);
            let width = rng.gen_range(1..=2);
            let (Some(sa), Some(sb)) = (
                random_clique_of(&a, width, rng),
                random_clique_of(&b, width, rng),
            ) else {
                rejected += 1;
                continue;
            };
            let g = glue(&a, &sa, &b, &sb);
            if g.n() <= fam.max_n && in_class(&g) {
                let g = shuffle_vertices(&g, rng);
                out.push(CorpusGraph {
                    family: "glued".into(),
                    params: format!("pieces={}+{} width={width}", a.n(), b.n()),
                    graph: g,
                });
                emitted += 1;
                continue 'targets;
            }
            rejected += 1;
        }
    }
    FamilyYield {
        family: "glued".into(),
        requested: fam.samples,
        emitted,
        rejected,
    }
}
