//! Coloring (P6, C4)-free graphs with at most `⌊3ω/2⌋` colors.
//!
//! The pipeline decomposes a graph by clique cutsets, removes vertices of
//! small degree, and colors the remaining leaves (cliques and blow-ups of
//! the Petersen graph or the graph `F`, possibly joined with a clique)
//! directly. Child colorings are merged on the cutset and removed vertices
//! are reinserted greedily.

pub mod coloring;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod patterns;
pub mod structure;

pub use coloring::oracle::{
    chromatic_number_bruteforce, max_clique_bruteforce, OracleError, OracleLimits,
};
pub use coloring::{approx_color, verify_coloring, verify_ratio, Coloring, ColoringError};
pub use decomposition::{
    build_decomposition_tree, find_clique_cutset, in_class, DecompError, DecompTree,
};
pub use graph::{Graph, GraphError, Relabeling, VertexId, VertexSet};
pub use patterns::{is_c4_free, is_chordal, is_p6_c4_free, is_p6_free};
