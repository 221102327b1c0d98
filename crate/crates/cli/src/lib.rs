//! Command implementations behind the `p6c4` binary. Every command returns
//! its full output as a string so it can be tested in-process.

pub mod format;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use p6c4::coloring::oracle::max_weight_clique;
use p6c4::coloring::ratio_bound;
use p6c4::decomposition::{
    build_decomposition_tree, twin_partition, NodeKind, SkeletonKind, TreeNode,
};
use p6c4::generators::{random_p6c4_free, CorpusSpec};
use p6c4::patterns::{find_c4, find_induced_path};
use p6c4::structure::{audit_atom_classification, AuditOptions};
use p6c4::{approx_color, Coloring, Graph, VertexId};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use format::{coloring_lines, parse_coloring, parse_graph, to_dot, to_edge_list, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    User(String),
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::User(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "p6c4",
    version,
    about = "Color (P6, C4)-free graphs with at most 3/2·ω colors"
)]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Input graph format.
    #[arg(long, value_enum, default_value_t = Format::Auto, global = true)]
    pub format: Format,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for corpus generation.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Largest twin skeleton the exact clique oracle is run on.
    #[arg(long, default_value_t = 24, global = true)]
    pub oracle_limit: usize,
    /// Check (P6, C4)-freeness so the color bound can be reported.
    #[arg(long, global = true)]
    pub verify_class: bool,
    /// Process components in parallel; output order is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            format: Format::Auto,
            json: false,
            seed: 0,
            oracle_limit: 24,
            verify_class: false,
            parallel: false,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a graph and report the palette.
    Color { file: PathBuf },
    /// Print the decomposition tree in input vertex ids.
    Decompose { file: PathBuf },
    /// Test for induced C4 and P6, with witnesses.
    CheckClass { file: PathBuf },
    /// Audit the atom structure of a graph.
    Audit { file: PathBuf },
    /// Check a coloring file against a graph.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Write a seeded corpus of (P6, C4)-free graphs to a directory.
    Generate {
        #[arg(long)]
        out: PathBuf,
        /// JSON corpus spec; defaults to the standard mix.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Write a graph as DOT, optionally colored.
    ExportDot {
        file: PathBuf,
        /// Coloring file to apply.
        #[arg(long, conflicts_with = "color")]
        coloring: Option<PathBuf>,
        /// Color the graph first.
        #[arg(long)]
        color: bool,
    },
    /// Basic statistics.
    Stats { file: PathBuf },
}

fn read(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin())
            .map_err(|e| CliError::User(format!("stdin: {e}")));
    }
    fs::read_to_string(path).map_err(|e| CliError::User(format!("{}: {e}", path.display())))
}

pub fn load_graph(path: &Path, format: Format) -> Result<Graph, CliError> {
    let text = read(path)?;
    parse_graph(&text, format).map_err(|e| CliError::User(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(internal)?;
    s.push('\n');
    Ok(s)
}

/// Colors each component separately and lets them share colors, so the
/// palette is the largest component palette.
pub fn color_graph(g: &Graph, parallel: bool) -> Result<Coloring, CliError> {
    let comps = g.components();
    let color_one = |comp: &p6c4::VertexSet| -> Result<Vec<(VertexId, usize)>, CliError> {
        let (sub, map) = g.induced_subgraph(comp).map_err(internal)?;
        let phi = approx_color(&sub).map_err(internal)?;
        Ok(map
            .new_to_old
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, phi.color(i)))
            .collect())
    };
    let parts: Vec<_> = if parallel {
        comps.par_iter().map(color_one).collect::<Result<_, _>>()?
    } else {
        comps.iter().map(color_one).collect::<Result<_, _>>()?
    };
    let mut colors = vec![0; g.n()];
    for (v, c) in parts.into_iter().flatten() {
        colors[v] = c;
    }
    let phi = Coloring::new(colors);
    if !phi.is_proper(g) || phi.colors().contains(&0) {
        return Err(CliError::Internal(
            "pipeline produced an improper coloring".into(),
        ));
    }
    Ok(phi)
}

/// Clique number from the weighted twin skeleton, if it is small enough.
fn omega(g: &Graph, limit: usize) -> Result<Option<usize>, CliError> {
    let tp = twin_partition(g);
    if tp.skeleton.n() > limit.min(p6c4::coloring::oracle::MASK_LIMIT) {
        return Ok(None);
    }
    Ok(Some(
        max_weight_clique(&tp.skeleton, &tp.sizes())
            .map_err(internal)?
            .0,
    ))
}

#[derive(Debug, Serialize)]
pub struct Guarantee {
    pub in_class: Option<bool>,
    pub omega: Option<usize>,
    pub bound: Option<usize>,
    pub satisfied: Option<bool>,
    pub status: String,
}

#[derive(Debug, Serialize)]
pub struct ColorReport {
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub palette: usize,
    pub assignment: Vec<usize>,
    pub guarantee: Guarantee,
}

fn guarantee(g: &Graph, palette: usize, opts: &Options) -> Result<Guarantee, CliError> {
    if !opts.verify_class {
        return Ok(Guarantee {
            in_class: None,
            omega: None,
            bound: None,
            satisfied: None,
            status: "membership not checked".into(),
        });
    }
    let in_class = p6c4::in_class(g);
    let omega = omega(g, opts.oracle_limit)?;
    let bound = omega.map(ratio_bound);
    let satisfied = bound.map(|b| palette <= b);
    let status = match (in_class, bound) {
        (false, _) => "not in class, no bound guaranteed".to_string(),
        (true, Some(b)) if palette <= b => format!("in-class, bound {b} satisfied"),
        (true, Some(b)) => {
            return Err(CliError::Internal(format!(
                "palette {palette} exceeds the bound {b} on an in-class graph"
            )))
        }
        (true, None) => "in-class, clique number beyond oracle limit".to_string(),
    };
    Ok(Guarantee {
        in_class: Some(in_class),
        omega,
        bound,
        satisfied,
        status,
    })
}

pub fn cmd_color(g: &Graph, opts: &Options) -> Result<String, CliError> {
    let phi = color_graph(g, opts.parallel)?;
    let report = ColorReport {
        n: g.n(),
        m: g.m(),
        components: g.components().len(),
        palette: phi.palette(),
        guarantee: guarantee(g, phi.palette(), opts)?,
        assignment: phi.colors().to_vec(),
    };
    if opts.json {
        return to_json(&report);
    }
    let mut out = format!(
        "# palette {}\n# guarantee: {}\n",
        report.palette, report.guarantee.status
    );
    out.push_str(&coloring_lines(&phi));
    Ok(out)
}

#[derive(Debug, Serialize)]
pub struct TreeJson {
    pub kind: &'static str,
    pub vertices: Vec<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutset: Option<Vec<VertexId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skeleton: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<VertexId>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub universal: Option<Vec<VertexId>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<TreeJson>,
}

/// `to_input[v]` maps a root-graph id to the input file's id.
fn tree_json(node: &TreeNode, to_input: &[VertexId]) -> TreeJson {
    let up = |v: VertexId| to_input[node.origin[v]];
    let ids = |vs: &[VertexId]| vs.iter().map(|&v| up(v)).collect::<Vec<_>>();
    let mut out = TreeJson {
        kind: "",
        vertices: node.origin.iter().map(|&r| to_input[r]).collect(),
        cutset: None,
        vertex: None,
        skeleton: None,
        classes: None,
        universal: None,
        children: node
            .children()
            .into_iter()
            .map(|c| tree_json(c, to_input))
            .collect(),
    };
    match &node.kind {
        NodeKind::CutsetSplit { cutset, .. } => {
            out.kind = "cutset-split";
            out.cutset = Some(ids(cutset.as_slice()));
        }
        NodeKind::SmallRemoval { vertex, .. } => {
            out.kind = "small-removal";
            out.vertex = Some(up(*vertex));
        }
        NodeKind::LeafClique => out.kind = "leaf-clique",
        NodeKind::LeafJoinBlowup(leaf) => {
            out.kind = "leaf-join-blowup";
            out.skeleton = Some(match leaf.kind {
                SkeletonKind::Petersen => "petersen",
                SkeletonKind::F => "f",
            });
            out.classes = Some(leaf.classes.iter().map(|c| ids(c.as_slice())).collect());
            out.universal = Some(ids(leaf.universal.as_slice()));
        }
    }
    out
}

#[derive(Debug, Serialize)]
pub struct DecomposeReport {
    pub n: usize,
    pub internal_nodes: usize,
    pub depth: usize,
    pub components: Vec<TreeJson>,
}

fn write_tree(out: &mut String, t: &TreeJson, indent: usize) {
    let pad = "  ".repeat(indent);
    let detail = match t.kind {
        "cutset-split" => format!(" cutset {:?}", t.cutset.as_deref().unwrap_or_default()),
        "small-removal" => format!(" vertex {}", t.vertex.unwrap_or_default()),
        "leaf-join-blowup" => format!(
            " {} classes {:?} universal {:?}",
            t.skeleton.unwrap_or_default(),
            t.classes.as_deref().unwrap_or_default(),
            t.universal.as_deref().unwrap_or_default()
        ),
        _ => String::new(),
    };
    let _ = writeln!(
        out,
        "{pad}{}{detail} ({} vertices)",
        t.kind,
        t.vertices.len()
    );
    for c in &t.children {
        write_tree(out, c, indent + 1);
    }
}

pub fn cmd_decompose(g: &Graph, opts: &Options) -> Result<String, CliError> {
    let mut report = DecomposeReport {
        n: g.n(),
        internal_nodes: 0,
        depth: 0,
        components: Vec::new(),
    };
    for comp in g.components() {
        let (sub, map) = g.induced_subgraph(&comp).map_err(internal)?;
        let tree = build_decomposition_tree(&sub).map_err(internal)?;
        report.internal_nodes += tree.internal_nodes();
        report.depth = report.depth.max(tree.depth());
        report
            .components
            .push(tree_json(&tree.root, &map.new_to_old));
    }
    if opts.json {
        return to_json(&report);
    }
    let mut out = format!(
        "# internal nodes {}, depth {}\n",
        report.internal_nodes, report.depth
    );
    for t in &report.components {
        write_tree(&mut out, t, 0);
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub m: usize,
    pub c4_free: bool,
    pub p6_free: bool,
    pub verdict: &'static str,
    pub c4_witness: Option<Vec<VertexId>>,
    pub p6_witness: Option<Vec<VertexId>>,
}

pub fn cmd_check_class(g: &Graph, opts: &Options) -> Result<String, CliError> {
    let c4 = find_c4(g).map(|w| w.to_vec());
    let p6 = find_induced_path(g, 6);
    let report = ClassReport {
        n: g.n(),
        m: g.m(),
        c4_free: c4.is_none(),
        p6_free: p6.is_none(),
        verdict: if c4.is_none() && p6.is_none() {
            "in-class"
        } else {
            "not-in-class"
        },
        c4_witness: c4,
        p6_witness: p6,
    };
    if opts.json {
        return to_json(&report);
    }
    let mut out = format!("verdict {}\n", report.verdict);
    if let Some(w) = &report.c4_witness {
        let _ = writeln!(out, "induced C4 {w:?}");
    }
    if let Some(w) = &report.p6_witness {
        let _ = writeln!(out, "induced P6 {w:?}");
    }
    Ok(out)
}

pub fn cmd_audit(g: &Graph, opts: &Options) -> Result<String, CliError> {
    let report = audit_atom_classification(g, &AuditOptions::default());
    if !report.failures.is_empty() {
        return Err(CliError::Internal(report.failures.join("; ")));
    }
    if opts.json {
        return to_json(&report);
    }
    let case = report
        .classification
        .as_ref()
        .map_or("none", |w| w.case.as_str());
    Ok(format!(
        "atom {:?}\nin-class {}\nclassification {case}\ninduced C5 checked {}\ninduced C6 checked {}\n",
        report.atom,
        report.in_class(),
        report.c5_checked,
        report.c6_checked
    ))
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub complete: bool,
    pub proper: bool,
    pub palette: usize,
    pub uncolored: Vec<VertexId>,
    pub conflicts: Vec<(VertexId, VertexId)>,
}

/// Returns the report and whether the coloring is a proper total one.
pub fn cmd_verify(g: &Graph, phi: &Coloring, opts: &Options) -> Result<(String, bool), CliError> {
    let uncolored: Vec<VertexId> = (0..g.n()).filter(|&v| phi.color(v) == 0).collect();
    let conflicts: Vec<_> = g
        .edges()
        .filter(|&(u, v)| phi.color(u) != 0 && phi.color(u) == phi.color(v))
        .take(20)
        .collect();
    let report = VerifyReport {
        n: g.n(),
        complete: uncolored.is_empty(),
        proper: conflicts.is_empty(),
        palette: phi.palette(),
        uncolored,
        conflicts,
    };
    let ok = report.complete && report.proper;
    let text = if opts.json {
        to_json(&report)?
    } else if ok {
        format!("ok: proper coloring with palette {}\n", report.palette)
    } else {
        format!(
            "invalid: {} uncolored, conflicts {:?}\n",
            report.uncolored.len(),
            report.conflicts
        )
    };
    Ok((text, ok))
}

#[derive(Debug, Serialize)]
struct ManifestEntry<'a> {
    file: String,
    family: &'a str,
    params: &'a str,
    n: usize,
    m: usize,
}

#[derive(Debug, Serialize)]
struct Manifest<'a> {
    seed: u64,
    spec: &'a CorpusSpec,
    yields: &'a [p6c4::generators::FamilyYield],
    graphs: Vec<ManifestEntry<'a>>,
}

pub fn cmd_generate(out: &Path, spec: Option<&Path>, opts: &Options) -> Result<String, CliError> {
    let spec = match spec {
        Some(path) => {
            let mut spec: CorpusSpec = serde_json::from_str(&read(path)?)
                .map_err(|e| CliError::User(format!("{}: {e}", path.display())))?;
            if opts.seed != 0 {
                spec.seed = opts.seed;
            }
            spec
        }
        None => CorpusSpec::standard(opts.seed),
    };
    let corpus = random_p6c4_free(&spec);
    fs::create_dir_all(out).map_err(|e| CliError::User(format!("{}: {e}", out.display())))?;
    let mut graphs = Vec::with_capacity(corpus.graphs.len());
    for (i, cg) in corpus.graphs.iter().enumerate() {
        let file = format!("graph_{i:04}.txt");
        fs::write(out.join(&file), to_edge_list(&cg.graph))
            .map_err(|e| CliError::User(format!("{}: {e}", out.display())))?;
        graphs.push(ManifestEntry {
            file,
            family: &cg.family,
            params: &cg.params,
            n: cg.graph.n(),
            m: cg.graph.m(),
        });
    }
    let manifest = Manifest {
        seed: spec.seed,
        spec: &spec,
        yields: &corpus.yields,
        graphs,
    };
    fs::write(out.join("manifest.json"), to_json(&manifest)?)
        .map_err(|e| CliError::User(format!("{}: {e}", out.display())))?;
    if opts.json {
        return to_json(&corpus.yields);
    }
    let mut text = format!(
        "wrote {} graphs to {}\n",
        corpus.graphs.len(),
        out.display()
    );
    for y in &corpus.yields {
        let _ = writeln!(
            text,
            "{}: {}/{} ({} rejected)",
            y.family, y.emitted, y.requested, y.rejected
        );
    }
    Ok(text)
}

#[derive(Debug, Serialize)]
pub struct Stats {
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub degrees: Vec<usize>,
    pub twin_classes: usize,
    pub twin_class_sizes: Vec<usize>,
}

pub fn cmd_stats(g: &Graph, opts: &Options) -> Result<String, CliError> {
    let degrees = g.degrees();
    let tp = twin_partition(g);
    let stats = Stats {
        n: g.n(),
        m: g.m(),
        components: g.components().len(),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        twin_classes: tp.classes.len(),
        twin_class_sizes: tp.sizes(),
        degrees,
    };
    if opts.json {
        return to_json(&stats);
    }
    Ok(format!(
        "n {}\nm {}\ncomponents {}\ndegree {}..{}\ntwin classes {}\n",
        stats.n, stats.m, stats.components, stats.min_degree, stats.max_degree, stats.twin_classes
    ))
}

/// Runs a parsed command line. `Ok(false)` means the command ran but its
/// verdict is negative (a coloring that failed verification).
pub fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    let opts = &cli.options;
    let load = |p: &PathBuf| load_graph(p, opts.format);
    let out = match &cli.command {
        Command::Color { file } => cmd_color(&load(file)?, opts)?,
        Command::Decompose { file } => cmd_decompose(&load(file)?, opts)?,
        Command::CheckClass { file } => cmd_check_class(&load(file)?, opts)?,
        Command::Audit { file } => cmd_audit(&load(file)?, opts)?,
        Command::Verify { graph, coloring } => {
            let g = load(graph)?;
            let phi = parse_coloring(&read(coloring)?, g.n())
                .map_err(|e| CliError::User(format!("{}: {e}", coloring.display())))?;
            return cmd_verify(&g, &phi, opts);
        }
        Command::Generate { out, spec } => cmd_generate(out, spec.as_deref(), opts)?,
        Command::ExportDot {
            file,
            coloring,
            color,
        } => {
            let g = load(file)?;
            let phi = match (coloring, color) {
                (Some(path), _) => Some(
                    parse_coloring(&read(path)?, g.n())
                        .map_err(|e| CliError::User(format!("{}: {e}", path.display())))?,
                ),
                (None, true) => Some(color_graph(&g, opts.parallel)?),
                (None, false) => None,
            };
            to_dot(&g, phi.as_ref())
        }
        Command::Stats { file } => cmd_stats(&load(file)?, opts)?,
    };
    Ok((out, true))
}
