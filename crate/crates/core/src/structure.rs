//! Executable checks of the structure around induced cycles in
//! (P6, C4)-free graphs: the partition of the remaining vertices by their
//! neighborhood on a cycle, the nine properties of that partition around a
//! `C5`, domination of induced `C5`/`C6`, and an audit of the atom
//! classification.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::decomposition::{
    classify_atom, classify_strong_atom_leaf, clique_number, find_clique_cutset, is_small_degree,
    universal_vertices, AtomClassification, DecompError, SkeletonKind,
};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::patterns::{for_each_induced_cycle, is_c4_free, is_induced_cycle, is_p6_free};

/// Longest cycle a bitmask key can describe.
pub const MAX_CYCLE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("vertex sequence {0:?} is not an induced cycle")]
    NotInducedCycle(Vec<VertexId>),
    #[error("expected an induced cycle of length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("cycles longer than {MAX_CYCLE} are not supported")]
    CycleTooLong,
}

/// Vertices outside an induced cycle grouped by their exact neighborhood on
/// it. Bucket keys are bitmasks over cycle positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclePartition {
    pub cycle: Vec<VertexId>,
    pub buckets: BTreeMap<u64, VertexSet>,
    /// `aggregates[j]` holds the vertices with exactly `j` cycle neighbors.
    pub aggregates: Vec<VertexSet>,
    #[serde(skip)]
    mask_of: Vec<Option<u64>>,
}

impl CyclePartition {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Bitmask of the given cycle positions, taken modulo the cycle length.
    pub fn mask(&self, positions: &[isize]) -> u64 {
        let k = self.cycle.len() as isize;
        positions
            .iter()
            .fold(0, |acc, &p| acc | (1u64 << p.rem_euclid(k)))
    }

    /// `S(X)` for the positions in `mask`.
    pub fn bucket(&self, mask: u64) -> &[VertexId] {
        self.buckets.get(&mask).map_or(&[], |s| s.as_slice())
    }

    /// Cycle-neighborhood mask of an outside vertex.
    pub fn mask_of(&self, v: VertexId) -> Option<u64> {
        self.mask_of.get(v).copied().flatten()
    }

    /// `S(X)` where `X` is given by cycle positions.
    pub fn s(&self, positions: &[isize]) -> &[VertexId] {
        self.bucket(self.mask(positions))
    }
}

fn neighborhood_mask(g: &Graph, cycle: &[VertexId], v: VertexId) -> u64 {
    cycle
        .iter()
        .enumerate()
        .filter(|&(_, &c)| g.has_edge(v, c))
        .fold(0, |acc, (i, _)| acc | (1u64 << i))
}

/// Partitions `V(G) \ V(C)` by exact neighborhood on the induced cycle `C`.
pub fn partition_by_cycle(g: &Graph, cycle: &[VertexId]) -> Result<CyclePartition, StructureError> {
    if cycle.len() > MAX_CYCLE {
        return Err(StructureError::CycleTooLong);
    }
    if !is_induced_cycle(g, cycle) {
        return Err(StructureError::NotInducedCycle(cycle.to_vec()));
    }
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    let mut buckets: BTreeMap<u64, Vec<VertexId>> = BTreeMap::new();
    let mut aggregates = vec![Vec::new(); cycle.len() + 1];
    let mut mask_of = vec![None; g.n()];
    for v in g.vertices().filter(|&v| !on_cycle.contains(v)) {
        let mask = neighborhood_mask(g, cycle, v);
        buckets.entry(mask).or_default().push(v);
        aggregates[mask.count_ones() as usize].push(v);
        mask_of[v] = Some(mask);
    }
    Ok(CyclePartition {
        cycle: cycle.to_vec(),
        buckets: buckets
            .into_iter()
            .map(|(k, v)| (k, VertexSet::from(v)))
            .collect(),
        aggregates: aggregates.into_iter().map(VertexSet::from).collect(),
        mask_of,
    })
}

/// Shape of a violated statement; masks are cycle-position bitmasks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Rule {
    /// The vertex's cycle neighborhood is not one of the permitted shapes.
    Legal,
    /// The union of these buckets is a clique.
    Clique(Vec<u64>),
    AntiComplete(u64, u64),
    Complete(u64, u64),
    /// If both buckets are non-empty, the first is a clique.
    CliqueIfBoth(u64, u64),
    /// At least one of the two buckets is empty.
    OneEmpty(u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyViolation {
    pub property: String,
    pub rule: Rule,
    pub witness: Vec<VertexId>,
    pub reason: String,
}

fn legal_c5_masks() -> Vec<u64> {
    let mut legal = vec![0, 0b11111];
    for i in 0..5 {
        let bit = |o: usize| 1u64 << ((i + o) % 5);
        legal.push(bit(0));
        legal.push(bit(0) | bit(1));
        legal.push(bit(0) | bit(1) | bit(2));
    }
    legal
}

impl PropertyViolation {
    /// Re-evaluates the witness against `g` and the cycle.
    pub fn reproduces(&self, g: &Graph, cycle: &[VertexId]) -> bool {
        if self
            .witness
            .iter()
            .any(|&v| v >= g.n() || cycle.contains(&v))
        {
            return false;
        }
        let m = |v: VertexId| neighborhood_mask(g, cycle, v);
        let w = &self.witness;
        match (&self.rule, w.as_slice()) {
            (Rule::Legal, &[x]) => !legal_c5_masks().contains(&m(x)),
            (Rule::Clique(masks), &[a, b]) => {
                a != b && masks.contains(&m(a)) && masks.contains(&m(b)) && !g.has_edge(a, b)
            }
            (Rule::AntiComplete(x, y), &[a, b]) => m(a) == *x && m(b) == *y && g.has_edge(a, b),
            (Rule::Complete(x, y), &[a, b]) => m(a) == *x && m(b) == *y && !g.has_edge(a, b),
            (Rule::CliqueIfBoth(x, y), &[a, b, c]) => {
                a != b && m(a) == *x && m(b) == *x && m(c) == *y && !g.has_edge(a, b)
            }
            (Rule::OneEmpty(x, y), &[a, b]) => m(a) == *x && m(b) == *y,
            _ => false,
        }
    }
}

struct Checker<'a> {
    g: &'a Graph,
    part: &'a CyclePartition,
    out: Vec<PropertyViolation>,
}

impl Checker<'_> {
    fn push(&mut self, property: &str, rule: Rule, witness: Vec<VertexId>, reason: String) {
        self.out.push(PropertyViolation {
            property: property.to_string(),
            rule,
            witness,
            reason,
        });
    }

    fn anti_complete(&mut self, property: &str, x: u64, y: u64) {
        let hit = self.part.bucket(x).iter().find_map(|&a| {
            self.part
                .bucket(y)
                .iter()
                .find(|&&b| self.g.has_edge(a, b))
                .map(|&b| (a, b))
        });
        if let Some((a, b)) = hit {
            let reason = format!(
                "{a} in S({}) is adjacent to {b} in S({})",
                self.label(x),
                self.label(y)
            );
            self.push(property, Rule::AntiComplete(x, y), vec![a, b], reason);
        }
    }

    fn complete(&mut self, property: &str, x: u64, y: u64) {
        let hit = self.part.bucket(x).iter().find_map(|&a| {
            self.part
                .bucket(y)
                .iter()
                .find(|&&b| !self.g.has_edge(a, b))
                .map(|&b| (a, b))
        });
        if let Some((a, b)) = hit {
            let reason = format!(
                "{a} in S({}) misses {b} in S({})",
                self.label(x),
                self.label(y)
            );
            self.push(property, Rule::Complete(x, y), vec![a, b], reason);
        }
    }

    fn non_adjacent_pair(&self, members: &[VertexId]) -> Option<(VertexId, VertexId)> {
        members.iter().enumerate().find_map(|(i, &a)| {
            members[i + 1..]
                .iter()
                .find(|&&b| !self.g.has_edge(a, b))
                .map(|&b| (a, b))
        })
    }

    fn clique(&mut self, property: &str, masks: Vec<u64>) {
        let mut members: Vec<VertexId> = masks
            .iter()
            .flat_map(|&m| self.part.bucket(m).to_vec())
            .collect();
        members.sort_unstable();
        members.dedup();
        if let Some((a, b)) = self.non_adjacent_pair(&members) {
            let names: Vec<String> = masks
                .iter()
                .map(|&m| format!("S({})", self.label(m)))
                .collect();
            let reason = format!("{a} and {b} in {} are non-adjacent", names.join(" ∪ "));
            self.push(property, Rule::Clique(masks), vec![a, b], reason);
        }
    }

    fn clique_if_both(&mut self, property: &str, x: u64, y: u64) {
        let Some(&c) = self.part.bucket(y).first() else {
            return;
        };
        if let Some((a, b)) = self.non_adjacent_pair(self.part.bucket(x)) {
            let reason = format!(
                "S({}) and S({}) are both non-empty but {a}, {b} in S({}) are non-adjacent",
                self.label(x),
                self.label(y),
                self.label(x)
            );
            self.push(property, Rule::CliqueIfBoth(x, y), vec![a, b, c], reason);
        }
    }

    fn one_empty(&mut self, property: &str, x: u64, y: u64) {
        if let (Some(&a), Some(&b)) = (self.part.bucket(x).first(), self.part.bucket(y).first()) {
            let reason = format!(
                "S({}) holds {a} and S({}) holds {b}",
                self.label(x),
                self.label(y)
            );
            self.push(property, Rule::OneEmpty(x, y), vec![a, b], reason);
        }
    }

    /// Cycle positions of a mask, written 1-based.
    fn label(&self, mask: u64) -> String {
        (0..self.part.len())
            .filter(|&i| mask & (1u64 << i) != 0)
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Checks the nine partition properties around an induced `C5` for every
/// rotation. The result is empty for every (P6, C4)-free graph.
///
/// The first property only rejects neighborhoods that are not empty, a
/// single vertex, two or three consecutive vertices, or the whole cycle;
/// vertices without cycle neighbors are allowed here.
pub fn check_c5_properties(
    g: &Graph,
    cycle: &[VertexId],
) -> Result<Vec<PropertyViolation>, StructureError> {
    if cycle.len() != 5 {
        return Err(StructureError::WrongLength {
            expected: 5,
            got: cycle.len(),
        });
    }
    let part = partition_by_cycle(g, cycle)?;
    let mut ck = Checker {
        g,
        part: &part,
        out: Vec::new(),
    };
    let legal = legal_c5_masks();
    for (&mask, members) in &part.buckets {
        if !legal.contains(&mask) {
            let x = members.first().expect("non-empty bucket");
            let reason = format!("{x} has cycle neighborhood {{{}}}", ck.label(mask));
            ck.push("P1", Rule::Legal, vec![x], reason);
        }
    }
    let full = part.mask(&[0, 1, 2, 3, 4]);
    for i in 0..5isize {
        let s = |offsets: &[isize]| -> u64 {
            let shifted: Vec<isize> = offsets.iter().map(|o| i + o).collect();
            part.mask(&shifted)
        };
        ck.clique("P2", vec![full, s(&[-1, 0, 1])]);
        ck.anti_complete("P3", s(&[-1, 0, 1]), s(&[1, 2, 3]));
        ck.complete("P4", s(&[0, 1]), s(&[1, 2]));
        ck.anti_complete("P4", s(&[0, 1]), s(&[3, 4]));
        ck.clique_if_both("P4", s(&[0, 1]), s(&[1, 2]));
        ck.clique_if_both("P4", s(&[1, 2]), s(&[0, 1]));
        ck.anti_complete("P5", s(&[0]), s(&[1]));
        ck.complete("P5", s(&[0]), s(&[2]));
        ck.anti_complete("P6", s(&[-1, 0, 1]), s(&[-2, 2]));
        ck.anti_complete("P7", s(&[0]), s(&[1, 2, 3]));
        ck.one_empty("P8", s(&[0]), s(&[1, 2]));
        for j in 1..5 {
            ck.anti_complete("P9", s(&[-2, 2]), s(&[j]));
        }
    }
    Ok(ck.out)
}

/// Every vertex outside `set` has a neighbor in it.
pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    g.vertices()
        .filter(|&v| !set.contains(v))
        .all(|v| g.neighbors(v).iter().any(|&w| set.contains(w)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditOptions {
    /// Graphs up to this order have all induced `C5`/`C6` enumerated.
    pub enumeration_cap: usize,
    /// Larger graphs only have this many cycles of each length examined.
    pub sampled_cycles: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        Self {
            enumeration_cap: 14,
            sampled_cycles: 64,
        }
    }
}

/// Classification outcome with the evidence that was re-checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseWitness {
    pub case: String,
    pub vertex: Option<VertexId>,
    pub degree: Option<usize>,
    pub omega: Option<usize>,
    pub class_sizes: Option<Vec<usize>>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    /// `None` when the question does not apply (empty or disconnected).
    pub atom: Option<bool>,
    pub clique_cutset: Option<VertexSet>,
    pub c4_free: bool,
    pub p6_free: bool,
    pub classification: Option<CaseWitness>,
    pub cycles_exhaustive: bool,
    pub c5_checked: usize,
    pub c5_non_dominating: Vec<Vec<VertexId>>,
    pub c5_violations: Vec<PropertyViolation>,
    pub c6_checked: usize,
    pub c6_non_dominating: Vec<Vec<VertexId>>,
    /// For an in-class atom with a non-dominating induced `C6`: whether it
    /// is the join of a Petersen blow-up and a clique.
    pub c6_join_structure: Option<bool>,
    pub failures: Vec<String>,
}

impl AuditReport {
    pub fn in_class(&self) -> bool {
        self.c4_free && self.p6_free
    }

    pub fn in_class_atom(&self) -> bool {
        self.in_class() && self.atom == Some(true)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn witness_for(g: &Graph, class: &AtomClassification, omega: usize) -> CaseWitness {
    let mut w = CaseWitness {
        case: class.label().to_string(),
        vertex: None,
        degree: None,
        omega: Some(omega),
        class_sizes: None,
        verified: false,
    };
    match class {
        AtomClassification::Small(v) => {
            w.vertex = Some(*v);
            w.degree = Some(g.degree(*v));
            w.verified = is_small_degree(g.degree(*v), omega);
        }
        AtomClassification::Universal(v) => {
            w.vertex = Some(*v);
            w.degree = Some(g.degree(*v));
            w.verified = g.degree(*v) + 1 == g.n();
        }
        AtomClassification::PetersenBlowup(tp) | AtomClassification::FBlowup(tp) => {
            let expected = if matches!(class, AtomClassification::PetersenBlowup(_)) {
                SkeletonKind::Petersen
            } else {
                SkeletonKind::F
            };
            w.class_sizes = Some(tp.sizes());
            w.verified = tp.verify(g) && SkeletonKind::of(&tp.skeleton) == Some(expected);
        }
        AtomClassification::NotInClass => {}
    }
    w
}

/// Audits one graph: atom status, class membership, the atom
/// classification, and the cycle-domination and `C5` partition properties
/// on its induced `C5`s and `C6`s.
pub fn audit_atom_classification(g: &Graph, options: &AuditOptions) -> AuditReport {
    let connected = g.n() > 0 && g.is_connected();
    let mut report = AuditReport {
        n: g.n(),
        m: g.m(),
        connected,
        atom: None,
        clique_cutset: None,
        c4_free: is_c4_free(g),
        p6_free: is_p6_free(g),
        classification: None,
        cycles_exhaustive: g.n() <= options.enumeration_cap,
        c5_checked: 0,
        c5_non_dominating: Vec::new(),
        c5_violations: Vec::new(),
        c6_checked: 0,
        c6_non_dominating: Vec::new(),
        c6_join_structure: None,
        failures: Vec::new(),
    };
    if connected {
        match find_clique_cutset(g) {
            Ok(cut) => {
                report.atom = Some(cut.is_none());
                report.clique_cutset = cut;
            }
            Err(e) => report
                .failures
                .push(format!("clique cutset search failed: {e}")),
        }
    }
    let in_class_atom = report.in_class_atom();

    if in_class_atom {
        match classify(g) {
            Ok(w) => {
                if !w.verified {
                    report.failures.push(format!(
                        "in-class atom: no classification case verifies (got {})",
                        w.case
                    ));
                }
                report.classification = Some(w);
            }
            Err(e) => report.failures.push(format!("classification failed: {e}")),
        }
    }

    let limit = if report.cycles_exhaustive {
        usize::MAX
    } else {
        options.sampled_cycles
    };
    let mut c5s = Vec::new();
    for_each_induced_cycle(g, 5, |c| {
        c5s.push(c.to_vec());
        c5s.len() < limit
    });
    for c in &c5s {
        report.c5_checked += 1;
        if in_class_atom && !is_dominating(g, &c.iter().copied().collect()) {
            report.c5_non_dominating.push(c.clone());
        }
        if report.in_class() {
            match check_c5_properties(g, c) {
                Ok(v) => report.c5_violations.extend(v),
                Err(e) => report.failures.push(format!("C5 check failed: {e}")),
            }
        }
    }
    if !report.c5_non_dominating.is_empty() {
        report.failures.push(format!(
            "{} induced C5 of an in-class atom are not dominating",
            report.c5_non_dominating.len()
        ));
    }
    if !report.c5_violations.is_empty() {
        report.failures.push(format!(
            "{} C5 partition property violations in an in-class graph",
            report.c5_violations.len()
        ));
    }

    let mut c6_count = 0;
    let mut c6_non_dominating = Vec::new();
    for_each_induced_cycle(g, 6, |c| {
        c6_count += 1;
        if in_class_atom && !is_dominating(g, &c.iter().copied().collect()) {
            c6_non_dominating.push(c.to_vec());
        }
        c6_count < limit
    });
    report.c6_checked = c6_count;
    report.c6_non_dominating = c6_non_dominating;
    if !report.c6_non_dominating.is_empty() {
        let ok = is_petersen_join(g);
        report.c6_join_structure = Some(ok);
        if !ok {
            report.failures.push(
                "in-class atom with a non-dominating induced C6 is not a Petersen blow-up joined with a clique"
                    .to_string(),
            );
        }
    }
    report
}

fn classify(g: &Graph) -> Result<CaseWitness, DecompError> {
    let omega = clique_number(g)?;
    let class = classify_atom(g)?;
    Ok(witness_for(g, &class, omega))
}

/// `g` is the join of a Petersen blow-up and a (possibly empty) clique.
fn is_petersen_join(g: &Graph) -> bool {
    if g.is_complete() || universal_vertices(g).len() == g.n() {
        return false;
    }
    matches!(
        classify_strong_atom_leaf(g),
        Ok(Some(leaf)) if leaf.kind == SkeletonKind::Petersen && leaf.matches(g)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, f1, f2, f3, petersen, F1_X, F1_Y, F1_Z, F2_T, F2_X, F2_Y};
    use crate::patterns::induced_cycles;

    const PENTAGON: [VertexId; 5] = [0, 1, 2, 3, 4];

    fn pentagon_plus(extra: &[&[VertexId]]) -> Graph {
        let n = 5 + extra.len();
        let mut edges: Vec<(VertexId, VertexId)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for (k, ns) in extra.iter().enumerate() {
            edges.extend(ns.iter().map(|&c| (5 + k, c)));
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn partition_of_bare_cycle() {
        let part = partition_by_cycle(&cycle(5).unwrap(), &PENTAGON).unwrap();
        assert!(part.buckets.is_empty());
        assert!(part.aggregates.iter().all(VertexSet::is_empty));
    }

    #[test]
    fn partition_of_f1_and_f2() {
        let part = partition_by_cycle(&f1(), &PENTAGON).unwrap();
        // Cycle labels 1..5 sit at positions 0..4.
        assert_eq!(part.s(&[2, 3]), &[F1_X]);
        assert_eq!(part.s(&[1, 2]), &[F1_Y]);
        assert_eq!(part.s(&[3, 4]), &[F1_Z]);
        assert_eq!(part.aggregates[2].len(), 3);

        let part = partition_by_cycle(&f2(), &PENTAGON).unwrap();
        assert_eq!(part.s(&[4, 0, 1]), &[F2_T]);
        assert_eq!(part.s(&[3, 4]), &[F2_X]);
        assert_eq!(part.s(&[1, 2]), &[F2_Y]);
    }

    #[test]
    fn partition_rejects_non_induced() {
        assert!(matches!(
            partition_by_cycle(&f3(), &[0, 1, 2, 3, 8]),
            Err(StructureError::NotInducedCycle(_))
        ));
    }

    #[test]
    fn f3_satisfies_all_properties() {
        assert!(check_c5_properties(&f3(), &PENTAGON).unwrap().is_empty());
    }

    #[test]
    fn gap_neighborhood_violates_p1() {
        let g = pentagon_plus(&[&[0, 2]]);
        let v = check_c5_properties(&g, &PENTAGON).unwrap();
        assert!(v.iter().any(|x| x.property == "P1" && x.witness == vec![5]));
        assert!(v.iter().all(|x| x.reproduces(&g, &PENTAGON)));
        assert!(!is_c4_free(&g));
    }

    #[test]
    fn two_non_adjacent_triple_vertices_violate_p2() {
        let g = pentagon_plus(&[&[4, 0, 1], &[4, 0, 1]]);
        let v = check_c5_properties(&g, &PENTAGON).unwrap();
        let p2: Vec<_> = v.iter().filter(|x| x.property == "P2").collect();
        assert!(!p2.is_empty());
        assert_eq!(p2[0].witness, vec![5, 6]);
        assert!(v.iter().all(|x| x.reproduces(&g, &PENTAGON)));
        assert!(!is_c4_free(&g));
    }

    #[test]
    fn checks_are_rotation_and_orientation_invariant() {
        let g = pentagon_plus(&[&[0, 2], &[4, 0, 1], &[4, 0, 1], &[3]]);
        let base = check_c5_properties(&g, &PENTAGON).unwrap();
        let key = |v: &[PropertyViolation]| {
            let mut k: Vec<String> = v.iter().map(|x| x.property.clone()).collect();
            k.sort();
            k.dedup();
            k
        };
        for r in 0..5 {
            let rotated: Vec<VertexId> = (0..5).map(|i| PENTAGON[(i + r) % 5]).collect();
            let mut reversed = rotated.clone();
            reversed.reverse();
            for c in [rotated, reversed] {
                let v = check_c5_properties(&g, &c).unwrap();
                assert_eq!(key(&v), key(&base));
                assert!(v.iter().all(|x| x.reproduces(&g, &c)));
            }
        }
    }

    #[test]
    fn domination_examples() {
        let p = petersen();
        assert!(is_dominating(&p, &VertexSet::full(10)));
        assert!(!is_dominating(&p, &VertexSet::new()));
        for c in induced_cycles(&p, 5) {
            assert!(is_dominating(&p, &c.into_iter().collect()));
        }
    }

    #[test]
    fn audit_examples() {
        let r = audit_atom_classification(&petersen(), &AuditOptions::default());
        assert!(r.in_class_atom() && r.passed());
        assert_eq!(r.classification.as_ref().unwrap().case, "petersen-blowup");
        assert_eq!(r.clique_cutset, None);

        let r = audit_atom_classification(&f3(), &AuditOptions::default());
        assert!(r.in_class_atom() && r.passed(), "{r:?}");
        let w = r.classification.unwrap();
        assert_eq!(
            (w.case.as_str(), w.degree, w.omega),
            ("small", Some(3), Some(3))
        );

        let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let r = audit_atom_classification(&bowtie, &AuditOptions::default());
        assert_eq!(r.atom, Some(false));
        assert_eq!(r.clique_cutset, Some(VertexSet::singleton(2)));
        assert!(r.classification.is_none());
    }
}
