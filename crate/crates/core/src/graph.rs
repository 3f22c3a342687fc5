//! Generation graphs, recurrent pruning, bad-sequence automata and
//! translate-generation certificates.
//!
//! An edge `g -i-> f` means `f ∈ Σ_i(g)`, so along a path
//! `f_n -i_n-> … -i_1-> f_0` we have `f_0 ∈ Σ_{i_1} ⋯ Σ_{i_n}(f_n)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{brun_admissible, brun_family, jp_admissible, theta_family, JpDigit};
use crate::fixtures::{BallChain, BallGraph, NamedAutomaton, NamedGraph, Reference};
use crate::geometry::{neg3, sub3, Face, Pattern};
use crate::lp::Cone;
use crate::substitution::Substitution;

/// A labelled edge `(source, label, target)`.
pub type LabelledEdge = (Face, u8, Face);

/// Vertices with their birth iteration, and labelled edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationGraph {
    /// Vertex faces and the iteration that first produced them.
    pub vertices: BTreeMap<Face, usize>,
    /// Edges `g -i-> f` with `f ∈ Σ_i(g)`.
    pub edges: BTreeSet<LabelledEdge>,
}

/// Result of [`build_generation_graph`].
#[derive(Clone, Debug)]
pub struct GraphBuild {
    /// The graph after the last iteration.
    pub graph: GenerationGraph,
    /// Whether an iteration added nothing.
    pub reached_fixpoint: bool,
    /// Number of iterations performed, including the one that added nothing.
    pub iterations: usize,
    /// Last iteration that added a vertex or an edge (0 if none did).
    pub last_growth: usize,
}

impl GenerationGraph {
    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Whether `f` is a vertex.
    pub fn contains(&self, f: &Face) -> bool {
        self.vertices.contains_key(f)
    }

    /// Vertex set as a pattern.
    pub fn vertex_pattern(&self) -> Pattern {
        self.vertices.keys().copied().collect()
    }

    /// Induced subgraph on the vertices satisfying `keep`.
    pub fn induced<F: Fn(&Face) -> bool>(&self, keep: F) -> GenerationGraph {
        GenerationGraph {
            vertices: self.vertices.iter().filter(|(f, _)| keep(f)).map(|(f, g)| (*f, *g)).collect(),
            edges: self.edges.iter().filter(|(a, _, b)| keep(a) && keep(b)).copied().collect(),
        }
    }

    /// Induced subgraph without the faces of `p`.
    pub fn without(&self, p: &Pattern) -> GenerationGraph {
        self.induced(|f| !p.contains(f))
    }

    /// Graphviz rendering; vertices are labelled `[x;t]`.
    pub fn to_dot(&self) -> String {
        let name = |f: &Face| format!("\"[{},{},{};{}]\"", f.pos[0], f.pos[1], f.pos[2], f.kind);
        let mut s = String::from("digraph generation {\n");
        for (f, g) in &self.vertices {
            let _ = writeln!(s, "  {} [generation={}];", name(f), g);
        }
        for (a, i, b) in &self.edges {
            let _ = writeln!(s, "  {} -> {} [label=\"{}\"];", name(a), name(b), i);
        }
        s.push_str("}\n");
        s
    }

    /// JSON rendering with generations.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<_> = self
            .vertices
            .iter()
            .map(|(f, g)| serde_json::json!({"x": f.pos, "t": f.kind, "generation": g}))
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|(a, i, b)| serde_json::json!({"from": a, "label": i, "to": b}))
            .collect();
        serde_json::json!({"vertices": vertices, "edges": edges})
    }

    fn petgraph(&self) -> (DiGraph<Face, u8>, HashMap<Face, NodeIndex>) {
        let mut g = DiGraph::new();
        let idx: HashMap<Face, NodeIndex> = self.vertices.keys().map(|f| (*f, g.add_node(*f))).collect();
        for (a, i, b) in &self.edges {
            g.add_edge(idx[a], idx[b], *i);
        }
        (g, idx)
    }

    /// Strongly connected components, each as a sorted face list.
    pub fn sccs(&self) -> Vec<Vec<Face>> {
        let (g, _) = self.petgraph();
        let mut out: Vec<Vec<Face>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut v: Vec<Face> = c.into_iter().map(|n| g[n]).collect();
                v.sort();
                v
            })
            .collect();
        out.sort();
        out
    }

    /// Components with an internal edge carrying one of `labels`.
    fn recurrent_components(&self, labels: &BTreeSet<u8>) -> Vec<BTreeSet<Face>> {
        self.sccs()
            .into_iter()
            .map(|c| c.into_iter().collect::<BTreeSet<Face>>())
            .filter(|c| self.edges.iter().any(|(a, i, b)| labels.contains(i) && c.contains(a) && c.contains(b)))
            .collect()
    }
}

/// Builds the generation graph of `subs` (labelled `1..=subs.len()`) from
/// `initial`, keeping only preimage faces admitted by `filter`.
pub fn build_generation_graph(
    subs: &[Substitution],
    filter: Option<&Cone>,
    initial: &Pattern,
    max_iters: usize,
) -> Result<GraphBuild> {
    if initial.is_empty() {
        return Err(Error::InvalidInput("empty initial set".into()));
    }
    let mut graph = GenerationGraph {
        vertices: initial.faces().map(|f| (*f, 0)).collect(),
        edges: BTreeSet::new(),
    };
    let mut iterations = 0;
    let mut last_growth = 0;
    while iterations < max_iters {
        iterations += 1;
        let current: Vec<Face> = graph.vertices.keys().copied().collect();
        let found: Vec<Vec<LabelledEdge>> = current
            .par_iter()
            .map(|f| {
                let mut es = Vec::new();
                for (k, s) in subs.iter().enumerate() {
                    for g in s.dual_preimages(f, filter)? {
                        es.push((g, (k + 1) as u8, *f));
                    }
                }
                Ok(es)
            })
            .collect::<Result<_>>()?;
        let mut changed = false;
        for e in found.into_iter().flatten() {
            if !graph.vertices.contains_key(&e.0) {
                graph.vertices.insert(e.0, iterations);
                changed = true;
            }
            changed |= graph.edges.insert(e);
        }
        if !changed {
            return Ok(GraphBuild { graph, reached_fixpoint: true, iterations, last_growth });
        }
        last_growth = iterations;
    }
    Ok(GraphBuild { graph, reached_fixpoint: false, iterations, last_growth })
}

/// Vertices at the end of an infinite backward path whose labels hit
/// `required` infinitely often, with the induced edges.
///
/// In a finite graph these are the vertices reachable from a strongly
/// connected component containing an internal edge with a required label.
pub fn prune_to_recurrent(graph: &GenerationGraph, required: &BTreeSet<u8>) -> GenerationGraph {
    let mut keep: BTreeSet<Face> = graph.recurrent_components(required).into_iter().flatten().collect();
    let mut stack: Vec<Face> = keep.iter().copied().collect();
    let mut succ: BTreeMap<Face, Vec<Face>> = BTreeMap::new();
    for (a, _, b) in &graph.edges {
        succ.entry(*a).or_default().push(*b);
    }
    while let Some(f) = stack.pop() {
        for g in succ.get(&f).into_iter().flatten() {
            if keep.insert(*g) {
                stack.push(*g);
            }
        }
    }
    graph.induced(|f| keep.contains(f))
}

/// True iff every strongly connected component with an internal edge
/// labelled `label` consists of faces of `seed` only.
pub fn scc_seed_certificate(graph: &GenerationGraph, seed: &Pattern, label: u8) -> bool {
    graph
        .recurrent_components(&BTreeSet::from([label]))
        .iter()
        .all(|c| c.iter().all(|f| seed.contains(f)))
}

/// Brun generation graph from `initial` with the Brun face filter.
pub fn brun_generation_graph(initial: &Pattern, max_iters: usize) -> Result<GraphBuild> {
    build_generation_graph(&brun_family(), Some(&Cone::brun()), initial, max_iters)
}

/// Jacobi-Perron generation graph over `θ1..θ4` with the Jacobi-Perron face filter.
pub fn jp_generation_graph(initial: &Pattern, max_iters: usize) -> Result<GraphBuild> {
    build_generation_graph(&theta_family(), Some(&Cone::jp()), initial, max_iters)
}

/// The reduced Brun graph: vertices outside `U` at the end of an infinite
/// backward path with infinitely many 3s.
pub fn reduced_brun_graph(g: &GenerationGraph) -> GenerationGraph {
    prune_to_recurrent(&g.without(&Pattern::u()), &BTreeSet::from([3]))
}

/// Converts a named graph to a generation graph (generations are 0).
pub fn named_graph(g: &NamedGraph) -> Result<GenerationGraph> {
    let face = |n: &String| g.vertices.get(n).copied().ok_or_else(|| Error::InvalidInput(format!("unknown vertex {n:?}")));
    Ok(GenerationGraph {
        vertices: g.vertices.values().map(|f| (*f, 0)).collect(),
        edges: g.edges.iter().map(|(a, i, b)| Ok((face(a)?, *i, face(b)?))).collect::<Result<_>>()?,
    })
}

/// A finite automaton over edge labels, used for cycle queries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelAutomaton {
    /// State names.
    pub states: Vec<String>,
    /// Transitions `(source, label, target)` as state indices.
    pub transitions: Vec<(usize, u8, usize)>,
}

impl LabelAutomaton {
    /// From named data.
    pub fn from_named(a: &NamedAutomaton) -> Result<Self> {
        let idx = |n: &String| {
            a.states.iter().position(|s| s == n).ok_or_else(|| Error::InvalidInput(format!("unknown state {n:?}")))
        };
        Ok(LabelAutomaton {
            states: a.states.clone(),
            transitions: a.edges.iter().map(|(s, l, t)| Ok((idx(s)?, *l, idx(t)?))).collect::<Result<_>>()?,
        })
    }

    /// Every vertex of `g` becomes a state.
    pub fn from_graph(g: &GenerationGraph) -> Self {
        let faces: Vec<Face> = g.vertices.keys().copied().collect();
        let idx: HashMap<Face, usize> = faces.iter().enumerate().map(|(k, f)| (*f, k)).collect();
        LabelAutomaton {
            states: faces.iter().map(|f| format!("[{},{},{};{}]", f.pos[0], f.pos[1], f.pos[2], f.kind)).collect(),
            transitions: g.edges.iter().map(|(a, l, b)| (idx[a], *l, idx[b])).collect(),
        }
    }

    /// Relation `s → t` iff some walk from `s` to `t` reads `word`.
    fn word_relation(&self, word: &[u8]) -> Vec<Vec<bool>> {
        let n = self.states.len();
        (0..n)
            .map(|s| {
                let mut cur = vec![false; n];
                cur[s] = true;
                for &l in word {
                    let mut next = vec![false; n];
                    for &(a, m, b) in &self.transitions {
                        if m == l && cur[a] {
                            next[b] = true;
                        }
                    }
                    cur = next;
                }
                cur
            })
            .collect()
    }

    /// Whether some power of `word` labels a closed walk.
    pub fn has_cycle_power(&self, word: &[u8]) -> bool {
        if word.is_empty() {
            return false;
        }
        // A closed walk reading a power of `word` is a cycle of the word relation.
        let rel = self.word_relation(word);
        let n = rel.len();
        let mut g = DiGraph::<(), ()>::new();
        let nodes: Vec<NodeIndex> = (0..n).map(|_| g.add_node(())).collect();
        for (s, row) in rel.iter().enumerate() {
            if row[s] {
                return true;
            }
            for (t, &r) in row.iter().enumerate() {
                if r {
                    g.add_edge(nodes[s], nodes[t], ());
                }
            }
        }
        tarjan_scc(&g).iter().any(|c| c.len() > 1)
    }

    /// Coarsest forward label-bisimulation quotient.
    pub fn bisimulation_quotient(&self) -> LabelAutomaton {
        let n = self.states.len();
        let mut block = vec![0usize; n];
        loop {
            let sig: Vec<(usize, BTreeSet<(u8, usize)>)> = (0..n)
                .map(|s| {
                    let out = self.transitions.iter().filter(|t| t.0 == s).map(|t| (t.1, block[t.2])).collect();
                    (block[s], out)
                })
                .collect();
            let mut ids: BTreeMap<&(usize, BTreeSet<(u8, usize)>), usize> = BTreeMap::new();
            for s in &sig {
                let k = ids.len();
                ids.entry(s).or_insert(k);
            }
            let next: Vec<usize> = sig.iter().map(|s| ids[s]).collect();
            let stable = ids.len() == block.iter().collect::<BTreeSet<_>>().len();
            block = next;
            if stable {
                break;
            }
        }
        let count = block.iter().max().map_or(0, |m| m + 1);
        let mut names = vec![String::new(); count];
        for (s, &b) in block.iter().enumerate() {
            if names[b].is_empty() {
                names[b] = self.states[s].clone();
            }
        }
        let transitions: BTreeSet<(usize, u8, usize)> =
            self.transitions.iter().map(|&(a, l, b)| (block[a], l, block[b])).collect();
        LabelAutomaton { states: names, transitions: transitions.into_iter().collect() }
    }
}

/// Whether the Brun word `w` (in application order, `Σ_{w1}` applied last)
/// repeated forever is bad, i.e. the reversed word has a power labelling a
/// cycle of the four-state automaton.
pub fn brun_bad_cycle_check(reference: &Reference, w: &[u8]) -> Result<bool> {
    if !brun_admissible(w, true) {
        return Err(Error::Inadmissible(format!("Brun word {w:?} has no 3")));
    }
    let a = LabelAutomaton::from_named(&reference.brun_bad_automaton)?;
    let rev: Vec<u8> = w.iter().rev().copied().collect();
    Ok(a.has_cycle_power(&rev))
}

/// Whether the eventually periodic Jacobi-Perron sequence `prefix · period^∞`
/// is bad: some `ℓ ≥ 1` has `a_{ℓ+3k} = 0`, `a_{ℓ+3k+1} = b_{ℓ+3k+1}` and
/// `0 < a_{ℓ+3k+2} < b_{ℓ+3k+2}` for all `k ≥ 0`.
pub fn jp_bad_check(prefix: &[JpDigit], period: &[JpDigit]) -> Result<bool> {
    if period.is_empty() {
        return Err(Error::InvalidInput("empty period".into()));
    }
    let full: Vec<JpDigit> = prefix.iter().chain(period.iter()).chain(period.iter()).copied().collect();
    if !jp_admissible(&full, false) || !jp_admissible(period, true) {
        return Err(Error::Inadmissible("Jacobi-Perron digits".into()));
    }
    let p = prefix.len();
    let q = period.len();
    let at = |n: usize| if n <= p { prefix[n - 1] } else { period[(n - p - 1) % q] };
    // The condition is periodic in ℓ with period lcm(3, q) past the prefix.
    let l = if q % 3 == 0 { q } else { 3 * q };
    Ok((1..=p + l).any(|ell| {
        (0..=(p + 2 * l) / 3 + 1).all(|k| {
            let n = ell + 3 * k;
            let (a0, _) = at(n);
            let (a1, b1) = at(n + 1);
            let (a2, b2) = at(n + 2);
            a0 == 0 && a1 == b1 && 0 < a2 && a2 < b2
        })
    }))
}

/// One checked edge of a translate-generation graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslateEdge {
    /// Source node name.
    pub from: String,
    /// Substitution label.
    pub label: u8,
    /// Target node name.
    pub to: String,
    /// Whether the image contains a translate of the target.
    pub ok: bool,
}

/// Outcome of [`brun_translate_certificate`] or [`jp_translate_certificate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslateReport {
    /// All checked edges.
    pub edges: Vec<TranslateEdge>,
}

impl TranslateReport {
    /// Whether every edge verified.
    pub fn passed(&self) -> bool {
        self.edges.iter().all(|e| e.ok)
    }

    /// The failing edges.
    pub fn failures(&self) -> Vec<&TranslateEdge> {
        self.edges.iter().filter(|e| !e.ok).collect()
    }
}

/// Node patterns of the Brun ball graph.
///
/// `P0` is the start pattern.  The node named by the word `i_k ⋯ i_1` starts
/// as `Σ_{i_k} ⋯ Σ_{i_1}(P0)`; each pattern is then cut down to the faces
/// produced along every incoming edge, `Q ← Q ∩ (Σ_i(P) − t)` with the
/// translate `t` of largest overlap, until stable.  Edges
/// into `V1`/`V2` do not constrain nodes.
pub fn brun_ball_patterns(g: &BallGraph, seeds: &[Pattern]) -> Result<BTreeMap<String, Pattern>> {
    let subs = brun_family();
    let seed = |name: &str| -> Result<&Pattern> {
        let k: usize = name[1..].parse().map_err(|_| Error::InvalidInput(format!("bad seed name {name:?}")))?;
        seeds.get(k.wrapping_sub(1)).ok_or_else(|| Error::InvalidInput(format!("no seed {name}")))
    };
    let exits_ok = |node: &str, p: &Pattern| {
        g.edges.iter().filter(|(x, _, y)| x == node && y.starts_with('V')).all(|(_, j, y)| {
            let image = subs.get((*j as usize).wrapping_sub(1)).and_then(|s| s.dual_image_pattern(p).ok());
            matches!((seed(y), image), (Ok(v), Some(im)) if v.occurs_in(&im))
        })
    };
    let mut out = BTreeMap::new();
    out.insert("P0".to_string(), g.start.clone());
    let names: BTreeSet<&String> = g.edges.iter().flat_map(|(a, _, b)| [a, b]).collect();
    for name in names {
        if name == "P0" || name.starts_with('V') {
            continue;
        }
        let mut p = g.start.clone();
        for c in name.chars().rev() {
            let i = c.to_digit(10).filter(|d| (1..=3).contains(d)).ok_or_else(|| {
                Error::InvalidInput(format!("bad ball-graph node name {name:?}"))
            })? as usize;
            p = subs[i - 1].dual_image_pattern(&p)?;
        }
        out.insert(name.clone(), p);
    }
    loop {
        let mut changed = false;
        for (a, i, b) in &g.edges {
            if b.starts_with('V') || b == "P0" {
                continue;
            }
            let s = subs.get((*i as usize).wrapping_sub(1)).ok_or_else(|| Error::InvalidInput(format!("label {i}")))?;
            let image = s.dual_image_pattern(&out[a])?;
            let keeps_exits = |p: &Pattern| {
                exits_ok(b, p)
                    && g.edges.iter().filter(|(x, _, y)| x == b && y != b && !y.starts_with('V')).all(|(_, j, y)| {
                        let image = subs.get((*j as usize).wrapping_sub(1)).and_then(|s| s.dual_image_pattern(p).ok());
                        match (out.get(y), image) {
                            (Some(q), Some(im)) => overlaps(q, &im).iter().any(|c| exits_ok(y, c)),
                            _ => false,
                        }
                    })
            };
            let cut = best_overlap(&out[b], &image, keeps_exits);
            if cut != out[b] {
                out.insert(b.clone(), cut);
                changed = true;
            }
        }
        if !changed {
            return Ok(out);
        }
    }
}

/// The patterns `q ∩ (image − t)` over all translates `t` matching some face.
fn overlaps(q: &Pattern, image: &Pattern) -> Vec<Pattern> {
    let mut shifts: BTreeSet<[i64; 3]> = BTreeSet::new();
    for f in q.faces() {
        for g in image.faces().filter(|g| g.kind == f.kind) {
            shifts.insert(sub3(g.pos, f.pos));
        }
    }
    shifts.into_iter().map(|t| q.intersection(&image.translate(neg3(t)))).collect()
}

/// Largest `q ∩ (image − t)` satisfying `keep`, ties broken by smallest `t`;
/// falls back to the unrestricted largest overlap.
fn best_overlap<F: Fn(&Pattern) -> bool>(q: &Pattern, image: &Pattern, keep: F) -> Pattern {
    let cuts = overlaps(q, image);
    let largest = |ok: &dyn Fn(&Pattern) -> bool| {
        cuts.iter().filter(|c| ok(c)).fold(None::<&Pattern>, |b, c| match b {
            Some(b) if b.len() >= c.len() => Some(b),
            _ => Some(c),
        })
    };
    largest(&keep).or_else(|| largest(&|_| true)).cloned().unwrap_or_default()
}

/// Checks every edge `P -i-> Q` of the Brun ball graph: `Σ_i(P)` contains a
/// translate of `Q`, where `V1`, `V2` are the seeds.
pub fn brun_translate_certificate(g: &BallGraph, seeds: &[Pattern]) -> Result<TranslateReport> {
    let subs = brun_family();
    let nodes = brun_ball_patterns(g, seeds)?;
    let target = |name: &str| -> Result<&Pattern> {
        match name.strip_prefix('V') {
            Some(k) => {
                let k: usize = k.parse().map_err(|_| Error::InvalidInput(format!("bad seed name {name:?}")))?;
                seeds.get(k.wrapping_sub(1)).ok_or_else(|| Error::InvalidInput(format!("no seed {name}")))
            }
            None => nodes.get(name).ok_or_else(|| Error::InvalidInput(format!("unknown node {name:?}"))),
        }
    };
    let mut edges = Vec::new();
    for (a, i, b) in &g.edges {
        let s = subs.get((*i as usize).wrapping_sub(1)).ok_or_else(|| Error::InvalidInput(format!("label {i}")))?;
        let image = s.dual_image_pattern(target(a)?)?;
        edges.push(TranslateEdge { from: a.clone(), label: *i, to: b.clone(), ok: target(b)?.occurs_in(&image) });
    }
    Ok(TranslateReport { edges })
}

/// Checks every edge `P -i-> Q` of the Jacobi-Perron chain: `Θ_i(P)` contains a translate of `Q`.
pub fn jp_translate_certificate(c: &BallChain) -> Result<TranslateReport> {
    let subs = theta_family();
    let mut edges = Vec::new();
    for &(a, i, b) in &c.edges {
        let (p, q) = match (c.nodes.get(a), c.nodes.get(b)) {
            (Some(p), Some(q)) => (p, q),
            _ => return Err(Error::InvalidInput(format!("chain edge ({a},{i},{b}) out of range"))),
        };
        let s = subs.get((i as usize).wrapping_sub(1)).ok_or_else(|| Error::InvalidInput(format!("label {i}")))?;
        edges.push(TranslateEdge { from: a.to_string(), label: i, to: b.to_string(), ok: q.occurs_in(&s.dual_image_pattern(p)?) });
    }
    Ok(TranslateReport { edges })
}

/// One row of the Jacobi-Perron branch table: `target_n ∈ Θ_label(source_(n+k))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BranchRelation {
    /// Target face family.
    pub target: String,
    /// θ index.
    pub label: u8,
    /// Source face family.
    pub source: String,
    /// Index shift.
    pub shift: i64,
}

/// Recomputes the branch table for `n` in `range` from filtered preimages and
/// returns, per `n`, the relations found (only sources among the branch families).
pub fn jp_branch_relations(reference: &Reference, n: i64) -> Result<BTreeSet<BranchRelation>> {
    let subs = theta_family();
    let cone = Cone::jp();
    let names: Vec<&String> = reference.jp_branch_faces.keys().collect();
    let mut lookup: HashMap<Face, (String, i64)> = HashMap::new();
    for name in &names {
        for m in (n - 3).max(0)..=n + 3 {
            lookup.insert(reference.jp_branch_face(name, m)?, ((*name).clone(), m - n));
        }
    }
    let mut out = BTreeSet::new();
    for name in &names {
        let f = reference.jp_branch_face(name, n)?;
        for (k, s) in subs.iter().enumerate() {
            for g in s.dual_preimages(&f, Some(&cone))? {
                match lookup.get(&g) {
                    Some((src, shift)) => {
                        out.insert(BranchRelation { target: (*name).clone(), label: (k + 1) as u8, source: src.clone(), shift: *shift });
                    }
                    None => {
                        out.insert(BranchRelation {
                            target: (*name).clone(),
                            label: (k + 1) as u8,
                            source: format!("[{},{},{};{}]", g.pos[0], g.pos[1], g.pos[2], g.kind),
                            shift: 0,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The stored branch table as relations.
pub fn jp_branch_table(reference: &Reference) -> BTreeSet<BranchRelation> {
    reference
        .jp_branch_table
        .iter()
        .map(|(t, l, s, k)| BranchRelation { target: t.clone(), label: *l, source: s.clone(), shift: *k })
        .collect()
}
