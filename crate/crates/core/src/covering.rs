//! Coverings by translated pattern sets, annuli and their enumeration.
//!
//! A pattern `P` is `L`-covered when any two of its faces are linked by a
//! chain of translated `L`-patterns inside `P`, consecutive ones sharing a
//! face.  It is strongly covered when, in addition, every edge-adjacent pair
//! of faces of `P` lies in one translated `L`-pattern inside `P`.  An
//! `L`-annulus of `P` is a strongly covered `A`, disjoint from `P`, such that
//! `P` does not meet the boundary of `P ∪ A`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    faces_connected, faces_edge_adjacent, is_annulus_shape, is_simply_connected, max_norm, pattern_boundary,
    plane_contains_unchecked, sub3, Edge, Face, NormalVector, Pattern,
};
use crate::lp::Cone;
use crate::substitution::Substitution;

/// A finite set of pattern representatives, implicitly closed under translation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSet {
    /// Identifier.
    pub name: String,
    /// One representative per translation class.
    pub patterns: Vec<Pattern>,
}

impl CoverSet {
    /// Builds a cover set, normalizing representatives and dropping duplicates.
    pub fn new(name: &str, patterns: Vec<Pattern>) -> Self {
        let mut seen = BTreeSet::new();
        let patterns = patterns.into_iter().map(|p| p.normalized()).filter(|p| seen.insert(p.clone())).collect();
        CoverSet { name: name.to_string(), patterns }
    }

    /// All translated representatives contained in `p`.
    pub fn occurrences(&self, p: &Pattern) -> Vec<Pattern> {
        let mut out = BTreeSet::new();
        for q in &self.patterns {
            for t in q.translates_into(p) {
                out.insert(q.translate(t));
            }
        }
        out.into_iter().collect()
    }

    /// All translated representatives containing face `f`.
    pub fn translates_containing(&self, f: &Face) -> Vec<Pattern> {
        let mut out = BTreeSet::new();
        for q in &self.patterns {
            for g in q.faces().filter(|g| g.kind == f.kind) {
                out.insert(q.translate(sub3(f.pos, g.pos)));
            }
        }
        out.into_iter().collect()
    }

    /// Whether some representative is a translate of `p`.
    pub fn contains_class(&self, p: &Pattern) -> bool {
        let n = p.normalized();
        self.patterns.contains(&n)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let n = self.parent[y];
            self.parent[y] = r;
            y = n;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Partition of the faces of `p` reachable through chains of occurrences.
/// Faces in no occurrence come back as singleton classes flagged `false`.
fn occurrence_classes(p: &Pattern, occ: &[Pattern]) -> (Vec<Vec<Face>>, Vec<bool>) {
    let faces: Vec<Face> = p.faces().copied().collect();
    let index: HashMap<Face, usize> = faces.iter().enumerate().map(|(k, f)| (*f, k)).collect();
    let mut uf = UnionFind::new(faces.len());
    let mut covered = vec![false; faces.len()];
    for y in occ {
        let mut it = y.faces().map(|f| index[f]);
        if let Some(first) = it.next() {
            covered[first] = true;
            for k in it {
                covered[k] = true;
                uf.union(first, k);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<Face>> = BTreeMap::new();
    let mut class_cov: BTreeMap<usize, bool> = BTreeMap::new();
    for (k, f) in faces.iter().enumerate() {
        let r = uf.find(k);
        classes.entry(r).or_default().push(*f);
        *class_cov.entry(r).or_insert(false) |= covered[k];
    }
    let cov = classes.keys().map(|r| class_cov[r]).collect();
    (classes.into_values().collect(), cov)
}

/// Whether `p` is `L`-covered.  Patterns with at most one face count as covered.
pub fn is_covered(p: &Pattern, l: &CoverSet) -> bool {
    if p.len() <= 1 {
        return true;
    }
    let occ = l.occurrences(p);
    let (classes, cov) = occurrence_classes(p, &occ);
    classes.len() == 1 && cov[0]
}

/// Edge-adjacent two-face sub-patterns of `p`.
pub fn adjacent_pairs(p: &Pattern) -> Vec<(Face, Face)> {
    let mut by_edge: HashMap<Edge, Vec<Face>> = HashMap::new();
    for f in p.faces() {
        for e in f.edges() {
            by_edge.entry(e).or_default().push(*f);
        }
    }
    let mut out = BTreeSet::new();
    for fs in by_edge.values() {
        for a in fs {
            for b in fs {
                if a < b {
                    out.insert((*a, *b));
                }
            }
        }
    }
    out.into_iter().collect()
}

fn pair_has_superset(x: &(Face, Face), occ: &[Pattern]) -> bool {
    occ.iter().any(|y| y.contains(&x.0) && y.contains(&x.1))
}

/// Whether `p` is strongly `L`-covered.
pub fn is_strongly_covered(p: &Pattern, l: &CoverSet) -> bool {
    if !is_covered(p, l) {
        return false;
    }
    let occ = l.occurrences(p);
    adjacent_pairs(p).iter().all(|x| pair_has_superset(x, &occ))
}

/// Whether `a` is an `L`-annulus of `p`; `p` must be simply connected.
pub fn is_l_annulus(a: &Pattern, p: &Pattern, l: &CoverSet) -> Result<bool> {
    if !is_simply_connected(p) {
        return Err(Error::InvalidInput("inner pattern is not simply connected".into()));
    }
    if a.is_empty() {
        return Ok(false);
    }
    Ok(is_annulus_shape(a, p) && is_strongly_covered(a, l))
}

/// Outcome of checking that dual images of cover patterns stay covered.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverReport {
    /// `images[s][q]` is the image of representative `q` under substitution `s`.
    pub images: Vec<Vec<Pattern>>,
    /// `(s, q)` pairs whose image is not covered.
    pub failures: Vec<(usize, usize)>,
}

impl CoverReport {
    /// Whether every image is covered.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For each substitution and each representative `Q ∈ L`, checks that the
/// dual image of `Q` is `L`-covered.
pub fn verify_cover_preservation(subs: &[Substitution], l: &CoverSet) -> Result<CoverReport> {
    let mut images = Vec::with_capacity(subs.len());
    let mut failures = Vec::new();
    for (si, s) in subs.iter().enumerate() {
        let mut row = Vec::with_capacity(l.patterns.len());
        for (qi, q) in l.patterns.iter().enumerate() {
            let img = s.dual_image_pattern(q)?;
            if !is_covered(&img, l) {
                failures.push((si, qi));
            }
            row.push(img);
        }
        images.push(row);
    }
    Ok(CoverReport { images, failures })
}

/// A connected pair `f ∪ g` with a disconnected preimage pair `f0 ∪ g0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PreimagePair {
    /// Connected image pair (with `f` at the origin).
    pub image: (Face, Face),
    /// Disconnected preimage pair.
    pub preimage: (Face, Face),
}

impl PreimagePair {
    /// The preimage pair as a normalized two-face pattern.
    pub fn preimage_class(&self) -> Pattern {
        [self.preimage.0, self.preimage.1].into_iter().collect::<Pattern>().normalized()
    }
}

/// All `(f ∪ g, f0 ∪ g0)` with `f ∪ g` connected, `f0 ∪ g0` disconnected,
/// `f ∈ Σ(f0)`, `g ∈ Σ(g0)` and a translate of `f0 ∪ g0` inside a discrete
/// plane with normal vector in `cone`.  Connectedness is the offset-table
/// relation [`faces_connected`]; the image pair is anchored with `f` at the
/// origin, which loses nothing since preimages are translation-covariant.
pub fn enumerate_disconnected_preimage_pairs(sigma: &Substitution, cone: &Cone) -> Result<Vec<PreimagePair>> {
    let mut out = BTreeSet::new();
    for i in 1..=3u8 {
        let f = Face::origin(i);
        let pre_f = sigma.dual_preimages(&f, None)?;
        for j in 1..=3u8 {
            for d in crate::geometry::connection_offsets(i, j) {
                let g = Face::at(d, j);
                let pre_g = sigma.dual_preimages(&g, None)?;
                for f0 in &pre_f {
                    for g0 in &pre_g {
                        if f0 == g0 || faces_connected(f0, g0) {
                            continue;
                        }
                        let pair: Pattern = [*f0, *g0].into_iter().collect();
                        if cone.admits_translate(&pair) {
                            out.insert(PreimagePair { image: (f, g), preimage: (*f0, *g0) });
                        }
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Distinct translation classes of preimage pairs.
pub fn preimage_classes(pairs: &[PreimagePair]) -> Vec<Pattern> {
    pairs.iter().map(PreimagePair::preimage_class).collect::<BTreeSet<_>>().into_iter().collect()
}

/// Options for the minimal-annulus search.
#[derive(Clone, Debug)]
pub struct AnnulusSearch {
    /// Faces must have position max-norm at most this value.
    pub window: i64,
    /// Abort after visiting this many search states.
    pub max_states: usize,
}

impl Default for AnnulusSearch {
    fn default() -> Self {
        AnnulusSearch { window: 3, max_states: 5_000_000 }
    }
}

struct SearchCtx<'a> {
    p0: &'a Pattern,
    p0_vertices: BTreeSet<[i64; 3]>,
    l: &'a CoverSet,
    cone: &'a Cone,
    window: i64,
    max_states: usize,
    visited: Mutex<HashSet<Pattern>>,
    found: Mutex<Vec<Pattern>>,
    overflow: Mutex<bool>,
}

enum Defect {
    /// Extensions adding one face each.
    Faces(Vec<Face>),
    /// Extensions adding a translated cover pattern each.
    Patterns(Vec<Pattern>),
}

impl SearchCtx<'_> {
    fn in_window(&self, f: &Face) -> bool {
        max_norm(f.pos) <= self.window
    }

    fn first_defect(&self, s: &Pattern) -> Option<Defect> {
        // Shape: a boundary edge meeting the inner pattern needs a second face.
        for e in pattern_boundary(s) {
            if self.p0_vertices.contains(&e.0) || self.p0_vertices.contains(&e.1) {
                let cands = e.incident_faces().into_iter().filter(|f| !s.contains(f) && self.in_window(f)).collect();
                return Some(Defect::Faces(cands));
            }
        }
        let a = s.difference(self.p0);
        let occ = self.l.occurrences(&a);
        let usable = |y: &Pattern| !y.shares_face(self.p0) && y.faces().all(|f| self.in_window(f));
        // Every face of the annulus lies in some occurrence.
        let covered: HashSet<Face> = occ.iter().flat_map(|y| y.faces().copied()).collect();
        if let Some(f) = a.faces().find(|f| !covered.contains(f)) {
            let cands = self.l.translates_containing(f).into_iter().filter(|y| usable(y)).collect();
            return Some(Defect::Patterns(cands));
        }
        // Every edge-adjacent pair extends to an occurrence.
        for x in adjacent_pairs(&a) {
            if !pair_has_superset(&x, &occ) {
                let cands = self
                    .l
                    .translates_containing(&x.0)
                    .into_iter()
                    .filter(|y| y.contains(&x.1) && usable(y))
                    .collect();
                return Some(Defect::Patterns(cands));
            }
        }
        // Occurrence chains connect everything.
        let (classes, _) = occurrence_classes(&a, &occ);
        if classes.len() > 1 {
            let c1: Pattern = classes[0].iter().copied().collect();
            let mut cands = BTreeSet::new();
            for f in c1.faces() {
                for y in self.l.translates_containing(f) {
                    if !y.is_subset(&a) && usable(&y) {
                        cands.insert(y);
                    }
                }
            }
            return Some(Defect::Patterns(cands.into_iter().collect()));
        }
        None
    }

    fn feasible(&self, s: &Pattern, witness: &NormalVector<BigRational>) -> Option<NormalVector<BigRational>> {
        let ok = s.faces().all(|f| plane_contains_unchecked(witness, f) && (f.pos == [0, 0, 0] || !witness.dot(f.pos).is_zero()))
            && self.cone.rows().iter().all(|r| witness.dot(*r) > BigRational::zero());
        if ok {
            return Some(witness.clone());
        }
        self.cone.generic_witness(s)
    }

    fn dominated(&self, s: &Pattern) -> bool {
        self.found.lock().unwrap().iter().any(|v| v.is_subset(s))
    }

    fn explore(&self, s: Pattern, witness: NormalVector<BigRational>) {
        if *self.overflow.lock().unwrap() || self.dominated(&s) {
            return;
        }
        {
            let mut vis = self.visited.lock().unwrap();
            if vis.len() >= self.max_states {
                *self.overflow.lock().unwrap() = true;
                return;
            }
            if !vis.insert(s.clone()) {
                return;
            }
        }
        let children: Vec<Pattern> = match self.first_defect(&s) {
            None => {
                let mut found = self.found.lock().unwrap();
                found.retain(|v| !s.is_subset(v));
                if !found.iter().any(|v| v.is_subset(&s)) {
                    found.push(s);
                }
                return;
            }
            Some(Defect::Faces(fs)) => fs
                .into_iter()
                .map(|f| {
                    let mut t = s.clone();
                    t.insert(f);
                    t
                })
                .collect(),
            Some(Defect::Patterns(ys)) => ys.into_iter().map(|y| s.union(&y)).collect(),
        };
        children.into_par_iter().for_each(|t| {
            if let Some(w) = self.feasible(&t, &witness) {
                self.explore(t, w);
            }
        });
    }
}

/// All inclusion-minimal patterns `P ⊇ P0` inside one discrete plane with
/// normal in `cone`, with faces in the search window, such that `P \ P0` is an
/// `L`-annulus of `P0`.  Results are sorted.
pub fn enumerate_minimal_annulus_seeds(
    p0: &Pattern,
    l: &CoverSet,
    cone: &Cone,
    opts: &AnnulusSearch,
) -> Result<Vec<Pattern>> {
    if !is_simply_connected(p0) {
        return Err(Error::InvalidInput("inner pattern is not simply connected".into()));
    }
    let witness = cone
        .generic_witness(p0)
        .ok_or_else(|| Error::InvalidInput("inner pattern lies in no plane of the cone".into()))?;
    let ctx = SearchCtx {
        p0,
        p0_vertices: p0.vertices(),
        l,
        cone,
        window: opts.window,
        max_states: opts.max_states,
        visited: Mutex::new(HashSet::new()),
        found: Mutex::new(Vec::new()),
        overflow: Mutex::new(false),
    };
    ctx.explore(p0.clone(), witness);
    if *ctx.overflow.lock().unwrap() {
        return Err(Error::Unsupported(format!("annulus search exceeded {} states", opts.max_states)));
    }
    let found = ctx.found.into_inner().unwrap();
    // Keep inclusion-minimal results only.
    let mut minimal: Vec<Pattern> =
        found.iter().filter(|s| !found.iter().any(|t| t != *s && t.is_subset(s))).cloned().collect();
    minimal.sort();
    minimal.dedup();
    Ok(minimal)
}

/// Whether each face of `p` lies in some plane of the cone (a cheap necessary
/// condition for joint feasibility).
pub fn faces_in_cone(p: &Pattern, cone: &Cone) -> bool {
    p.faces().all(|f| cone.admits_face(f))
}

/// Whether `a ∪ p` sits inside one plane of the cone and `a` is an `L`-annulus of `p`.
pub fn is_l_annulus_in_cone(a: &Pattern, p: &Pattern, l: &CoverSet, cone: &Cone) -> Result<bool> {
    Ok(cone.admits_pattern(&a.union(p)) && is_l_annulus(a, p, l)?)
}

/// Edge-adjacent pairs of `p` without an `L` superset inside `p`.
pub fn uncovered_pairs(p: &Pattern, l: &CoverSet) -> Vec<(Face, Face)> {
    let occ = l.occurrences(p);
    adjacent_pairs(p).into_iter().filter(|x| !pair_has_superset(x, &occ)).collect()
}

/// Whether two faces are edge-adjacent (re-exported for convenience).
pub fn adjacent(f: &Face, g: &Face) -> bool {
    faces_edge_adjacent(f, g)
}
