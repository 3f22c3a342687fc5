//! Faces, patterns, discrete planes and their combinatorial topology.
//!
//! A face `[x, i]` is the closed unit square `x + [0,1]·e_j + [0,1]·e_k`
//! where `{j, k}` are the two axes other than `i`.  All vertices and edges of
//! faces are lattice cells, so every incidence question is answered on
//! integer coordinates.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::OrderedField;

/// Integer 3-vector.
pub type Vec3 = [i64; 3];

/// Componentwise sum.
pub fn add3(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Componentwise difference.
pub fn sub3(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Componentwise negation.
pub fn neg3(a: Vec3) -> Vec3 {
    [-a[0], -a[1], -a[2]]
}

/// Max-norm.
pub fn max_norm(a: Vec3) -> i64 {
    a.iter().map(|c| c.abs()).max().unwrap()
}

/// Unit vector `e_i` for `i` in `1..=3`.
pub fn unit(i: u8) -> Vec3 {
    let mut e = [0; 3];
    e[(i - 1) as usize] = 1;
    e
}

/// A pointed unit face `[pos, kind]`.
///
/// Ordering is lexicographic on `(pos, kind)`, which makes patterns canonical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Face {
    /// The lattice point `x`.
    #[serde(rename = "x")]
    pub pos: Vec3,
    /// The type `i` in `1..=3`: the face is orthogonal to `e_i`.
    #[serde(rename = "t")]
    pub kind: u8,
}

impl Face {
    /// Builds a face, checking the type.
    pub fn new(pos: Vec3, kind: u8) -> Result<Self> {
        if !(1..=3).contains(&kind) {
            return Err(Error::InvalidInput(format!("face type {kind} not in 1..=3")));
        }
        Ok(Face { pos, kind })
    }

    /// Builds a face; panics on a bad type (for literals).
    pub const fn at(pos: Vec3, kind: u8) -> Self {
        assert!(kind >= 1 && kind <= 3);
        Face { pos, kind }
    }

    /// The face `[0, kind]`.
    pub const fn origin(kind: u8) -> Self {
        Face::at([0, 0, 0], kind)
    }

    /// Translate by `t`.
    pub fn translate(&self, t: Vec3) -> Face {
        Face { pos: add3(self.pos, t), kind: self.kind }
    }

    /// The two spanning axes (0-based), in increasing order.
    pub fn span_axes(&self) -> (usize, usize) {
        match self.kind {
            1 => (1, 2),
            2 => (0, 2),
            _ => (0, 1),
        }
    }

    /// The four vertices, in cyclic order.
    pub fn vertices(&self) -> [Vec3; 4] {
        let (a, b) = self.span_axes();
        let x = self.pos;
        let mut ea = [0; 3];
        ea[a] = 1;
        let mut eb = [0; 3];
        eb[b] = 1;
        [x, add3(x, ea), add3(add3(x, ea), eb), add3(x, eb)]
    }

    /// The four unit edges.
    pub fn edges(&self) -> [Edge; 4] {
        let v = self.vertices();
        [Edge::new(v[0], v[1]), Edge::new(v[1], v[2]), Edge::new(v[2], v[3]), Edge::new(v[3], v[0])]
    }

    /// Max-norm of the position.
    pub fn norm(&self) -> i64 {
        max_norm(self.pos)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({},{},{}),{}]", self.pos[0], self.pos[1], self.pos[2], self.kind)
    }
}

/// A unit lattice edge, stored as its sorted endpoint pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub Vec3, pub Vec3);

impl Edge {
    /// Canonical edge between two endpoints.
    pub fn new(a: Vec3, b: Vec3) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    /// The four faces containing this edge.
    pub fn incident_faces(&self) -> Vec<Face> {
        let d = sub3(self.1, self.0);
        let axis = d.iter().position(|&c| c != 0).expect("degenerate edge");
        let mut out = Vec::with_capacity(4);
        for kind in 1..=3u8 {
            if (kind - 1) as usize == axis {
                continue;
            }
            // The face is orthogonal to e_kind and spans `axis` and the third axis `o`.
            let o = 3 - axis - (kind - 1) as usize;
            for s in [0, -1] {
                let mut p = self.0;
                p[o] += s;
                out.push(Face::at(p, kind));
            }
        }
        out
    }
}

/// A finite set of faces.  Serializes as `{"faces": [{"x": [..], "t": i}, ..]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pattern {
    faces: BTreeSet<Face>,
}

impl Pattern {
    /// The empty pattern.
    pub fn new() -> Self {
        Pattern::default()
    }

    /// The lower unit cube `U = [0,1] ∪ [0,2] ∪ [0,3]`.
    pub fn u() -> Self {
        [Face::origin(1), Face::origin(2), Face::origin(3)].into_iter().collect()
    }

    /// Builds a pattern from `(x, y, z, type)` tuples.
    pub fn from_tuples(t: &[(i64, i64, i64, u8)]) -> Self {
        t.iter().map(|&(a, b, c, k)| Face::at([a, b, c], k)).collect()
    }

    /// Faces in canonical order.
    pub fn faces(&self) -> impl Iterator<Item = &Face> + '_ {
        self.faces.iter()
    }

    /// Underlying ordered set.
    pub fn as_set(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    /// Number of faces.
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    /// Whether there are no faces.
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Membership.
    pub fn contains(&self, f: &Face) -> bool {
        self.faces.contains(f)
    }

    /// Adds a face; returns whether it was new.
    pub fn insert(&mut self, f: Face) -> bool {
        self.faces.insert(f)
    }

    /// Removes a face; returns whether it was present.
    pub fn remove(&mut self, f: &Face) -> bool {
        self.faces.remove(f)
    }

    /// Set union.
    pub fn union(&self, other: &Pattern) -> Pattern {
        Pattern { faces: self.faces.union(&other.faces).copied().collect() }
    }

    /// Set difference.
    pub fn difference(&self, other: &Pattern) -> Pattern {
        Pattern { faces: self.faces.difference(&other.faces).copied().collect() }
    }

    /// Set intersection.
    pub fn intersection(&self, other: &Pattern) -> Pattern {
        Pattern { faces: self.faces.intersection(&other.faces).copied().collect() }
    }

    /// Inclusion.
    pub fn is_subset(&self, other: &Pattern) -> bool {
        self.faces.is_subset(&other.faces)
    }

    /// Whether some face is shared.
    pub fn shares_face(&self, other: &Pattern) -> bool {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small.faces.iter().any(|f| big.faces.contains(f))
    }

    /// Translate by `t`.
    pub fn translate(&self, t: Vec3) -> Pattern {
        self.faces.iter().map(|f| f.translate(t)).collect()
    }

    /// Canonical translation representative: the least face is moved to the origin.
    pub fn normalized(&self) -> Pattern {
        match self.faces.iter().next() {
            None => Pattern::new(),
            Some(f) => self.translate(neg3(f.pos)),
        }
    }

    /// Whether `other` is a translate of `self`.
    pub fn is_translate_of(&self, other: &Pattern) -> bool {
        self.len() == other.len() && self.normalized() == other.normalized()
    }

    /// All translations `t` with `self + t ⊆ other`, in increasing order.
    pub fn translates_into(&self, other: &Pattern) -> Vec<Vec3> {
        let anchor = match self.faces.iter().next() {
            None => return vec![[0, 0, 0]],
            Some(f) => *f,
        };
        let mut out = Vec::new();
        for g in other.faces.iter().filter(|g| g.kind == anchor.kind) {
            let t = sub3(g.pos, anchor.pos);
            if self.faces.iter().all(|f| other.faces.contains(&f.translate(t))) {
                out.push(t);
            }
        }
        out
    }

    /// Whether some translate of `self` lies inside `other`.
    pub fn occurs_in(&self, other: &Pattern) -> bool {
        !self.translates_into(other).is_empty()
    }

    /// Largest max-norm of a face position (0 for the empty pattern).
    pub fn radius_box(&self) -> i64 {
        self.faces.iter().map(Face::norm).max().unwrap_or(0)
    }

    /// Distinct vertices of all faces.
    pub fn vertices(&self) -> BTreeSet<Vec3> {
        self.faces.iter().flat_map(|f| f.vertices()).collect()
    }

    /// Edge multiplicities: for every edge, the number of faces containing it.
    pub fn edge_counts(&self) -> BTreeMap<Edge, usize> {
        let mut m = BTreeMap::new();
        for f in &self.faces {
            for e in f.edges() {
                *m.entry(e).or_insert(0) += 1;
            }
        }
        m
    }
}

impl FromIterator<Face> for Pattern {
    fn from_iter<I: IntoIterator<Item = Face>>(iter: I) -> Self {
        Pattern { faces: iter.into_iter().collect() }
    }
}

impl Extend<Face> for Pattern {
    fn extend<I: IntoIterator<Item = Face>>(&mut self, iter: I) {
        self.faces.extend(iter)
    }
}

impl<'a> IntoIterator for &'a Pattern {
    type Item = &'a Face;
    type IntoIter = std::collections::btree_set::Iter<'a, Face>;
    fn into_iter(self) -> Self::IntoIter {
        self.faces.iter()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, face) in self.faces.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, "}}")
    }
}

/// A normal vector over an ordered field.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalVector<T> {
    /// Coordinates `(v1, v2, v3)`.
    pub entries: [T; 3],
}

impl<T: OrderedField> NormalVector<T> {
    /// Wraps three coordinates (no positivity check; see [`NormalVector::is_positive`]).
    pub fn new(entries: [T; 3]) -> Self {
        NormalVector { entries }
    }

    /// Builds a vector from integers.
    pub fn from_ints(v: [i64; 3]) -> Self {
        NormalVector { entries: [T::from_int(v[0]), T::from_int(v[1]), T::from_int(v[2])] }
    }

    /// Whether all coordinates are strictly positive.
    pub fn is_positive(&self) -> bool {
        self.entries.iter().all(|c| *c > T::zero())
    }

    /// Inner product with an integer vector.
    pub fn dot(&self, x: Vec3) -> T {
        let mut acc = T::zero();
        for k in 0..3 {
            if x[k] != 0 {
                acc = acc + T::from_int(x[k]) * self.entries[k].clone();
            }
        }
        acc
    }

    /// The image `A·v` under an integer matrix.
    pub fn apply(&self, a: &[[i64; 3]; 3]) -> Self {
        NormalVector {
            entries: [
                self.dot(a[0]),
                self.dot(a[1]),
                self.dot(a[2]),
            ],
        }
    }
}

/// Whether `f` belongs to the discrete plane of normal vector `v`:
/// `0 ≤ ⟨x, v⟩ < v_i`.
pub fn plane_contains<T: OrderedField>(v: &NormalVector<T>, f: &Face) -> Result<bool> {
    if !v.is_positive() {
        return Err(Error::InvalidInput("normal vector must be strictly positive".into()));
    }
    Ok(plane_contains_unchecked(v, f))
}

pub(crate) fn plane_contains_unchecked<T: OrderedField>(v: &NormalVector<T>, f: &Face) -> bool {
    let s = v.dot(f.pos);
    s >= T::zero() && s < v.entries[(f.kind - 1) as usize]
}

/// All faces of the discrete plane of normal `v` whose position has max-norm at most `window`.
pub fn plane_patch<T: OrderedField>(v: &NormalVector<T>, window: i64) -> Result<Pattern> {
    if window < 0 {
        return Err(Error::InvalidInput(format!("window {window} is negative")));
    }
    if !v.is_positive() {
        return Err(Error::InvalidInput("normal vector must be strictly positive".into()));
    }
    let mut out = Pattern::new();
    for x in -window..=window {
        for y in -window..=window {
            for z in -window..=window {
                for k in 1..=3 {
                    let f = Face::at([x, y, z], k);
                    if plane_contains_unchecked(v, &f) {
                        out.insert(f);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Whether two distinct faces share a unit edge.
pub fn faces_edge_adjacent(f: &Face, g: &Face) -> bool {
    if f == g {
        return false;
    }
    let d = sub3(g.pos, f.pos);
    if max_norm(d) > 1 {
        return false;
    }
    let ef = f.edges();
    g.edges().iter().any(|e| ef.contains(e))
}

/// Whether two distinct faces share at least one point.
pub fn faces_touch(f: &Face, g: &Face) -> bool {
    if f == g {
        return false;
    }
    if max_norm(sub3(g.pos, f.pos)) > 1 {
        return false;
    }
    let vf = f.vertices();
    g.vertices().iter().any(|v| vf.contains(v))
}

const V11: [Vec3; 8] = [
    [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1], [0, 1, -1], [0, -1, 1], [0, 1, 1], [0, -1, -1],
];
const V22: [Vec3; 8] = [
    [1, 0, 0], [-1, 0, 0], [0, 0, 1], [0, 0, -1], [1, 0, -1], [-1, 0, 1], [1, 0, 1], [-1, 0, -1],
];
const V33: [Vec3; 8] = [
    [1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [1, -1, 0], [-1, 1, 0], [1, 1, 0], [-1, -1, 0],
];
const V12: [Vec3; 8] = [
    [0, 0, 0], [-1, 1, 0], [0, 0, 1], [0, 0, -1], [0, 1, -1], [-1, 1, -1], [-1, 1, 1], [-1, 0, 1],
];
const V13: [Vec3; 8] = [
    [0, 0, 0], [-1, 0, 1], [0, 1, 0], [0, -1, 0], [-1, 1, 0], [-1, 1, 1], [-1, -1, 1], [0, -1, 1],
];
const V23: [Vec3; 8] = [
    [0, 0, 0], [0, -1, 1], [1, 0, 0], [-1, 0, 0], [-1, 0, 1], [-1, -1, 1], [1, -1, 1], [1, -1, 0],
];

/// The offset table `V_ij`: the offsets `y - x` for which `[x,i] ∪ [y,j]` is connected.
///
/// The tables for `i > j` are the negatives of the transposed ones.
pub fn connection_offsets(i: u8, j: u8) -> Vec<Vec3> {
    let table = |t: &[Vec3; 8], flip: bool| t.iter().map(|&d| if flip { neg3(d) } else { d }).collect();
    match (i, j) {
        (1, 1) => table(&V11, false),
        (2, 2) => table(&V22, false),
        (3, 3) => table(&V33, false),
        (1, 2) => table(&V12, false),
        (1, 3) => table(&V13, false),
        (2, 3) => table(&V23, false),
        (2, 1) => table(&V12, true),
        (3, 1) => table(&V13, true),
        (3, 2) => table(&V23, true),
        _ => panic!("face types must lie in 1..=3"),
    }
}

/// Whether the two-face pattern `f ∪ g` is connected in the sense of the
/// offset tables [`connection_offsets`]: the faces touch and can lie in a
/// common discrete plane.
pub fn faces_connected(f: &Face, g: &Face) -> bool {
    let d = sub3(g.pos, f.pos);
    if max_norm(d) > 1 {
        return false;
    }
    connection_offsets(f.kind, g.kind).contains(&d)
}

/// Boundary edges: those contained in exactly one face of `p`.
pub fn pattern_boundary(p: &Pattern) -> BTreeSet<Edge> {
    p.edge_counts().into_iter().filter(|&(_, c)| c == 1).map(|(e, _)| e).collect()
}

/// Whether `a` and `p` are face-disjoint and the closed faces of `p` avoid the
/// boundary of `p ∪ a`.
pub fn is_annulus_shape(a: &Pattern, p: &Pattern) -> bool {
    if a.shares_face(p) {
        return false;
    }
    let pv = p.vertices();
    let whole = a.union(p);
    pattern_boundary(&whole).iter().all(|e| !pv.contains(&e.0) && !pv.contains(&e.1))
}

/// Length of the shortest edge-adjacent chain of faces from `U` to a face
/// carrying a boundary edge of `p`.
pub fn combinatorial_radius(p: &Pattern) -> Result<usize> {
    let u = Pattern::u();
    if !u.is_subset(p) {
        return Err(Error::InvalidInput("pattern does not contain U".into()));
    }
    let boundary = pattern_boundary(p);
    let adj = adjacency_lists(p);
    let mut dist: HashMap<Face, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for f in u.faces() {
        dist.insert(*f, 1);
        queue.push_back(*f);
    }
    while let Some(f) = queue.pop_front() {
        let d = dist[&f];
        if f.edges().iter().any(|e| boundary.contains(e)) {
            return Ok(d);
        }
        for g in &adj[&f] {
            if !dist.contains_key(g) {
                dist.insert(*g, d + 1);
                queue.push_back(*g);
            }
        }
    }
    Err(Error::InvalidInput("no boundary face is reachable from U".into()))
}

/// Edge-adjacency lists of the faces of `p`.
pub fn adjacency_lists(p: &Pattern) -> HashMap<Face, Vec<Face>> {
    let mut by_edge: HashMap<Edge, Vec<Face>> = HashMap::new();
    for f in p.faces() {
        for e in f.edges() {
            by_edge.entry(e).or_default().push(*f);
        }
    }
    let mut adj: HashMap<Face, Vec<Face>> = p.faces().map(|f| (*f, Vec::new())).collect();
    for faces in by_edge.values() {
        for a in faces {
            for b in faces {
                if a != b {
                    adj.get_mut(a).unwrap().push(*b);
                }
            }
        }
    }
    for v in adj.values_mut() {
        v.sort();
        v.dedup();
    }
    adj
}

/// Partition into edge-connected components, each sorted, ordered by least face.
pub fn edge_connected_components(p: &Pattern) -> Vec<Pattern> {
    let adj = adjacency_lists(p);
    let mut seen: HashSet<Face> = HashSet::new();
    let mut out = Vec::new();
    for f in p.faces() {
        if seen.contains(f) {
            continue;
        }
        let mut comp = Pattern::new();
        let mut stack = vec![*f];
        seen.insert(*f);
        while let Some(g) = stack.pop() {
            comp.insert(g);
            for h in &adj[&g] {
                if seen.insert(*h) {
                    stack.push(*h);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Whether `p` is nonempty, edge-connected and has Euler characteristic one
/// (vertices − edges + faces), i.e. it has no enclosed hole.
pub fn is_simply_connected(p: &Pattern) -> bool {
    if p.is_empty() || edge_connected_components(p).len() != 1 {
        return false;
    }
    let v = p.vertices().len() as i64;
    let e = p.edge_counts().len() as i64;
    let f = p.len() as i64;
    v - e + f == 1
}
