//! Open polyhedral cones of normal vectors and exact strict-feasibility tests.
//!
//! A system of strict rows `a·v > 0` and non-strict rows `b·v ≥ 0` is strictly
//! feasible iff the linear program
//!
//! ```text
//! maximize λ  subject to  a·v ≥ λ,  b·v ≥ 0,  v1 + v2 + v3 ≤ 1,  v ≥ 0,  λ ≥ 0
//! ```
//!
//! has a positive optimum.  The origin is a basic feasible point, so a single
//! simplex phase with Bland's rule over exact rationals decides the question.

use std::collections::{BTreeSet, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{unit, Face, NormalVector, Pattern, Vec3};
use crate::scalar::rat;

/// A nonempty open cone `{v : a·v > 0 for every row a}` intersected with the
/// positive octant.
#[derive(Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec3>", into = "Vec<Vec3>")]
pub struct Cone {
    rows: Vec<Vec3>,
    #[serde(skip)]
    face_cache: RwLock<HashMap<Face, bool>>,
}

impl Clone for Cone {
    fn clone(&self) -> Self {
        Cone { rows: self.rows.clone(), face_cache: RwLock::new(HashMap::new()) }
    }
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl TryFrom<Vec<Vec3>> for Cone {
    type Error = Error;
    fn try_from(rows: Vec<Vec3>) -> Result<Self> {
        Cone::new(rows)
    }
}

impl From<Cone> for Vec<Vec3> {
    fn from(c: Cone) -> Self {
        c.rows
    }
}

impl Cone {
    /// Builds a cone from strict rows; rejects empty cones.
    pub fn new(rows: Vec<Vec3>) -> Result<Self> {
        let c = Cone { rows, face_cache: RwLock::new(HashMap::new()) };
        if c.solve(&[], &[]).is_none() {
            return Err(Error::EmptyCone);
        }
        Ok(c)
    }

    /// The positive octant: every discrete plane.
    pub fn positive() -> Self {
        Cone::new(vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    /// The Brun cone `0 < v1 < v2 < v3`.
    pub fn brun() -> Self {
        Cone::new(vec![[1, 0, 0], [-1, 1, 0], [0, -1, 1]]).unwrap()
    }

    /// The Jacobi-Perron cone `0 < v1 < v3`, `0 < v2 < v3`.
    pub fn jp() -> Self {
        Cone::new(vec![[1, 0, 0], [0, 1, 0], [-1, 0, 1], [0, -1, 1]]).unwrap()
    }

    /// Defining rows.
    pub fn rows(&self) -> &[Vec3] {
        &self.rows
    }

    /// Whether an integer vector lies in the open cone.
    pub fn contains_int(&self, v: Vec3) -> bool {
        let dot = |a: &Vec3| a[0] * v[0] + a[1] * v[1] + a[2] * v[2];
        v.iter().all(|&c| c > 0) && self.rows.iter().all(|a| dot(a) > 0)
    }

    /// A strictly feasible vector for the cone plus extra constraints, if any.
    pub fn solve(&self, strict: &[Vec3], nonstrict: &[Vec3]) -> Option<[BigRational; 3]> {
        let mut s: BTreeSet<Vec3> = self.rows.iter().copied().collect();
        for k in 1..=3 {
            s.insert(unit(k));
        }
        s.extend(strict.iter().copied());
        let ns: BTreeSet<Vec3> = nonstrict.iter().copied().filter(|b| *b != [0, 0, 0] && !s.contains(b)).collect();
        if s.contains(&[0, 0, 0]) {
            return None;
        }
        let s: Vec<Vec3> = s.into_iter().collect();
        let ns: Vec<Vec3> = ns.into_iter().collect();
        strict_feasible(&s, &ns)
    }

    /// Whether `f` lies in some discrete plane with normal vector in the cone.
    pub fn admits_face(&self, f: &Face) -> bool {
        if let Some(&b) = self.face_cache.read().unwrap().get(f) {
            return b;
        }
        let b = self.pattern_witness(&std::iter::once(*f).collect()).is_some();
        self.face_cache.write().unwrap().insert(*f, b);
        b
    }

    /// Whether all faces of `p` lie in one common discrete plane with normal in the cone.
    pub fn admits_pattern(&self, p: &Pattern) -> bool {
        self.pattern_witness(p).is_some()
    }

    /// Whether some translate of `p` lies in a discrete plane with normal in the cone.
    ///
    /// A translate `t + p` sits in `Γ_v` iff some real shift `s` satisfies
    /// `0 ≤ ⟨x_f, v⟩ + s < v_i` for every face; eliminating `s` leaves the strict
    /// rows `⟨x_g − x_f, v⟩ < v_(i_g)`, and density of irrational normals in the
    /// open cone makes the real shift attainable by a lattice translation.
    pub fn admits_translate(&self, p: &Pattern) -> bool {
        let faces: Vec<&Face> = p.faces().collect();
        let mut strict = Vec::with_capacity(faces.len() * faces.len());
        for f in &faces {
            for g in &faces {
                let e = unit(g.kind);
                strict.push([
                    e[0] - (g.pos[0] - f.pos[0]),
                    e[1] - (g.pos[1] - f.pos[1]),
                    e[2] - (g.pos[2] - f.pos[2]),
                ]);
            }
        }
        self.solve(&strict, &[]).is_some()
    }

    /// A normal vector in the cone whose discrete plane contains `p`, if any.
    pub fn pattern_witness(&self, p: &Pattern) -> Option<NormalVector<BigRational>> {
        let (strict, nonstrict) = face_constraints(p);
        self.solve(&strict, &nonstrict).map(NormalVector::new)
    }
}

impl Cone {
    /// A normal vector in the cone whose discrete plane contains `p` and
    /// satisfies `⟨x, v⟩ ≠ 0` for every nonzero face position `x`.
    ///
    /// Such a plane exists iff `p` lies in the plane of some totally
    /// irrational normal vector of the cone: those vectors avoid every
    /// integer hyperplane and are dense in any open feasible region.
    pub fn generic_witness(&self, p: &Pattern) -> Option<NormalVector<BigRational>> {
        let (mut strict, nonstrict) = face_constraints(p);
        strict.extend(nonstrict.into_iter().filter(|x| *x != [0, 0, 0]));
        self.solve(&strict, &[]).map(NormalVector::new)
    }

    /// Whether `p` lies in the plane of a totally irrational normal vector of the cone.
    pub fn admits_pattern_generic(&self, p: &Pattern) -> bool {
        self.generic_witness(p).is_some()
    }
}

/// Constraint rows of plane membership: `x·v ≥ 0` and `(e_i − x)·v > 0`.
pub fn face_constraints(p: &Pattern) -> (Vec<Vec3>, Vec<Vec3>) {
    let mut strict = Vec::with_capacity(p.len());
    let mut nonstrict = Vec::with_capacity(p.len());
    for f in p.faces() {
        nonstrict.push(f.pos);
        let e = unit(f.kind);
        strict.push([e[0] - f.pos[0], e[1] - f.pos[1], e[2] - f.pos[2]]);
    }
    (strict, nonstrict)
}

/// Whether `f` belongs to some discrete plane whose normal vector lies in `c`.
pub fn face_in_cone_family(f: &Face, c: &Cone) -> bool {
    c.admits_face(f)
}

/// Exact strict feasibility of `a·v > 0 (a ∈ strict)`, `b·v ≥ 0 (b ∈ nonstrict)`
/// over `v ≥ 0`; returns a witness.
pub fn strict_feasible(strict: &[Vec3], nonstrict: &[Vec3]) -> Option<[BigRational; 3]> {
    // Variables: v1 v2 v3 λ (columns 0..4), slacks (columns 4..4+m). Rows: constraints.
    let m = strict.len() + nonstrict.len() + 1;
    let n = 4 + m;
    let zero = BigRational::zero();
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    let mut push_row = |coef: [i64; 4], b: i64, idx: usize, t: &mut Vec<Vec<BigRational>>| {
        let mut row = vec![zero.clone(); n];
        for k in 0..4 {
            row[k] = rat(coef[k]);
        }
        row[4 + idx] = rat(1);
        t.push(row);
        rhs.push(rat(b));
    };
    let mut idx = 0;
    for a in strict {
        push_row([-a[0], -a[1], -a[2], 1], 0, idx, &mut t);
        idx += 1;
    }
    for b in nonstrict {
        push_row([-b[0], -b[1], -b[2], 0], 0, idx, &mut t);
        idx += 1;
    }
    push_row([1, 1, 1, 0], 1, idx, &mut t);
    let mut basis: Vec<usize> = (0..m).map(|r| 4 + r).collect();
    // Reduced costs for maximizing λ: z_j - c_j, start with -c.
    let mut cost = vec![zero.clone(); n];
    cost[3] = rat(-1);
    let mut obj = zero.clone();
    loop {
        if obj.is_positive() {
            break;
        }
        // Bland: smallest entering index with negative reduced cost.
        let enter = match (0..n).find(|&j| cost[j].is_negative()) {
            None => break,
            Some(j) => j,
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..m {
            if t[r][enter].is_positive() {
                let ratio = &rhs[r] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, lv)) => ratio < *lv || (ratio == *lv && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (pr, _) = match leave {
            None => break, // unbounded cannot happen (λ ≤ 1), but stop defensively
            Some(l) => l,
        };
        let pv = t[pr][enter].clone();
        for v in t[pr].iter_mut() {
            *v = &*v / &pv;
        }
        rhs[pr] = &rhs[pr] / &pv;
        for r in 0..m {
            if r != pr && !t[r][enter].is_zero() {
                let f = t[r][enter].clone();
                for c in 0..n {
                    if !t[pr][c].is_zero() {
                        let d = &f * &t[pr][c];
                        t[r][c] -= d;
                    }
                }
                let d = &f * &rhs[pr];
                rhs[r] -= d;
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for c in 0..n {
                if !t[pr][c].is_zero() {
                    let d = &f * &t[pr][c];
                    cost[c] -= d;
                }
            }
            obj -= &f * &rhs[pr];
        }
        basis[pr] = enter;
    }
    if !obj.is_positive() {
        return None;
    }
    let mut v = [zero.clone(), zero.clone(), zero.clone()];
    for (r, &b) in basis.iter().enumerate() {
        if b < 3 {
            v[b] = rhs[r].clone();
        }
    }
    Some(v)
}

/// Scales a positive rational vector to coprime integers.
pub fn to_integer_vector(v: &[BigRational; 3]) -> [BigInt; 3] {
    use num_integer::Integer;
    let l = v.iter().fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::from(1) } else { g };
    [&ints[0] / &g, &ints[1] / &g, &ints[2] / &g]
}
