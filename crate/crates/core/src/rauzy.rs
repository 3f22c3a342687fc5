//! Rauzy fractal approximations and the topological classifiers.
//!
//! `D_n(i) = M^n ∘ π_c ∘ E1*(σ)^n([0, i])`, where `π_c` projects along the
//! expanding eigenvector of `M` onto its contracting plane.  Floating point
//! is used only here; set-level facts come from exact computations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{brun_admissible, brun_product, jp_admissible, jp_product, Family, JpDigit};
use crate::fixtures::reference;
use crate::geometry::{edge_connected_components, Face, Pattern, Vec3};
use crate::graph::{brun_bad_cycle_check, jp_bad_check};
use crate::substitution::{IntMatrix3, Substitution};

/// Projection onto the contracting plane of a Pisot matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ContractingProjection {
    /// Dominant eigenvalue.
    pub eigenvalue: f64,
    /// Expanding eigenvector, unit length.
    pub expanding: [f64; 3],
    /// Left dominant eigenvector; its kernel is the contracting plane.
    pub left: [f64; 3],
    /// Orthonormal basis of the contracting plane.
    pub basis: [[f64; 3]; 2],
    matrix: [[f64; 3]; 3],
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn scale(a: [f64; 3], s: f64) -> [f64; 3] {
    a.map(|x| x * s)
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn normalize(a: [f64; 3]) -> [f64; 3] {
    scale(a, 1.0 / dot(a, a).sqrt())
}

/// Kernel direction of `A − λI` from the largest cross product of two rows.
fn kernel(a: &[[f64; 3]; 3], l: f64) -> [f64; 3] {
    let r: Vec<[f64; 3]> = (0..3).map(|i| std::array::from_fn(|j| a[i][j] - if i == j { l } else { 0.0 })).collect();
    let cands = [cross(r[0], r[1]), cross(r[0], r[2]), cross(r[1], r[2])];
    let best = cands.into_iter().fold([0.0; 3], |b, c| if dot(c, c) > dot(b, b) { c } else { b });
    let v = normalize(best);
    if v.iter().sum::<f64>() < 0.0 {
        scale(v, -1.0)
    } else {
        v
    }
}

/// Dominant eigenvalue of `m` to double precision: exact root isolation of
/// the characteristic polynomial, bisection, then Newton refinement.
pub fn dominant_eigenvalue(m: &IntMatrix3) -> Result<f64> {
    let p = m.char_poly();
    if !crate::substitution::is_pisot_cubic(&p) {
        return Err(Error::NotPisot);
    }
    let (lo, hi) = p.isolate_real_roots().into_iter().last().ok_or(Error::NotPisot)?;
    let to_f = |q: &num_rational::BigRational| num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN);
    let (mut lo, mut hi) = (to_f(&lo), to_f(&hi));
    let lo_sign = p.eval_f64(lo).signum();
    while hi - lo > 1e-9 * hi.abs().max(1.0) {
        let mid = (lo + hi) / 2.0;
        if p.eval_f64(mid).signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let dp = p.derivative();
    let mut x = (lo + hi) / 2.0;
    for _ in 0..4 {
        x -= p.eval_f64(x) / dp.eval_f64(x);
    }
    Ok(x)
}

/// The projection along the expanding eigenvector of `m` onto its
/// contracting plane, for an irreducible Pisot matrix.
pub fn contracting_projection(m: &IntMatrix3) -> Result<ContractingProjection> {
    let l = dominant_eigenvalue(m)?;
    let a: [[f64; 3]; 3] = m.0.map(|r| r.map(|c| c as f64));
    let at: [[f64; 3]; 3] = m.transpose().0.map(|r| r.map(|c| c as f64));
    let expanding = kernel(&a, l);
    let left = kernel(&at, l);
    let mut proj = ContractingProjection { eigenvalue: l, expanding, left, basis: [[0.0; 3]; 2], matrix: a };
    let b1 = normalize(proj.project3([1.0, 0.0, 0.0]));
    let p2 = proj.project3([0.0, 1.0, 0.0]);
    let b2 = normalize(sub(p2, scale(b1, dot(p2, b1))));
    proj.basis = [b1, b2];
    Ok(proj)
}

impl ContractingProjection {
    /// `x − (⟨w,x⟩ / ⟨w,u⟩)·u`, still in ambient coordinates.
    pub fn project3(&self, x: [f64; 3]) -> [f64; 3] {
        sub(x, scale(self.expanding, dot(self.left, x) / dot(self.left, self.expanding)))
    }

    /// Projection in the plane basis.
    pub fn project(&self, x: [f64; 3]) -> [f64; 2] {
        let p = self.project3(x);
        [dot(p, self.basis[0]), dot(p, self.basis[1])]
    }

    /// `M^n π_c(x)` in the plane basis.
    pub fn renormalized(&self, x: Vec3, n: usize) -> [f64; 2] {
        let mut p = self.project3(x.map(|c| c as f64));
        for _ in 0..n {
            p = std::array::from_fn(|i| dot(self.matrix[i], p));
        }
        [dot(p, self.basis[0]), dot(p, self.basis[1])]
    }

    /// Relative eigen-residual `‖Mu − λu‖ / ‖u‖`.
    pub fn residual(&self) -> f64 {
        let mu: [f64; 3] = std::array::from_fn(|i| dot(self.matrix[i], self.expanding));
        let r = sub(mu, scale(self.expanding, self.eigenvalue));
        (dot(r, r) / dot(self.expanding, self.expanding)).sqrt()
    }
}

/// One projected face with the subtile it belongs to.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjectedFace {
    /// Subtile label in `1..=3`.
    pub label: u8,
    /// The four projected vertices in cyclic order.
    pub corners: [[f64; 2]; 4],
}

/// The renormalized projection `D_n` of `E1*(σ)^n(U)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjectedPatch {
    /// Polygons grouped by subtile.
    pub polygons: Vec<ProjectedFace>,
    /// Iteration count `n`.
    pub level: usize,
}

impl ProjectedPatch {
    /// Bounding box `(min_x, min_y, max_x, max_y)`; zeros when empty.
    pub fn bounds(&self) -> [f64; 4] {
        let pts = self.polygons.iter().flat_map(|p| p.corners.iter());
        let b = pts.fold([f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY], |b, c| {
            [b[0].min(c[0]), b[1].min(c[1]), b[2].max(c[0]), b[3].max(c[1])]
        });
        if b[0].is_finite() {
            b
        } else {
            [0.0; 4]
        }
    }

    /// Largest distance between two corners.
    pub fn diameter(&self) -> f64 {
        let b = self.bounds();
        ((b[2] - b[0]).powi(2) + (b[3] - b[1]).powi(2)).sqrt()
    }
}

/// The subtile patterns `E1*(σ)^n([0, i])` for `i = 1, 2, 3`.
pub fn subtile_patterns(sigma: &Substitution, n: usize) -> Result<[Pattern; 3]> {
    let mut out: [Pattern; 3] = std::array::from_fn(|i| [Face::at([0, 0, 0], i as u8 + 1)].into_iter().collect());
    for _ in 0..n {
        for p in out.iter_mut() {
            *p = sigma.dual_image_pattern(p)?;
        }
    }
    Ok(out)
}

/// `D_n` for an irreducible Pisot substitution.
pub fn rauzy_approximation(sigma: &Substitution, n: usize) -> Result<ProjectedPatch> {
    let proj = contracting_projection(&sigma.incidence_matrix())?;
    let tiles = subtile_patterns(sigma, n)?;
    let mut polygons = Vec::new();
    for (k, tile) in tiles.iter().enumerate() {
        for f in tile.faces() {
            polygons.push(ProjectedFace { label: k as u8 + 1, corners: f.vertices().map(|v| proj.renormalized(v, n)) });
        }
    }
    Ok(ProjectedPatch { polygons, level: n })
}

/// A digit word of either family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "digits", rename_all = "lowercase")]
pub enum DigitWord {
    /// Brun digits in `1..=3`.
    Brun(Vec<u8>),
    /// Jacobi-Perron digits `(a, b)`.
    #[serde(rename = "jp")]
    Jp(Vec<JpDigit>),
}

impl DigitWord {
    /// The family of the word.
    pub fn family(&self) -> Family {
        match self {
            DigitWord::Brun(_) => Family::Brun,
            DigitWord::Jp(_) => Family::JacobiPerron,
        }
    }

    /// The product substitution `σ_{d1} ⋯ σ_{dn}`.
    pub fn substitution(&self) -> Result<Substitution> {
        match self {
            DigitWord::Brun(w) => brun_product(w),
            DigitWord::Jp(w) => jp_product(w),
        }
    }

    /// The same digits in reverse order.  `Σ_{w1} ∘ … ∘ Σ_{wm}` is the dual
    /// map of the product of the reversed word.
    pub fn reversed(&self) -> DigitWord {
        match self {
            DigitWord::Brun(w) => DigitWord::Brun(w.iter().rev().copied().collect()),
            DigitWord::Jp(w) => DigitWord::Jp(w.iter().rev().copied().collect()),
        }
    }

    /// Whether the word repeated forever is admissible.
    pub fn is_periodically_admissible(&self) -> bool {
        match self {
            DigitWord::Brun(w) => !w.is_empty() && brun_admissible(w, true),
            DigitWord::Jp(w) => !w.is_empty() && jp_admissible(w, true),
        }
    }
}

/// Verdict of [`classify_product`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// Whether the product is irreducible Pisot.
    pub pisot: bool,
    /// Whether the origin is an interior point of the Rauzy fractal.
    pub origin_interior: bool,
    /// Levels `n` for which every subtile pattern was checked edge-connected.
    pub connected_levels_checked: usize,
    /// Whether all checked subtile patterns were edge-connected.
    pub connected: bool,
}

/// Classifies the periodic product of an admissible digit word, checking
/// subtile connectedness for `n ≤ levels`.
pub fn classify_product(word: &DigitWord, levels: usize) -> Result<Classification> {
    if !word.is_periodically_admissible() {
        return Err(Error::Inadmissible(format!("{word:?}")));
    }
    let sigma = word.substitution()?;
    let bad = match word {
        // The product σ_{w1}⋯σ_{wm} is bad iff the automaton has a cycle
        // labelled by a power of w, and the checker reverses its input.
        DigitWord::Brun(w) => brun_bad_cycle_check(reference(), &w.iter().rev().copied().collect::<Vec<_>>())?,
        DigitWord::Jp(w) => jp_bad_check(&[], w)?,
    };
    let mut tiles: [Pattern; 3] = subtile_patterns(&sigma, 0)?;
    let mut connected = true;
    for _ in 1..=levels {
        for t in tiles.iter_mut() {
            *t = sigma.dual_image_pattern(t)?;
            connected &= edge_connected_components(t).len() == 1;
        }
    }
    Ok(Classification {
        pisot: sigma.is_irreducible_pisot(),
        origin_interior: !bad,
        connected_levels_checked: levels,
        connected,
    })
}
