//! Substitutions on `{1,2,3}`, incidence matrices and the dual map `E1*`.
//!
//! For a unimodular substitution `σ` with incidence matrix `M`,
//!
//! ```text
//! E1*(σ)([x, i]) = ⋃ { [M⁻¹(x + P(s)), j] : σ(j) = p·i·s }
//! ```
//!
//! and `E1*(σ∘σ') = E1*(σ') ∘ E1*(σ)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebraic::Poly;
use crate::error::{Error, Result};
use crate::geometry::{add3, Face, Pattern, Vec3};
use crate::lp::Cone;
use crate::scalar::rat;

/// A word over `{1,2,3}`.
pub type Word = Vec<u8>;

/// Letter counts `(|w|_1, |w|_2, |w|_3)`.
pub fn abelianization(w: &[u8]) -> Vec3 {
    let mut v = [0; 3];
    for &a in w {
        v[(a - 1) as usize] += 1;
    }
    v
}

/// Parses a word such as `"132"`.
pub fn parse_word(s: &str) -> Result<Word> {
    s.chars()
        .map(|c| match c {
            '1' => Ok(1),
            '2' => Ok(2),
            '3' => Ok(3),
            _ => Err(Error::Parse(format!("letter {c:?} not in {{1,2,3}}"))),
        })
        .collect()
}

/// Formats a word as digits.
pub fn word_string(w: &[u8]) -> String {
    w.iter().map(|a| char::from(b'0' + a)).collect()
}

/// 3×3 integer matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix3(pub [[i64; 3]; 3]);

impl IntMatrix3 {
    /// Identity.
    pub fn identity() -> Self {
        IntMatrix3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(c: [Vec3; 3]) -> Self {
        let mut m = [[0; 3]; 3];
        for (j, col) in c.iter().enumerate() {
            for i in 0..3 {
                m[i][j] = col[i];
            }
        }
        IntMatrix3(m)
    }

    /// Column `j` (0-based).
    pub fn column(&self, j: usize) -> Vec3 {
        [self.0[0][j], self.0[1][j], self.0[2][j]]
    }

    /// Determinant.
    pub fn det(&self) -> i64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let m = &self.0;
        IntMatrix3([[m[0][0], m[1][0], m[2][0]], [m[0][1], m[1][1], m[2][1]], [m[0][2], m[1][2], m[2][2]]])
    }

    /// Matrix product.
    pub fn mul(&self, o: &IntMatrix3) -> Self {
        let mut r = [[0; 3]; 3];
        for (i, row) in r.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        IntMatrix3(r)
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: Vec3) -> Vec3 {
        let m = &self.0;
        [
            m[0][0] * x[0] + m[0][1] * x[1] + m[0][2] * x[2],
            m[1][0] * x[0] + m[1][1] * x[1] + m[1][2] * x[2],
            m[2][0] * x[0] + m[2][1] * x[1] + m[2][2] * x[2],
        ]
    }

    /// Exact inverse when the determinant is `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.abs() != 1 {
            return Err(Error::NotUnimodular(d));
        }
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        // Adjugate (transpose of the cofactor matrix) divided by d.
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        let mut inv = [[0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                inv[i][j] = adj[i][j] * d;
            }
        }
        Ok(IntMatrix3(inv))
    }

    /// Characteristic polynomial `det(X·I − M)`.
    pub fn char_poly(&self) -> Poly {
        let m = &self.0;
        let tr = m[0][0] + m[1][1] + m[2][2];
        let minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0])
            + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
            + (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
        Poly::from_ints(&[-self.det(), minors, -tr, 1])
    }

    /// Whether all entries are nonnegative and some power is entrywise positive.
    pub fn is_primitive(&self) -> bool {
        if self.0.iter().flatten().any(|&c| c < 0) {
            return false;
        }
        // Wielandt: a primitive 3×3 matrix has a positive power of exponent ≤ 5.
        let sign = IntMatrix3(self.0.map(|r| r.map(|c| (c > 0) as i64)));
        let mut p = sign;
        for _ in 1..5 {
            p = IntMatrix3(p.mul(&sign).0.map(|r| r.map(|c| (c > 0) as i64)));
        }
        p.0.iter().flatten().all(|&c| c > 0)
    }
}

/// Whether a monic integer cubic is irreducible with a dominant real root
/// greater than one and two other roots strictly inside the unit circle.
pub fn is_pisot_cubic(p: &Poly) -> bool {
    if p.degree() != Some(3) || !p.is_irreducible_low_degree().unwrap_or(false) {
        return false;
    }
    let one = rat(1);
    let minus_one = rat(-1);
    let real = p.count_roots(None, None);
    if real == 3 {
        p.count_roots(Some(&minus_one), Some(&one)) == 2 && p.count_roots(Some(&one), None) == 1
    } else {
        // One real root λ and a conjugate pair with |z|² = −p(0)/λ.
        if p.count_roots(Some(&one), None) != 1 {
            return false;
        }
        let c0 = p.coeffs().first().cloned().unwrap_or_else(num_rational::BigRational::zero);
        let t = -c0;
        // λ > t  ⇔  p(t) < 0 since λ is the only real root and p is monic.
        p.eval(&t) < num_rational::BigRational::zero()
    }
}

/// A non-erasing morphism of `{1,2,3}*` with its incidence data.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Substitution {
    images: [Word; 3],
    matrix: IntMatrix3,
    inverse: Option<IntMatrix3>,
    /// `(j, i, P(s))` for every decomposition `σ(j) = p·i·s`.
    occurrences: Vec<(u8, u8, Vec3)>,
}

impl fmt::Debug for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "1→{}, 2→{}, 3→{}",
            word_string(&self.images[0]),
            word_string(&self.images[1]),
            word_string(&self.images[2])
        )
    }
}

impl Substitution {
    /// Builds a substitution from the images of `1`, `2`, `3`.
    pub fn new(images: [Word; 3]) -> Result<Self> {
        for (k, w) in images.iter().enumerate() {
            if w.is_empty() {
                return Err(Error::InvalidInput(format!("image of {} is empty", k + 1)));
            }
            if w.iter().any(|a| !(1..=3).contains(a)) {
                return Err(Error::InvalidInput(format!("image of {} uses a letter outside {{1,2,3}}", k + 1)));
            }
        }
        let matrix = IntMatrix3::from_columns([
            abelianization(&images[0]),
            abelianization(&images[1]),
            abelianization(&images[2]),
        ]);
        let inverse = matrix.inverse().ok();
        let mut occurrences = Vec::new();
        for (jj, w) in images.iter().enumerate() {
            for (pos, &i) in w.iter().enumerate() {
                occurrences.push(((jj + 1) as u8, i, abelianization(&w[pos + 1..])));
            }
        }
        Ok(Substitution { images, matrix, inverse, occurrences })
    }

    /// Builds a substitution from digit strings, e.g. `["1", "2", "32"]`.
    pub fn from_strs(images: [&str; 3]) -> Result<Self> {
        Substitution::new([parse_word(images[0])?, parse_word(images[1])?, parse_word(images[2])?])
    }

    /// The identity morphism.
    pub fn identity() -> Self {
        Substitution::new([vec![1], vec![2], vec![3]]).unwrap()
    }

    /// Image of a letter.
    pub fn image(&self, a: u8) -> &[u8] {
        &self.images[(a - 1) as usize]
    }

    /// Images of `1`, `2`, `3`.
    pub fn images(&self) -> &[Word; 3] {
        &self.images
    }

    /// Image of a word.
    pub fn apply(&self, w: &[u8]) -> Word {
        w.iter().flat_map(|&a| self.image(a).iter().copied()).collect()
    }

    /// Incidence matrix: column `j` is the abelianization of `σ(j)`.
    pub fn incidence_matrix(&self) -> IntMatrix3 {
        self.matrix
    }

    /// Whether `|det M| = 1`.
    pub fn is_unimodular(&self) -> bool {
        self.inverse.is_some()
    }

    /// Characteristic polynomial of the incidence matrix.
    pub fn char_poly(&self) -> Poly {
        self.matrix.char_poly()
    }

    /// Irreducible Pisot test on the characteristic polynomial, decided exactly.
    pub fn is_irreducible_pisot(&self) -> bool {
        is_pisot_cubic(&self.char_poly())
    }

    fn inv(&self) -> Result<&IntMatrix3> {
        self.inverse.as_ref().ok_or(Error::NotUnimodular(self.matrix.det()))
    }

    /// Image of one face under `E1*(σ)`.
    pub fn dual_image(&self, f: &Face) -> Result<Pattern> {
        let inv = self.inv()?;
        Ok(self
            .occurrences
            .iter()
            .filter(|(_, i, _)| *i == f.kind)
            .map(|&(j, _, s)| Face::at(inv.apply(add3(f.pos, s)), j))
            .collect())
    }

    /// Image of a pattern under `E1*(σ)`.
    pub fn dual_image_pattern(&self, p: &Pattern) -> Result<Pattern> {
        let inv = *self.inv()?;
        let mut out = Pattern::new();
        for f in p.faces() {
            for &(j, i, s) in &self.occurrences {
                if i == f.kind {
                    out.insert(Face::at(inv.apply(add3(f.pos, s)), j));
                }
            }
        }
        Ok(out)
    }

    /// All faces `g` with `f ∈ E1*(σ)(g)`, optionally restricted to faces of
    /// discrete planes with normal vector in `filter`.
    pub fn dual_preimages(&self, f: &Face, filter: Option<&Cone>) -> Result<Vec<Face>> {
        self.inv()?;
        let mx = self.matrix.apply(f.pos);
        let mut out: Vec<Face> = self
            .occurrences
            .iter()
            .filter(|(j, _, _)| *j == f.kind)
            .map(|&(_, i, s)| Face::at([mx[0] - s[0], mx[1] - s[1], mx[2] - s[2]], i))
            .filter(|g| filter.is_none_or(|c| c.admits_face(g)))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// JSON object `{"1": "...", "2": "...", "3": "..."}`.
    pub fn to_json(&self) -> serde_json::Value {
        let m: BTreeMap<String, String> =
            (1..=3u8).map(|a| (a.to_string(), word_string(self.image(a)))).collect();
        serde_json::to_value(m).unwrap()
    }

    /// Parses the JSON object form.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let get = |k: &str| -> Result<Word> {
            let s = v.get(k).and_then(|x| x.as_str()).ok_or_else(|| Error::Parse(format!("missing image of {k}")))?;
            parse_word(s)
        };
        Substitution::new([get("1")?, get("2")?, get("3")?])
    }
}

/// The composition `s1 ∘ s2`: `a ↦ s1(s2(a))`.
pub fn compose(s1: &Substitution, s2: &Substitution) -> Substitution {
    Substitution::new([s1.apply(s2.image(1)), s1.apply(s2.image(2)), s1.apply(s2.image(3))])
        .expect("composition of non-erasing morphisms is non-erasing")
}

/// Left-to-right product `s_1 ∘ s_2 ∘ … ∘ s_n` (identity when empty).
pub fn compose_all<'a, I: IntoIterator<Item = &'a Substitution>>(subs: I) -> Substitution {
    subs.into_iter().fold(Substitution::identity(), |acc, s| compose(&acc, s))
}

/// Applies dual maps in sequence: `E1*(s_1) ∘ E1*(s_2) ∘ … ∘ E1*(s_n)` to `p`,
/// that is the rightmost map is applied first.
pub fn apply_duals(subs: &[&Substitution], p: &Pattern) -> Result<Pattern> {
    let mut cur = p.clone();
    for s in subs.iter().rev() {
        cur = s.dual_image_pattern(&cur)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brun1() -> Substitution {
        Substitution::from_strs(["1", "2", "32"]).unwrap()
    }

    #[test]
    fn abelianization_counts() {
        assert_eq!(abelianization(&parse_word("32").unwrap()), [0, 1, 1]);
        assert_eq!(abelianization(&[]), [0, 0, 0]);
        assert_eq!(abelianization(&parse_word("13331").unwrap()), [2, 0, 3]);
    }

    #[test]
    fn matrix_inverse() {
        let m = brun1().incidence_matrix();
        assert_eq!(m.mul(&m.inverse().unwrap()), IntMatrix3::identity());
        assert!(IntMatrix3([[2, 0, 0], [0, 1, 0], [0, 0, 1]]).inverse().is_err());
    }

    #[test]
    fn dual_images_of_brun1() {
        let s = brun1();
        assert_eq!(s.dual_image(&Face::origin(3)).unwrap(), Pattern::from_tuples(&[(0, 1, 0, 3)]));
        assert_eq!(s.dual_image(&Face::origin(2)).unwrap(), Pattern::from_tuples(&[(0, 0, 0, 2), (0, 0, 0, 3)]));
        assert_eq!(s.dual_image(&Face::origin(1)).unwrap(), Pattern::from_tuples(&[(0, 0, 0, 1)]));
    }

    #[test]
    fn non_unimodular_rejected() {
        let s = Substitution::from_strs(["11", "2", "3"]).unwrap();
        assert!(!s.is_unimodular());
        assert!(s.dual_image(&Face::origin(1)).is_err());
    }

    #[test]
    fn composition_identity() {
        assert_eq!(compose(&brun1(), &Substitution::identity()), brun1());
    }

    #[test]
    fn pisot_examples() {
        let s3 = Substitution::from_strs(["2", "3", "13"]).unwrap();
        assert!(s3.is_irreducible_pisot());
        assert!(!brun1().is_irreducible_pisot());
        assert!(is_pisot_cubic(&Poly::from_ints(&[1, -1, -3, 1])));
        assert!(is_pisot_cubic(&Poly::from_ints(&[-1, -1, -1, 1]))); // tribonacci
        assert!(!is_pisot_cubic(&Poly::from_ints(&[-1, 0, 0, 1])));
    }
}
