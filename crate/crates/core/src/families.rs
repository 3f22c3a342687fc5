//! Brun and Jacobi-Perron continued fractions and their substitutions.
//!
//! Brun step on `0 ≤ v1 ≤ v2 ≤ v3` (with `d = v3 − v2`):
//!
//! ```text
//! (v1, v2, d)   if v1 ≤ v2 ≤ d     → index 1
//! (v1, d, v2)   if v1 ≤ d < v2     → index 2
//! (d, v1, v2)   if d < v1 ≤ v2     → index 3
//! ```
//!
//! Jacobi-Perron step: `a = ⌊v2/v1⌋`, `b = ⌊v3/v1⌋`, `v ↦ (v2 − a·v1, v3 − b·v1, v1)`.
//! In both cases `v = M·v'` where `M` is the transposed incidence matrix of
//! the associated substitution.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebraic::{Algebraic, AlgebraicField};
use crate::error::{Error, Result};
use crate::geometry::NormalVector;
use crate::scalar::OrderedField;
use crate::substitution::{compose, compose_all, IntMatrix3, Substitution, Word};

/// Continued-fraction family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Brun algorithm, digits in `{1,2,3}`.
    Brun,
    /// Jacobi-Perron algorithm, digits `(a, b)`.
    #[serde(rename = "jp")]
    JacobiPerron,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "brun" | "br" => Ok(Family::Brun),
            "jp" | "jacobi-perron" | "jacobiperron" => Ok(Family::JacobiPerron),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// A Jacobi-Perron digit `(a, b)`.
pub type JpDigit = (i64, i64);

/// Brun substitution `σ^Br_i`.
pub fn brun_substitution(i: u8) -> Result<Substitution> {
    match i {
        1 => Substitution::from_strs(["1", "2", "32"]),
        2 => Substitution::from_strs(["1", "3", "23"]),
        3 => Substitution::from_strs(["2", "3", "13"]),
        _ => Err(Error::InvalidInput(format!("Brun index {i} not in 1..=3"))),
    }
}

/// Jacobi-Perron substitution `1 → 3, 2 → 1·3^a, 3 → 2·3^b`.
pub fn jp_substitution(a: i64, b: i64) -> Result<Substitution> {
    if a < 0 || b < 0 {
        return Err(Error::InvalidInput(format!("negative Jacobi-Perron digit ({a},{b})")));
    }
    let mut two = vec![1];
    two.extend(std::iter::repeat_n(3u8, a as usize));
    let mut three = vec![2];
    three.extend(std::iter::repeat_n(3u8, b as usize));
    Substitution::new([vec![3], two, three])
}

/// Additive pieces `τ1: 2 → 21`, `τ2: 3 → 31`, `τ3: 1 → 3, 2 → 1, 3 → 2`.
pub fn tau(i: u8) -> Result<Substitution> {
    match i {
        1 => Substitution::from_strs(["1", "21", "3"]),
        2 => Substitution::from_strs(["1", "2", "31"]),
        3 => Substitution::from_strs(["3", "1", "2"]),
        _ => Err(Error::InvalidInput(format!("tau index {i} not in 1..=3"))),
    }
}

/// `θ1 = τ2`, `θ2 = τ1τ2`, `θ3 = τ3τ2`, `θ4 = τ3τ1τ2`.
pub fn theta(i: u8) -> Result<Substitution> {
    let t = |k| tau(k).unwrap();
    match i {
        1 => Ok(t(2)),
        2 => Ok(compose(&t(1), &t(2))),
        3 => Ok(compose(&t(3), &t(2))),
        4 => Ok(compose(&t(3), &compose(&t(1), &t(2)))),
        _ => Err(Error::InvalidInput(format!("theta index {i} not in 1..=4"))),
    }
}

/// The three Brun substitutions in index order.
pub fn brun_family() -> Vec<Substitution> {
    (1..=3).map(|i| brun_substitution(i).unwrap()).collect()
}

/// The four additive Jacobi-Perron substitutions in index order.
pub fn theta_family() -> Vec<Substitution> {
    (1..=4).map(|i| theta(i).unwrap()).collect()
}

/// Looks up `brun1..3`, `jp:a,b`, `tau1..3`, `theta1..4` or `id`.
pub fn substitution_by_name(name: &str) -> Result<Substitution> {
    let n = name.trim();
    let idx = |rest: &str| rest.parse::<u8>().map_err(|_| Error::Parse(format!("bad index in {name:?}")));
    if n == "id" || n == "identity" {
        return Ok(Substitution::identity());
    }
    if let Some(r) = n.strip_prefix("brun") {
        return brun_substitution(idx(r)?);
    }
    if let Some(r) = n.strip_prefix("theta") {
        return theta(idx(r)?);
    }
    if let Some(r) = n.strip_prefix("tau") {
        return tau(idx(r)?);
    }
    if let Some(r) = n.strip_prefix("jp:") {
        let parts: Vec<&str> = r.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected jp:a,b, got {name:?}")));
        }
        let a = parts[0].trim().parse().map_err(|_| Error::Parse(format!("bad digit in {name:?}")))?;
        let b = parts[1].trim().parse().map_err(|_| Error::Parse(format!("bad digit in {name:?}")))?;
        return jp_substitution(a, b);
    }
    Err(Error::Parse(format!("unknown substitution {name:?}")))
}

/// `M_i`, the transposed incidence matrix of `σ^Br_i`.
pub fn brun_matrix(i: u8) -> Result<IntMatrix3> {
    Ok(brun_substitution(i)?.incidence_matrix().transpose())
}

/// `M_{a,b}`, the transposed incidence matrix of `σ^JP_{a,b}`.
pub fn jp_matrix(a: i64, b: i64) -> Result<IntMatrix3> {
    Ok(jp_substitution(a, b)?.incidence_matrix().transpose())
}

/// One Brun step; requires `0 ≤ v1 ≤ v2 ≤ v3`.
pub fn brun_step<T: OrderedField>(v: &NormalVector<T>) -> Result<(u8, NormalVector<T>)> {
    let [v1, v2, v3] = v.entries.clone();
    if !(T::zero() <= v1 && v1 <= v2 && v2 <= v3) {
        return Err(Error::InvalidInput("Brun step needs 0 ≤ v1 ≤ v2 ≤ v3".into()));
    }
    let d = v3 - v2.clone();
    if v1 <= v2 && v2 <= d {
        Ok((1, NormalVector::new([v1, v2, d])))
    } else if v1 <= d && d < v2 {
        Ok((2, NormalVector::new([v1, d, v2])))
    } else {
        Ok((3, NormalVector::new([d, v1, v2])))
    }
}

/// One Jacobi-Perron step; requires `0 < v1`, `0 ≤ v2`, `0 ≤ v3`.
pub fn jp_step<T: OrderedField>(v: &NormalVector<T>) -> Result<(JpDigit, NormalVector<T>)> {
    let [v1, v2, v3] = v.entries.clone();
    if !(v1 > T::zero() && v2 >= T::zero() && v3 >= T::zero()) {
        return Err(Error::InvalidInput("Jacobi-Perron step needs v1 > 0 and v2, v3 ≥ 0".into()));
    }
    let a = (v2.clone() / v1.clone()).floor_int();
    let b = (v3.clone() / v1.clone()).floor_int();
    let n2 = v2 - T::from_int(a) * v1.clone();
    let n3 = v3 - T::from_int(b) * v1.clone();
    Ok(((a, b), NormalVector::new([n2, n3, v1])))
}

/// A finite prefix of a continued-fraction expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion<D> {
    /// Digits computed.
    pub digits: Vec<D>,
    /// Whether the expansion stopped early because a coordinate reached zero.
    pub truncated: bool,
}

/// First `n` Brun digits; stops early when a coordinate reaches zero.
pub fn brun_expansion<T: OrderedField>(v: &NormalVector<T>, n: usize) -> Result<Expansion<u8>> {
    let mut cur = v.clone();
    let mut digits = Vec::with_capacity(n);
    while digits.len() < n {
        let (i, next) = brun_step(&cur)?;
        digits.push(i);
        cur = next;
        if cur.entries.iter().any(|c| *c == T::zero()) {
            return Ok(Expansion { truncated: digits.len() < n, digits });
        }
    }
    Ok(Expansion { digits, truncated: false })
}

/// First `n` Jacobi-Perron digits; stops early when the next step would divide by zero.
pub fn jp_expansion<T: OrderedField>(v: &NormalVector<T>, n: usize) -> Result<Expansion<JpDigit>> {
    let mut cur = v.clone();
    let mut digits = Vec::with_capacity(n);
    while digits.len() < n {
        let (d, next) = jp_step(&cur)?;
        digits.push(d);
        cur = next;
        if cur.entries[0] == T::zero() {
            return Ok(Expansion { truncated: digits.len() < n, digits });
        }
    }
    Ok(Expansion { digits, truncated: false })
}

/// Brun admissibility: some digit equals 3.  For `periodic = true`, `seq` is
/// the period of a purely periodic infinite sequence, which then has
/// infinitely many 3s exactly when the period contains one.
pub fn brun_admissible(seq: &[u8], periodic: bool) -> bool {
    let _ = periodic;
    seq.iter().all(|d| (1..=3).contains(d)) && seq.contains(&3)
}

/// Jacobi-Perron admissibility: `0 ≤ a ≤ b`, `b ≠ 0`, and `a = b ⇒ a_next ≠ 0`.
/// For `periodic = true` the condition wraps around the period.
pub fn jp_admissible(seq: &[JpDigit], periodic: bool) -> bool {
    if seq.iter().any(|&(a, b)| !(0 <= a && a <= b && b != 0)) {
        return false;
    }
    let n = seq.len();
    for k in 0..n {
        let next = if k + 1 < n {
            Some(seq[k + 1])
        } else if periodic {
            Some(seq[0])
        } else {
            None
        };
        if let Some((an, _)) = next {
            if seq[k].0 == seq[k].1 && an == 0 {
                return false;
            }
        }
    }
    true
}

/// Canonical θ-word for `σ^JP_{a,b}`: `θ3θ1^{b−1}` if `a = 0`,
/// `θ3θ1^{b−a−1}θ2^a` if `0 < a < b`, `θ4θ2^{a−1}` if `a = b`.
pub fn jp_additive_decompose(a: i64, b: i64) -> Result<Vec<u8>> {
    if !(0 <= a && a <= b && b != 0) {
        return Err(Error::Inadmissible(format!("digit ({a},{b})")));
    }
    let rep = |d: u8, k: i64| std::iter::repeat_n(d, k as usize);
    let w: Vec<u8> = if a == 0 {
        std::iter::once(3).chain(rep(1, b - 1)).collect()
    } else if a < b {
        std::iter::once(3).chain(rep(1, b - a - 1)).chain(rep(2, a)).collect()
    } else {
        std::iter::once(4).chain(rep(2, a - 1)).collect()
    };
    Ok(w)
}

/// The alternative θ4-form `θ4θ1^{b−a}θ2^{a−1}` for `0 < a < b`.
pub fn jp_additive_decompose_alt(a: i64, b: i64) -> Result<Vec<u8>> {
    if !(0 < a && a < b) {
        return Err(Error::Inadmissible(format!("the θ4-form needs 0 < a < b, got ({a},{b})")));
    }
    let rep = |d: u8, k: i64| std::iter::repeat_n(d, k as usize);
    Ok(std::iter::once(4).chain(rep(1, b - a)).chain(rep(2, a - 1)).collect())
}

/// Product `θ_{w1} ∘ … ∘ θ_{wn}`.
pub fn compose_thetas(w: &[u8]) -> Result<Substitution> {
    let subs: Vec<Substitution> = w.iter().map(|&i| theta(i)).collect::<Result<_>>()?;
    Ok(compose_all(subs.iter()))
}

/// Product `σ^Br_{w1} ∘ … ∘ σ^Br_{wn}`.
pub fn brun_product(w: &[u8]) -> Result<Substitution> {
    let subs: Vec<Substitution> = w.iter().map(|&i| brun_substitution(i)).collect::<Result<_>>()?;
    Ok(compose_all(subs.iter()))
}

/// Product `σ^JP_{d1} ∘ … ∘ σ^JP_{dn}`.
pub fn jp_product(w: &[JpDigit]) -> Result<Substitution> {
    let subs: Vec<Substitution> = w.iter().map(|&(a, b)| jp_substitution(a, b)).collect::<Result<_>>()?;
    Ok(compose_all(subs.iter()))
}

/// `σ^JP_{0,1} σ^JP_{0,1} σ^JP_{c1−3, c2−c1}`, whose incidence matrix has
/// characteristic polynomial `X³ − c2·X² + c1·X − 1`.
pub fn cubic_field_substitution(c1: i64, c2: i64) -> Result<Substitution> {
    if c1 < 3 || c2 < 2 * c1 - 2 {
        return Err(Error::InvalidInput(format!("need c1 ≥ 3 and c2 ≥ 2·c1 − 2, got ({c1},{c2})")));
    }
    let s = jp_product(&[(0, 1), (0, 1), (c1 - 3, c2 - c1)])?;
    let expected = crate::algebraic::Poly::from_ints(&[-1, c1, -c2, 1]);
    if s.char_poly() != expected {
        return Err(Error::InvalidInput(format!("unexpected characteristic polynomial {}", s.char_poly())));
    }
    Ok(s)
}

/// Positive eigenvector of an integer matrix for its dominant eigenvalue,
/// with exact algebraic coordinates (the characteristic polynomial must be irreducible).
pub fn dominant_eigenvector(a: &IntMatrix3) -> Result<NormalVector<Algebraic>> {
    let field: Arc<AlgebraicField> = AlgebraicField::new(&a.char_poly(), None)?;
    let l = field.generator();
    let z = |n: i64| Algebraic::from_int(n);
    // B = λI − A; its adjugate columns are eigenvectors.
    let b: Vec<Vec<Algebraic>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| if i == j { l.clone() - z(a.0[i][j]) } else { -z(a.0[i][j]) })
                .collect()
        })
        .collect();
    let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
        b[r0][c0].clone() * b[r1][c1].clone() - b[r0][c1].clone() * b[r1][c0].clone()
    };
    let cols = [
        [cof(1, 2, 1, 2), -cof(1, 2, 0, 2), cof(1, 2, 0, 1)],
        [-cof(0, 2, 1, 2), cof(0, 2, 0, 2), -cof(0, 2, 0, 1)],
        [cof(0, 1, 1, 2), -cof(0, 1, 0, 2), cof(0, 1, 0, 1)],
    ];
    for col in cols {
        if col.iter().any(|c| *c != z(0)) {
            let sign = if col.iter().any(|c| *c < z(0)) { z(-1) } else { z(1) };
            let v: [Algebraic; 3] = col.map(|c| c * sign.clone());
            let scale = v[0].clone();
            if scale == z(0) {
                return Ok(NormalVector::new(v));
            }
            return Ok(NormalVector::new(v.map(|c| c / scale.clone())));
        }
    }
    Err(Error::InvalidInput("no eigenvector found".into()))
}

/// Parses Brun digits `"2,3,2"` (commas and spaces optional).
pub fn parse_brun_digits(s: &str) -> Result<Word> {
    let w: Vec<u8> = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c {
            '1' => Ok(1),
            '2' => Ok(2),
            '3' => Ok(3),
            _ => Err(Error::Parse(format!("Brun digit {c:?} not in 1..=3"))),
        })
        .collect::<Result<_>>()?;
    if w.is_empty() {
        return Err(Error::Parse("empty digit word".into()));
    }
    Ok(w)
}

/// Parses Jacobi-Perron digits `"(0,1)(1,3)"`.
pub fn parse_jp_digits(s: &str) -> Result<Vec<JpDigit>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let rest2 = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
        let close = rest2.find(')').ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
        let inner = &rest2[..close];
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected (a,b) in {s:?}")));
        }
        let a = parts[0].parse().map_err(|_| Error::Parse(format!("bad digit {:?}", parts[0])))?;
        let b = parts[1].parse().map_err(|_| Error::Parse(format!("bad digit {:?}", parts[1])))?;
        out.push((a, b));
        rest = rest2[close + 1..].trim_start_matches(',');
    }
    if out.is_empty() {
        return Err(Error::Parse("empty digit word".into()));
    }
    Ok(out)
}

/// Formats Jacobi-Perron digits as `(a,b)(a,b)…`.
pub fn jp_digits_string(d: &[JpDigit]) -> String {
    d.iter().map(|(a, b)| format!("({a},{b})")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn brun_substitutions() {
        assert_eq!(brun_substitution(3).unwrap(), Substitution::from_strs(["2", "3", "13"]).unwrap());
        assert!(brun_substitution(0).is_err());
        assert_eq!(jp_substitution(0, 1).unwrap(), Substitution::from_strs(["3", "1", "23"]).unwrap());
        assert!(jp_substitution(-1, 1).is_err());
        assert_eq!(theta(2).unwrap(), compose(&tau(1).unwrap(), &tau(2).unwrap()));
        assert_eq!(
            theta(4).unwrap(),
            compose(&tau(3).unwrap(), &compose(&tau(1).unwrap(), &tau(2).unwrap()))
        );
    }

    #[test]
    fn brun_step_examples() {
        let (i, w) = brun_step(&NormalVector::<Q>::from_ints([1, 2, 5])).unwrap();
        assert_eq!(i, 1);
        assert_eq!(w, NormalVector::from_ints([1, 2, 3]));
        let e = brun_expansion(&NormalVector::<Q>::from_ints([1, 1, 1]), 5).unwrap();
        assert_eq!(e.digits, vec![3]);
        assert!(e.truncated);
        assert!(brun_step(&NormalVector::<Q>::from_ints([2, 1, 3])).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(!brun_admissible(&[1, 1, 2], false));
        assert!(brun_admissible(&[2, 3, 2], true));
        assert!(!jp_admissible(&[(2, 2), (0, 5)], false));
        assert!(jp_admissible(&[(2, 2), (1, 5)], false));
        assert!(!jp_admissible(&[(0, 1), (1, 1)], true));
    }

    #[test]
    fn decompositions() {
        assert_eq!(jp_additive_decompose(0, 2).unwrap(), vec![3, 1]);
        assert_eq!(jp_additive_decompose(1, 1).unwrap(), vec![4]);
        assert_eq!(jp_additive_decompose(1, 3).unwrap(), vec![3, 1, 2]);
        assert_eq!(compose_thetas(&[3, 1, 2]).unwrap(), jp_substitution(1, 3).unwrap());
        assert!(jp_additive_decompose(2, 1).is_err());
    }

    #[test]
    fn cubic_constructor_rejects_bounds() {
        assert!(cubic_field_substitution(2, 5).is_err());
        assert!(cubic_field_substitution(4, 5).is_err());
        assert!(cubic_field_substitution(3, 4).is_ok());
    }

    #[test]
    fn digit_parsers() {
        assert_eq!(parse_brun_digits("2,3,2").unwrap(), vec![2, 3, 2]);
        assert_eq!(parse_jp_digits("(0,1)(1,3)").unwrap(), vec![(0, 1), (1, 3)]);
        assert!(parse_jp_digits("(0,1").is_err());
        assert!(parse_brun_digits("2,4").is_err());
    }
}
