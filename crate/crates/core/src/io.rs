//! Textual inputs: vectors, faces and named patterns.
//!
//! Vectors are either rational, `(1,2,5)` or `1/2, 3, 5`, or algebraic,
//! `poly=x^3-3x^2-x+1;v=(1,x,x^2)` with an optional `root=0.46` choosing the
//! real root nearest to that value (the largest one by default).

use num_rational::BigRational;

use crate::algebraic::{parse_poly, Algebraic, AlgebraicField};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::fixtures::seeds;
use crate::geometry::{Face, NormalVector, Pattern};

/// A parsed input vector.
#[derive(Clone, Debug)]
pub enum InputVector {
    /// Rational coordinates.
    Rational(NormalVector<BigRational>),
    /// Coordinates in a real cubic (or lower degree) number field.
    Algebraic(NormalVector<Algebraic>),
}

fn split_coords(s: &str) -> Result<Vec<&str>> {
    let t = s.trim();
    let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
    let parts: Vec<&str> = t.split(',').map(str::trim).collect();
    if parts.len() != 3 || parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("expected three coordinates in {s:?}")));
    }
    Ok(parts)
}

/// Parses a vector in one of the accepted syntaxes.
pub fn parse_vector(src: &str) -> Result<InputVector> {
    if !src.contains('=') {
        let c = split_coords(src)?;
        let q = |t: &str| t.parse::<BigRational>().map_err(|_| Error::Parse(format!("bad rational {t:?}")));
        return Ok(InputVector::Rational(NormalVector::new([q(c[0])?, q(c[1])?, q(c[2])?])));
    }
    let (mut poly, mut coords, mut root) = (None, None, None);
    for item in src.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {item:?}")))?;
        match k.trim() {
            "poly" => poly = Some(parse_poly(v)?),
            "v" => coords = Some(v.trim()),
            "root" => {
                root = Some(v.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad root hint {v:?}")))?)
            }
            other => return Err(Error::Parse(format!("unknown key {other:?}"))),
        }
    }
    let poly = poly.ok_or_else(|| Error::Parse("missing poly=".into()))?;
    let coords = coords.ok_or_else(|| Error::Parse("missing v=".into()))?;
    let field = AlgebraicField::new(&poly, root)?;
    let c = split_coords(coords)?;
    let e = |t: &str| parse_poly(t).map(|p| field.element(&p));
    Ok(InputVector::Algebraic(NormalVector::new([e(c[0])?, e(c[1])?, e(c[2])?])))
}

/// Parses a face `[x,y,z;t]` (brackets optional).
pub fn parse_face(src: &str) -> Result<Face> {
    let t = src.trim();
    let t = t.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(t);
    let (pos, kind) = t.split_once(';').ok_or_else(|| Error::Parse(format!("expected [x,y,z;t], got {src:?}")))?;
    let c = split_coords(pos)?;
    let n = |s: &str| s.parse::<i64>().map_err(|_| Error::Parse(format!("bad coordinate {s:?}")));
    let kind = kind.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad face type {kind:?}")))?;
    Face::new([n(c[0])?, n(c[1])?, n(c[2])?], kind)
}

/// Parses a whitespace-separated list of faces.
pub fn parse_pattern(src: &str) -> Result<Pattern> {
    src.split(']').map(str::trim).filter(|s| !s.is_empty()).map(|s| parse_face(&format!("{s}]"))).collect()
}

/// `U`, or a frozen seed `V1`, `V2`, … of the given family.
pub fn named_pattern(family: Family, name: &str) -> Result<Pattern> {
    if name.eq_ignore_ascii_case("u") {
        return Ok(Pattern::u());
    }
    let k: usize = name
        .strip_prefix(['V', 'v'])
        .and_then(|k| k.parse().ok())
        .ok_or_else(|| Error::Parse(format!("unknown pattern name {name:?}")))?;
    let s = seeds()?;
    let list = match family {
        Family::Brun => &s.brun,
        Family::JacobiPerron => &s.jp,
    };
    list.get(k.wrapping_sub(1)).cloned().ok_or_else(|| Error::InvalidInput(format!("no seed {name} for {family:?}")))
}
