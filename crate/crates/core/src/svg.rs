//! Deterministic SVG renderings of patterns and Rauzy patches.
//!
//! Patterns are projected orthogonally onto the plane `x1 + x2 + x3 = 0`.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::Result;
use crate::geometry::Pattern;
use crate::rauzy::ProjectedPatch;

const FACE_COLOURS: [&str; 3] = ["#e8c547", "#5c80bc", "#cd5334"];
const SUBTILE_COLOURS: [&str; 3] = ["#2e86ab", "#f18f01", "#c73e1d"];

/// Orthogonal projection onto the antidiagonal plane, in an orthonormal basis.
pub fn antidiagonal(x: [i64; 3]) -> [f64; 2] {
    let [a, b, c] = x.map(|v| v as f64);
    [(b - a) / 2f64.sqrt(), (2.0 * c - a - b) / 6f64.sqrt()]
}

fn document(polys: &[(usize, [[f64; 2]; 4])], colours: &[&str; 3], unit: f64) -> String {
    let pts = polys.iter().flat_map(|(_, c)| c.iter());
    let b = pts.fold([f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY], |b, c| {
        [b[0].min(c[0]), b[1].min(c[1]), b[2].max(c[0]), b[3].max(c[1])]
    });
    let b = if b[0].is_finite() { b } else { [0.0; 4] };
    let margin = unit * 0.5;
    let (w, h) = ((b[2] - b[0]) * unit + 2.0 * margin, (b[3] - b[1]) * unit + 2.0 * margin);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    for (k, corners) in polys {
        let p: Vec<String> = corners
            .iter()
            .map(|c| format!("{:.3},{:.3}", (c[0] - b[0]) * unit + margin, (b[3] - c[1]) * unit + margin))
            .collect();
        let _ = writeln!(
            s,
            r#"  <polygon points="{}" fill="{}" stroke="black" stroke-width="{:.3}"/>"#,
            p.join(" "),
            colours[*k],
            unit / 40.0
        );
    }
    s.push_str("</svg>\n");
    s
}

/// SVG of a pattern, faces coloured by type.
pub fn pattern_svg(p: &Pattern) -> String {
    let polys: Vec<(usize, [[f64; 2]; 4])> =
        p.faces().map(|f| (f.kind as usize - 1, f.vertices().map(antidiagonal))).collect();
    document(&polys, &FACE_COLOURS, 40.0)
}

/// SVG of a projected Rauzy patch, polygons coloured by subtile.
pub fn rauzy_svg(patch: &ProjectedPatch) -> String {
    let polys: Vec<(usize, [[f64; 2]; 4])> =
        patch.polygons.iter().map(|p| (p.label as usize - 1, p.corners)).collect();
    let d = patch.diameter();
    let unit = if d > 0.0 { 600.0 / d } else { 40.0 };
    document(&polys, &SUBTILE_COLOURS, unit)
}

/// Writes [`pattern_svg`] to `path`.
pub fn render_pattern_svg(p: &Pattern, path: &Path) -> Result<()> {
    Ok(std::fs::write(path, pattern_svg(p))?)
}

/// Writes [`rauzy_svg`] to `path`.
pub fn render_rauzy_svg(patch: &ProjectedPatch, path: &Path) -> Result<()> {
    Ok(std::fs::write(path, rauzy_svg(patch))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_has_three_rhombi() {
        let s = pattern_svg(&Pattern::u());
        assert_eq!(s.matches("<polygon").count(), 3);
        assert_eq!(s, pattern_svg(&Pattern::u()));
    }

    #[test]
    fn empty_pattern_is_valid() {
        let s = pattern_svg(&Pattern::new());
        assert!(s.contains("<svg") && s.ends_with("</svg>\n"));
        assert_eq!(s.matches("<polygon").count(), 0);
    }
}
