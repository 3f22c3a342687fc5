//! Independent reference computations used by the integration tests.
//!
//! Nothing here calls into the library's geometry or dual-map code: faces are
//! plain `(position, type)` tuples and every quantity is recomputed from its
//! definition.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type V = [i64; 3];
pub type F = (V, u8);

fn add(a: V, b: V) -> V {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Corners of the unit square `[x, i]`.
pub fn corners(f: F) -> BTreeSet<V> {
    let (x, i) = f;
    let axes: Vec<usize> = (0..3).filter(|&a| a + 1 != i as usize).collect();
    let mut e = [[0i64; 3]; 2];
    e[0][axes[0]] = 1;
    e[1][axes[1]] = 1;
    [x, add(x, e[0]), add(x, e[1]), add(add(x, e[0]), e[1])].into_iter().collect()
}

/// Whether two distinct faces share a whole unit edge.
pub fn share_edge(f: F, g: F) -> bool {
    if f == g {
        return false;
    }
    let common: Vec<V> = corners(f).intersection(&corners(g)).copied().collect();
    common.iter().enumerate().any(|(k, a)| {
        common[k + 1..].iter().any(|b| (0..3).map(|c| (a[c] - b[c]).abs()).sum::<i64>() == 1)
    })
}

/// Incidence matrix: `m[i][j]` counts letter `i + 1` in `images[j]`.
pub fn incidence(images: &[Vec<u8>; 3]) -> [[i64; 3]; 3] {
    let mut m = [[0i64; 3]; 3];
    for (j, w) in images.iter().enumerate() {
        for &a in w {
            m[a as usize - 1][j] += 1;
        }
    }
    m
}

pub fn det(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Inverse of a unimodular matrix by cofactors.
pub fn inverse(m: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let d = det(m);
    assert!(d == 1 || d == -1, "not unimodular");
    let mut inv = [[0i64; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            let (r1, r2) = ((c + 1) % 3, (c + 2) % 3);
            let (c1, c2) = ((r + 1) % 3, (r + 2) % 3);
            inv[r][c] = d * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
        }
    }
    inv
}

pub fn mat_vec(m: &[[i64; 3]; 3], x: V) -> V {
    [0, 1, 2].map(|r| (0..3).map(|c| m[r][c] * x[c]).sum())
}

fn letter_count(w: &[u8]) -> V {
    let mut v = [0; 3];
    for &a in w {
        v[a as usize - 1] += 1;
    }
    v
}

/// `E1*(σ)[x, i]`: the faces `[M⁻¹(x + ℓ(s)), j]` over all splittings
/// `σ(j) = p·i·s`.
pub fn dual_image(images: &[Vec<u8>; 3], f: F) -> BTreeSet<F> {
    let inv = inverse(&incidence(images));
    let mut out = BTreeSet::new();
    for (j, w) in images.iter().enumerate() {
        for (k, &a) in w.iter().enumerate() {
            if a == f.1 {
                out.insert((mat_vec(&inv, add(f.0, letter_count(&w[k + 1..]))), j as u8 + 1));
            }
        }
    }
    out
}

pub fn dual_image_set(images: &[Vec<u8>; 3], p: &BTreeSet<F>) -> BTreeSet<F> {
    p.iter().flat_map(|&f| dual_image(images, f)).collect()
}

/// `σ ∘ τ` on letters.
pub fn compose(s: &[Vec<u8>; 3], t: &[Vec<u8>; 3]) -> [Vec<u8>; 3] {
    [0, 1, 2].map(|j| t[j].iter().flat_map(|&a| s[a as usize - 1].iter().copied()).collect())
}

/// Faces of the discrete plane with integer normal `v` inside `[-r, r]³`:
/// `0 ≤ ⟨x, v⟩ < v_i`.
pub fn plane_faces(v: V, r: i64) -> BTreeSet<F> {
    let mut out = BTreeSet::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                let d = a * v[0] + b * v[1] + c * v[2];
                for i in 1..=3u8 {
                    if 0 <= d && d < v[i as usize - 1] {
                        out.insert(([a, b, c], i));
                    }
                }
            }
        }
    }
    out
}

/// Whether the relation of `word` on automaton states has a power with a
/// fixed point, computed with boolean matrices.
pub fn cycle_power(states: usize, edges: &[(usize, u8, usize)], word: &[u8]) -> bool {
    let step = |l: u8| {
        let mut m = vec![vec![false; states]; states];
        for &(a, x, b) in edges {
            if x == l {
                m[a][b] = true;
            }
        }
        m
    };
    let mul = |a: &Vec<Vec<bool>>, b: &Vec<Vec<bool>>| {
        let mut c = vec![vec![false; states]; states];
        for i in 0..states {
            for k in 0..states {
                if a[i][k] {
                    for j in 0..states {
                        c[i][j] |= b[k][j];
                    }
                }
            }
        }
        c
    };
    let mut r = (0..states).map(|i| (0..states).map(|j| i == j).collect()).collect::<Vec<Vec<bool>>>();
    for &l in word {
        r = mul(&r, &step(l));
    }
    let mut p = r.clone();
    for _ in 0..states {
        if (0..states).any(|i| p[i][i]) {
            return true;
        }
        p = mul(&p, &r);
    }
    false
}

/// Brun digits of `v` in floating point: subtract the second largest entry
/// from the largest, and report where the difference lands.
pub fn brun_digits_f64(mut v: [f64; 3], n: usize) -> Vec<u8> {
    let mut out = Vec::new();
    for _ in 0..n {
        assert!(v[0] < v[1] && v[1] < v[2]);
        let d = v[2] - v[1];
        let digit = if d < v[0] {
            v = [d, v[0], v[1]];
            3
        } else if d < v[1] {
            v = [v[0], d, v[1]];
            2
        } else {
            v = [v[0], v[1], d];
            1
        };
        out.push(digit);
    }
    out
}

/// The largest real root of `x³ + a x² + b x + c` by bisection on `[lo, hi]`.
pub fn cubic_root(a: f64, b: f64, c: f64, mut lo: f64, mut hi: f64) -> f64 {
    let f = |x: f64| ((x + a) * x + b) * x + c;
    assert!(f(lo) * f(hi) < 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(lo) * f(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Translates of `q` contained in `p`.
pub fn occurrences(q: &BTreeSet<F>, p: &BTreeSet<F>) -> Vec<BTreeSet<F>> {
    let mut out: Vec<BTreeSet<F>> = Vec::new();
    let Some(&(q0, k)) = q.iter().next() else { return out };
    for &(x, j) in p {
        if j != k {
            continue;
        }
        let t = [x[0] - q0[0], x[1] - q0[1], x[2] - q0[2]];
        let moved: BTreeSet<F> = q.iter().map(|&(y, i)| (add(y, t), i)).collect();
        if moved.is_subset(p) && !out.contains(&moved) {
            out.push(moved);
        }
    }
    out
}

/// `L`-coverage by chains of face-sharing occurrences.
pub fn covered(p: &BTreeSet<F>, l: &[BTreeSet<F>]) -> bool {
    if p.len() <= 1 {
        return true;
    }
    let occ: Vec<BTreeSet<F>> = l.iter().flat_map(|q| occurrences(q, p)).collect();
    let Some(start) = p.iter().next() else { return true };
    let mut reached: BTreeSet<F> = BTreeSet::from([*start]);
    loop {
        let before = reached.len();
        for o in &occ {
            if !o.is_disjoint(&reached) {
                reached.extend(o.iter().copied());
            }
        }
        if reached.len() == before {
            break;
        }
    }
    reached == *p
}
