mod common;

use planegen::geometry::{
    combinatorial_radius, connection_offsets, edge_connected_components, faces_connected, faces_edge_adjacent,
    is_simply_connected, plane_contains, plane_patch,
};
use planegen::{Face, FloatVector, Pattern, RationalVector};
use proptest::prelude::*;

fn window() -> impl Iterator<Item = [i64; 3]> {
    (-1..=1).flat_map(|a| (-1..=1).flat_map(move |b| (-1..=1).map(move |c| [a, b, c])))
}

/// Whether `[0, i]` and `[d, j]` lie together in a translate of a discrete
/// plane with positive normal, searched over small normals.
fn coplanar(i: u8, d: [i64; 3], j: u8) -> bool {
    for v0 in 1..=6i64 {
        for v1 in 1..=6i64 {
            for v2 in 1..=6i64 {
                let v = [v0, v1, v2];
                let h = d[0] * v0 + d[1] * v1 + d[2] * v2;
                // Need c with c ≤ 0 < c + v_i and c ≤ h < c + v_j.
                let lo = (h - v[j as usize - 1] + 1).max(1 - v[i as usize - 1]);
                if lo <= h.min(0) {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn edge_adjacency_matches_shared_corners() {
    for i in 1..=3u8 {
        for j in 1..=3u8 {
            for d in window() {
                let (f, g) = (Face::origin(i), Face::at(d, j));
                assert_eq!(
                    faces_edge_adjacent(&f, &g),
                    common::share_edge(([0; 3], i), (d, j)),
                    "{f} {g}"
                );
            }
        }
    }
}

#[test]
fn offset_tables_are_touching_coplanar_pairs() {
    for i in 1..=3u8 {
        for j in 1..=3u8 {
            for d in window() {
                if i == j && d == [0; 3] {
                    continue;
                }
                let touch = !common::corners(([0; 3], i)).is_disjoint(&common::corners((d, j)));
                let expected = touch && coplanar(i, d, j);
                assert_eq!(faces_connected(&Face::origin(i), &Face::at(d, j)), expected, "[0,{i}] [{d:?},{j}]");
            }
        }
    }
}

#[test]
fn offset_tables_are_antisymmetric() {
    for i in 1..=3u8 {
        for j in 1..=3u8 {
            let back: Vec<[i64; 3]> = connection_offsets(j, i).iter().map(|d| [-d[0], -d[1], -d[2]]).collect();
            let mut a = connection_offsets(i, j);
            let mut b = back;
            a.sort();
            b.sort();
            assert_eq!(a, b);
            assert_eq!(connection_offsets(i, j).len(), 8);
        }
    }
}

#[test]
fn u_is_small_and_simply_connected() {
    let u = Pattern::u();
    assert_eq!(combinatorial_radius(&u).unwrap(), 1);
    assert_eq!(edge_connected_components(&u).len(), 1);
    assert!(is_simply_connected(&u));
    let split = Pattern::from_tuples(&[(0, 0, 0, 1), (5, 0, 0, 1)]);
    assert_eq!(edge_connected_components(&split).len(), 2);
    assert!(combinatorial_radius(&split).is_err());
}

proptest! {
    #[test]
    fn plane_patch_matches_definition(v0 in 1i64..20, v1 in 1i64..20, v2 in 1i64..20) {
        let v = RationalVector::from_ints([v0, v1, v2]);
        let got: std::collections::BTreeSet<(common::V, u8)> =
            plane_patch(&v, 3).unwrap().faces().map(|f| (f.pos, f.kind)).collect();
        let want = common::plane_faces([v0, v1, v2], 3);
        prop_assert_eq!(got, want);
    }

    #[test]
    fn float_plane_membership_matches_definition(v0 in 1i64..9, v1 in 1i64..9, v2 in 1i64..9,
                                               x in prop::array::uniform3(-4i64..5), k in 1u8..4) {
        let v = FloatVector::from_ints([v0, v1, v2]);
        let f = Face::at(x, k);
        let h = x[0] * v0 + x[1] * v1 + x[2] * v2;
        let want = 0 <= h && h < [v0, v1, v2][k as usize - 1];
        prop_assert_eq!(plane_contains(&v, &f).unwrap(), want);
    }

    #[test]
    fn plane_patches_are_connected(v0 in 1i64..12, v1 in 1i64..12, v2 in 1i64..12) {
        let p = plane_patch(&RationalVector::from_ints([v0, v1, v2]), 2).unwrap();
        let pairs = p.faces().flat_map(|f| p.faces().map(move |g| (f, g)));
        for (f, g) in pairs {
            if faces_edge_adjacent(f, g) {
                prop_assert!(faces_connected(f, g), "{} {}", f, g);
            }
        }
    }
}
