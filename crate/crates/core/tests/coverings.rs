mod common;

use std::collections::BTreeSet;

use planegen::certificates::{jp_disconnected_classes, jp_substitutions_up_to};
use planegen::covering::{
    enumerate_disconnected_preimage_pairs, enumerate_minimal_annulus_seeds, is_covered, is_l_annulus,
    is_strongly_covered, preimage_classes, verify_cover_preservation, AnnulusSearch, CoverSet,
};
use planegen::families::{brun_family, brun_substitution, jp_substitution};
use planegen::fixtures::{reference, seeds};
use planegen::geometry::{edge_connected_components, faces_connected, plane_patch};
use planegen::lp::Cone;
use planegen::{Pattern, RationalVector};
use proptest::prelude::*;

fn as_set(p: &Pattern) -> BTreeSet<common::F> {
    p.faces().map(|f| (f.pos, f.kind)).collect()
}

fn sets(l: &CoverSet) -> Vec<BTreeSet<common::F>> {
    l.patterns.iter().map(as_set).collect()
}

fn verdict(p: &Pattern, l: &CoverSet) -> &'static str {
    if is_strongly_covered(p, l) {
        "strong"
    } else if is_covered(p, l) {
        "covered"
    } else {
        "none"
    }
}

#[test]
fn covering_examples_have_the_tabulated_verdicts() {
    let r = reference();
    let (lb, lj) = (r.brun_cover_set(), r.jp_cover_set());
    assert_eq!(r.covering_examples.len(), 4);
    for e in &r.covering_examples {
        assert_eq!(verdict(&e.pattern, &lb), e.brun, "{} under L^Br", e.name);
        assert_eq!(verdict(&e.pattern, &lj), e.jp, "{} under L^JP", e.name);
    }
}

#[test]
fn annulus_examples_have_the_tabulated_verdicts() {
    let r = reference();
    let l = r.brun_cover_set();
    let u = Pattern::u();
    for e in &r.annulus_examples {
        let a = e.closure.difference(&u);
        let shape = planegen::geometry::is_annulus_shape(&a, &u);
        let got = if !shape {
            "shape"
        } else if is_l_annulus(&a, &u, &l).unwrap() {
            "annulus"
        } else {
            "not_strong"
        };
        assert_eq!(got, e.verdict, "{}", e.name);
    }
}

#[test]
fn brun_duals_preserve_brun_coverings() {
    let rep = verify_cover_preservation(&brun_family(), &reference().brun_cover_set()).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures);
}

#[test]
fn jp_duals_preserve_jp_coverings_for_small_digits() {
    let rep = verify_cover_preservation(&jp_substitutions_up_to(4).unwrap(), &reference().jp_cover_set()).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures);
}

#[test]
fn jp_disconnected_pairs_are_translates_of_three_patterns() {
    let allowed: BTreeSet<Pattern> = reference().jp_disconnected_classes.iter().map(Pattern::normalized).collect();
    assert_eq!(allowed.len(), 3);
    let found = jp_disconnected_classes(5).unwrap();
    assert!(found.is_subset(&allowed), "{found:?}");
}

#[test]
fn disconnected_preimage_pairs_are_disconnected() {
    let mut subs = brun_family();
    subs.push(jp_substitution(1, 2).unwrap());
    for s in &subs {
        let pairs = enumerate_disconnected_preimage_pairs(s, &Cone::positive()).unwrap();
        assert!(!pairs.is_empty());
        for pair in pairs {
            let (f, g) = pair.image;
            let (a, b) = pair.preimage;
            assert!(faces_connected(&f, &g));
            assert!(!faces_connected(&a, &b));
            assert!(s.dual_image(&a).unwrap().contains(&f));
            assert!(s.dual_image(&b).unwrap().contains(&g));
        }
    }
    let brun3 = enumerate_disconnected_preimage_pairs(&brun_substitution(3).unwrap(), &Cone::brun()).unwrap();
    assert!(!preimage_classes(&brun3).is_empty());
}

#[test]
fn minimal_annuli_of_u() {
    let r = reference();
    let s = seeds().unwrap();
    let opts = AnnulusSearch::default();
    let brun = enumerate_minimal_annulus_seeds(&Pattern::u(), &r.brun_cover_set(), &Cone::brun(), &opts).unwrap();
    assert_eq!(brun.len(), 2);
    assert_eq!(brun, s.brun);
    let jp = enumerate_minimal_annulus_seeds(&Pattern::u(), &r.jp_cover_set(), &Cone::jp(), &opts).unwrap();
    assert_eq!(jp.len(), 4);
    assert_eq!(jp, s.jp);
    for v in brun.iter().chain(&jp) {
        let a = v.difference(&Pattern::u());
        assert_eq!(edge_connected_components(v).len(), 1);
        assert!(planegen::geometry::is_annulus_shape(&a, &Pattern::u()));
    }
    // The drawn Brun seed is one of the enumerated ones.
    assert!(brun.iter().any(|v| v.is_translate_of(&r.seeds_drawn.brun_v1)));
}

fn plane_subpattern() -> impl Strategy<Value = Pattern> {
    (prop::array::uniform3(1i64..15), prop::collection::vec(any::<bool>(), 64)).prop_map(|(v, keep)| {
        let p = plane_patch(&RationalVector::from_ints(v), 1).unwrap();
        p.faces().zip(keep.iter().cycle()).filter(|(_, k)| **k).map(|(f, _)| *f).take(10).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn covering_matches_chain_definition(p in plane_subpattern()) {
        let r = reference();
        for l in [r.brun_cover_set(), r.jp_cover_set()] {
            prop_assert_eq!(is_covered(&p, &l), common::covered(&as_set(&p), &sets(&l)));
        }
    }

    #[test]
    fn coverings_are_translation_invariant(p in plane_subpattern(), t in prop::array::uniform3(-7i64..8)) {
        let l = reference().brun_cover_set();
        let q = p.translate(t);
        prop_assert_eq!(is_covered(&p, &l), is_covered(&q, &l));
        prop_assert_eq!(is_strongly_covered(&p, &l), is_strongly_covered(&q, &l));
    }

    #[test]
    fn strong_implies_plain(p in plane_subpattern()) {
        let l = reference().jp_cover_set();
        prop_assert!(!is_strongly_covered(&p, &l) || is_covered(&p, &l));
    }
}
