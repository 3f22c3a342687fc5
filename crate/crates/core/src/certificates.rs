//! The certificate suites replayed by `planegen verify`.
//!
//! Each claim is recomputed from scratch and compared with the published
//! figure it certifies.  A claim reports `pass` or `fail` with a witness or
//! counterexample.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::covering::{
    enumerate_disconnected_preimage_pairs, enumerate_minimal_annulus_seeds, preimage_classes,
    verify_cover_preservation, AnnulusSearch,
};
use crate::error::Result;
use crate::families::{brun_family, jp_substitution, theta_family, Family};
use crate::fixtures::{reference, seeds};
use crate::geometry::Pattern;
use crate::graph::{
    brun_generation_graph, brun_translate_certificate, jp_branch_relations, jp_branch_table,
    jp_generation_graph, jp_translate_certificate, named_graph, reduced_brun_graph, LabelAutomaton,
};
use crate::lp::Cone;
use crate::substitution::Substitution;

/// One checked claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    /// What is claimed.
    pub claim: String,
    /// `pass` or `fail`.
    pub status: Status,
    /// Supporting data or the counterexample.
    pub witness_or_counterexample: Value,
}

/// Outcome of a claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// The recomputation agrees with the claim.
    Pass,
    /// It does not.
    Fail,
}

fn cert(claim: &str, ok: bool, witness: Value) -> Certificate {
    Certificate { claim: claim.to_string(), status: if ok { Status::Pass } else { Status::Fail }, witness_or_counterexample: witness }
}

/// Every Jacobi-Perron substitution with digits `0 ≤ a ≤ b ≤ bound`, `b ≠ 0`.
pub fn jp_substitutions_up_to(bound: i64) -> Result<Vec<Substitution>> {
    let mut out = Vec::new();
    for b in 1..=bound {
        for a in 0..=b {
            out.push(jp_substitution(a, b)?);
        }
    }
    Ok(out)
}

/// Translation classes of disconnected preimage pairs over every
/// Jacobi-Perron substitution with digits up to `bound`.
pub fn jp_disconnected_classes(bound: i64) -> Result<BTreeSet<Pattern>> {
    let cone = Cone::jp();
    let mut all = BTreeSet::new();
    for s in jp_substitutions_up_to(bound)? {
        all.extend(preimage_classes(&enumerate_disconnected_preimage_pairs(&s, &cone)?));
    }
    Ok(all)
}

fn union_all<'a, I: IntoIterator<Item = &'a Pattern>>(ps: I) -> Pattern {
    ps.into_iter().fold(Pattern::new(), |a, p| a.union(p))
}

fn annuli_around(seeds: &[Pattern], family: Family, window: i64) -> Result<Vec<Vec<Pattern>>> {
    let r = reference();
    let (l, cone) = match family {
        Family::Brun => (r.brun_cover_set(), Cone::brun()),
        Family::JacobiPerron => (r.jp_cover_set(), Cone::jp()),
    };
    let opts = AnnulusSearch { window, ..AnnulusSearch::default() };
    seeds.iter().map(|v| enumerate_minimal_annulus_seeds(v, &l, &cone, &opts)).collect()
}

/// The Brun certificate suite.
pub fn brun_suite() -> Result<Vec<Certificate>> {
    let r = reference();
    let s = seeds()?;
    let subs = brun_family();
    let l = r.brun_cover_set();
    let mut out = Vec::new();

    let rep = verify_cover_preservation(&subs, &l)?;
    out.push(cert("every Σ^Br_i(Q), Q ∈ L^Br, is L^Br-covered", rep.passed(), json!({"failures": rep.failures})));
    let images_ok = (0..3).all(|i| {
        let got: BTreeSet<Pattern> = rep.images[i].iter().map(Pattern::normalized).collect();
        let want: BTreeSet<Pattern> = r.brun_cover_images[i].iter().map(Pattern::normalized).collect();
        got == want
    });
    out.push(cert("Σ^Br_i(L^Br) equal the displayed image sets", images_ok, json!({})));

    let mut classes: Vec<Vec<Pattern>> = Vec::new();
    for sub in &subs {
        classes.push(preimage_classes(&enumerate_disconnected_preimage_pairs(sub, &Cone::brun())?));
    }
    let table: Vec<BTreeSet<Pattern>> =
        r.brun_property_a_table.iter().map(|c| c.iter().map(Pattern::normalized).collect()).collect();
    let total: usize = classes.iter().map(Vec::len).sum();
    let matches = (0..3).all(|i| classes[i].iter().cloned().collect::<BTreeSet<_>>() == table[i]);
    out.push(cert(
        "disconnected preimage pairs of Σ^Br_1..3 are the 9 tabulated ones",
        matches && total == 9,
        json!({"computed": classes, "tabulated": table}),
    ));

    let u_annuli = enumerate_minimal_annulus_seeds(&Pattern::u(), &l, &Cone::brun(), &AnnulusSearch::default())?;
    out.push(cert(
        "U has exactly two minimal L^Br-annulus closures, the frozen V^Br_1, V^Br_2",
        u_annuli == s.brun,
        json!({"sizes": u_annuli.iter().map(Pattern::len).collect::<Vec<_>>()}),
    ));

    let around = annuli_around(&s.brun, Family::Brun, 3)?;
    let annuli: BTreeSet<Pattern> = around
        .iter()
        .zip(&s.brun)
        .flat_map(|(cl, v)| cl.iter().map(move |c| c.difference(v)))
        .collect();
    let faces = union_all(&annuli).len();
    out.push(cert(
        "V^Br_1, V^Br_2 have 4 minimal annuli with 60 faces in total",
        annuli.len() == 4 && faces == 60,
        json!({"annuli": annuli.len(), "faces": faces, "per_seed": around.iter().map(Vec::len).collect::<Vec<_>>()}),
    ));

    let g = brun_generation_graph(&union_all(&s.brun), 20)?;
    out.push(cert(
        "G^Br from V^Br_1 ∪ V^Br_2 has 19 vertices, 47 edges, fixpoint after 2 iterations",
        g.reached_fixpoint && g.iterations == 2 && g.graph.vertex_count() == 19 && g.graph.edge_count() == 47,
        json!({"vertices": g.graph.vertex_count(), "edges": g.graph.edge_count(), "iterations": g.iterations}),
    ));

    let h = brun_generation_graph(&r.seeds_drawn.brun_w_union(), 20)?;
    out.push(cert(
        "H^Br from W_1..W_4 has 101 vertices, 240 edges, fixpoint after 6 iterations",
        h.reached_fixpoint && h.iterations == 6 && h.graph.vertex_count() == 101 && h.graph.edge_count() == 240,
        json!({"vertices": h.graph.vertex_count(), "edges": h.graph.edge_count(), "iterations": h.iterations,
               "last_growth": h.last_growth}),
    ));

    let red = reduced_brun_graph(&g.graph);
    let drawn = named_graph(&r.brun_reduced_graph)?;
    out.push(cert(
        "pruning G^Br \\ U to label-3 recurrence gives the drawn reduced graph",
        red == drawn,
        json!({"vertices": red.vertex_count(), "edges": red.edge_count()}),
    ));

    let a = LabelAutomaton::from_named(&r.brun_bad_automaton)?;
    let ga = LabelAutomaton::from_graph(&red);
    let disagreement = words_up_to(10).into_iter().find(|w| a.has_cycle_power(w) != ga.has_cycle_power(w));
    out.push(cert(
        "the four-state automaton and the reduced graph agree on all words of length ≤ 10",
        disagreement.is_none(),
        json!({"counterexample": disagreement}),
    ));

    let t = brun_translate_certificate(&r.brun_ball_graph, &s.brun)?;
    out.push(cert(
        "every edge of the Brun translate graph generates a translate of its target",
        t.passed(),
        json!({"edges": t.edges.len(), "failures": t.failures()}),
    ));
    Ok(out)
}

/// Words over `{1,2,3}` of length `1..=n`.
pub fn words_up_to(n: u32) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for len in 1..=n {
        for code in 0..3usize.pow(len) {
            let mut c = code;
            out.push(
                (0..len)
                    .map(|_| {
                        let d = (c % 3) as u8 + 1;
                        c /= 3;
                        d
                    })
                    .collect(),
            );
        }
    }
    out
}

/// The Jacobi-Perron certificate suite, with digits bounded by `bound`.
pub fn jp_suite(bound: i64) -> Result<Vec<Certificate>> {
    let r = reference();
    let s = seeds()?;
    let l = r.jp_cover_set();
    let mut out = Vec::new();

    let subs = jp_substitutions_up_to(bound)?;
    let rep = verify_cover_preservation(&subs, &l)?;
    out.push(cert(
        &format!("every Σ^JP_(a,b)(Q), Q ∈ L^JP, a ≤ b ≤ {bound}, is L^JP-covered"),
        rep.passed(),
        json!({"substitutions": subs.len(), "failures": rep.failures}),
    ));

    let allowed: BTreeSet<Pattern> = r.jp_disconnected_classes.iter().map(Pattern::normalized).collect();
    let small = jp_disconnected_classes(bound)?;
    let large = jp_disconnected_classes(bound + 4)?;
    out.push(cert(
        &format!("disconnected preimage pairs for digits ≤ {bound} are translates of P1, P2, P3, and digits ≤ {} add nothing", bound + 4),
        small.is_subset(&allowed) && small == large,
        json!({"classes": small, "extra_at_larger_bound": large.difference(&small).collect::<Vec<_>>()}),
    ));

    let u_annuli = enumerate_minimal_annulus_seeds(&Pattern::u(), &l, &Cone::jp(), &AnnulusSearch::default())?;
    out.push(cert(
        "U has exactly four minimal L^JP-annulus closures, the frozen V^JP_1..4",
        u_annuli == s.jp,
        json!({"sizes": u_annuli.iter().map(Pattern::len).collect::<Vec<_>>()}),
    ));

    let around = annuli_around(&s.jp, Family::JacobiPerron, 3)?;
    let annuli: BTreeSet<Pattern> = around
        .iter()
        .zip(&s.jp)
        .flat_map(|(cl, v)| cl.iter().map(move |c| c.difference(v)))
        .collect();
    out.push(cert(
        "V^JP_1..4 have 8 minimal annuli",
        annuli.len() == 8,
        json!({"annuli": annuli.len(), "per_seed": around.iter().map(Vec::len).collect::<Vec<_>>()}),
    ));

    let g = jp_generation_graph(&union_all(&s.jp), 3)?;
    out.push(cert(
        "G^JP after 3 iterations has 33 vertices and 93 edges",
        g.graph.vertex_count() == 33 && g.graph.edge_count() == 93,
        json!({"vertices": g.graph.vertex_count(), "edges": g.graph.edge_count()}),
    ));

    let table = jp_branch_table(r);
    let mut mismatches = Vec::new();
    for n in 1..=6 {
        let got = jp_branch_relations(r, n)?;
        if got != table {
            mismatches.push(json!({
                "n": n,
                "missing": table.difference(&got).collect::<Vec<_>>(),
                "extra": got.difference(&table).collect::<Vec<_>>(),
            }));
        }
    }
    out.push(cert(
        "filtered Θ-preimages of e_n, f_n, g_n, h_n reproduce the branch table for n = 1..6",
        mismatches.is_empty(),
        json!({"mismatches": mismatches}),
    ));

    let t = jp_translate_certificate(&r.jp_ball_chain)?;
    out.push(cert(
        "every edge of the Jacobi-Perron chain generates a translate of its target",
        t.passed(),
        json!({"edges": t.edges.len(), "failures": t.failures(), "thetas": theta_family().len()}),
    ));
    Ok(out)
}
