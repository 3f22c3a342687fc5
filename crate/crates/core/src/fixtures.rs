//! Bundled reference data: cover sets, worked examples, figure transcriptions
//! and the frozen seed patterns computed by the minimal-annulus search.
//!
//! Seeds are read from `$PLANEGEN_SEED_DIR/seeds.json` when that variable is
//! set, otherwise from the copy compiled into the crate.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::covering::CoverSet;
use crate::error::{Error, Result};
use crate::geometry::{Face, Pattern};

/// Named pair of cover sets.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PerFamily<T> {
    /// Brun value.
    pub brun: T,
    /// Jacobi-Perron value.
    pub jp: T,
}

/// A covering example with expected verdicts (`none`, `covered`, `strong`).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoveringExample {
    /// Example name.
    pub name: String,
    /// The pattern.
    pub pattern: Pattern,
    /// Expected verdict for the Brun cover set.
    pub brun: String,
    /// Expected verdict for the Jacobi-Perron cover set.
    pub jp: String,
}

/// An annulus example around `U`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnnulusExample {
    /// Example name.
    pub name: String,
    /// `U` together with the candidate annulus.
    pub closure: Pattern,
    /// `shape` (fails the shape test), `not_strong` or `annulus`.
    pub verdict: String,
}

/// The bad-annulus example and its two displayed images.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BadAnnulus {
    /// Inner pattern.
    pub inner: Pattern,
    /// Inner pattern plus annulus.
    pub closure: Pattern,
    /// Image of the closure under `Σ1 Σ3` (Brun).
    pub brun_1_3_image: Pattern,
    /// Image of the closure under the Jacobi-Perron digit `(0, 2)`.
    pub jp_0_2_image: Pattern,
}

/// Transcribed drawings of seeds and annuli.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DrawnSeeds {
    /// First Brun seed.
    pub brun_v1: Pattern,
    /// Jacobi-Perron seeds.
    pub jp_v1: Pattern,
    /// Jacobi-Perron seeds.
    pub jp_v2: Pattern,
    /// Jacobi-Perron seeds.
    pub jp_v3: Pattern,
    /// Jacobi-Perron seeds.
    pub jp_v4: Pattern,
    /// Brun annuli around the seeds.
    pub brun_w1: Pattern,
    /// Brun annuli around the seeds.
    pub brun_w2: Pattern,
    /// Brun annuli around the seeds.
    pub brun_w3: Pattern,
    /// Brun annuli around the seeds.
    pub brun_w4: Pattern,
}

impl DrawnSeeds {
    /// `W1 ∪ … ∪ W4`.
    pub fn brun_w_union(&self) -> Pattern {
        [&self.brun_w1, &self.brun_w2, &self.brun_w3, &self.brun_w4].into_iter().fold(Pattern::default(), |a, w| a.union(w))
    }

    /// The four Jacobi-Perron seeds.
    pub fn jp_seeds(&self) -> [&Pattern; 4] {
        [&self.jp_v1, &self.jp_v2, &self.jp_v3, &self.jp_v4]
    }
}

/// A labelled graph with named face vertices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NamedGraph {
    /// Vertex names and faces.
    pub vertices: BTreeMap<String, Face>,
    /// Edges `(source, label, target)`.
    pub edges: Vec<(String, u8, String)>,
}

/// An automaton over the labels `1..=3`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NamedAutomaton {
    /// State names.
    pub states: Vec<String>,
    /// Transitions `(source, label, target)`.
    pub edges: Vec<(String, u8, String)>,
}

/// Translate-generation graph for Brun: nodes are named by the word leading
/// from the start pattern, `V1`/`V2` denote the seeds.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BallGraph {
    /// Start pattern `P0`.
    pub start: Pattern,
    /// Edges `(source, label, target)`.
    pub edges: Vec<(String, u8, String)>,
}

/// Translate-generation chain for Jacobi-Perron over the θ substitutions.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BallChain {
    /// Node patterns.
    pub nodes: Vec<Pattern>,
    /// Edges `(source, θ index, target)`.
    pub edges: Vec<(usize, u8, usize)>,
}

/// The pruned Jacobi-Perron graph with its infinite branch.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JpPrunedGraph {
    /// Finite vertices.
    pub vertices: BTreeMap<String, Face>,
    /// Edges; `g0`, `h0` denote the first branch faces.
    pub edges: Vec<(String, u8, String)>,
    /// Edges removed by the admissibility argument.
    pub deleted: Vec<(String, u8, String)>,
    /// Branch edges `(x, label, y, k)`: `x_n → y_(n+k)` for every `n`.
    pub branch_edges: Vec<(String, u8, String, i64)>,
}

/// The bundled reference data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Reference {
    /// Built-in cover sets.
    pub cover_sets: PerFamily<Vec<Pattern>>,
    /// Two-face patterns excluded from the cover-preservation hypothesis.
    pub forbidden_pairs: PerFamily<Vec<Pattern>>,
    /// Covering examples.
    pub covering_examples: Vec<CoveringExample>,
    /// Annulus examples.
    pub annulus_examples: Vec<AnnulusExample>,
    /// The bad annulus.
    pub bad_annulus: BadAnnulus,
    /// Displayed images `Σ^Br_i(L^Br)`.
    pub brun_cover_images: Vec<Vec<Pattern>>,
    /// Displayed Brun disconnected-preimage table, one column per substitution.
    pub brun_property_a_table: Vec<Vec<Pattern>>,
    /// The three Jacobi-Perron disconnected preimage classes.
    pub jp_disconnected_classes: Vec<Pattern>,
    /// Drawn seeds and annuli.
    pub seeds_drawn: DrawnSeeds,
    /// The reduced Brun generation graph.
    pub brun_reduced_graph: NamedGraph,
    /// The four-state bad-sequence automaton.
    pub brun_bad_automaton: NamedAutomaton,
    /// Brun translate-generation graph.
    pub brun_ball_graph: BallGraph,
    /// Jacobi-Perron translate-generation chain.
    pub jp_ball_chain: BallChain,
    /// Branch faces as `[null, y, z, type]`, position `(−n, y, z)`.
    pub jp_branch_faces: BTreeMap<String, (Option<i64>, i64, i64, u8)>,
    /// `(target, θ index, source, k)`: `target_n ∈ Θ(source_(n+k))`.
    pub jp_branch_table: Vec<(String, u8, String, i64)>,
    /// Pruned Jacobi-Perron graph.
    pub jp_pruned_graph: JpPrunedGraph,
}

impl Reference {
    /// The Brun cover set `L^Br`.
    pub fn brun_cover_set(&self) -> CoverSet {
        CoverSet::new("brun", self.cover_sets.brun.clone())
    }

    /// The Jacobi-Perron cover set `L^JP`.
    pub fn jp_cover_set(&self) -> CoverSet {
        CoverSet::new("jp", self.cover_sets.jp.clone())
    }

    /// Branch face `name_n` of the Jacobi-Perron graph.
    pub fn jp_branch_face(&self, name: &str, n: i64) -> Result<Face> {
        let &(_, y, z, t) =
            self.jp_branch_faces.get(name).ok_or_else(|| Error::InvalidInput(format!("unknown branch face {name:?}")))?;
        Ok(Face::at([-n, y, z], t))
    }
}

/// Seeds computed by the minimal-annulus search and frozen.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Seeds {
    /// Brun seeds `V1`, `V2` (closures of the minimal annuli of `U`).
    pub brun: Vec<Pattern>,
    /// Jacobi-Perron seeds `V1..V4`.
    pub jp: Vec<Pattern>,
}

static REFERENCE: OnceLock<Reference> = OnceLock::new();
static SEEDS: OnceLock<Seeds> = OnceLock::new();

/// The bundled reference data.
pub fn reference() -> &'static Reference {
    REFERENCE.get_or_init(|| {
        serde_json::from_str(include_str!("../data/reference.json")).expect("bundled reference data is valid")
    })
}

/// The frozen seeds, honouring `PLANEGEN_SEED_DIR`.
pub fn seeds() -> Result<&'static Seeds> {
    if let Some(s) = SEEDS.get() {
        return Ok(s);
    }
    let parsed: Seeds = match std::env::var_os("PLANEGEN_SEED_DIR") {
        Some(dir) => {
            let path = std::path::Path::new(&dir).join("seeds.json");
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
        }
        None => serde_json::from_str(include_str!("../data/seeds.json")).expect("bundled seeds are valid"),
    };
    Ok(SEEDS.get_or_init(|| parsed))
}
