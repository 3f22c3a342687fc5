//! Regenerates `data/seeds.json` from the minimal-annulus search around `U`.

use planegen::covering::{enumerate_minimal_annulus_seeds, AnnulusSearch};
use planegen::fixtures::{reference, Seeds};
use planegen::geometry::Pattern;
use planegen::lp::Cone;

fn main() {
    let r = reference();
    let opts = AnnulusSearch::default();
    let brun = enumerate_minimal_annulus_seeds(&Pattern::u(), &r.brun_cover_set(), &Cone::brun(), &opts).expect("brun search");
    let jp = enumerate_minimal_annulus_seeds(&Pattern::u(), &r.jp_cover_set(), &Cone::jp(), &opts).expect("jp search");
    let seeds = Seeds { brun, jp };
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/seeds.json");
    std::fs::write(&path, serde_json::to_string_pretty(&seeds).unwrap() + "\n").expect("write seeds");
    println!("wrote {} ({} Brun, {} JP seeds)", path.display(), seeds.brun.len(), seeds.jp.len());
}
