use std::process::{Command, Output};

fn planegen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planegen")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn expand_flagship_vector() {
    let o = planegen(&["expand", "--vector", "poly=x^3-3x^2-x+1;v=(1,x,x^2)", "--family", "brun", "--digits", "10"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1131132132");
}

#[test]
fn expand_rational_vector_as_json() {
    let o = planegen(&["expand", "--vector", "(3,5,7)", "--family", "jp", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["truncated"], true);
    assert!(v["digits"].as_str().unwrap().starts_with('('));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(planegen(&["expand", "--vector", "(1,2)"]).status.code(), Some(2));
    assert_eq!(planegen(&["bogus"]).status.code(), Some(2));
    assert_eq!(planegen(&["classify", "--word", "1,2"]).status.code(), Some(2));
    assert_eq!(planegen(&["gen", "--word", "2,3", "--seed", "V9"]).status.code(), Some(2));
}

#[test]
fn gen_bad_word_stays_small_but_finds_a_seed() {
    let o = planegen(&["gen", "--family", "brun", "--word", "2,3,1,1", "--iters", "3", "--seed", "U", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    let r0 = v["initial_radius"].as_u64().unwrap();
    let steps = v["steps"].as_array().unwrap();
    assert!(steps.iter().all(|s| s["radius"].as_u64() == Some(r0)));
    assert!(steps.iter().any(|s| !s["seed_translates"].as_array().unwrap().is_empty()));
}

#[test]
fn gen_writes_identical_svgs() {
    let dir = std::env::temp_dir().join(format!("planegen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.svg"), dir.join("b.svg"));
    for p in [&a, &b] {
        let o = planegen(&["gen", "--word", "2,3,2", "--iters", "2", "--svg", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn graph_stats_for_brun_seeds() {
    let o = planegen(&["graph", "stats", "--family", "brun"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!((v["vertices"].as_u64(), v["edges"].as_u64()), (Some(19), Some(47)));
}

#[test]
fn graph_build_as_dot_and_pruned_json() {
    let o = planegen(&["graph", "build", "--format", "dot"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("digraph"));
    let o = planegen(&["graph", "prune", "--labels", "3"]);
    assert!(o.status.success());
    json(&o);
    assert_eq!(planegen(&["graph", "prune", "--labels", "x"]).status.code(), Some(2));
}

#[test]
fn check_word_and_classify() {
    let o = planegen(&["graph", "check-word", "--word", "2,3,3,3"]);
    assert_eq!(json(&o)["bad"], true);
    let interior = |w: &str| json(&planegen(&["classify", "--word", w, "--levels", "2"]))["classification"]["origin_interior"].clone();
    assert_eq!(interior("2,3,2"), true);
    assert_eq!(interior("2,3,1,1"), true);
    assert_eq!(interior("1,1,3,2"), false);
}

#[test]
fn rauzy_svg_to_stdout_and_file() {
    let o = planegen(&["rauzy", "--word", "2,3,2", "--level", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("<svg"));
    let o = planegen(&["rauzy", "--word", "(0,1)(1,2)", "--family", "jp", "--level", "2", "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    json(&o);
}

#[test]
fn verify_reports_every_claim_and_fails_honestly() {
    let o = planegen(&["verify", "--suite", "jp", "--bound", "3", "--format", "json"]);
    let v = json(&o);
    let certs = v.as_array().unwrap();
    assert!(!certs.is_empty());
    let all_pass = certs.iter().all(|c| c["certificate"]["status"] == "pass");
    assert_eq!(o.status.code(), Some(if all_pass { 0 } else { 1 }));
    assert!(certs.iter().any(|c| c["certificate"]["claim"].as_str().unwrap().contains("four minimal")));
}

#[test]
fn jobs_flag_is_accepted() {
    let o = planegen(&["--jobs", "2", "graph", "stats"]);
    assert!(o.status.success());
}
