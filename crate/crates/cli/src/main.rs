//! `planegen`: expansions, dual iteration, generation graphs, certificate
//! suites, classification and Rauzy fractal rendering.
//!
//! Exit codes: 0 on success, 1 on a failed verification or runtime error,
//! 2 on a usage error.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use planegen::certificates::{brun_suite, jp_suite, Certificate, Status};
use planegen::families::{jp_additive_decompose, parse_brun_digits, parse_jp_digits, theta_family};
use planegen::geometry::combinatorial_radius;
use planegen::graph::{
    brun_bad_cycle_check, build_generation_graph, jp_bad_check, prune_to_recurrent, GenerationGraph,
};
use planegen::io::{named_pattern, parse_pattern};
use planegen::lp::Cone;
use planegen::rauzy::{classify_product, rauzy_approximation, DigitWord};
use planegen::svg::{pattern_svg, rauzy_svg};
use planegen::{brun_expansion, fixtures, jp_expansion, parse_vector, Error, Family, InputVector, Pattern};

#[derive(Parser)]
#[command(name = "planegen", version, about = "Dual substitutions, discrete planes and Rauzy fractals")]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Brun,
    Jp,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Brun => Family::Brun,
            FamilyArg::Jp => Family::JacobiPerron,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Continued-fraction digits of a rational or cubic vector.
    Expand {
        /// `(1,2,5)` or `poly=x^3-3x^2-x+1;v=(1,x,x^2)[;root=0.46]`.
        #[arg(long)]
        vector: String,
        #[arg(long, value_enum, default_value = "brun")]
        family: FamilyArg,
        /// Number of digits.
        #[arg(long, default_value_t = 10)]
        digits: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Iterate `Σ_{w1} ∘ … ∘ Σ_{wm}` on a start pattern.
    Gen {
        #[arg(long, value_enum, default_value = "brun")]
        family: FamilyArg,
        /// Brun digits `2,3,1,1` or Jacobi-Perron digits `(0,1)(1,2)`.
        #[arg(long)]
        word: String,
        /// Number of applications of the whole word.
        #[arg(long, default_value_t = 1)]
        iters: usize,
        /// `U`, a frozen seed `V1`, `V2`, … or an explicit face list.
        #[arg(long, default_value = "U")]
        seed: String,
        /// Write an SVG of the final pattern here.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generation graphs.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Replay the certificate suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Digit bound for the Jacobi-Perron checks.
        #[arg(long, default_value_t = 8)]
        bound: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Pisot, origin-interior and connectedness verdicts for the product `σ_{w1} ⋯ σ_{wm}`.
    Classify {
        #[arg(long, value_enum, default_value = "brun")]
        family: FamilyArg,
        #[arg(long)]
        word: String,
        /// Levels checked for subtile connectedness.
        #[arg(long, default_value_t = 4)]
        levels: usize,
    },
    /// Render a Rauzy fractal approximation.
    Rauzy {
        #[arg(long, value_enum, default_value = "brun")]
        family: FamilyArg,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 4)]
        level: usize,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "svg")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Brun,
    Jp,
    All,
}

#[derive(Args, Clone)]
struct GraphOpts {
    #[arg(long, value_enum, default_value = "brun")]
    family: FamilyArg,
    /// Initial set: `seeds` (all frozen seeds), `annuli` (the drawn Brun annuli), a name or a face list.
    #[arg(long, default_value = "seeds")]
    initial: String,
    #[arg(long, default_value_t = 20)]
    max_iters: usize,
}

#[derive(Subcommand)]
enum GraphAction {
    /// Build and print the graph.
    Build {
        #[command(flatten)]
        opts: GraphOpts,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Vertex, edge and iteration counts.
    Stats {
        #[command(flatten)]
        opts: GraphOpts,
    },
    /// Remove `U`, then keep what lies on backward paths using a label infinitely often.
    Prune {
        #[command(flatten)]
        opts: GraphOpts,
        /// Labels required infinitely often, e.g. `3` or `3,4`.
        #[arg(long, default_value = "3")]
        labels: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Whether `(Σ_{w1} ∘ … ∘ Σ_{wm})^∞` is bad (its patterns stay bounded around the origin).
    CheckWord {
        #[arg(long, value_enum, default_value = "brun")]
        family: FamilyArg,
        #[arg(long)]
        word: String,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidInput(_) | Error::Inadmissible(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn digit_word(family: FamilyArg, word: &str) -> Result<DigitWord, Error> {
    Ok(match family {
        FamilyArg::Brun => DigitWord::Brun(parse_brun_digits(word)?),
        FamilyArg::Jp => DigitWord::Jp(parse_jp_digits(word)?),
    })
}

fn start_pattern(family: FamilyArg, src: &str) -> Result<Pattern, Error> {
    if src.contains('[') {
        parse_pattern(src)
    } else {
        named_pattern(family.into(), src)
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> CliResult {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Runtime(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn expand(vector: &str, family: FamilyArg, digits: usize, format: Format) -> CliResult {
    let v = parse_vector(vector)?;
    let (text, truncated) = match (family, &v) {
        (FamilyArg::Brun, InputVector::Rational(v)) => brun_expansion(v, digits).map(|e| (word(&e.digits), e.truncated))?,
        (FamilyArg::Brun, InputVector::Algebraic(v)) => brun_expansion(v, digits).map(|e| (word(&e.digits), e.truncated))?,
        (FamilyArg::Jp, InputVector::Rational(v)) => {
            jp_expansion(v, digits).map(|e| (planegen::families::jp_digits_string(&e.digits), e.truncated))?
        }
        (FamilyArg::Jp, InputVector::Algebraic(v)) => {
            jp_expansion(v, digits).map(|e| (planegen::families::jp_digits_string(&e.digits), e.truncated))?
        }
    };
    match format {
        Format::Json => println!("{}", json!({"digits": text, "truncated": truncated})),
        _ => println!("{text}"),
    }
    Ok(())
}

fn word(d: &[u8]) -> String {
    d.iter().map(|c| char::from(b'0' + c)).collect()
}

fn gen(family: FamilyArg, w: &str, iters: usize, seed: &str, svg: Option<&PathBuf>, format: Format) -> CliResult {
    // The word lists the dual maps in composition order, Σ_{w1} ∘ … ∘ Σ_{wm}.
    let sigma = digit_word(family, w)?.reversed().substitution()?;
    let mut p = start_pattern(family, seed)?;
    let seeds = fixtures::seeds()?;
    let targets = match family {
        FamilyArg::Brun => &seeds.brun,
        FamilyArg::Jp => &seeds.jp,
    };
    let mut steps = Vec::new();
    let r0 = combinatorial_radius(&p)?;
    for k in 1..=iters {
        p = sigma.dual_image_pattern(&p)?;
        let found: Vec<String> =
            targets.iter().enumerate().filter(|(_, v)| v.occurs_in(&p)).map(|(i, _)| format!("V{}", i + 1)).collect();
        steps.push(json!({"k": k, "faces": p.len(), "radius": combinatorial_radius(&p)?, "seed_translates": found}));
    }
    if let Some(path) = svg {
        emit(&pattern_svg(&p), Some(path))?;
    }
    match format {
        Format::Json => println!("{}", json!({"initial_radius": r0, "steps": steps})),
        _ => {
            println!("initial radius {r0}");
            for s in &steps {
                println!(
                    "k={} faces={} radius={} seed translates: {}",
                    s["k"],
                    s["faces"],
                    s["radius"],
                    s["seed_translates"].as_array().map(|a| a.iter().filter_map(|v| v.as_str()).collect::<Vec<_>>().join(",")).unwrap_or_default()
                );
            }
        }
    }
    Ok(())
}

fn build(opts: &GraphOpts) -> Result<planegen::graph::GraphBuild, Error> {
    let r = fixtures::reference();
    let initial = match opts.initial.as_str() {
        "seeds" => {
            let s = fixtures::seeds()?;
            let list = match opts.family {
                FamilyArg::Brun => &s.brun,
                FamilyArg::Jp => &s.jp,
            };
            list.iter().fold(Pattern::new(), |a, p| a.union(p))
        }
        "annuli" => r.seeds_drawn.brun_w_union(),
        other => start_pattern(opts.family, other)?,
    };
    match opts.family {
        FamilyArg::Brun => build_generation_graph(&planegen::families::brun_family(), Some(&Cone::brun()), &initial, opts.max_iters),
        FamilyArg::Jp => build_generation_graph(&theta_family(), Some(&Cone::jp()), &initial, opts.max_iters),
    }
}

fn print_graph(g: &GenerationGraph, format: Format) {
    match format {
        Format::Dot => print!("{}", g.to_dot()),
        _ => println!("{}", g.to_json()),
    }
}

fn graph(action: &GraphAction) -> CliResult {
    match action {
        GraphAction::Build { opts, format } => print_graph(&build(opts)?.graph, *format),
        GraphAction::Stats { opts } => {
            let b = build(opts)?;
            println!(
                "{}",
                json!({
                    "vertices": b.graph.vertex_count(),
                    "edges": b.graph.edge_count(),
                    "iterations": b.iterations,
                    "last_growth": b.last_growth,
                    "fixpoint": b.reached_fixpoint,
                })
            );
        }
        GraphAction::Prune { opts, labels, format } => {
            let required: BTreeSet<u8> = labels
                .split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| Failure::Usage(format!("bad label {t:?}"))))
                .collect::<Result<_, _>>()?;
            let g = build(opts)?.graph.without(&Pattern::u());
            print_graph(&prune_to_recurrent(&g, &required), *format);
        }
        GraphAction::CheckWord { family, word } => {
            let bad = match digit_word(*family, word)? {
                DigitWord::Brun(w) => brun_bad_cycle_check(fixtures::reference(), &w)?,
                DigitWord::Jp(w) => jp_bad_check(&[], &w)?,
            };
            println!("{}", json!({"bad": bad, "origin_interior": !bad}));
        }
    }
    Ok(())
}

fn verify(suite: Suite, bound: i64, format: Format) -> CliResult {
    let mut certs: Vec<(&str, Certificate)> = Vec::new();
    if matches!(suite, Suite::Brun | Suite::All) {
        certs.extend(brun_suite()?.into_iter().map(|c| ("brun", c)));
    }
    if matches!(suite, Suite::Jp | Suite::All) {
        certs.extend(jp_suite(bound)?.into_iter().map(|c| ("jp", c)));
    }
    match format {
        Format::Json => {
            let v: Vec<_> = certs.iter().map(|(s, c)| json!({"suite": s, "certificate": c})).collect();
            println!("{}", serde_json::Value::Array(v));
        }
        _ => {
            for (s, c) in &certs {
                let tag = if c.status == Status::Pass { "pass" } else { "FAIL" };
                println!("[{tag}] {s}: {}", c.claim);
                if c.status == Status::Fail {
                    println!("       {}", c.witness_or_counterexample);
                }
            }
        }
    }
    if certs.iter().all(|(_, c)| c.status == Status::Pass) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn classify(family: FamilyArg, w: &str, levels: usize) -> CliResult {
    let dw = digit_word(family, w)?;
    let c = classify_product(&dw, levels)?;
    let thetas = match &dw {
        DigitWord::Jp(d) => Some(d.iter().map(|&(a, b)| jp_additive_decompose(a, b)).collect::<Result<Vec<_>, _>>()?),
        DigitWord::Brun(_) => None,
    };
    println!("{}", json!({"word": dw, "classification": c, "theta_decomposition": thetas}));
    Ok(())
}

fn rauzy(family: FamilyArg, w: &str, level: usize, out: Option<&PathBuf>, format: Format) -> CliResult {
    let dw = digit_word(family, w)?;
    let patch = rauzy_approximation(&dw.substitution()?, level)?;
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&patch).map_err(|e| Failure::Runtime(e.to_string()))?),
        _ => rauzy_svg(&patch),
    };
    emit(&text, out)
}

fn run(cli: Cli) -> CliResult {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    match &cli.command {
        Command::Expand { vector, family, digits, format } => expand(vector, *family, *digits, *format),
        Command::Gen { family, word, iters, seed, svg, format } => gen(*family, word, *iters, seed, svg.as_ref(), *format),
        Command::Graph { action } => graph(action),
        Command::Verify { suite, bound, format } => verify(*suite, *bound, *format),
        Command::Classify { family, word, levels } => classify(*family, word, *levels),
        Command::Rauzy { family, word, level, out, format } => rauzy(*family, word, *level, out.as_ref(), *format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
