use std::fs;
use std::path::Path;

use kneser_core::combin::binomial;
use kneser_core::exact::{parse_scalar, AffineFlat, Scalar};
use kneser_core::experiments::{
    bounds, figure2_fixture, figure4_fixture, hexagon_fixture, load_catalog, moment_curve_config, ot742_fixture,
    perturb, scan_db_complete, scan_db_pattern8, stability_experiment, BoundsOptions, Pattern8Options, OT742_TABLE,
};
use kneser_core::om::{chirotope_of, parse_record, BasisOrder, Chirotope, SignConvention};
use kneser_core::transversal::{
    classify_flat, complete_transversals, decide, is_kneser_transversal, noncomplete_transversals_lambda2,
    KneserProblem,
};
use kneser_core::PointConfig;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::report::CliError;
use crate::{Command, Problem, Source};

pub struct Context {
    pub order: BasisOrder,
    pub workers: Option<usize>,
}

pub struct Outcome {
    pub results: Value,
    pub summary: String,
}

type Run = Result<Outcome, CliError>;

fn outcome(results: Value, summary: impl Into<String>) -> Run {
    Ok(Outcome { results, summary: summary.into() })
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize")
}

/// Subcommand name, echoed inputs and seed of a run.
pub fn describe(command: &Command, ctx: &Context) -> (&'static str, Value, Option<u64>) {
    let name = match command {
        Command::Chirotope(_) => "chirotope",
        Command::Circuits(_) => "circuits",
        Command::Decide(_) => "decide",
        Command::Complete(_) => "complete",
        Command::Noncomplete(_) => "noncomplete",
        Command::Classify { .. } => "classify",
        Command::Verify { .. } => "verify",
        Command::Perturb { .. } => "perturb",
        Command::Stability { .. } => "stability",
        Command::Bounds { .. } => "bounds",
        Command::MomentCurve { .. } => "moment-curve",
        Command::Fixtures { .. } => "fixtures",
        Command::ScanDb7 { .. } => "scan-db7",
        Command::ScanDb8 { .. } => "scan-db8",
    };
    let seed = match command {
        Command::Perturb { seed, .. } | Command::Stability { seed, .. } => Some(*seed),
        _ => None,
    };
    let mut inputs = match to_value(command) {
        Value::Object(mut m) => m.remove(name).unwrap_or(Value::Null),
        _ => Value::Null,
    };
    if let Value::Object(m) = &mut inputs {
        m.insert("basis_order".into(), to_value(&ctx.order));
        m.insert("workers".into(), to_value(&ctx.workers));
    } else {
        inputs = json!({ "basis_order": ctx.order, "workers": ctx.workers });
    }
    (name, inputs, seed)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::input(path.display(), e))
}

fn load_config(path: &Path) -> Result<PointConfig, CliError> {
    PointConfig::from_json(&read(path)?).map_err(|e| CliError::input(path.display(), e))
}

fn load_problem(p: &Problem) -> Result<KneserProblem, CliError> {
    Ok(KneserProblem::new(load_config(&p.config)?, p.k, p.lambda)?)
}

#[derive(Deserialize)]
struct FlatFile {
    base: Vec<String>,
    #[serde(default)]
    directions: Vec<Vec<String>>,
}

fn load_flat(path: &Path) -> Result<AffineFlat, CliError> {
    let bad = |e: &dyn std::fmt::Display| CliError::input(path.display(), e);
    let file: FlatFile = serde_json::from_str(&read(path)?).map_err(|e| bad(&e))?;
    let vec = |v: &[String]| v.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<Scalar>, _>>();
    let base = vec(&file.base).map_err(|e| bad(&e))?;
    let dirs = file.directions.iter().map(|d| vec(d)).collect::<Result<Vec<_>, _>>().map_err(|e| bad(&e))?;
    Ok(AffineFlat::new(base, dirs)?)
}

fn load_scalar(flag: &str, text: &str) -> Result<Scalar, CliError> {
    parse_scalar(text).map_err(|e| CliError::input(flag, e))
}

fn load_chirotope(src: &Source, order: BasisOrder) -> Result<Chirotope, CliError> {
    match (&src.config, &src.db) {
        (Some(path), None) => Ok(chirotope_of(&load_config(path)?)?),
        (None, Some(path)) => {
            let text = read(path)?;
            let line = text
                .lines()
                .nth(src.index.saturating_sub(1))
                .filter(|_| src.index >= 1)
                .ok_or_else(|| CliError::input(path.display(), format!("no record {}", src.index)))?;
            let len = line.trim().chars().count();
            let r = src.rank;
            let n = (r..=64)
                .take_while(|&n| binomial(n, r) <= len)
                .find(|&n| binomial(n, r) == len)
                .ok_or_else(|| CliError::input(path.display(), format!("{len} signs is not C(n, {r}) for any n")))?;
            let rec = parse_record(line, src.index, n, r, order).map_err(|e| CliError::input(path.display(), e))?;
            Ok(rec.chirotope)
        }
        _ => Err(CliError::Input("give exactly one of --config and --db".into())),
    }
}

fn decision_summary(complete: usize, noncomplete: usize, status: &Value) -> String {
    format!("{complete} complete, {noncomplete} non-complete, status {}", status["status"].as_str().unwrap_or("?"))
}

pub fn run(command: &Command, ctx: &Context) -> Run {
    match command {
        Command::Chirotope(src) => {
            let chi = load_chirotope(src, ctx.order)?;
            let signs = chi.to_sign_string(ctx.order);
            outcome(
                json!({ "n": chi.n(), "r": chi.rank(), "uniform": chi.is_uniform(), "basis_order": ctx.order, "signs": signs }),
                format!("rank {} on {} elements", chi.rank(), chi.n()),
            )
        }
        Command::Circuits(src) => {
            let chi = load_chirotope(src, ctx.order)?;
            let circuits = chi.all_circuits();
            let cocircuits = chi.cocircuits();
            let summary = format!("{} circuits, {} cocircuits", circuits.len(), cocircuits.len());
            outcome(json!({ "n": chi.n(), "r": chi.rank(), "circuits": circuits, "cocircuits": cocircuits }), summary)
        }
        Command::Decide(p) => {
            let d = decide(&load_problem(p)?)?;
            let status = to_value(&d.status);
            let summary = decision_summary(d.count_complete(), d.count_noncomplete(), &status);
            let mut results = to_value(&d);
            results["count_complete"] = d.count_complete().into();
            results["count_noncomplete"] = d.count_noncomplete().into();
            outcome(results, summary)
        }
        Command::Complete(p) => {
            let s = complete_transversals(&load_problem(p)?);
            let summary = format!("{} complete transversals", s.certificates.len());
            outcome(json!({ "certificates": s.certificates, "degenerate_subsets": s.degenerate_subsets }), summary)
        }
        Command::Noncomplete(p) => {
            let s = noncomplete_transversals_lambda2(&load_problem(p)?)?;
            let mut results = to_value(&s.status);
            let summary = format!("{} non-complete transversals, status {}", s.certificates.len(), results["status"]);
            results["certificates"] = to_value(&s.certificates);
            outcome(results, summary)
        }
        Command::Classify { problem, flat } => {
            let class = classify_flat(&load_problem(problem)?, &load_flat(flat)?)?;
            let results = to_value(&class);
            let summary = format!("class {}", results["class"]);
            outcome(results, summary)
        }
        Command::Verify { problem, flat } => {
            let problem = load_problem(problem)?;
            let flat = load_flat(flat)?;
            let ok = is_kneser_transversal(&problem, &flat)?;
            let on = flat.labels_on(&problem.config);
            outcome(
                json!({ "transversal": ok, "on_flat": on }),
                if ok { "is a transversal" } else { "is not a transversal" },
            )
        }
        Command::Perturb { config, epsilon, seed } => {
            let moved = perturb(&load_config(config)?, &load_scalar("--epsilon", epsilon)?, *seed)?;
            outcome(json!({ "config": moved.to_json_value() }), format!("{} points moved", moved.len()))
        }
        Command::Stability { problem, epsilon, trials, seed } => {
            let config = load_config(&problem.config)?;
            let eps = load_scalar("--epsilon", epsilon)?;
            let r = with_workers(ctx.workers, || {
                stability_experiment(&config, problem.k, problem.lambda, &eps, *trials, *seed)
            })??;
            let summary = format!(
                "{:.0}% of {trials} trials lost every non-complete transversal",
                r.fraction_noncomplete_destroyed * 100.0
            );
            outcome(to_value(&r), summary)
        }
        Command::Bounds { k, d, lambda, n, c } => {
            let c = c.as_deref().map(|t| load_scalar("--c", t)).transpose()?;
            let b = bounds(*k, *d, *lambda, &BoundsOptions { n: *n, c })?;
            let mut results = to_value(&b);
            results["lower"] = b.lower_eq1.into();
            results["exact"] = to_value(&b.exact_value);
            let summary = format!(
                "{} <= m({k},{d},{lambda}) < {}{}",
                b.lower_eq1,
                b.upper_strict,
                b.exact_value.map(|e| format!(", exactly {e}")).unwrap_or_default()
            );
            outcome(results, summary)
        }
        Command::MomentCurve { n, d } => {
            if *n == 0 || *d == 0 {
                return Err(kneser_core::KneserError::invalid("n and d must be positive").into());
            }
            outcome(json!({ "config": moment_curve_config(*n, *d).to_json_value() }), format!("{n} points in R^{d}"))
        }
        Command::Fixtures { name } => fixtures(name.as_deref()),
        Command::ScanDb7 { db, uniform } => {
            let s = scan_db_complete(db, *uniform, ctx.order, ctx.workers).map_err(input_or_core)?;
            let summary = format!("{} of {} records have a complete transversal line", s.count, s.considered);
            outcome(to_value(&s), summary)
        }
        Command::ScanDb8 { db, range, checkpoint, chunk, catalog, strict, stop_after } => {
            let convention = if *strict { SignConvention::Strict } else { SignConvention::UpToNegation };
            let catalog = catalog
                .as_deref()
                .map(|p| load_catalog(p, ctx.order, convention))
                .transpose()
                .map_err(input_or_core)?;
            let opts = Pattern8Options {
                order: ctx.order,
                range: *range,
                checkpoint: checkpoint.clone(),
                chunk: *chunk,
                workers: ctx.workers,
                stop_after: *stop_after,
            };
            let s = scan_db_pattern8(db, &opts, catalog.as_ref()).map_err(input_or_core)?;
            let summary = format!("{} of {} records carry the pattern", s.count, s.total);
            outcome(to_value(&s), summary)
        }
    }
}

/// Database read and parse failures are input errors.
fn input_or_core(e: kneser_core::KneserError) -> CliError {
    if e.is_domain() {
        CliError::Core(e)
    } else {
        CliError::Input(e.to_string())
    }
}

fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match workers {
        None => Ok(f()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| CliError::Core(kneser_core::KneserError::Internal(e.to_string())))?;
            Ok(pool.install(f))
        }
    }
}

const FIXTURES: [&str; 4] = ["figure2", "figure4", "hexagon", "ot742"];

fn fixture(name: &str) -> Option<Value> {
    let config = match name {
        "figure2" => figure2_fixture(),
        "figure4" => figure4_fixture(),
        "hexagon" => hexagon_fixture(),
        "ot742" => ot742_fixture(),
        _ => return None,
    };
    let mut v = json!({ "config": config.to_json_value() });
    if name == "ot742" {
        v["chirotope"] = json!({ "basis_order": BasisOrder::PaperTable, "signs": OT742_TABLE });
    }
    Some(v)
}

fn fixtures(name: Option<&str>) -> Run {
    match name {
        Some(n) => {
            let v = fixture(n).ok_or_else(|| {
                kneser_core::KneserError::invalid(format!("unknown fixture {n:?}; known: {}", FIXTURES.join(", ")))
            })?;
            outcome(v, format!("fixture {n}"))
        }
        None => {
            let all: serde_json::Map<String, Value> =
                FIXTURES.iter().map(|n| (n.to_string(), fixture(n).expect("known fixture"))).collect();
            outcome(Value::Object(all), format!("{} fixtures", FIXTURES.len()))
        }
    }
}
