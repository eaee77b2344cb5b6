//! Command-line front end. [`run`] parses arguments, writes the report to
//! `out` (text or a JSON envelope) and diagnostics to `err`, and returns the
//! process exit code: 0 on success, 1 when a verification finds a mismatch,
//! 2 on invalid input.

use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::endo::build_endo;
use crate::engine::{tilting_check, ExtCache, Field};
use crate::kupisch::{Direction, Interval, KupischSeries, ModuleList};
use crate::oracle::{oracle_diff, Bounds};
use crate::propstar::{property_star_check, theorem_sweep, tilting_sweep, verify_all, Status, SuiteOptions};
use crate::ExtNat;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "domdim", version, about = "Exact homological invariants of Nakayama algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// `Q` or `Fp:<p>`.
    #[arg(long, env = "DOMDIM_FIELD", default_value = "Q", global = true)]
    field: Field,
    /// Report wall-clock time in the JSON envelope.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// `linear:<c list>` or `cyclic:<c list>`.
    #[arg(long)]
    kupisch: KupischSeries,
}

#[derive(Args, Debug)]
struct ModuleArgs {
    #[arg(long)]
    kupisch: KupischSeries,
    /// `M(i,k)`; repeatable.
    #[arg(long = "module")]
    modules: Vec<Interval>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Injective,
    Projective,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a Kupisch series and optional modules.
    Validate(ModuleArgs),
    /// Projectives, injectives, faithful module and classification.
    Info(AlgebraArgs),
    /// Minimal injective or projective resolution of the given modules.
    Resolve {
        #[command(flatten)]
        m: ModuleArgs,
        #[arg(long, value_enum, default_value_t = DirectionArg::Injective)]
        direction: DirectionArg,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Dominant dimension of the algebra, or of each given module.
    Domdim(ModuleArgs),
    /// Global dimension.
    Gldim(AlgebraArgs),
    /// Gorenstein dimension with the injective dimensions of projectives.
    Gorenstein(AlgebraArgs),
    /// dim Hom(X, Y) for two modules.
    Homdim(ModuleArgs),
    /// Endomorphism algebra of the given modules (or of the canonical
    /// tilting module with `--index`), with quiver and relations.
    Endo {
        #[command(flatten)]
        m: ModuleArgs,
        #[arg(long)]
        index: Option<usize>,
        /// Longest path considered by relation extraction.
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Canonical tilting module `eA + Omega^{-i}(A)` and its tilting check.
    Tilting {
        #[command(flatten)]
        a: AlgebraArgs,
        #[arg(long)]
        index: usize,
    },
    /// Whether the canonical tilting module keeps the dominant dimension.
    PropertyStar(AlgebraArgs),
    /// Every pinned claim about the family, property * and the examples.
    VerifyPaper {
        #[arg(long, default_value_t = 3)]
        m_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
    /// Property * over all series within bounds.
    Sweep {
        #[arg(long, default_value = "n=6,c=6")]
        bounds: Bounds,
        /// Sweep canonical tilting modules instead.
        #[arg(long)]
        tilting: bool,
    },
    /// Compare the interval calculus against the engine on random series.
    OracleDiff {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value = "n=8,c=8")]
        bounds: Bounds,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Info(_) => "info",
            Command::Resolve { .. } => "resolve",
            Command::Domdim(_) => "domdim",
            Command::Gldim(_) => "gldim",
            Command::Gorenstein(_) => "gorenstein",
            Command::Homdim(_) => "homdim",
            Command::Endo { .. } => "endo",
            Command::Tilting { .. } => "tilting",
            Command::PropertyStar(_) => "property-star",
            Command::VerifyPaper { .. } => "verify-paper",
            Command::Sweep { .. } => "sweep",
            Command::OracleDiff { .. } => "oracle-diff",
        }
    }

    fn input(&self, field: Field) -> Value {
        let mut v = match self {
            Command::Validate(m) | Command::Domdim(m) | Command::Homdim(m) => module_input(m),
            Command::Info(a) | Command::Gldim(a) | Command::Gorenstein(a) | Command::PropertyStar(a) => {
                json!({ "kupisch": a.kupisch })
            }
            Command::Resolve { m, direction, max_steps } => {
                let mut v = module_input(m);
                v["direction"] = json!(format!("{direction:?}").to_lowercase());
                v["max_steps"] = json!(max_steps);
                v
            }
            Command::Endo { m, index, max_length } => {
                let mut v = module_input(m);
                v["index"] = json!(index);
                v["max_length"] = json!(max_length);
                v
            }
            Command::Tilting { a, index } => json!({ "kupisch": a.kupisch, "index": index }),
            Command::VerifyPaper { m_max, seed, cases } => json!({ "m_max": m_max, "seed": seed, "cases": cases }),
            Command::Sweep { bounds, tilting } => json!({ "bounds": bounds.to_string(), "tilting": tilting }),
            Command::OracleDiff { seed, cases, bounds } => json!({ "seed": seed, "cases": cases, "bounds": bounds.to_string() }),
        };
        v["command"] = json!(self.name());
        v["field"] = json!(field);
        v
    }
}

fn module_input(m: &ModuleArgs) -> Value {
    json!({ "kupisch": m.kupisch, "modules": m.modules })
}

/// Result of one command before rendering.
struct Outcome {
    result: Value,
    text: String,
    warnings: Vec<String>,
    code: i32,
}

impl Outcome {
    fn new(result: impl Serialize, text: String) -> Outcome {
        Outcome { result: serde_json::to_value(result).expect("serializable report"), text, warnings: Vec::new(), code: EXIT_OK }
    }

    fn warn(mut self, w: impl IntoIterator<Item = String>) -> Outcome {
        self.warnings.extend(w);
        self
    }

    fn mismatch_if(mut self, failed: bool) -> Outcome {
        if failed {
            self.code = EXIT_MISMATCH;
        }
        self
    }
}

/// Invalid input, reported with exit code 2.
struct Invalid(String);

impl<E: std::fmt::Display> From<E> for Invalid {
    fn from(e: E) -> Self {
        Invalid(e.to_string())
    }
}

type CmdResult = Result<Outcome, Invalid>;

fn checked_modules(k: &KupischSeries, modules: &[Interval]) -> Result<ModuleList, Invalid> {
    for m in modules {
        k.interval(m.vertex, m.len)?;
    }
    Ok(ModuleList::new(modules.to_vec()))
}

fn validate(m: &ModuleArgs) -> CmdResult {
    let list = checked_modules(&m.kupisch, &m.modules)?;
    let k = &m.kupisch;
    let mut text = format!("valid: {k} (n = {}, dim = {})\n", k.n(), k.dim());
    for x in &list {
        writeln!(text, "valid: {x} (dim {})", x.len).unwrap();
    }
    Ok(Outcome::new(json!({ "valid": true, "kupisch": k, "n": k.n(), "dim": k.dim(), "modules": list }), text))
}

fn info(k: &KupischSeries) -> CmdResult {
    let classification = crate::propstar::classify(k);
    let result = json!({
        "kupisch": k,
        "orientation": k.orientation(),
        "n": k.n(),
        "dim": k.dim(),
        "c": k.c(),
        "cokupisch": k.cokupisch(),
        "projectives": k.regular_module(),
        "injectives": k.injective_cogenerator(),
        "faithful_module": k.faithful_module(),
        "domdim": k.domdim_algebra(),
        "gldim": k.gldim(),
        "gorenstein_dim": k.gorenstein().gorenstein_dim,
        "classification": classification,
    });
    let mut text = String::new();
    writeln!(text, "kupisch: {k}").unwrap();
    writeln!(text, "n: {}, dim: {}", k.n(), k.dim()).unwrap();
    writeln!(text, "cokupisch: {:?}", k.cokupisch()).unwrap();
    writeln!(text, "projectives: {}", k.regular_module()).unwrap();
    writeln!(text, "injectives: {}", k.injective_cogenerator()).unwrap();
    writeln!(text, "faithful projective-injective: {}", k.faithful_module()).unwrap();
    writeln!(text, "domdim: {}, gldim: {}, gorenstein: {}", k.domdim_algebra(), k.gldim(), k.gorenstein().gorenstein_dim).unwrap();
    writeln!(
        text,
        "higher auslander: {}, higher auslander-solberg: {}, morita self-dual: {}",
        classification.higher_auslander, classification.higher_auslander_solberg, classification.morita_selfdual
    )
    .unwrap();
    Ok(Outcome::new(result, text))
}

fn resolve(m: &ModuleArgs, direction: DirectionArg, max_steps: Option<usize>) -> CmdResult {
    let k = &m.kupisch;
    let list = checked_modules(k, &m.modules)?;
    if list.is_empty() {
        return Err(Invalid("resolve needs at least one --module".into()));
    }
    let report = match direction {
        DirectionArg::Injective => k.min_injective_resolution(&list, max_steps)?,
        DirectionArg::Projective => k.min_projective_resolution(&list, max_steps)?,
    };
    let (term, next) = match report.direction {
        Direction::Injective => ("I", "cosyzygy"),
        Direction::Projective => ("P", "syzygy"),
    };
    let mut text = String::new();
    for (i, s) in report.steps.iter().enumerate() {
        writeln!(text, "{term}{i} = {}    {next} = {}", s.term, s.next).unwrap();
    }
    let dominant = if report.direction == Direction::Injective { "domdim" } else { "codomdim" };
    writeln!(text, "length: {}, {dominant}: {}", report.length, report.dominant).unwrap();
    Ok(Outcome::new(&report, text))
}

fn domdim(m: &ModuleArgs) -> CmdResult {
    let k = &m.kupisch;
    let list = checked_modules(k, &m.modules)?;
    if list.is_empty() {
        let d = k.domdim_algebra();
        return Ok(Outcome::new(json!({ "domdim": d }), format!("{d}\n")));
    }
    let rows: Vec<(Interval, ExtNat)> = list.iter().map(|x| (*x, k.domdim_module(x))).collect();
    let text = rows.iter().map(|(x, d)| format!("{x}: {d}\n")).collect();
    let modules: Vec<Value> = rows.iter().map(|(x, d)| json!({ "module": x, "domdim": d })).collect();
    Ok(Outcome::new(json!({ "modules": modules }), text))
}

fn homdim(m: &ModuleArgs) -> CmdResult {
    let [x, y] = m.modules[..] else {
        return Err(Invalid(format!("homdim needs exactly two --module values, got {}", m.modules.len())));
    };
    checked_modules(&m.kupisch, &m.modules)?;
    let d = m.kupisch.hom_dim(&x, &y);
    Ok(Outcome::new(json!({ "source": x, "target": y, "hom_dim": d }), format!("{d}\n")))
}

fn endo(m: &ModuleArgs, index: Option<usize>, max_length: Option<usize>, field: Field) -> CmdResult {
    let k = &m.kupisch;
    let list = match (index, m.modules.is_empty()) {
        (Some(i), true) => k.canonical_tilting(i)?,
        (None, false) => checked_modules(k, &m.modules)?,
        _ => return Err(Invalid("endo needs either --module values or --index".into())),
    };
    let b = build_endo(k, &list, field)?;
    let mut warnings = b.warnings().to_vec();
    let quiver = match b.relations(max_length) {
        Ok(q) => q,
        Err(e) => {
            warnings.push(format!("relations unavailable: {e}"));
            b.quiver()
        }
    };
    let mut text = String::new();
    writeln!(text, "summands: {}", b.summands()).unwrap();
    writeln!(text, "dim: {}", b.dim()).unwrap();
    writeln!(text, "vertices: {}", quiver.vertices.join(" ")).unwrap();
    for a in &quiver.arrows {
        writeln!(text, "arrow {}: {} -> {}", a.label, quiver.vertices[a.source], quiver.vertices[a.target]).unwrap();
    }
    writeln!(text, "cartan: {:?}", b.cartan_matrix()).unwrap();
    if let Some(rels) = &quiver.relations {
        for r in rels {
            writeln!(text, "relation: {} = 0", quiver.format_relation(r)).unwrap();
        }
    }
    if let Some(c) = &quiver.certificate {
        writeln!(
            text,
            "certificate: quotient dim {} vs dim {} ({})",
            c.quotient_dim,
            c.algebra_dim,
            if c.passed { "pass" } else { "fail" }
        )
        .unwrap();
    }
    let result = json!({ "algebra": b.to_json(), "cartan": b.cartan_matrix(), "quiver": quiver });
    Ok(Outcome::new(result, text).warn(warnings))
}

fn tilting(k: &KupischSeries, index: usize, field: Field) -> CmdResult {
    let t = k.canonical_tilting(index)?;
    let mut cache = ExtCache::new(k, field);
    let report = tilting_check(&mut cache, &t, index);
    let mut text = String::new();
    writeln!(text, "T = {}", report.summands).unwrap();
    writeln!(text, "projdim {} <= {}: {}", report.projdim, report.bound, report.projdim_ok).unwrap();
    let ext: Vec<String> = report.ext.iter().map(|(j, d)| format!("Ext^{j} = {d}")).collect();
    writeln!(text, "{}: {}", if ext.is_empty() { "no Ext degrees".into() } else { ext.join(", ") }, report.ext_ok).unwrap();
    writeln!(text, "{} summands for {} simples: {}", report.summand_count, report.simples, report.count_ok).unwrap();
    writeln!(text, "tilting: {}", report.passed).unwrap();
    let failed = !report.passed;
    Ok(Outcome::new(&report, text).mismatch_if(failed))
}

fn property_star(k: &KupischSeries, field: Field) -> CmdResult {
    let r = property_star_check(k, field)?;
    let has = r.has_property_star.map_or("inconclusive".to_string(), |b| b.to_string());
    let mut text = String::new();
    writeln!(text, "domdim A: {}", r.n).unwrap();
    writeln!(text, "tilting module: {}", r.tilting).unwrap();
    writeln!(text, "endo dim: {}", r.endo_dim).unwrap();
    writeln!(text, "endo domdim: {}", r.endo_domdim).unwrap();
    writeln!(text, "has property *: {has}").unwrap();
    let warnings = r.warnings.clone();
    Ok(Outcome::new(&r, text).warn(warnings))
}

fn verify(m_max: usize, seed: u64, cases: usize, field: Field) -> CmdResult {
    if m_max == 0 {
        return Err(Invalid("--m-max must be at least 1".into()));
    }
    let opts = SuiteOptions { m_max, field, seed, cases, ..SuiteOptions::default() };
    let report = verify_all(&opts);
    let mut text = String::new();
    let mut warnings = Vec::new();
    for s in &report.sections {
        writeln!(text, "[{}] {}", if s.passed() { "pass" } else { "FAIL" }, s.title).unwrap();
        for c in &s.checks {
            let tag = match c.status {
                Status::Pass => "ok",
                Status::Fail => "FAIL",
                Status::Documented => "documented",
                Status::Inconclusive => "inconclusive",
            };
            writeln!(text, "  {tag:<12} {}: expected {}, computed {}", c.claim, c.expected, c.computed).unwrap();
            if c.status == Status::Documented {
                warnings.push(format!("{}: {}", c.claim, c.note.as_deref().unwrap_or("documented discrepancy")));
            }
        }
    }
    let t = &report.tally;
    writeln!(text, "{} pass, {} fail, {} documented, {} inconclusive", t.pass, t.fail, t.documented, t.inconclusive).unwrap();
    // Section timings vary between runs; they only appear with --timing.
    let mut result = serde_json::to_value(&report).expect("serializable report");
    for s in result["sections"].as_array_mut().into_iter().flatten() {
        s.as_object_mut().expect("section object").remove("seconds");
    }
    let failed = !report.passed;
    Ok(Outcome { result, text, warnings, code: EXIT_OK }.mismatch_if(failed))
}

fn sweep(bounds: Bounds, tilting: bool, field: Field) -> CmdResult {
    if tilting {
        let r = tilting_sweep(bounds, field);
        let mut text = format!("{} series, {} tilting modules, {} failures\n", r.series, r.modules, r.failures.len());
        for f in &r.failures {
            writeln!(text, "FAIL {} index {}", f.kupisch, f.index).unwrap();
        }
        let failed = !r.failures.is_empty();
        return Ok(Outcome::new(&r, text).mismatch_if(failed));
    }
    let r = theorem_sweep(bounds, field);
    let mut text = String::new();
    for row in &r.rows {
        let has = row.has_property_star.map_or("?".to_string(), |b| b.to_string());
        let c = &row.classification;
        writeln!(
            text,
            "{}  domdim {} gdim {} gldim {}  HA {} HAS {} selfdual {}  endo domdim {}  star {has}",
            row.kupisch,
            row.domdim,
            row.gorenstein_dim,
            row.gldim,
            c.higher_auslander,
            c.higher_auslander_solberg,
            c.morita_selfdual,
            row.endo_domdim
        )
        .unwrap();
    }
    writeln!(text, "{} series examined, {} rows, {} asserted, {} violations", r.examined, r.rows.len(), r.asserted, r.violations.len())
        .unwrap();
    let failed = !r.violations.is_empty();
    Ok(Outcome::new(&r, text).mismatch_if(failed))
}

fn oracle(seed: u64, cases: usize, bounds: Bounds, field: Field) -> CmdResult {
    let r = oracle_diff(seed, cases, bounds, field);
    let mut text = format!(
        "seed {}, {} cases, bounds {}: {} comparisons, {} truncated engine verdicts, {} divergences\n",
        r.seed,
        r.cases,
        r.bounds,
        r.comparisons,
        r.bounded_verdicts,
        r.divergences.len()
    );
    if let Some(d) = &r.reproducer {
        writeln!(
            text,
            "reproducer: case {} {} {} on {}: interval calculus {}, engine {}",
            d.case, d.kupisch, d.check, d.subject, d.interval_value, d.engine_value
        )
        .unwrap();
    }
    let failed = !r.divergences.is_empty();
    Ok(Outcome::new(&r, text).mismatch_if(failed))
}

fn dispatch(cmd: &Command, field: Field) -> CmdResult {
    match cmd {
        Command::Validate(m) => validate(m),
        Command::Info(a) => info(&a.kupisch),
        Command::Resolve { m, direction, max_steps } => resolve(m, *direction, *max_steps),
        Command::Domdim(m) => domdim(m),
        Command::Gldim(a) => {
            let d = a.kupisch.gldim();
            Ok(Outcome::new(json!({ "gldim": d }), format!("{d}\n")))
        }
        Command::Gorenstein(a) => {
            let g = a.kupisch.gorenstein();
            let text = format!(
                "gorenstein dimension: {}\ninjdim of projectives: {}\nprojdim of injectives: {}\n",
                g.gorenstein_dim,
                join(&g.injdim_projectives),
                join(&g.projdim_injectives)
            );
            Ok(Outcome::new(&g, text))
        }
        Command::Homdim(m) => homdim(m),
        Command::Endo { m, index, max_length } => endo(m, *index, *max_length, field),
        Command::Tilting { a, index } => tilting(&a.kupisch, *index, field),
        Command::PropertyStar(a) => property_star(&a.kupisch, field),
        Command::VerifyPaper { m_max, seed, cases } => verify(*m_max, *seed, *cases, field),
        Command::Sweep { bounds, tilting } => sweep(*bounds, *tilting, field),
        Command::OracleDiff { seed, cases, bounds } => oracle(*seed, *cases, *bounds, field),
    }
}

fn join(v: &[ExtNat]) -> String {
    v.iter().map(ExtNat::to_string).collect::<Vec<_>>().join(" ")
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
                return EXIT_OK;
            }
            let _ = err.write_all(rendered.as_bytes());
            return EXIT_INVALID;
        }
    };
    let start = Instant::now();
    let outcome = dispatch(&cli.command, cli.field);
    let elapsed = start.elapsed().as_secs_f64();
    let outcome = match outcome {
        Ok(o) => o,
        Err(Invalid(msg)) => {
            if cli.format == Format::Json {
                let envelope = envelope(&cli, Value::Null, None, vec![], Some(&msg));
                let _ = writeln!(out, "{envelope}");
            }
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INVALID;
        }
    };
    let timing = cli.timing.then_some(elapsed);
    let written = match cli.format {
        Format::Json => writeln!(out, "{}", envelope(&cli, outcome.result, timing, outcome.warnings, None)),
        Format::Text => {
            let mut s = outcome.text;
            for w in &outcome.warnings {
                writeln!(s, "warning: {w}").unwrap();
            }
            if let Some(t) = timing {
                writeln!(s, "time: {t:.3}s").unwrap();
            }
            out.write_all(s.as_bytes())
        }
    };
    if written.is_err() {
        return EXIT_INVALID;
    }
    outcome.code
}

fn envelope(cli: &Cli, result: Value, timing: Option<f64>, warnings: Vec<String>, error: Option<&str>) -> String {
    let mut v = json!({
        "tool": "domdim",
        "version": env!("CARGO_PKG_VERSION"),
        "input": cli.command.input(cli.field),
        "result": result,
        "timing": timing.map(|s| json!({ "seconds": s })),
        "warnings": warnings,
    });
    if let Some(e) = error {
        v["error"] = json!(e);
    }
    serde_json::to_string_pretty(&v).expect("serializable envelope")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("domdim").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn domdim_of_the_first_family_member() {
        let (code, out, _) = run_args(&["domdim", "--kupisch", "linear:3,3,3,2,1"]);
        assert_eq!((code, out.as_str()), (0, "2\n"));
    }

    #[test]
    fn property_star_fails_for_a4() {
        let (code, out, _) = run_args(&["property-star", "--kupisch", "linear:3,3,2,1", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["has_property_star"], json!(false));
        assert_eq!(v["result"]["endo_domdim"], json!({ "kind": "finite", "value": 0 }));
        assert_eq!(v["timing"], Value::Null);
        assert_eq!(v["tool"], json!("domdim"));
    }

    #[test]
    fn invalid_input_exits_with_two() {
        assert_eq!(run_args(&["domdim", "--kupisch", "linear:3,1"]).0, EXIT_INVALID);
        assert_eq!(run_args(&["domdim", "--kupisch", "linear:2,1", "--module", "M(0,3)"]).0, EXIT_INVALID);
        assert_eq!(run_args(&["homdim", "--kupisch", "linear:2,1", "--module", "M(0,1)"]).0, EXIT_INVALID);
        assert_eq!(run_args(&["property-star", "--kupisch", "cyclic:2,2"]).0, EXIT_INVALID);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_INVALID);
        let (code, out, err) = run_args(&["gldim", "--kupisch", "bogus", "--format", "json"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(out.is_empty() && err.contains("bogus"));
    }

    #[test]
    fn infinity_prints_as_inf() {
        assert_eq!(run_args(&["gldim", "--kupisch", "cyclic:4,5"]).1, "inf\n");
        assert_eq!(run_args(&["domdim", "--kupisch", "cyclic:2,2"]).1, "inf\n");
    }

    #[test]
    fn homdim_and_resolve() {
        assert_eq!(run_args(&["homdim", "--kupisch", "cyclic:2,3", "--module", "M(1,3)", "--module", "M(1,3)"]).1, "2\n");
        let (code, out, _) = run_args(&["resolve", "--kupisch", "cyclic:4,5", "--module", "M(0,1)", "--direction", "projective"]);
        assert_eq!(code, 0);
        assert!(out.contains("length: inf"), "{out}");
    }

    #[test]
    fn json_output_is_deterministic() {
        let args = ["oracle-diff", "--seed", "3", "--cases", "5", "--bounds", "n=4,c=4", "--format", "json"];
        assert_eq!(run_args(&args), run_args(&args));
    }

    #[test]
    fn endo_reports_duplicates_and_relations() {
        let (code, out, _) = run_args(&["endo", "--kupisch", "linear:3,3,3,2,1", "--index", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("dim: 12") && out.contains("certificate") && out.contains("(pass)"), "{out}");
        let (_, out, _) = run_args(&["endo", "--kupisch", "linear:2,1", "--module", "M(0,2)", "--module", "M(0,2)"]);
        assert!(out.contains("warning:"), "{out}");
    }

    #[test]
    fn tilting_and_sweeps() {
        let (code, out, _) = run_args(&["tilting", "--kupisch", "linear:3,3,3,3,2,1", "--index", "3"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("tilting: true\n"), "{out}");
        assert_eq!(run_args(&["sweep", "--bounds", "n=4,c=4"]).0, 0);
        assert_eq!(run_args(&["sweep", "--tilting", "--bounds", "n=4,c=4"]).0, 0);
    }
}
