//! `resilat`: evaluate terms, check equations and property suites, query
//! filters and export Hasse diagrams or Cayley tables.
//!
//! Exit status is 0 on success, 1 when a checked property fails and 2 on
//! usage, parse or budget errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use resilat::export::{cayley_csv, covering_edges, hasse_dot, TableOp};
use resilat::harness::{run_suite, Mode, RunConfig, SuiteId, SuiteReport, DEFAULT_BUDGET};
use resilat::structure::{filter_member, FilterId};
use resilat::term::{check_equation_on, eval_term, parse_equation, parse_term, Env, Equation, Preset, Verdict, DEFAULT_MAX_VARS};
use resilat::{Algebra, ApElem, Mutation, Params, SubalgebraId, Window};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "resilat", version, about = "Explore and verify the residuated lattices A(n,p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a term under an assignment.
    Eval(EvalArgs),
    /// Run property suites or check equations over a grid of parameters.
    Check(CheckArgs),
    /// Export a Hasse diagram or a Cayley table.
    Export(ExportArgs),
    /// Classify an element against the proper filters.
    Filters(FiltersArgs),
}

#[derive(Args)]
struct Point {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    p: i64,
}

impl Point {
    fn algebra(&self) -> Result<Algebra, Failure> {
        Algebra::from_indices(self.n, self.p).map_err(usage)
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    point: Point,
    term: String,
    /// `name=((m,r),a)`; repeatable.
    #[arg(long = "assign", value_name = "VAR=LITERAL")]
    assign: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
    Csv,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
    n: Vec<i64>,
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
    p: Vec<i64>,
    /// Window radius.
    #[arg(long = "R", default_value_t = 2, allow_negative_numbers = true)]
    radius: i64,
    /// Comma-separated suite ids such as `S1,S2`, or `all`.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    /// An equation such as `x * y = y * x`.
    #[arg(long)]
    eq: Vec<String>,
    /// File with one equation per line; `#` starts a comment.
    #[arg(long)]
    eq_file: Option<PathBuf>,
    /// A named equation: E<m>, EM<m>, WL<m>, Rad<k>, Bterm or WLwitness.
    #[arg(long)]
    preset: Vec<String>,
    /// Restrict equation checks to the members of a subalgebra inside the window.
    #[arg(long)]
    sub: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run even when the estimated number of checks exceeds the budget.
    #[arg(long)]
    force_budget: bool,
    /// Sample this many pairs and triples instead of enumerating them.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run against a deliberately corrupted operation.
    #[arg(long)]
    mutation: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Hasse,
    Table,
}

#[derive(Args)]
struct ExportArgs {
    kind: ExportKind,
    #[command(flatten)]
    point: Point,
    /// Subalgebra to export; infinite ones need `--window`.
    #[arg(long)]
    sub: Option<String>,
    /// Window radius bounding the exported element set.
    #[arg(long)]
    window: Option<i64>,
    /// Operation for tables: mul, div, meet, join or oplus.
    #[arg(long, default_value = "mul")]
    op: String,
    /// Defaults to dot for hasse and csv for table.
    #[arg(long, value_enum)]
    format: Option<ExportFormat>,
}

#[derive(Args)]
struct FiltersArgs {
    #[command(flatten)]
    point: Point,
    element: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum Failure {
    Usage(String),
    Violation,
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = match cli.command {
        Command::Eval(args) => eval(&args, &mut out),
        Command::Check(args) => check(&args, &mut out),
        Command::Export(args) => export(&args, &mut out),
        Command::Filters(args) => filters(&args, &mut out),
    };
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn eval(args: &EvalArgs, out: &mut String) -> Result<(), Failure> {
    let alg = args.point.algebra()?;
    let term = parse_term(&args.term).map_err(usage)?;
    let mut env = Env::new();
    for binding in &args.assign {
        let (name, literal) = binding.split_once('=').ok_or_else(|| usage(format!("expected VAR=LITERAL, got {binding:?}")))?;
        env.insert(name.trim().to_string(), alg.parse_element(literal).map_err(usage)?);
    }
    let value = eval_term(&term, &env, &alg).map_err(usage)?;
    let _ = writeln!(out, "{value}");
    Ok(())
}

fn budget() -> Result<u64, Failure> {
    match std::env::var("RESILAT_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("RESILAT_BUDGET must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn read_equations(args: &CheckArgs, params: Params) -> Result<Vec<(String, Equation)>, Failure> {
    let mut eqs = Vec::new();
    for text in &args.eq {
        eqs.push((text.clone(), parse_equation(text).map_err(|e| usage(format!("{text:?}: {e}")))?));
    }
    if let Some(path) = &args.eq_file {
        let body = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        for (i, line) in body.lines().enumerate() {
            let text = line.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let eq = parse_equation(text).map_err(|e| usage(format!("{}:{}: {e}", path.display(), i + 1)))?;
            eqs.push((text.to_string(), eq));
        }
    }
    for name in &args.preset {
        let preset: Preset = name.parse().map_err(usage)?;
        let eq = preset.equation(params);
        eqs.push((format!("{preset}: {eq}"), eq));
    }
    Ok(eqs)
}

fn check(args: &CheckArgs, out: &mut String) -> Result<(), Failure> {
    let suites: Vec<SuiteId> = if args.suite.iter().any(|s| s == "all") {
        SuiteId::ALL.to_vec()
    } else {
        args.suite.iter().map(|s| s.parse()).collect::<Result<_, _>>().map_err(usage)?
    };
    let has_equations = !args.eq.is_empty() || args.eq_file.is_some() || !args.preset.is_empty();
    if suites.is_empty() && !has_equations {
        return Err(usage("nothing to check: pass --suite, --eq, --eq-file or --preset"));
    }
    let mutation: Option<Mutation> = args.mutation.as_deref().map(str::parse).transpose().map_err(usage)?;
    let sub: Option<SubalgebraId> = args.sub.as_deref().map(str::parse).transpose().map_err(usage)?;
    let mode = match args.samples {
        Some(samples) => Mode::Sampled { samples, seed: args.seed },
        None => Mode::Exhaustive,
    };
    let cfg = RunConfig { budget: budget()?, force: args.force_budget, mode };
    if args.radius < 0 {
        return Err(usage(format!("window radius must be non-negative, got {}", args.radius)));
    }

    let mut failed = 0usize;
    let mut total = 0usize;
    for &n in &args.n {
        for &p in &args.p {
            let params = Params::new(n, p).map_err(usage)?;
            let alg = match mutation {
                Some(m) => Algebra::with_mutation(params, m),
                None => Algebra::new(params),
            };
            for &suite in &suites {
                let report = run_suite(&alg, suite, args.radius, &cfg).map_err(usage)?;
                total += 1;
                failed += usize::from(!report.passed());
                write_report(out, &report, args.format);
            }
            let window = Window::new(params, args.radius).map_err(usage)?;
            let domain = match sub {
                Some(s) => s.members_in(&alg, &window).map_err(usage)?,
                None => window.enumerate(),
            };
            for (text, eq) in read_equations(args, params)? {
                let vars = eq.free_vars().len() as u32;
                let estimate = (domain.len() as u64).saturating_pow(vars);
                if estimate > cfg.budget && !cfg.force {
                    return Err(usage(format!(
                        "{text:?} needs {estimate} assignments, over the budget of {}; pass --force-budget to run anyway",
                        cfg.budget
                    )));
                }
                let verdict = check_equation_on(&eq, &alg, &domain, DEFAULT_MAX_VARS).map_err(usage)?;
                total += 1;
                failed += usize::from(!verdict.holds());
                let scope = sub.map_or("window".to_string(), |s| s.to_string());
                write_verdict(out, &text, params, args.radius, &scope, &verdict, args.format);
            }
        }
    }
    if args.format == Format::Text {
        let _ = writeln!(out, "summary: {} passed, {failed} failed", total - failed);
    }
    if failed > 0 {
        Err(Failure::Violation)
    } else {
        Ok(())
    }
}

fn write_report(out: &mut String, report: &SuiteReport, format: Format) {
    if format == Format::Json {
        let _ = writeln!(out, "{}", report.to_json());
        return;
    }
    let _ = writeln!(out, "{}", report.summary_line());
    for note in &report.notes {
        let _ = writeln!(out, "  note: {note}");
    }
}

fn write_verdict(out: &mut String, text: &str, params: Params, radius: i64, scope: &str, verdict: &Verdict, format: Format) {
    let (n, p) = (params.n(), params.p());
    if format == Format::Json {
        let mut record = json!({"equation": text, "n": n, "p": p, "radius": radius, "domain": scope});
        match verdict {
            Verdict::Holds { assignments } => {
                record["verdict"] = json!("holds");
                record["assignments"] = json!(assignments);
            }
            Verdict::Counterexample { env, lhs, rhs } => {
                let env: serde_json::Map<String, Value> = env.iter().map(|(k, v)| (k.clone(), json!(v.to_string()))).collect();
                record["verdict"] = json!("fails");
                record["counterexample"] = Value::Object(env);
                record["lhs"] = json!(lhs.to_string());
                record["rhs"] = json!(rhs.to_string());
            }
        }
        let _ = writeln!(out, "{record}");
        return;
    }
    match verdict {
        Verdict::Holds { assignments } => {
            let _ = writeln!(out, "{text} n={n} p={p} R={radius} on {scope}: holds ({assignments} assignments)");
        }
        Verdict::Counterexample { env, lhs, rhs } => {
            let bindings: Vec<String> = env.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ =
                writeln!(out, "{text} n={n} p={p} R={radius} on {scope}: fails at {} (lhs={lhs}, rhs={rhs})", bindings.join(" "));
        }
    }
}

fn export(args: &ExportArgs, out: &mut String) -> Result<(), Failure> {
    let alg = args.point.algebra()?;
    let sub: Option<SubalgebraId> = args.sub.as_deref().map(str::parse).transpose().map_err(usage)?;
    let window = args.window.map(|r| Window::new(alg.params(), r)).transpose().map_err(usage)?;
    let (elems, name): (Vec<ApElem>, String) = match (sub, window) {
        (Some(s), Some(w)) => (s.members_in(&alg, &w).map_err(usage)?, format!("{s}")),
        (Some(s), None) => match s.finite_members(&alg).map_err(usage)? {
            Some(all) => (all, s.to_string()),
            None => return Err(usage(format!("{s} is infinite; bound it with --window"))),
        },
        (None, Some(w)) => (w.enumerate(), format!("window{}", w.radius())),
        (None, None) => return Err(usage("export needs --sub or --window")),
    };
    match args.kind {
        ExportKind::Hasse => match args.format.unwrap_or(ExportFormat::Dot) {
            ExportFormat::Dot => out.push_str(&hasse_dot(&alg, &elems, &name).map_err(usage)?),
            ExportFormat::Json => {
                let edges = covering_edges(&alg, &elems).map_err(usage)?;
                let nodes: Vec<String> = elems.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{}", json!({"name": name, "nodes": nodes, "edges": edges}));
            }
            ExportFormat::Csv => return Err(usage("hasse export supports --format dot or json")),
        },
        ExportKind::Table => {
            if !matches!(args.format.unwrap_or(ExportFormat::Csv), ExportFormat::Csv) {
                return Err(usage("table export supports --format csv"));
            }
            let op: TableOp = args.op.parse().map_err(usage)?;
            out.push_str(&cayley_csv(&alg, &elems, op).map_err(usage)?);
        }
    }
    Ok(())
}

fn filters(args: &FiltersArgs, out: &mut String) -> Result<(), Failure> {
    let alg = args.point.algebra()?;
    let a = alg.parse_element(&args.element).map_err(usage)?;
    let mut rows = Vec::new();
    for f in FilterId::PROPER {
        rows.push((f.name(), filter_member(&alg, f, &a).map_err(usage)?));
    }
    let t = alg.boolean_term(&a).map_err(usage)?;
    let t = if t == alg.top() { "top" } else { "bot" };
    match args.format {
        Format::Json => {
            let mut record = json!({"element": a.to_string(), "boolean_term": t});
            for (name, member) in rows {
                record[name] = json!(member);
            }
            let _ = writeln!(out, "{record}");
        }
        Format::Text => {
            let _ = writeln!(out, "{a}");
            for (name, member) in rows {
                let _ = writeln!(out, "  {name:<8} {}", if member { "yes" } else { "no" });
            }
            let _ = writeln!(out, "  t(a)     {t}");
        }
    }
    Ok(())
}
