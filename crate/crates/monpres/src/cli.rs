//! The `monpres` command surface over `.pres`/`.alg`/`.map`/`.fun` files.
//!
//! Reports are deterministic plain text (or `--json`, schema `monpres/1`):
//! no timestamps, no unordered iteration. Wall-clock output only appears
//! behind `--timing`. Exit codes: `0` success / `Equal` / true, `1`
//! negative verdict, `2` unknown or inconclusive, `3` usage, `4` I/O,
//! `5` parse or contract error.
//!
//! The `MONPRES_BUDGET` environment variable supplies default budgets as
//! comma-separated `key=value` pairs (`completion-rounds`, `inst-depth`,
//! `model-size`); command-line flags override it.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog;
use crate::colimit::{
    canonical_presentation, coequalizer, coproduct, pushout, verify_algebraic, MonadDiagram,
    PresentationMorphism,
};
use crate::dsl::{
    self, parse_alg, parse_fun, parse_map, parse_pres, print_alg, print_category_presentation,
    print_presentation, sanitize_name, ParseError, PresFile,
};
use crate::error::Error;
use crate::presentation::{
    decide_equal, enumerate_models, normal_form, satisfies, violating_assignment,
    DistinctEvidence, EqualEvidence, EqualityBudget, NormalFormOutcome, Presentation, Verdict,
};
use crate::quiver::{free_hom, quotient_hom, CategoryPresentation};
use crate::signature::{
    enumerate_terms, Context, Signature, SignatureMorphism, Term,
};

pub const JSON_SCHEMA: &str = "monpres/1";

/// Result of one CLI invocation: process exit code plus everything that
/// should reach stdout.
#[derive(Debug, Clone)]
pub struct CliOutcome {
    pub code: i32,
    pub output: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "monpres",
    about = "Finitely presented algebraic theories: models, equality, colimits, and quiver presentations",
    disable_version_flag = true
)]
struct Cli {
    /// Emit a structured JSON report instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Append wall-clock timing (excluded from determinism guarantees)
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check whether an algebra satisfies a presentation
    Check { pres: PathBuf, alg: PathBuf },
    /// Enumerate finite models up to a carrier size
    Models {
        pres: PathBuf,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Decide equality of two terms modulo the equations
    Eq {
        pres: PathBuf,
        lhs: String,
        rhs: String,
        #[arg(long)]
        ctx: usize,
        #[arg(long)]
        inst_depth: Option<usize>,
        #[arg(long)]
        model_size: Option<usize>,
        #[arg(long)]
        completion_rounds: Option<usize>,
    },
    /// Normal form of a term, when completion converges
    Nf {
        pres: PathBuf,
        term: String,
        #[arg(long)]
        ctx: usize,
        #[arg(long)]
        completion_rounds: Option<usize>,
    },
    /// Enumerate terms of bounded depth over the signature
    Free {
        pres: PathBuf,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        count: bool,
    },
    /// Coproduct of two presentations (emits .pres)
    Coprod {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extend a presentation by formal equations (emits .pres)
    Coeq {
        pres: PathBuf,
        /// An equation `label (n) : lhs = rhs`; repeatable
        #[arg(long = "eq")]
        eqs: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Pushout of a span of presentations (emits .pres)
    Pushout {
        apex: PathBuf,
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        left_map: PathBuf,
        #[arg(long)]
        right_map: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Depth-truncated canonical presentation (emits .pres)
    Canon {
        pres: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify a claimed algebraic colimit on finite carriers
    VerifyColim {
        /// Diagram object (repeatable, order defines indices)
        #[arg(long = "object", required = true)]
        objects: Vec<PathBuf>,
        /// Diagram arrow `SRC:TGT:FILE.map` (repeatable)
        #[arg(long = "arrow")]
        arrows: Vec<String>,
        #[arg(long)]
        colimit: PathBuf,
        /// Cocone arrow .map file, one per object in order
        #[arg(long = "cocone", required = true)]
        cocones: Vec<PathBuf>,
        #[arg(long)]
        max_size: usize,
    },
    /// Paths between two objects in the free category
    QuiverHom {
        pres: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        count: bool,
    },
    /// Path classes modulo the relations
    QuiverQuotient {
        pres: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Check functor data against the relations
    QuiverFunctor {
        pres: PathBuf,
        fun: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// List catalog entries, or export one as .pres
    Catalog { name: Option<String> },
}

enum Failure {
    Io(PathBuf, String),
    Parse(String, ParseError),
    Engine(Error),
    Usage(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 3,
            Failure::Io(..) => 4,
            Failure::Parse(..) | Failure::Engine(_) => 5,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(path, e) => format!("error: {}: {e}", path.display()),
            Failure::Parse(origin, e) => format!("error: {origin}:{e}"),
            Failure::Engine(e) => format!("error: {e}"),
            Failure::Usage(m) => format!("error: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

type CmdResult = Result<(String, i32), Failure>;

/// Runs the CLI on the given arguments (without the program name),
/// reading `MONPRES_BUDGET` from the process environment.
pub fn run(args: &[String]) -> CliOutcome {
    let env_budget = std::env::var("MONPRES_BUDGET").ok();
    run_with_budget_env(args, env_budget.as_deref())
}

/// [`run`] with the budget environment made explicit, for tests.
pub fn run_with_budget_env(args: &[String], env_budget: Option<&str>) -> CliOutcome {
    let start = Instant::now();
    let mut argv: Vec<String> = vec!["monpres".into()];
    argv.extend(args.iter().cloned());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            return CliOutcome {
                code,
                output: rendered,
            };
        }
    };

    let budget_defaults = match budget_from_env(env_budget) {
        Ok(b) => b,
        Err(msg) => {
            return CliOutcome {
                code: 3,
                output: format!("error: {msg}\n"),
            }
        }
    };

    let json = cli.json;
    let result = dispatch(cli.command, &budget_defaults, json);
    let (mut output, code) = match result {
        Ok((out, code)) => (out, code),
        Err(f) => (format!("{}\n", f.message()), f.code()),
    };
    if cli.timing {
        let _ = writeln!(output, "time: {} ms", start.elapsed().as_millis());
    }
    CliOutcome { code, output }
}

fn budget_from_env(env: Option<&str>) -> Result<EqualityBudget, String> {
    let mut budget = EqualityBudget::default();
    let Some(spec) = env else {
        return Ok(budget);
    };
    for pair in spec.split(',') {
        let pair = pair.trim();
        if pair.is_empty() {
            continue;
        }
        let Some((key, value)) = pair.split_once('=') else {
            return Err(format!("MONPRES_BUDGET entry {pair:?} is not key=value"));
        };
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| format!("MONPRES_BUDGET value in {pair:?} is not a number"))?;
        match key.trim() {
            "completion-rounds" => budget.completion_rounds = value,
            "inst-depth" => budget.inst_depth = value,
            "model-size" => budget.model_size = value,
            other => return Err(format!("unknown MONPRES_BUDGET key {other:?}")),
        }
    }
    Ok(budget)
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e.to_string()))
}

fn load_pres(path: &Path) -> Result<PresFile, Failure> {
    let text = read_file(path)?;
    parse_pres(&text).map_err(|e| Failure::Parse(path.display().to_string(), e))
}

fn load_algebraic(path: &Path) -> Result<(String, Presentation), Failure> {
    match load_pres(path)? {
        PresFile::Algebraic { name, presentation } => Ok((name, presentation)),
        PresFile::Quiver { .. } => Err(Failure::Usage(format!(
            "{} is a quiver presentation; this command needs an algebraic one",
            path.display()
        ))),
    }
}

fn load_quiver(path: &Path) -> Result<CategoryPresentation, Failure> {
    match load_pres(path)? {
        PresFile::Quiver { presentation } => Ok(presentation),
        PresFile::Algebraic { .. } => Err(Failure::Usage(format!(
            "{} is an algebraic presentation; this command needs a quiver one",
            path.display()
        ))),
    }
}

fn parse_cli_term(
    text: &str,
    sig: &Signature,
    ctx: Context,
) -> Result<Term, Failure> {
    dsl::parse_term(text, sig, ctx).map_err(|e| Failure::Parse(format!("<term {text:?}>"), e))
}

fn emit_pres(name: &str, p: &Presentation, output: &Option<PathBuf>) -> CmdResult {
    let text = print_presentation(name, p);
    if let Some(path) = output {
        std::fs::write(path, &text)
            .map_err(|e| Failure::Io(path.clone(), e.to_string()))?;
    }
    Ok((text, 0))
}

fn dispatch(command: Command, budget_defaults: &EqualityBudget, json: bool) -> CmdResult {
    match command {
        Command::Check { pres, alg } => cmd_check(&pres, &alg, json),
        Command::Models {
            pres,
            max_size,
            count_only,
        } => cmd_models(&pres, max_size, count_only, json),
        Command::Eq {
            pres,
            lhs,
            rhs,
            ctx,
            inst_depth,
            model_size,
            completion_rounds,
        } => {
            let mut budget = budget_defaults.clone();
            if let Some(d) = inst_depth {
                budget.inst_depth = d;
            }
            if let Some(k) = model_size {
                budget.model_size = k;
            }
            if let Some(r) = completion_rounds {
                budget.completion_rounds = r;
            }
            cmd_eq(&pres, &lhs, &rhs, ctx, &budget, json)
        }
        Command::Nf {
            pres,
            term,
            ctx,
            completion_rounds,
        } => cmd_nf(
            &pres,
            &term,
            ctx,
            completion_rounds.unwrap_or(budget_defaults.completion_rounds),
            json,
        ),
        Command::Free {
            pres,
            vars,
            depth,
            count,
        } => cmd_free(&pres, vars, depth, count, json),
        Command::Coprod {
            left,
            right,
            output,
        } => {
            let (_, p1) = load_algebraic(&left)?;
            let (_, p2) = load_algebraic(&right)?;
            let cop = coproduct(&p1, &p2)?;
            emit_pres("coproduct", &cop.presentation, &output)
        }
        Command::Coeq { pres, eqs, output } => cmd_coeq(&pres, &eqs, &output),
        Command::Pushout {
            apex,
            left,
            right,
            left_map,
            right_map,
            output,
        } => cmd_pushout(&apex, &left, &right, &left_map, &right_map, budget_defaults, &output),
        Command::Canon { pres, depth, output } => {
            let (_, p) = load_algebraic(&pres)?;
            let cp = canonical_presentation(&p, depth)?;
            emit_pres("canonical", &cp.presentation, &output)
        }
        Command::VerifyColim {
            objects,
            arrows,
            colimit,
            cocones,
            max_size,
        } => cmd_verify_colim(&objects, &arrows, &colimit, &cocones, max_size, budget_defaults, json),
        Command::QuiverHom {
            pres,
            from,
            to,
            max_len,
            count,
        } => cmd_quiver_hom(&pres, &from, &to, max_len, count, json),
        Command::QuiverQuotient {
            pres,
            from,
            to,
            max_len,
        } => cmd_quiver_quotient(&pres, &from, &to, max_len, json),
        Command::QuiverFunctor { pres, fun, max_len } => {
            cmd_quiver_functor(&pres, &fun, max_len, json)
        }
        Command::Catalog { name } => cmd_catalog(name.as_deref(), json),
    }
}

fn cmd_check(pres: &Path, alg: &Path, json: bool) -> CmdResult {
    let (_, p) = load_algebraic(pres)?;
    let text = read_file(alg)?;
    let file =
        parse_alg(&text, p.signature()).map_err(|e| Failure::Parse(alg.display().to_string(), e))?;
    let ok = satisfies(&file.algebra, &p)?;
    let violation = if ok {
        None
    } else {
        violating_assignment(&file.algebra, &p)
    };
    if json {
        let mut obj = json!({
            "schema": JSON_SCHEMA,
            "command": "check",
            "satisfies": ok,
        });
        if let Some((eq_idx, assignment)) = &violation {
            obj["violated"] = json!({
                "equation": p.equations()[*eq_idx].label(),
                "assignment": assignment,
            });
        }
        return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), i32::from(!ok)));
    }
    let mut out = format!("satisfies: {ok}\n");
    if let Some((eq_idx, assignment)) = violation {
        let eq = &p.equations()[eq_idx];
        let _ = writeln!(
            out,
            "violated: {} with assignment {:?}",
            eq.label().unwrap_or("<unnamed>"),
            assignment
        );
    }
    Ok((out, i32::from(!ok)))
}

fn cmd_models(pres: &Path, max_size: usize, count_only: bool, json: bool) -> CmdResult {
    let (_, p) = load_algebraic(pres)?;
    let models = enumerate_models(&p, max_size)?;
    let start_size = usize::from(p.signature().has_constants());
    let counts: Vec<(usize, usize)> = (start_size..=max_size)
        .map(|m| (m, models.iter().filter(|a| a.carrier_size() == m).count()))
        .collect();
    if json {
        let mut obj = json!({
            "schema": JSON_SCHEMA,
            "command": "models",
            "counts": counts.iter().map(|(s, c)| json!({"size": s, "count": c})).collect::<Vec<_>>(),
        });
        if !count_only {
            obj["models"] = models
                .iter()
                .map(|a| json!({"carrier_size": a.carrier_size(), "tables": a.tables()}))
                .collect::<Vec<_>>()
                .into();
        }
        return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), 0));
    }
    let mut out = String::new();
    if count_only {
        let line = counts
            .iter()
            .map(|(s, c)| format!("size {s}: {c}"))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "{line}");
    } else {
        for (idx, model) in models.iter().enumerate() {
            if idx > 0 {
                out.push('\n');
            }
            out.push_str(&print_alg(model, Some(&format!("m{idx}")), None));
        }
        let _ = writeln!(out, "total: {}", models.len());
    }
    Ok((out, 0))
}

fn verdict_engine(verdict: &Verdict) -> &'static str {
    match verdict {
        Verdict::Equal(EqualEvidence::Syntactic) => "syntactic",
        Verdict::Equal(EqualEvidence::Rewrite { .. }) => "completion",
        Verdict::Equal(EqualEvidence::Closure { .. }) => "closure",
        Verdict::Distinct(DistinctEvidence::Model { .. }) => "model",
        Verdict::Distinct(DistinctEvidence::NormalForms { .. }) => "normal-forms",
        Verdict::Unknown(_) => "none",
    }
}

fn cmd_eq(
    pres: &Path,
    lhs: &str,
    rhs: &str,
    ctx: usize,
    budget: &EqualityBudget,
    json: bool,
) -> CmdResult {
    let (_, p) = load_algebraic(pres)?;
    let ctx = Context::new(ctx);
    let t = parse_cli_term(lhs, p.signature(), ctx)?;
    let u = parse_cli_term(rhs, p.signature(), ctx)?;
    let verdict = decide_equal(&p, &t, &u, ctx, budget)?;
    let code = match &verdict {
        Verdict::Equal(_) => 0,
        Verdict::Distinct(_) => 1,
        Verdict::Unknown(_) => 2,
    };
    if json {
        let mut obj = json!({
            "schema": JSON_SCHEMA,
            "command": "eq",
            "verdict": match &verdict {
                Verdict::Equal(_) => "equal",
                Verdict::Distinct(_) => "distinct",
                Verdict::Unknown(_) => "unknown",
            },
            "engine": verdict_engine(&verdict),
        });
        match &verdict {
            Verdict::Equal(EqualEvidence::Rewrite { rules, normal_form }) => {
                obj["rules"] = rules.iter().map(|r| r.to_string()).collect::<Vec<_>>().into();
                obj["normal_form"] = normal_form.to_string().into();
            }
            Verdict::Equal(EqualEvidence::Closure { instances, truncated }) => {
                obj["instances"] = (instances.len() as u64).into();
                obj["truncated"] = (*truncated).into();
            }
            Verdict::Distinct(DistinctEvidence::Model {
                algebra,
                assignment,
                lhs_value,
                rhs_value,
            }) => {
                obj["witness"] = json!({
                    "carrier_size": algebra.carrier_size(),
                    "tables": algebra.tables(),
                    "assignment": assignment,
                    "lhs_value": lhs_value,
                    "rhs_value": rhs_value,
                });
            }
            Verdict::Distinct(DistinctEvidence::NormalForms {
                lhs_normal,
                rhs_normal,
                ..
            }) => {
                obj["lhs_normal"] = lhs_normal.to_string().into();
                obj["rhs_normal"] = rhs_normal.to_string().into();
            }
            Verdict::Unknown(report) => {
                obj["notes"] = report.notes.clone().into();
            }
            Verdict::Equal(EqualEvidence::Syntactic) => {}
        }
        return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), code));
    }
    let mut out = String::new();
    match &verdict {
        Verdict::Equal(evidence) => {
            let _ = writeln!(out, "verdict: Equal");
            let _ = writeln!(out, "engine: {}", verdict_engine(&verdict));
            match evidence {
                EqualEvidence::Rewrite { rules, normal_form } => {
                    let _ = writeln!(out, "normal form: {normal_form}");
                    for rule in rules {
                        let _ = writeln!(out, "rule: {rule}");
                    }
                }
                EqualEvidence::Closure { instances, truncated } => {
                    let _ = writeln!(out, "instances: {}", instances.len());
                    if *truncated {
                        let _ = writeln!(out, "note: instance set truncated by budget");
                    }
                }
                EqualEvidence::Syntactic => {}
            }
        }
        Verdict::Distinct(evidence) => {
            let _ = writeln!(out, "verdict: Distinct");
            let _ = writeln!(out, "engine: {}", verdict_engine(&verdict));
            match evidence {
                DistinctEvidence::Model {
                    algebra,
                    assignment,
                    lhs_value,
                    rhs_value,
                } => {
                    let _ = writeln!(
                        out,
                        "separating assignment: {assignment:?} gives {lhs_value} vs {rhs_value}"
                    );
                    out.push_str(&print_alg(algebra, Some("witness"), None));
                }
                DistinctEvidence::NormalForms {
                    lhs_normal,
                    rhs_normal,
                    ..
                } => {
                    let _ = writeln!(out, "lhs normal form: {lhs_normal}");
                    let _ = writeln!(out, "rhs normal form: {rhs_normal}");
                }
            }
        }
        Verdict::Unknown(report) => {
            let _ = writeln!(out, "verdict: Unknown");
            for note in &report.notes {
                let _ = writeln!(out, "note: {note}");
            }
        }
    }
    Ok((out, code))
}

fn cmd_nf(pres: &Path, term: &str, ctx: usize, rounds: usize, json: bool) -> CmdResult {
    let (_, p) = load_algebraic(pres)?;
    let ctx = Context::new(ctx);
    let t = parse_cli_term(term, p.signature(), ctx)?;
    let outcome = normal_form(&p, &t, ctx, rounds)?;
    if json {
        let obj = match &outcome {
            NormalFormOutcome::Normal(nf) => json!({
                "schema": JSON_SCHEMA,
                "command": "nf",
                "available": true,
                "normal_form": nf.to_string(),
            }),
            NormalFormOutcome::Unavailable { reason } => json!({
                "schema": JSON_SCHEMA,
                "command": "nf",
                "available": false,
                "reason": reason,
            }),
        };
        let code = if matches!(outcome, NormalFormOutcome::Normal(_)) { 0 } else { 2 };
        return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), code));
    }
    match outcome {
        NormalFormOutcome::Normal(nf) => Ok((format!("normal form: {nf}\n"), 0)),
        NormalFormOutcome::Unavailable { reason } => {
            Ok((format!("unavailable: {reason}\n"), 2))
        }
    }
}

fn cmd_free(pres: &Path, vars: usize, depth: usize, count: bool, json: bool) -> CmdResult {
    let (_, p) = load_algebraic(pres)?;
    let terms = enumerate_terms(p.signature(), Context::new(vars), depth);
    if json {
        let mut obj = json!({
            "schema": JSON_SCHEMA,
            "command": "free",
            "count": terms.len(),
        });
        if !count {
            obj["terms"] = terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().into();
        }
        return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), 0));
    }
    if count {
        return Ok((format!("{}\n", terms.len()), 0));
    }
    let mut out = String::new();
    for t in &terms {
        let _ = writeln!(out, "{t}");
    }
    Ok((out, 0))
}

fn cmd_coeq(pres: &Path, eqs: &[String], output: &Option<PathBuf>) -> CmdResult {
    let (_, p) = load_algebraic(pres)?;
    let mut gamma = Signature::new();
    let mut lhs_terms = Vec::new();
    let mut rhs_terms = Vec::new();
    for spec in eqs {
        let eq = dsl::parse_equation(spec, p.signature())
            .map_err(|e| Failure::Parse(format!("<eq {spec:?}>"), e))?;
        gamma
            .add_op(eq.label().unwrap_or("c"), eq.context().size())
            .map_err(Failure::Engine)?;
        lhs_terms.push(eq.lhs().clone());
        rhs_terms.push(eq.rhs().clone());
    }
    let t = SignatureMorphism::new(gamma.clone(), p.signature().clone(), lhs_terms)?;
    let u = SignatureMorphism::new(gamma.clone(), p.signature().clone(), rhs_terms)?;
    let q = coequalizer(&gamma, &t, &u, &p)?;
    emit_pres("coequalizer", &q, output)
}

fn cmd_pushout(
    apex: &Path,
    left: &Path,
    right: &Path,
    left_map: &Path,
    right_map: &Path,
    budget: &EqualityBudget,
    output: &Option<PathBuf>,
) -> CmdResult {
    let (_, p0) = load_algebraic(apex)?;
    let (_, p1) = load_algebraic(left)?;
    let (_, p2) = load_algebraic(right)?;
    let lm_text = read_file(left_map)?;
    let lm = parse_map(&lm_text, p0.signature(), p1.signature())
        .map_err(|e| Failure::Parse(left_map.display().to_string(), e))?;
    let rm_text = read_file(right_map)?;
    let rm = parse_map(&rm_text, p0.signature(), p2.signature())
        .map_err(|e| Failure::Parse(right_map.display().to_string(), e))?;
    let left_arm = PresentationMorphism::new(p0.clone(), p1, lm, budget)?;
    let right_arm = PresentationMorphism::new(p0.clone(), p2, rm, budget)?;
    let po = pushout(&p0, &left_arm, &right_arm)?;
    emit_pres("pushout", &po.presentation, output)
}

fn cmd_verify_colim(
    objects: &[PathBuf],
    arrows: &[String],
    colimit: &Path,
    cocones: &[PathBuf],
    max_size: usize,
    budget: &EqualityBudget,
    json: bool,
) -> CmdResult {
    let mut object_pres = Vec::new();
    for path in objects {
        object_pres.push(load_algebraic(path)?.1);
    }
    let (_, claimed) = load_algebraic(colimit)?;
    if cocones.len() != object_pres.len() {
        return Err(Failure::Usage(format!(
            "{} cocone arrows for {} objects",
            cocones.len(),
            object_pres.len()
        )));
    }

    let mut diagram_arrows = Vec::new();
    for spec in arrows {
        let parts: Vec<&str> = spec.splitn(3, ':').collect();
        let [src, tgt, file] = parts[..] else {
            return Err(Failure::Usage(format!(
                "arrow {spec:?} is not SRC:TGT:FILE.map"
            )));
        };
        let src: usize = src
            .parse()
            .map_err(|_| Failure::Usage(format!("arrow source {src:?} is not an index")))?;
        let tgt: usize = tgt
            .parse()
            .map_err(|_| Failure::Usage(format!("arrow target {tgt:?} is not an index")))?;
        if src >= object_pres.len() || tgt >= object_pres.len() {
            return Err(Failure::Usage(format!(
                "arrow {spec:?} references an object outside 0..{}",
                object_pres.len()
            )));
        }
        let path = PathBuf::from(file);
        let text = read_file(&path)?;
        let morphism = parse_map(
            &text,
            object_pres[src].signature(),
            object_pres[tgt].signature(),
        )
        .map_err(|e| Failure::Parse(path.display().to_string(), e))?;
        diagram_arrows.push((src, tgt, morphism));
    }
    let diagram = MonadDiagram::new(object_pres.clone(), diagram_arrows, budget)?;

    let mut cocone_morphisms = Vec::new();
    for (path, obj) in cocones.iter().zip(&object_pres) {
        let text = read_file(path)?;
        let morphism = parse_map(&text, obj.signature(), claimed.signature())
            .map_err(|e| Failure::Parse(path.display().to_string(), e))?;
        cocone_morphisms.push(morphism);
    }

    let report = verify_algebraic(&diagram, &claimed, &cocone_morphisms, max_size, budget)?;
    let verdict = if report.verified() {
        "algebraic"
    } else if report.inconclusive() {
        "inconclusive"
    } else {
        "mismatch"
    };
    let code = match verdict {
        "algebraic" => 0,
        "mismatch" => 1,
        _ => 2,
    };
    if json {
        let obj = json!({
            "schema": JSON_SCHEMA,
            "command": "verify-colim",
            "verdict": verdict,
            "sizes": report.sizes.iter().map(|s| json!({
                "size": s.size,
                "colimit_models": s.colimit_models,
                "families": s.families,
                "matched": s.bijective(),
                "pairing": s.pairing,
            })).collect::<Vec<_>>(),
        });
        return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), code));
    }
    Ok((format!("{report}verdict: {verdict}\n"), code))
}

fn cmd_quiver_hom(
    pres: &Path,
    from: &str,
    to: &str,
    max_len: usize,
    count: bool,
    json: bool,
) -> CmdResult {
    let cp = load_quiver(pres)?;
    let x = cp.quiver().object_index(from)?;
    let y = cp.quiver().object_index(to)?;
    let paths = free_hom(cp.quiver(), x, y, max_len);
    if json {
        let obj = json!({
            "schema": JSON_SCHEMA,
            "command": "quiver-hom",
            "count": paths.len(),
            "paths": paths.iter().map(|p| p.display(cp.quiver())).collect::<Vec<_>>(),
        });
        return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), 0));
    }
    if count {
        return Ok((format!("{}\n", paths.len()), 0));
    }
    let mut out = String::new();
    for p in &paths {
        let _ = writeln!(out, "{}", p.display(cp.quiver()));
    }
    Ok((out, 0))
}

fn cmd_quiver_quotient(
    pres: &Path,
    from: &str,
    to: &str,
    max_len: usize,
    json: bool,
) -> CmdResult {
    let cp = load_quiver(pres)?;
    let x = cp.quiver().object_index(from)?;
    let y = cp.quiver().object_index(to)?;
    let quotient = quotient_hom(&cp, x, y, max_len, 100_000)?;
    if json {
        let obj = json!({
            "schema": JSON_SCHEMA,
            "command": "quiver-quotient",
            "classes": quotient.classes.iter().map(|c| {
                c.iter().map(|p| p.display(cp.quiver())).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "length_bound_hit": quotient.length_bound_hit,
            "unresolved": quotient.unresolved,
        });
        return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), 0));
    }
    let mut out = String::new();
    for (i, class) in quotient.classes.iter().enumerate() {
        let members: Vec<String> = class.iter().map(|p| p.display(cp.quiver())).collect();
        let _ = writeln!(out, "class {i}: {}", members.join(" = "));
    }
    let _ = writeln!(out, "classes: {}", quotient.classes.len());
    if quotient.unresolved.is_empty() {
        let _ = writeln!(out, "unresolved: none");
    } else {
        let pairs: Vec<String> = quotient
            .unresolved
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        let _ = writeln!(out, "unresolved: {} (length bound hit)", pairs.join(" "));
    }
    Ok((out, 0))
}

fn cmd_quiver_functor(pres: &Path, fun: &Path, max_len: usize, json: bool) -> CmdResult {
    let cp = load_quiver(pres)?;
    let text = read_file(fun)?;
    let data =
        parse_fun(&text, cp.quiver()).map_err(|e| Failure::Parse(fun.display().to_string(), e))?;
    // locate the first violated relation for the report
    let mut violated: Option<String> = None;
    for (idx, rel) in cp.relations().iter().enumerate() {
        if data.eval_path(&rel.lhs) != data.eval_path(&rel.rhs) {
            violated = Some(
                rel.label
                    .clone()
                    .unwrap_or_else(|| format!("relation {idx}")),
            );
            break;
        }
    }
    let ok = violated.is_none();
    if ok {
        // run the full check including the class-consistency sweep
        crate::quiver::check_functor(&cp, &data, max_len)?;
    }
    if json {
        let obj = json!({
            "schema": JSON_SCHEMA,
            "command": "quiver-functor",
            "functor": ok,
            "violated": violated,
        });
        return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), i32::from(!ok)));
    }
    match violated {
        None => Ok(("functor: ok\n".into(), 0)),
        Some(label) => Ok((format!("functor: violates {label}\n"), 1)),
    }
}

fn cmd_catalog(name: Option<&str>, json: bool) -> CmdResult {
    match name {
        None => {
            if json {
                let entries: Vec<Value> = catalog::names()
                    .iter()
                    .map(|n| {
                        let e = catalog::get(n).expect("listed name exists");
                        json!({"name": n, "doc": e.doc})
                    })
                    .collect();
                let obj = json!({
                    "schema": JSON_SCHEMA,
                    "command": "catalog",
                    "entries": entries,
                });
                return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), 0));
            }
            let mut out = String::new();
            for n in catalog::names() {
                let e = catalog::get(n).expect("listed name exists");
                let _ = writeln!(out, "{n}: {}", e.doc);
            }
            Ok((out, 0))
        }
        Some(name) => {
            let entry = catalog::get(name)?;
            let text = match &entry.content {
                catalog::EntryContent::Algebraic { presentation, .. } => {
                    print_presentation(&sanitize_name(name), presentation)
                }
                catalog::EntryContent::Quiver { presentation, .. } => {
                    print_category_presentation(presentation)
                }
            };
            if json {
                let obj = json!({
                    "schema": JSON_SCHEMA,
                    "command": "catalog",
                    "name": name,
                    "doc": entry.doc,
                    "pres": text,
                });
                return Ok((format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()), 0));
            }
            Ok((text, 0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CliOutcome {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        run_with_budget_env(&args, None)
    }

    fn write_temp(name: &str, content: &str) -> PathBuf {
        let dir = std::env::temp_dir().join("monpres-cli-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(name);
        std::fs::write(&path, content).unwrap();
        path
    }

    fn monoid_pres_file() -> PathBuf {
        let entry = catalog::get("monoid").unwrap();
        let text = print_presentation("monoid", entry.presentation().unwrap());
        write_temp("monoid.pres", &text)
    }

    #[test]
    fn models_count_only_matches_spec_format() {
        let path = monoid_pres_file();
        let out = run_args(&["models", path.to_str().unwrap(), "--max-size", "2", "--count-only"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.output, "size 1: 1, size 2: 4\n");
    }

    #[test]
    fn eq_axiom_is_equal_exit_zero() {
        let path = monoid_pres_file();
        let out = run_args(&[
            "eq",
            path.to_str().unwrap(),
            "mul(x0,mul(x1,x2))",
            "mul(mul(x0,x1),x2)",
            "--ctx",
            "3",
        ]);
        assert_eq!(out.code, 0, "{}", out.output);
        assert!(out.output.starts_with("verdict: Equal"));
    }

    #[test]
    fn eq_commutativity_distinct_exit_one() {
        let path = monoid_pres_file();
        let out = run_args(&[
            "eq",
            path.to_str().unwrap(),
            "mul(x0,x1)",
            "mul(x1,x0)",
            "--ctx",
            "2",
        ]);
        assert_eq!(out.code, 1, "{}", out.output);
        assert!(out.output.contains("verdict: Distinct"));
        assert!(out.output.contains("carrier 0 1 2"));
    }

    #[test]
    fn free_count_is_26() {
        let magma = catalog::get("magma").unwrap();
        let text = print_presentation("magma", magma.presentation().unwrap());
        let path = write_temp("magma.pres", &text);
        let out = run_args(&[
            "free",
            path.to_str().unwrap(),
            "--vars",
            "1",
            "--depth",
            "3",
            "--count",
        ]);
        assert_eq!(out.code, 0);
        assert_eq!(out.output, "26\n");
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let out = run_args(&["frobnicate"]);
        assert_eq!(out.code, 3);
    }

    #[test]
    fn missing_file_is_io_error() {
        let out = run_args(&["models", "/nonexistent/x.pres", "--max-size", "1"]);
        assert_eq!(out.code, 4);
    }

    #[test]
    fn parse_error_carries_position() {
        let path = write_temp("bad.pres", "signature X\nop f : 1\nequations\neq a (1) : x1 = x0\n");
        let out = run_args(&["models", path.to_str().unwrap(), "--max-size", "1"]);
        assert_eq!(out.code, 5);
        assert!(out.output.contains("4:12"), "{}", out.output);
    }

    #[test]
    fn env_budget_zero_gives_unknown() {
        let path = monoid_pres_file();
        let args: Vec<String> = [
            "eq",
            path.to_str().unwrap(),
            "mul(x0,x1)",
            "mul(x1,x0)",
            "--ctx",
            "2",
            "--completion-rounds",
            "0",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        let out = run_with_budget_env(&args, Some("inst-depth=0,model-size=0"));
        assert_eq!(out.code, 2, "{}", out.output);
        assert!(out.output.contains("verdict: Unknown"));
    }

    #[test]
    fn catalog_lists_and_exports() {
        let listing = run_args(&["catalog"]);
        assert_eq!(listing.code, 0);
        assert!(listing.output.contains("monoid"));
        let export = run_args(&["catalog", "monoid"]);
        assert_eq!(export.code, 0);
        assert!(export.output.starts_with("signature monoid"));
        let missing = run_args(&["catalog", "nope"]);
        assert_eq!(missing.code, 5);
    }

    #[test]
    fn deterministic_output_across_runs() {
        let path = monoid_pres_file();
        let args = ["models", path.to_str().unwrap(), "--max-size", "2"];
        let a = run_args(&args);
        let b = run_args(&args);
        assert_eq!(a.output, b.output);
        assert_eq!(a.code, b.code);
    }
}
