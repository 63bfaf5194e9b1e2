//! The `adjforge` command line.
//!
//! Exit codes: `check` 0 valid / 1 law violation / 2 input error;
//! `battery` 0 conditions agree / 1 conditions disagree / 2 input error;
//! `star` 0 star-on-window / 1 refuted / 2 input error / 3 undecided;
//! `report` 0 every certificate re-validates / 1 some do not / 2 input error.
//! With `--expect-verdict`, `battery` and `star` exit 0 on a match and 1
//! otherwise. Budget exhaustion exits 3.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::adjunctions::json::AdjunctionFile;
use crate::adjunctions::{pair_battery, star_pair, Comparison};
use crate::algmod::json::{AlgebraFile, BimoduleFile, ModuleFile};
use crate::algmod::{enumerate_modules, Bimodule, FqAlgebra, LeftModule, DEFAULT_BUDGET};
use crate::error::{Error, Result, Violation};
use crate::fincat::json::{read_json, CategoryFile, FunctorFile, Loader};
use crate::fincat::DEFAULT_MORPHISM_BUDGET;
use crate::monadics::json::{ComonadFile, MonadFile};
use crate::monadics::{comonad_battery, monad_battery, CoEilenbergMoore, EilenbergMoore};
use crate::report::Battery;
use crate::starlab::{revalidate_report, star_report, star_verdict, StarContext, StarStatus};

#[derive(Debug, Parser)]
#[command(name = "adjforge", version, about = "Idempotent monads, adjunctions and star-modules on finite data")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate one JSON file against the laws of its kind.
    Check { kind: CheckKind, path: PathBuf },
    /// Evaluate an idempotence battery.
    Battery {
        kind: BatteryKind,
        path: PathBuf,
        /// Cap on morphisms of the constructed module categories.
        #[arg(long, default_value_t = DEFAULT_MORPHISM_BUDGET)]
        budget: usize,
        /// all-true, all-false or disagree.
        #[arg(long)]
        expect_verdict: Option<String>,
    },
    /// Decide the star property of `P` on windows of small modules.
    Star {
        algebra: PathBuf,
        /// A bimodule file, a module file (S = End_R(P)) or `auto-end` (P = R).
        p: String,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// star-on-window, refuted or undecided.
        #[arg(long)]
        expect_verdict: Option<String>,
    },
    /// List the modules of dimension at most `--max-dim` up to isomorphism.
    Enumerate {
        algebra: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Re-validate every certificate of a `star` report.
    Report { path: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Category,
    Functor,
    Monad,
    Comonad,
    Adjunction,
    Algebra,
    Module,
    Bimodule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BatteryKind {
    Monad,
    Comonad,
    Pair,
}

/// A finished command: its report and exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub json: Value,
    pub text: String,
}

impl Outcome {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => 3,
        _ => 2,
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        code: error_code(e),
        json: json!({ "error": e.to_string() }),
        text: String::new(),
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = execute(&config.command).unwrap_or_else(|e| failure(&e));
    let rendered = outcome.render(config.format);
    let written = match &config.out {
        Some(path) => std::fs::write(path, rendered).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        }),
        None => stdout.write_all(rendered.as_bytes()).map_err(|source| Error::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    if outcome.code != 0 {
        if let Some(e) = outcome.json.get("error").and_then(Value::as_str) {
            let _ = writeln!(stderr, "error: {e}");
        }
    }
    outcome.code
}

pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Check { kind, path } => cmd_check(*kind, path),
        Command::Battery {
            kind,
            path,
            budget,
            expect_verdict,
        } => cmd_battery(*kind, path, *budget, expect_verdict.as_deref()),
        Command::Star {
            algebra,
            p,
            max_dim,
            budget,
            expect_verdict,
        } => cmd_star(algebra, p, *max_dim, *budget, expect_verdict.as_deref()),
        Command::Enumerate {
            algebra,
            max_dim,
            budget,
        } => cmd_enumerate(algebra, *max_dim, *budget),
        Command::Report { path } => cmd_report(path),
    }
}

fn violations_outcome(kind: CheckKind, violations: Vec<Violation>) -> Outcome {
    let name = format!("{kind:?}").to_lowercase();
    let mut text = String::new();
    if violations.is_empty() {
        let _ = writeln!(text, "{name}: valid");
    } else {
        let _ = writeln!(text, "{name}: {} violation(s)", violations.len());
        for v in &violations {
            let _ = writeln!(text, "  {v}");
        }
    }
    Outcome {
        code: i32::from(!violations.is_empty()),
        json: json!({ "kind": name, "valid": violations.is_empty(), "violations": violations }),
        text,
    }
}

fn load_algebra(path: &Path) -> Result<Arc<FqAlgebra>> {
    let file: AlgebraFile = read_json(path)?;
    Ok(Arc::new(file.build_unchecked()?))
}

pub fn cmd_check(kind: CheckKind, path: &Path) -> Result<Outcome> {
    let loader = Loader::for_file(path);
    let violations = match kind {
        CheckKind::Category => {
            let file: CategoryFile = read_json(path)?;
            file.build()?.validate()
        }
        CheckKind::Functor => {
            let file: FunctorFile = read_json(path)?;
            let f = loader.functor(&file, None, None)?;
            let mut out = f.source().validate();
            out.extend(f.target().validate());
            out.extend(f.validate());
            out
        }
        CheckKind::Monad => {
            let file: MonadFile = read_json(path)?;
            let m = file.build(&loader)?;
            let mut out = m.category().validate();
            out.extend(m.validate());
            out
        }
        CheckKind::Comonad => {
            let file: ComonadFile = read_json(path)?;
            let s = file.build(&loader)?;
            let mut out = s.category().validate();
            out.extend(s.validate());
            out
        }
        CheckKind::Adjunction => {
            let file: AdjunctionFile = read_json(path)?;
            let a = file.build(&loader)?;
            let mut out = a.a().validate();
            out.extend(a.b().validate());
            out.extend(a.validate());
            out
        }
        CheckKind::Algebra => load_algebra(path)?.violations(),
        CheckKind::Module => {
            let file: ModuleFile = read_json(path)?;
            let m = file.build_unchecked(&loader)?;
            let mut out = m.algebra().violations();
            out.extend(m.violations());
            out
        }
        CheckKind::Bimodule => {
            let file: BimoduleFile = read_json(path)?;
            let b = file.build_unchecked(&loader)?;
            let mut out = b.left_algebra().violations();
            out.extend(b.right_algebra().violations());
            out.extend(b.violations());
            out
        }
    };
    Ok(violations_outcome(kind, violations))
}

fn expectation(verdict: &str, expected: Option<&str>, natural: i32) -> i32 {
    match expected {
        Some(e) => i32::from(e != verdict),
        None => natural,
    }
}

pub fn cmd_battery(kind: BatteryKind, path: &Path, budget: usize, expected: Option<&str>) -> Result<Outcome> {
    let loader = Loader::for_file(path);
    let (battery, extra): (Battery, Value) = match kind {
        BatteryKind::Monad => {
            let file: MonadFile = read_json(path)?;
            let m = file.build(&loader)?;
            crate::error::check(m.category().validate())?;
            m.ensure_valid()?;
            (monad_battery(&m, &EilenbergMoore::with_budget(&m, budget)?)?, Value::Null)
        }
        BatteryKind::Comonad => {
            let file: ComonadFile = read_json(path)?;
            let s = file.build(&loader)?;
            crate::error::check(s.category().validate())?;
            s.ensure_valid()?;
            (comonad_battery(&s, &CoEilenbergMoore::with_budget(&s, budget)?)?, Value::Null)
        }
        BatteryKind::Pair => {
            let file: AdjunctionFile = read_json(path)?;
            let a = file.build(&loader)?;
            crate::error::check(a.a().validate())?;
            crate::error::check(a.b().validate())?;
            a.ensure_valid()?;
            let report = pair_battery(&a, &Comparison::with_budget(&a, budget)?)?;
            let star = star_pair(&a)?;
            let extra = json!({
                "unit_extremal_epi": report.unit_extremal_epi,
                "counit_extremal_mono": report.counit_extremal_mono,
                "star_pair": star.star,
                "star_closure": star.closure.as_ref().map(Battery::to_json),
            });
            (report.battery, extra)
        }
    };
    let verdict = battery.verdict().to_string();
    let code = expectation(&verdict, expected, i32::from(!battery.agrees()));
    let mut json = json!({ "battery": battery.to_json(), "verdict": verdict });
    if !extra.is_null() {
        json["pair"] = extra;
    }
    let text = battery.to_string();
    Ok(Outcome { code, json, text })
}

fn same_structure(a: &FqAlgebra, b: &FqAlgebra) -> bool {
    a.field() == b.field() && a.dim() == b.dim() && a.constants() == b.constants() && a.unit() == b.unit()
}

/// Loads `P` for the `star` command: the literal `auto-end`, a bimodule file
/// or a module file.
fn load_p(r: &Arc<FqAlgebra>, p: &str) -> Result<Bimodule> {
    if p == "auto-end" {
        return Ok(Bimodule::regular(r));
    }
    let path = Path::new(p);
    let loader = Loader::for_file(path);
    let raw: Value = read_json(path)?;
    let bimodule = if raw.get("right_algebra").is_some() {
        let file: BimoduleFile = serde_json::from_value(raw)?;
        let b = file.build_unchecked(&loader)?;
        if !same_structure(b.left_algebra(), r) {
            return Err(Error::shape("P is not a module over the given algebra"));
        }
        Bimodule::unchecked(LeftModule::unchecked(r, b.left().action().to_vec())?, b.right_algebra(), b.right_action().to_vec())?
    } else {
        let file: ModuleFile = serde_json::from_value(raw)?;
        let m = file.build_unchecked(&loader)?;
        if !same_structure(m.algebra(), r) {
            return Err(Error::shape("P is not a module over the given algebra"));
        }
        let m = LeftModule::unchecked(r, m.action().to_vec())?;
        crate::error::check(m.violations())?;
        crate::algmod::endomorphism_algebra(&m)?.1
    };
    crate::error::check(bimodule.right_algebra().violations())?;
    crate::error::check(bimodule.violations())?;
    Ok(bimodule)
}

pub fn cmd_star(algebra: &Path, p: &str, max_dim: usize, budget: u64, expected: Option<&str>) -> Result<Outcome> {
    let r = load_algebra(algebra)?;
    crate::error::check(r.violations())?;
    let bimodule = load_p(&r, p)?;
    let ctx = StarContext::new(bimodule, max_dim, budget)?;
    let verdict = star_verdict(&ctx)?;
    let json = star_report(&ctx, &verdict)?;
    let natural = match verdict.status {
        StarStatus::StarOnWindow => 0,
        StarStatus::Refuted => 1,
        StarStatus::Undecided => 3,
    };
    let status = verdict.status.to_string();
    let code = expectation(&status, expected, natural);
    let mut text = String::new();
    let _ = writeln!(text, "verdict: {status} (window dim {})", verdict.window_dim);
    let _ = writeln!(
        text,
        "windows: {} R-modules, {} S-modules, complete: {}",
        ctx.r_window().modules.len(),
        ctx.s_window().modules.len(),
        verdict.windows_complete
    );
    let _ = write!(text, "{}", verdict.battery);
    if let Some(c) = &verdict.closure {
        let _ = write!(text, "{c}");
    }
    for c in &verdict.certificates {
        let kind = serde_json::to_value(c.kind).ok();
        let kind = kind.as_ref().and_then(Value::as_str).unwrap_or_default();
        let _ = writeln!(text, "certificate: {kind} on a module of dim {}", c.module.dim);
    }
    Ok(Outcome { code, json, text })
}

pub fn cmd_enumerate(algebra: &Path, max_dim: usize, budget: u64) -> Result<Outcome> {
    let r = load_algebra(algebra)?;
    crate::error::check(r.violations())?;
    let window = enumerate_modules(&r, max_dim, budget)?;
    let modules: Vec<Value> = window
        .modules
        .iter()
        .map(|m| {
            let file = ModuleFile::from_module(m);
            json!({ "dim": file.dim, "action": file.action })
        })
        .collect();
    let mut counts = vec![0usize; max_dim + 1];
    for m in &window.modules {
        counts[m.dim()] += 1;
    }
    let mut text = String::new();
    for (d, c) in counts.iter().enumerate() {
        let _ = writeln!(text, "dim {d}: {c}");
    }
    if !window.complete {
        let _ = writeln!(text, "incomplete: {}", window.gaps.join("; "));
    }
    Ok(Outcome {
        code: if window.complete { 0 } else { 3 },
        json: json!({
            "algebra": AlgebraFile::from_algebra(&r),
            "max_dim": max_dim,
            "complete": window.complete,
            "gaps": window.gaps,
            "counts": counts,
            "modules": modules,
        }),
        text,
    })
}

pub fn cmd_report(path: &Path) -> Result<Outcome> {
    let report: Value = read_json(path)?;
    let flags = revalidate_report(&report)?;
    let verdict = report["verdict"].as_str().unwrap_or_default().to_string();
    let consistent = (verdict == "refuted") == !flags.is_empty();
    let valid = flags.iter().filter(|&&f| f).count();
    let ok = consistent && valid == flags.len();
    Ok(Outcome {
        code: i32::from(!ok),
        json: json!({
            "verdict": verdict,
            "certificates": flags.len(),
            "revalidated": flags,
            "consistent": consistent,
        }),
        text: format!(
            "verdict: {verdict}\ncertificates: {valid}/{} re-validate\nconsistent: {consistent}\n",
            flags.len()
        ),
    })
}

/// Sizes rayon's global pool from `ADJFORGE_THREADS` when it is set.
pub fn configure_threads() {
    if let Some(n) = std::env::var("ADJFORGE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}
