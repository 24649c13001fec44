//! Argument parsing and command execution.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use quasiprob_core::conditioning::{
    bayes_classical, bayes_stable, conditional_quasi, relative_preprob, relative_quasi, synchronize,
    total_quasi, CellData, FrameAssignment,
};
use quasiprob_core::demos::{run_demo, DEMO_NAMES};
use quasiprob_core::lattice::{Statement, Universe};
use quasiprob_core::verify::{self, check_frame_lemma, CheckReport, StatementTable};
use quasiprob_core::{Error, PreProb, SemValue};

use crate::report::{Format, Report, Section};
use crate::workspace::{LoadError, Workspace};

#[derive(Debug, Parser)]
#[command(name = "quasiprob", version, about = "Exact finite quasi-probability calculus")]
pub struct Cli {
    /// Workspace file (JSON).
    #[arg(long, global = true)]
    pub workspace: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Root seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SplitMode {
    /// Normalised part plus top-zero residuals.
    Canonical,
    /// One component per statement of the canonical frame.
    Frame,
    /// One component per basis symbol.
    Basis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConditionAs {
    Quasi,
    Preprob,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Value of a statement, or of every statement of a small universe.
    Eval {
        #[arg(long)]
        valuation: String,
        #[arg(long)]
        on: Option<String>,
    },
    /// Canonical semantic frame and dimension.
    Frames {
        #[arg(long)]
        valuation: String,
        #[arg(long)]
        include_top: bool,
    },
    /// Decomposition into dimension-one parts.
    Split {
        #[arg(long)]
        valuation: String,
        #[arg(long, value_enum, default_value = "canonical")]
        mode: SplitMode,
    },
    /// Relativisation to the statement given by `--on`.
    Condition {
        #[arg(long)]
        valuation: String,
        #[arg(long)]
        on: String,
        #[arg(long = "as", value_enum, default_value = "quasi")]
        as_: ConditionAs,
        /// Also report the conditional value of this statement.
        #[arg(long)]
        target: Option<String>,
    },
    /// `Q(target | on)` through Bayes' rule.
    Bayes {
        #[arg(long)]
        valuation: String,
        #[arg(long)]
        on: String,
        #[arg(long)]
        target: String,
    },
    /// Total rule over a named partition.
    Total {
        #[arg(long)]
        valuation: String,
        #[arg(long)]
        partition: String,
        #[arg(long)]
        on: String,
    },
    /// Pre-probability, quasi-probability, probability or invariant.
    Classify {
        #[arg(long)]
        valuation: String,
    },
    /// Verification suite, plus checks on one valuation if given.
    Check {
        #[arg(long)]
        valuation: Option<String>,
    },
    /// Reproduce a worked example; `all` runs every demo.
    Demo {
        #[arg(value_parser = demo_names())]
        name: String,
    },
    /// Run a query stored in the workspace.
    Query { name: String },
}

fn demo_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&'static str> = DEMO_NAMES.to_vec();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("{}: {error}", error.name())]
    Domain {
        error: Error,
        hint: Option<&'static str>,
    },
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError::Domain { error, hint: None }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain { .. } => 1,
            CliError::Usage(_) | CliError::Load(_) => 2,
        }
    }

    pub fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Domain { hint, .. } => *hint,
            _ => None,
        }
    }

    /// Module error name for domain errors.
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Domain { error, .. } => error.name(),
            CliError::Usage(_) => "Usage",
            CliError::Load(LoadError::Parse { .. }) => "Parse",
            CliError::Load(_) => "Invalid",
        }
    }
}

struct Context {
    workspace: Option<Workspace>,
    seed: u64,
}

impl Context {
    fn workspace(&self) -> Result<&Workspace, CliError> {
        self.workspace
            .as_ref()
            .ok_or_else(|| CliError::Usage("this command needs --workspace <file>".into()))
    }

    fn valuation(&self, name: &str) -> Result<&PreProb, CliError> {
        self.workspace()?
            .valuation(name)
            .ok_or_else(|| CliError::Usage(format!("no valuation named {name:?}")))
    }

    fn statement(&self, text: &str) -> Result<Statement, CliError> {
        Ok(self.workspace()?.universe.resolve(text)?)
    }
}

/// Loads the workspace named on the command line and runs the command.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let workspace = cli.workspace.as_ref().map(Workspace::load).transpose()?;
    run_with(cli, workspace)
}

/// Runs the command against an already loaded workspace.
pub fn run_with(cli: &Cli, workspace: Option<Workspace>) -> Result<Report, CliError> {
    let ctx = Context {
        workspace,
        seed: cli.seed,
    };
    execute(&cli.command, &ctx, true)
}

fn value_text(r: &PreProb, v: &SemValue) -> String {
    r.basis().format_value(v)
}

fn statements_to_show(u: &Universe) -> Vec<Statement> {
    if u.statement_count() <= 64 {
        u.enumerate().expect("small universe").collect()
    } else {
        (0..u.atom_count()).map(|i| u.atom(i)).chain([u.top()]).collect()
    }
}

fn execute(command: &Command, ctx: &Context, allow_query: bool) -> Result<Report, CliError> {
    match command {
        Command::Eval { valuation, on } => {
            let r = ctx.valuation(valuation)?;
            let u = r.universe();
            let targets = match on {
                Some(text) => vec![ctx.statement(text)?],
                None => statements_to_show(u),
            };
            let mut report = Report::new("eval");
            let mut s = Section::new(None, &["statement", "value"]);
            for t in targets {
                s.push([u.display(t), value_text(r, &r.eval(t)?)]);
            }
            report.section(s);
            Ok(report)
        }
        Command::Frames {
            valuation,
            include_top,
        } => {
            let r = ctx.valuation(valuation)?;
            let frame = r.canonical_frame(*include_top)?;
            let mut report = Report::new("frames");
            let mut s = Section::new(Some("canonical frame"), &["statement", "value"]);
            for (st, v) in frame.statements().iter().zip(frame.values()) {
                s.push([r.universe().display(*st), value_text(r, v)]);
            }
            report.section(s);
            let mut d = Section::new(None, &["property", "value"]);
            d.push(["semantic dimension".to_string(), r.semantic_dimension().to_string()]);
            report.section(d);
            Ok(report)
        }
        Command::Split { valuation, mode } => split(ctx.valuation(valuation)?, *mode),
        Command::Condition {
            valuation,
            on,
            as_,
            target,
        } => {
            let r = ctx.valuation(valuation)?;
            let t = ctx.statement(on)?;
            let target = target.as_deref().map(|s| ctx.statement(s)).transpose()?;
            condition(r, t, *as_, target)
        }
        Command::Bayes {
            valuation,
            on,
            target,
        } => {
            let r = ctx.valuation(valuation)?;
            let (ta, tb) = (ctx.statement(on)?, ctx.statement(target)?);
            let q = r.to_quasi()?;
            let u = r.universe();
            let value = if q.is_probability() {
                bayes_classical(&q, ta, tb)?
            } else {
                bayes_stable(&q, ta, tb)?
            };
            let mut report = Report::new("bayes");
            let mut s = Section::new(None, &["quantity", "value"]);
            let (a, b) = (u.display(ta), u.display(tb));
            s.push([format!("Q({a} | {b})"), conditional_quasi(&q, ta, tb)?.to_string()]);
            s.push([format!("Q({b})"), q.eval(tb)?.to_string()]);
            s.push([format!("Q({a})"), q.eval(ta)?.to_string()]);
            s.push([format!("Q({b} | {a}) by Bayes"), value.to_string()]);
            report.section(s);
            Ok(report)
        }
        Command::Total {
            valuation,
            partition,
            on,
        } => {
            let r = ctx.valuation(valuation)?;
            let cells = ctx
                .workspace()?
                .partition(partition)
                .ok_or_else(|| CliError::Usage(format!("no partition named {partition:?}")))?;
            let s = ctx.statement(on)?;
            total(r, cells, s)
        }
        Command::Classify { valuation } => {
            let r = ctx.valuation(valuation)?;
            let mut report = Report::new("classify");
            let mut s = Section::new(None, &["property", "value"]);
            s.push(["class", classify(r)]);
            s.push(["semantic dimension".to_string(), r.semantic_dimension().to_string()]);
            s.push(["value at ⊤".to_string(), value_text(r, &r.top_value())]);
            report.section(s);
            Ok(report)
        }
        Command::Check { valuation } => {
            let mut reports = verify::run_suite(ctx.seed)?;
            if let Some(name) = valuation {
                let r = ctx.valuation(name)?;
                let table = StatementTable::from_preprob(r)?;
                let seeds: Vec<u64> = (0..50).map(|k| ctx.seed.wrapping_add(k)).collect();
                for mut c in [
                    table.check_additivity(),
                    table.check_negation(),
                    table.check_levels(),
                    check_frame_lemma(r, &seeds),
                ] {
                    c.name = format!("{name}/{}", c.name);
                    reports.push(c);
                }
            }
            Ok(check_report(&reports))
        }
        Command::Demo { name } => {
            let names: Vec<&str> = if name == "all" {
                DEMO_NAMES.to_vec()
            } else {
                vec![name.as_str()]
            };
            let mut report = Report::new("demo");
            for n in names {
                let demo = run_demo(n)?;
                let mut s = Section::new(Some(&demo.name), &["quantity", "expected", "computed", "match"]);
                for row in &demo.rows {
                    let mark = if row.matches { "yes" } else { "NO" };
                    s.push([row.label.as_str(), &row.expected, &row.computed, mark]);
                }
                report.ok &= demo.passed();
                report.section(s);
            }
            Ok(report)
        }
        Command::Query { name } => {
            if !allow_query {
                return Err(CliError::Usage("a stored query cannot run another query".into()));
            }
            let argv = ctx
                .workspace()?
                .query(name)
                .ok_or_else(|| CliError::Usage(format!("no query named {name:?}")))?;
            let inner = Cli::try_parse_from(std::iter::once("quasiprob").chain(argv.iter().map(String::as_str)))
                .map_err(|e| CliError::Usage(format!("query {name:?}: {e}")))?;
            let inner_ctx = Context {
                workspace: ctx.workspace.clone(),
                seed: inner.seed,
            };
            execute(&inner.command, &inner_ctx, false)
        }
    }
}

fn split(r: &PreProb, mode: SplitMode) -> Result<Report, CliError> {
    let u = r.universe();
    let mut report = Report::new("split");
    let atoms = |p: &PreProb, heading: &str| {
        let mut s = Section::new(Some(heading), &["atom", "value"]);
        for (i, v) in p.atomic().iter().enumerate() {
            s.push([u.label(i).to_string(), value_text(r, v)]);
        }
        s.push(["⊤".to_string(), value_text(r, &p.top_value())]);
        s
    };
    match mode {
        SplitMode::Canonical => {
            let split = r.canonical_split()?;
            let mut s = Section::new(Some("normalised part Q"), &["atom", "value"]);
            for (i, q) in split.quasi.atomic().iter().enumerate() {
                s.push([u.label(i).to_string(), q.to_string()]);
            }
            s.push(["⊤".to_string(), split.quasi.eval(u.top())?.to_string()]);
            report.section(s);
            let mut t = Section::new(None, &["property", "value"]);
            t.push(["scale R(⊤)".to_string(), value_text(r, &split.top_value)]);
            report.section(t);
            for (k, res) in split.residuals.iter().enumerate() {
                report.section(atoms(res, &format!("residual {}", k + 1)));
            }
            report.ok = split.reconstruct(r)? == *r;
        }
        SplitMode::Frame => {
            let frame = r.canonical_frame(!r.top_value().is_zero())?;
            let comps = r.components_frame(&frame)?;
            for (st, c) in frame.statements().iter().zip(&comps) {
                report.section(atoms(c, &format!("component along {}", u.display(*st))));
            }
            report.ok = sum(r, &comps)? == *r;
        }
        SplitMode::Basis => {
            let comps = r.components_basis();
            for (j, c) in comps.iter().enumerate() {
                report.section(atoms(c, &format!("component along {}", r.basis().symbol(j))));
            }
            report.ok = sum(r, &comps)? == *r;
        }
    }
    Ok(report)
}

fn sum(r: &PreProb, parts: &[PreProb]) -> Result<PreProb, Error> {
    parts
        .iter()
        .try_fold(PreProb::zero(r.universe().clone(), r.basis().clone()), |acc, p| acc.checked_add(p))
}

fn condition(r: &PreProb, t: Statement, mode: ConditionAs, target: Option<Statement>) -> Result<Report, CliError> {
    let u = r.universe();
    let mut report = Report::new("condition");
    let mut s = Section::new(Some(&format!("relative to {}", u.display(t))), &["atom", "value"]);
    match mode {
        ConditionAs::Quasi => {
            let q = r.to_quasi()?;
            let local = relative_quasi(&q, t).map_err(|error| match error {
                Error::RelativisationUnstable => CliError::Domain {
                    error,
                    hint: Some("use --as preprob"),
                },
                other => other.into(),
            })?;
            for (i, v) in t.atoms().zip(local.values()) {
                s.push([u.label(i).to_string(), v.to_string()]);
            }
            report.section(s);
            if let Some(target) = target {
                let mut c = Section::new(None, &["quantity", "value"]);
                c.push([
                    format!("Q({} | {})", u.display(target), u.display(t)),
                    local.conditional(target)?.to_string(),
                ]);
                report.section(c);
            }
        }
        ConditionAs::Preprob => {
            let local = relative_preprob(r, t)?;
            for (i, v) in t.atoms().zip(local.values()) {
                s.push([u.label(i).to_string(), value_text(r, v)]);
            }
            s.push([u.display(t), value_text(r, &local.top_value())]);
            report.section(s);
            if let Some(target) = target {
                let mut c = Section::new(None, &["quantity", "value"]);
                c.push([
                    format!("R({} | {})", u.display(target), u.display(t)),
                    value_text(r, &local.conditional(target)?),
                ]);
                report.section(c);
            }
        }
    }
    Ok(report)
}

fn total(r: &PreProb, cells: &quasiprob_core::Partition, s: Statement) -> Result<Report, CliError> {
    let u = r.universe();
    let mut report = Report::new("total");
    let mut sec = Section::new(
        Some(&format!("total rule for {}", u.display(s))),
        &["cell", "kind", "contribution"],
    );
    let (total, direct) = if r.semantic_dimension() <= 1 && !r.top_value().is_zero() {
        let q = r.to_quasi()?;
        let data = cells
            .cells()
            .iter()
            .map(|&c| CellData::derive(&q, c))
            .collect::<Result<Vec<_>, _>>()?;
        for d in &data {
            sec.push([u.display(d.cell()), d.kind().to_string(), d.contribution(s)?.to_string()]);
        }
        (total_quasi(cells, &data, s)?.to_string(), q.eval(s)?.to_string())
    } else {
        let mut acc = r.basis().zero();
        for &c in cells.cells() {
            let local = relative_preprob(r, c)?;
            let frame = FrameAssignment::from_ambient(&local, r)?;
            let part = synchronize(&local, &frame)?.conditional(s)?;
            sec.push([u.display(c), "pre-probability".to_string(), value_text(r, &part)]);
            acc.add_assign(&part)?;
        }
        (value_text(r, &acc), value_text(r, &r.eval(s)?))
    };
    report.section(sec);
    let mut t = Section::new(None, &["quantity", "value"]);
    t.push(["total", total.as_str()]);
    t.push(["direct", direct.as_str()]);
    report.ok = total == direct;
    report.section(t);
    Ok(report)
}

/// `invariant`, `probability`, `quasi-probability` or `pre-probability`.
pub fn classify(r: &PreProb) -> &'static str {
    if r.is_zero() {
        return "invariant";
    }
    match r.to_quasi() {
        Ok(q) if q.is_probability() => "probability",
        Ok(_) => "quasi-probability",
        Err(_) => "pre-probability",
    }
}

fn check_report(reports: &[CheckReport]) -> Report {
    let mut report = Report::new("check");
    let mut s = Section::new(None, &["check", "verdict", "cases", "note"]);
    for c in reports {
        let verdict = if c.passed() { "pass" } else { "FAIL" };
        s.push([
            c.name.clone(),
            verdict.to_string(),
            c.cases_run.to_string(),
            c.note.clone().unwrap_or_default(),
        ]);
    }
    report.ok = reports.iter().all(CheckReport::passed);
    report.section(s);
    report
}
