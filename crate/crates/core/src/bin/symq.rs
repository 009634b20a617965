use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use symq::catalog::{run_catalog, CatalogOptions, CatalogRun};
use symq::group::{FiniteGroup, GroupAutomorphism, GroupError};
use symq::io::{format_table, parse_table};
use symq::quandle::{galex, validate_quandle, FiniteQuandle, QuandleError};
use symq::report::{emit, to_json, Format, Report, TorusReport};
use symq::spec::{parse_aut_spec, parse_group_spec, SpecError};
use symq::symq::{
    classify_sq_bruteforce, classify_sq_theorem, cross_check_sq, enumerate_good_involutions,
    Limits, SymqError,
};
use symq::torus::torus_summary;
use symq::{Budget, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(
    name = "symq",
    version,
    about = "Good involutions and symmetric quandles of finite quandles"
)]
struct Cli {
    /// Node budget for each exhaustive search.
    #[arg(long, global = true, env = "SYMQ_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Fill elapsed_ms in reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build or check a group.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Build or check a quandle.
    #[command(subcommand)]
    Quandle(QuandleCmd),
    /// Good involutions and symmetric quandle classes.
    #[command(subcommand)]
    Sq(SqCmd),
    /// Cross-check every automorphism of every small group in the sweep.
    Catalog {
        #[arg(long)]
        max_order: usize,
        /// Also include alternating:4 and symmetric:4.
        #[arg(long)]
        include_large: bool,
    },
    /// Classes of 2-torsion points of the n-torus under transvections.
    Torus {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Print the Cayley table of a group spec.
    Build {
        #[arg(long)]
        group: String,
    },
    /// Validate a Cayley table file.
    Check {
        #[arg(long)]
        table: PathBuf,
    },
}

#[derive(Subcommand)]
enum QuandleCmd {
    /// Properties of GAlex(G, phi).
    Galex {
        #[command(flatten)]
        input: GalexInput,
        /// Also write the operation table to this file.
        #[arg(long)]
        table_out: Option<PathBuf>,
    },
    /// Validate a quandle table file and report its properties.
    Check {
        #[arg(long)]
        table: PathBuf,
    },
}

#[derive(Args)]
struct GalexInput {
    #[arg(long)]
    group: String,
    #[arg(long)]
    aut: String,
}

#[derive(Args)]
struct QuandleInput {
    #[arg(long, requires = "aut", conflicts_with = "table")]
    group: Option<String>,
    #[arg(long, requires = "group")]
    aut: Option<String>,
    /// Quandle table file instead of a GAlex spec.
    #[arg(long, required_unless_present = "group")]
    table: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Bruteforce,
    Theorem,
}

#[derive(Subcommand)]
enum SqCmd {
    /// List all good involutions.
    Enumerate {
        #[command(flatten)]
        input: QuandleInput,
    },
    /// Symmetric quandle classes by one method.
    Classify {
        #[command(flatten)]
        input: QuandleInput,
        #[arg(long, value_enum, default_value_t = Method::Bruteforce)]
        method: Method,
    },
    /// Both methods, compared.
    Crosscheck {
        #[command(flatten)]
        input: GalexInput,
    },
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
    fn hypothesis(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
    fn inconsistent(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Group(g) => g.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<QuandleError> for Failure {
    fn from(e: QuandleError) -> Self {
        match e {
            QuandleError::Inconsistent(_) => Failure::inconsistent(e.to_string()),
            QuandleError::NotGalexOrigin | QuandleError::NotConnected(_) => {
                Failure::hypothesis(e.to_string())
            }
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<SymqError> for Failure {
    fn from(e: SymqError) -> Self {
        match e {
            SymqError::HypothesisNotMet(_) => Failure::hypothesis(e.to_string()),
            SymqError::Inconsistent(_) => Failure::inconsistent(e.to_string()),
            SymqError::Quandle(q) => q.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

struct Ctx {
    format: Format,
    out: Option<PathBuf>,
    limits: Limits,
    timing: bool,
    start: Instant,
}

impl Ctx {
    fn write(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit<T: Serialize>(&self, value: &T) -> Result<(), Failure> {
        self.write(&emit(value, self.format))
    }

    fn emit_report(&self, mut report: Report) -> Result<(), Failure> {
        if self.timing {
            report.elapsed_ms = Some(self.start.elapsed().as_millis() as u64);
        }
        self.emit(&report)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_quandle(path: &Path) -> Result<FiniteQuandle, Failure> {
    let rows = parse_table(&read(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok(validate_quandle(&rows)?)
}

struct Galex {
    spec: String,
    group: FiniteGroup,
    phi: GroupAutomorphism,
    quandle: FiniteQuandle,
}

fn build_galex(input: &GalexInput) -> Result<Galex, Failure> {
    let spec = parse_group_spec(&input.group)?;
    let group = spec.build()?;
    let phi = parse_aut_spec(&input.aut, &group)?;
    let quandle = galex(&group, &phi)?;
    Ok(Galex {
        spec: spec.to_string(),
        group,
        phi,
        quandle,
    })
}

enum Input {
    Galex(Galex),
    Table(FiniteQuandle),
}

impl Input {
    fn load(input: &QuandleInput) -> Result<Self, Failure> {
        match (&input.group, &input.aut, &input.table) {
            (Some(group), Some(aut), None) => Ok(Input::Galex(build_galex(&GalexInput {
                group: group.clone(),
                aut: aut.clone(),
            })?)),
            (None, None, Some(path)) => Ok(Input::Table(load_quandle(path)?)),
            _ => Err(Failure::usage("give either --group and --aut, or --table")),
        }
    }

    fn quandle(&self) -> &FiniteQuandle {
        match self {
            Input::Galex(g) => &g.quandle,
            Input::Table(q) => q,
        }
    }

    fn report(&self) -> Report {
        match self {
            Input::Galex(g) => Report::for_galex(&g.quandle, &g.spec, &g.group, &g.phi),
            Input::Table(q) => Report::for_quandle(q),
        }
    }
}

#[derive(Serialize)]
struct GroupReport {
    group_spec: Option<String>,
    identity: usize,
    is_abelian: bool,
    order: usize,
    table: Vec<Vec<usize>>,
    tool_version: String,
}

impl GroupReport {
    fn new(spec: Option<String>, g: &FiniteGroup) -> Self {
        GroupReport {
            group_spec: spec,
            identity: g.identity(),
            is_abelian: g.is_abelian(),
            order: g.order(),
            table: g.table(),
            tool_version: symq::report::TOOL_VERSION.to_string(),
        }
    }
}

fn catalog_text(run: &CatalogRun) -> String {
    let mut out = String::new();
    for r in &run.entries {
        let count = |v: Option<usize>| v.map_or("-".to_string(), |c| c.to_string());
        out.push_str(&format!(
            "{} aut={:?} kei={} connected={} involutions={} classes={}/{} agreement={}\n",
            r.group_spec.as_deref().unwrap_or("-"),
            r.automorphism.as_deref().unwrap_or(&[]),
            r.is_kei,
            r.is_connected,
            count(r.good_involutions.as_ref().map(Vec::len)),
            count(r.sq_classes_bruteforce),
            count(r.sq_classes_theorem),
            r.agreement.map_or("-".to_string(), |a| a.to_string()),
        ));
    }
    let s = &run.summary;
    out.push_str(&format!(
        "summary: groups={} entries={} kei={} hypothesis_met={} agreement_failures={} existence_mismatches={} incomplete={}\n",
        s.groups, s.entries, s.kei_entries, s.hypothesis_met, s.agreement_failures, s.existence_mismatches, s.incomplete
    ));
    out
}

fn run(cli: Cli) -> Result<(), Failure> {
    let ctx = Ctx {
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        },
        out: cli.out,
        limits: Limits {
            budget: Budget::new(cli.budget),
            ..Limits::default()
        },
        timing: cli.timing,
        start: Instant::now(),
    };
    match cli.command {
        Command::Group(GroupCmd::Build { group }) => {
            let spec = parse_group_spec(&group)?;
            let g = spec.build()?;
            match ctx.format {
                Format::Text => ctx.write(&format_table(&g.table())),
                Format::Json => ctx.emit(&GroupReport::new(Some(spec.to_string()), &g)),
            }
        }
        Command::Group(GroupCmd::Check { table }) => {
            let rows = parse_table(&read(&table)?)
                .map_err(|e| Failure::usage(format!("{}: {e}", table.display())))?;
            let g = symq::group::validate_group(&rows)?;
            ctx.emit(&GroupReport::new(None, &g))
        }
        Command::Quandle(QuandleCmd::Galex { input, table_out }) => {
            let g = build_galex(&input)?;
            if let Some(path) = table_out {
                std::fs::write(&path, format_table(&g.quandle.table()))
                    .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            }
            ctx.emit_report(Report::for_galex(&g.quandle, &g.spec, &g.group, &g.phi))
        }
        Command::Quandle(QuandleCmd::Check { table }) => {
            ctx.emit_report(Report::for_quandle(&load_quandle(&table)?))
        }
        Command::Sq(SqCmd::Enumerate { input }) => {
            let input = Input::load(&input)?;
            let mut report = input.report();
            report.good_involutions =
                Some(enumerate_good_involutions(input.quandle(), &ctx.limits)?);
            ctx.emit_report(report)
        }
        Command::Sq(SqCmd::Classify { input, method }) => {
            let input = Input::load(&input)?;
            let mut report = input.report();
            let classification = match (method, &input) {
                (Method::Bruteforce, _) => classify_sq_bruteforce(input.quandle(), &ctx.limits)?,
                (Method::Theorem, Input::Galex(g)) => {
                    classify_sq_theorem(&g.group, &g.phi, &ctx.limits)?
                }
                (Method::Theorem, Input::Table(_)) => {
                    return Err(Failure::hypothesis(
                        "the orbit method needs a GAlex quandle given by --group and --aut",
                    ))
                }
            };
            report.absorb(classification);
            ctx.emit_report(report)
        }
        Command::Sq(SqCmd::Crosscheck { input }) => {
            let g = build_galex(&input)?;
            let mut report = Report::for_galex(&g.quandle, &g.spec, &g.group, &g.phi);
            report.absorb(cross_check_sq(&g.group, &g.phi, &ctx.limits)?);
            let disagree = report.agreement == Some(false);
            ctx.emit_report(report)?;
            if disagree {
                return Err(Failure::inconsistent(
                    "brute-force and orbit classifications disagree",
                ));
            }
            Ok(())
        }
        Command::Catalog {
            max_order,
            include_large,
        } => {
            let run = run_catalog(&CatalogOptions {
                max_order,
                include_large,
                limits: ctx.limits,
                timing: ctx.timing,
            });
            match ctx.format {
                Format::Json => ctx.write(&to_json(&run))?,
                Format::Text => ctx.write(&catalog_text(&run))?,
            }
            if !run.is_consistent() {
                return Err(Failure::inconsistent(format!(
                    "{} agreement failure(s), {} existence mismatch(es)",
                    run.summary.agreement_failures, run.summary.existence_mismatches
                )));
            }
            Ok(())
        }
        Command::Torus { n } => {
            let summary = torus_summary(n).map_err(|e| match e {
                symq::torus::TorusError::ModelInconsistency(_) => {
                    Failure::inconsistent(e.to_string())
                }
                other => Failure::usage(other.to_string()),
            })?;
            ctx.emit(&TorusReport::from(summary))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("symq: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
