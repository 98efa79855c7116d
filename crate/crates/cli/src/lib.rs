//! The `blocksys` command line. [`run`] does all the work so it can be
//! driven in-process by tests; `main` only wires it to the real streams.

use std::io::Write;
use std::path::{Path, PathBuf};

use blocksys_core::coalgebra::format::{parse_structure, write_structure, FormatError};
use blocksys_core::coalgebra::{corpus, AnyStructure, CorpusError, CorpusItem, FieldChoice, FiniteGroup, Structure};
use blocksys_core::filtration::{analyze, AnalysisError};
use blocksys_core::report::{self, AnalysisSummary};
use blocksys_core::rules::{verify_all, Verdict as RuleVerdict};
use blocksys_core::solver::{
    feasible_with, no_skew_primitive_guard, sweep_with, theorem1_bound, SearchOrder, SolverError, SolverOptions,
};
use blocksys_core::with_structure;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "blocksys", version, about = "Block systems of coalgebras and block-profile feasibility")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Machine,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of a structure-constant file.
    Validate { file: PathBuf },
    /// Coradical filtration, simple subcoalgebras and block system.
    Analyze { file: PathBuf },
    /// Check the structural rules on a Hopf algebra file.
    VerifyRules { file: PathBuf },
    /// Lower bound on the dimension for a given group order.
    Bound {
        #[arg(long)]
        r: u64,
    },
    /// Decide whether a block profile of total N with |G| = r exists.
    Feasible {
        #[arg(long)]
        dim: u64,
        #[arg(long)]
        group_order: u64,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Feasibility for N = t·r over t = 1..=t_max.
    Sweep {
        #[arg(long)]
        group_order: u64,
        #[arg(long)]
        t_max: u64,
        /// Worker threads; output does not depend on this.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Write a built-in example as a structure-constant file.
    Corpus {
        #[arg(value_enum)]
        name: CorpusName,
        /// Parameter of taft(n).
        #[arg(long)]
        n: Option<usize>,
        /// Group for the group algebras: cN, cyclic:N or s3.
        #[arg(long)]
        group: Option<String>,
        /// Scalar field for group algebras.
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct SolverArgs {
    /// Require d·r | B(n,d,1) only at level 1.
    #[arg(long)]
    pub strict_level1_divisibility: bool,
    /// Apply S6 only to the smallest level l.
    #[arg(long)]
    pub s6_min_only: bool,
    #[arg(long)]
    pub no_s6: bool,
    #[arg(long)]
    pub no_s7: bool,
    #[arg(long)]
    pub no_s8: bool,
    #[arg(long, value_enum, default_value_t = OrderArg::Ascending)]
    pub order: OrderArg,
    /// Maximum number of UNSAT trace entries.
    #[arg(long, default_value_t = 64)]
    pub trace_cap: usize,
}

impl SolverArgs {
    fn options(&self) -> SolverOptions {
        SolverOptions {
            strict_level1_divisibility: self.strict_level1_divisibility,
            use_s6: !self.no_s6,
            s6_min_only: self.s6_min_only,
            use_s7: !self.no_s7,
            use_s8: !self.no_s8,
            order: match self.order {
                OrderArg::Ascending => SearchOrder::Ascending,
                OrderArg::Descending => SearchOrder::Descending,
            },
            trace_cap: self.trace_cap,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderArg {
    Ascending,
    Descending,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusName {
    Sweedler,
    Taft,
    GroupAlgebra,
    DualGroupAlgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldArg {
    Q,
    Zeta3,
    Zeta4,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Solver(_) | CliError::Corpus(_) => EXIT_USAGE,
            _ => EXIT_DATA,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Format(_) => "format",
            CliError::Analysis(AnalysisError::NonSplitComponent { .. }) => "non-split-component",
            CliError::Analysis(_) => "analysis",
            CliError::Corpus(_) => "corpus",
            CliError::Solver(_) => "invalid-input",
            CliError::Usage(_) => "usage",
            CliError::Data(_) => "data",
        }
    }
}

/// What a verb produced: machine payload, text rendering, result word and
/// exit code.
struct Outcome {
    input: Value,
    result: &'static str,
    payload: Value,
    text: String,
    code: i32,
}

fn field_name(s: &AnyStructure) -> String {
    match s.field_tag() {
        (1, _) => "Q".into(),
        (_, k) => format!("Q(zeta_{k})"),
    }
}

fn read_structure(path: &Path) -> Result<AnyStructure, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Ok(parse_structure(&text)?)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn validate(file: &Path) -> Result<Outcome, CliError> {
    let s = read_structure(file)?;
    let report = s.validate();
    let kind = if s.is_hopf() { "hopf" } else { "coalgebra" };
    let mut text = format!("{}: {kind} of dimension {} over {}\n", file.display(), s.dim(), field_name(&s));
    if report.is_valid() {
        text.push_str("valid\n");
    } else {
        text.push_str(&format!("invalid: {} violation(s)\n", report.violations.len()));
        for v in &report.violations {
            text.push_str(&format!("  {} at {:?}\n", v.axiom, v.indices));
        }
    }
    Ok(Outcome {
        input: json!({ "file": file.display().to_string() }),
        result: if report.is_valid() { "valid" } else { "invalid" },
        payload: json!({
            "dim": s.dim(),
            "kind": kind,
            "field": field_name(&s),
            "valid": report.is_valid(),
            "violations": to_value(&report.violations),
        }),
        text,
        code: if report.is_valid() { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn analyze_file(file: &Path) -> Result<Outcome, CliError> {
    let s = read_structure(file)?;
    let field = field_name(&s);
    let (summary, text) = with_structure!(&s, st => {
        let a = analyze(st.coalgebra())?;
        let summary = AnalysisSummary::new(&a);
        let text = report::analysis_text(&summary, &a.block_system);
        (summary, text)
    });
    let mut payload = to_value(&summary);
    payload["field"] = json!(field);
    Ok(Outcome {
        input: json!({ "file": file.display().to_string() }),
        result: "ok",
        payload,
        text: format!("field: {field}\n{text}"),
        code: EXIT_OK,
    })
}

fn verify_rules(file: &Path) -> Result<Outcome, CliError> {
    let s = read_structure(file)?;
    let reports = with_structure!(&s, st => match st {
        Structure::Hopf(h) => {
            let a = analyze(&h.coalgebra)?;
            verify_all(h, &a)
        }
        Structure::Coalgebra(_) => {
            return Err(CliError::Data("verify-rules needs Hopf data (multiplication, unit and antipode)".into()))
        }
    });
    let failed = reports.iter().any(|r| r.verdict == RuleVerdict::Fail);
    Ok(Outcome {
        input: json!({ "file": file.display().to_string() }),
        result: if failed { "violation" } else { "ok" },
        payload: json!({ "reports": to_value(&reports) }),
        text: report::rules_text(&reports),
        code: if failed { EXIT_NEGATIVE } else { EXIT_OK },
    })
}

fn corpus_item(name: CorpusName, n: Option<usize>, group: Option<&str>) -> Result<CorpusItem, CliError> {
    let group = || -> Result<FiniteGroup, CliError> {
        let g = group.ok_or_else(|| CliError::Usage("--group is required for group algebras".into()))?;
        FiniteGroup::by_name(g).ok_or_else(|| CliError::Usage(format!("unknown group {g:?}; use cN, cyclic:N or s3")))
    };
    Ok(match name {
        CorpusName::Sweedler => CorpusItem::Sweedler,
        CorpusName::Taft => CorpusItem::Taft(n.ok_or_else(|| CliError::Usage("--n is required for taft".into()))?),
        CorpusName::GroupAlgebra => CorpusItem::GroupAlgebra(group()?),
        CorpusName::DualGroupAlgebra => CorpusItem::DualGroupAlgebra(group()?),
    })
}

fn write_corpus(name: CorpusName, n: Option<usize>, group: Option<&str>, field: FieldArg, out: &Path) -> Result<Outcome, CliError> {
    let item = corpus_item(name, n, group)?;
    let choice = match field {
        FieldArg::Q => FieldChoice::Rational,
        FieldArg::Zeta3 => FieldChoice::Cyclotomic3,
        FieldArg::Zeta4 => FieldChoice::Cyclotomic4,
    };
    let s = corpus(&item, choice)?;
    std::fs::write(out, write_structure(&s)).map_err(|source| CliError::Io { path: out.display().to_string(), source })?;
    Ok(Outcome {
        input: json!({ "name": to_value(&name), "n": n, "group": group, "field": to_value(&field), "out": out.display().to_string() }),
        result: "ok",
        payload: json!({ "dim": s.dim(), "field": field_name(&s), "out": out.display().to_string() }),
        text: format!("wrote {} of dimension {} over {} to {}\n", to_value(&name).as_str().unwrap_or(""), s.dim(), field_name(&s), out.display()),
        code: EXIT_OK,
    })
}

fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Validate { file } => validate(file),
        Command::Analyze { file } => analyze_file(file),
        Command::VerifyRules { file } => verify_rules(file),
        Command::Bound { r } => {
            let b = theorem1_bound(*r)?;
            Ok(Outcome { input: json!({ "r": r }), result: "ok", payload: to_value(&b), text: report::bounds_text(&b), code: EXIT_OK })
        }
        Command::Feasible { dim, group_order, solver } => {
            let v = feasible_with(*dim, *group_order, &solver.options())?;
            let guard = no_skew_primitive_guard(*dim, *group_order)?;
            Ok(Outcome {
                input: json!({ "dim": dim, "group_order": group_order, "options": to_value(solver) }),
                result: if v.sat { "sat" } else { "unsat" },
                text: report::verdict_text(&v, guard),
                payload: json!({ "guard": guard, "verdict": to_value(&v) }),
                code: if v.sat { EXIT_OK } else { EXIT_NEGATIVE },
            })
        }
        Command::Sweep { group_order, t_max, jobs, solver } => {
            if *jobs == Some(0) {
                return Err(CliError::Usage("--jobs must be positive".into()));
            }
            let rows = sweep_with(*group_order, *t_max, &solver.options(), *jobs)?;
            let unsat: Vec<u64> = rows.iter().filter(|r| !r.verdict.sat).map(|r| r.t).collect();
            Ok(Outcome {
                input: json!({ "group_order": group_order, "t_max": t_max, "options": to_value(solver) }),
                result: "ok",
                text: report::sweep_text(*group_order, &rows),
                payload: json!({ "unsat": unsat, "rows": to_value(&rows) }),
                code: EXIT_OK,
            })
        }
        Command::Corpus { name, n, group, field, out } => write_corpus(*name, *n, group.as_deref(), *field, out),
    }
}

fn verb(cmd: &Command) -> &'static str {
    match cmd {
        Command::Validate { .. } => "validate",
        Command::Analyze { .. } => "analyze",
        Command::VerifyRules { .. } => "verify-rules",
        Command::Bound { .. } => "bound",
        Command::Feasible { .. } => "feasible",
        Command::Sweep { .. } => "sweep",
        Command::Corpus { .. } => "corpus",
    }
}

/// Parses `argv` (including the program name), runs the verb and writes the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let verb = verb(&cli.command);
    let machine = cli.format == OutputFormat::Machine;
    match dispatch(&cli.command) {
        Ok(o) => {
            if machine {
                let doc = json!({ "verb": verb, "input": o.input, "result": o.result, "payload": o.payload });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
            } else {
                let _ = write!(out, "{}", o.text);
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.kind());
            if machine {
                let doc = json!({
                    "verb": verb,
                    "input": Value::Null,
                    "result": "error",
                    "payload": { "kind": e.kind(), "message": e.to_string() },
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
            }
            e.exit_code()
        }
    }
}
