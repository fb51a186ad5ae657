//! Command-line driver.
//!
//! Exit codes: 0 on success, 1 on analysis-domain errors (bad tables,
//! domain escapes, size limits, unreadable files), 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::canonical::{canonical_code, CodeMode};
use crate::chains::{classify_chain_map, ChainKind, Window};
use crate::dot::export_dot;
use crate::embed::{embeds_into_with_limit, EmbedDecision, DEFAULT_EMBED_LIMIT};
use crate::error::Error;
use crate::finite::FiniteFunction;
use crate::iso::{topologies_isomorphic, IsoDecision};
use crate::recurrence::{
    eval_accumulator_with_steps, parse_recurrence_spec, projected_topology, RecurrenceSpec,
};
use crate::report::AnalysisReport;
use crate::symbolic::{OrbitOutcome, SymbolicMap};
use crate::table::parse_function_table;
use crate::termination::{
    classify_termination, classify_termination_symbolic, extract_ranking, verify_ranking,
    RankCheck, TermVerdict,
};
use crate::topology::{build_topology, Topology};

#[derive(Parser)]
#[command(
    name = "fntopo",
    version,
    about = "Analyze the order a function induces on its own domain under iteration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Condense a table into classes, Hasse edges, sets, code, verdict, ranks
    Analyze(AnalyzeArgs),
    /// Iterate a map from one or more start values and report the outcome
    Orbit(OrbitArgs),
    /// Decide ordinal isomorphism of two tables
    Iso(IsoArgs),
    /// Decide order embedding of one table's topology into another's
    Embed(EmbedArgs),
    /// Extract and check the distance-to-base ranking of a table
    Rank(RankArgs),
    /// Termination verdict for a table or a built-in map
    Term(TermArgs),
    /// Evaluate a linear recurrence through its accumulator form
    Recur(RecurArgs),
    /// Write the Hasse forest of a table as Graphviz DOT
    Export(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum ModeArg {
    /// Compare reduced domains only
    #[default]
    Class,
    /// Also compare cycle lengths of the base classes
    Strict,
}

impl From<ModeArg> for CodeMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Class => CodeMode::ClassLevel,
            ModeArg::Strict => CodeMode::StrictCycleLength,
        }
    }
}

/// The built-in argument-transition maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuiltinName {
    Collatz,
    Successor,
    Predecessor,
    Split,
    Affine,
}

/// A built-in map selection together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltinSpec {
    pub name: BuiltinName,
    /// Slope of the affine map; meaningless for the others.
    pub a: Option<u64>,
    /// Offset of the affine map.
    pub b: Option<u64>,
}

impl BuiltinSpec {
    pub fn resolve(&self) -> Result<SymbolicMap, Error> {
        match self.name {
            BuiltinName::Affine => {
                let a = self
                    .a
                    .ok_or_else(|| Error::Invalid("affine needs --a (slope >= 0)".into()))?;
                let b = self
                    .b
                    .ok_or_else(|| Error::Invalid("affine needs --b (offset >= 0)".into()))?;
                Ok(SymbolicMap::affine(a, b))
            }
            other => {
                if self.a.is_some() || self.b.is_some() {
                    return Err(Error::Invalid(
                        "--a/--b only apply to the affine builtin".into(),
                    ));
                }
                Ok(match other {
                    BuiltinName::Collatz => SymbolicMap::collatz(),
                    BuiltinName::Successor => SymbolicMap::successor(),
                    BuiltinName::Predecessor => SymbolicMap::predecessor(),
                    BuiltinName::Split => SymbolicMap::split(),
                    BuiltinName::Affine => unreachable!("handled above"),
                })
            }
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Function table file
    #[arg(long)]
    table: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
    #[arg(long, value_enum, default_value_t)]
    mode: ModeArg,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(
    clap::ArgGroup::new("orbit_subject")
        .required(true)
        .args(["table", "builtin"]),
))]
struct OrbitArgs {
    /// Function table file (viewed as a map with no stopping set)
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, value_enum)]
    builtin: Option<BuiltinName>,
    /// Affine slope
    #[arg(long)]
    a: Option<u64>,
    /// Affine offset
    #[arg(long)]
    b: Option<u64>,
    /// Start value; repeatable, and `lo..hi` sweeps the inclusive range
    #[arg(long, required = true, allow_hyphen_values = true)]
    start: Vec<String>,
    /// Maximum number of applications per start
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args)]
struct IsoArgs {
    #[arg(long)]
    table_a: PathBuf,
    #[arg(long)]
    table_b: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long)]
    table_a: PathBuf,
    #[arg(long)]
    table_b: PathBuf,
    /// Class-count cutoff; FNTOPO_EMBED_LIMIT overrides the default too
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args)]
struct RankArgs {
    #[arg(long)]
    table: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args)]
#[command(group(
    clap::ArgGroup::new("term_subject")
        .required(true)
        .args(["table", "builtin"]),
))]
struct TermArgs {
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, value_enum)]
    builtin: Option<BuiltinName>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    /// Probe start value for symbolic subjects; repeatable, ranges allowed
    #[arg(long, allow_hyphen_values = true)]
    start: Vec<String>,
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args)]
struct RecurArgs {
    /// Recurrence description file (memory/const/coeffs/bases lines)
    #[arg(long, conflicts_with_all = ["memory", "constant", "coeffs", "bases"])]
    spec: Option<PathBuf>,
    /// Memory depth; must match the number of coefficients
    #[arg(long)]
    memory: Option<usize>,
    /// Additive constant (defaults to 0)
    #[arg(long = "const", allow_hyphen_values = true)]
    constant: Option<String>,
    /// Coefficients a1,a2,...,aB (comma separated)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Vec<String>,
    /// Base values d0,d1,...,d(B-1) (comma separated)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    bases: Vec<String>,
    /// Index to evaluate at
    #[arg(long)]
    n: u64,
    /// Write the projected index topology as DOT to this file
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Top index of the projected topology (defaults to max(n, memory))
    #[arg(long)]
    horizon: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    table: PathBuf,
    /// Write the DOT here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Runs the CLI against the given argument vector, streaming normal output
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), String> {
    match command {
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Orbit(a) => cmd_orbit(a, out),
        Command::Iso(a) => cmd_iso(a, out),
        Command::Embed(a) => cmd_embed(a, out),
        Command::Rank(a) => cmd_rank(a, out),
        Command::Term(a) => cmd_term(a, out),
        Command::Recur(a) => cmd_recur(a, out),
        Command::Export(a) => cmd_export(a, out),
    }
}

fn read_table(path: &Path) -> Result<FiniteFunction, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_function_table(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, target: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match target {
        Some(path) => fs::write(path, content).map_err(|e| format!("{}: {e}", path.display())),
        None => write!(out, "{content}").map_err(|e| e.to_string()),
    }
}

/// Expands `--start` tokens: plain integers or inclusive `lo..hi` sweeps.
fn parse_starts(tokens: &[String]) -> Result<Vec<BigInt>, String> {
    let mut starts = Vec::new();
    for tok in tokens {
        if let Some((lo, hi)) = tok.split_once("..") {
            let lo: i64 = lo
                .trim()
                .parse()
                .map_err(|_| format!("bad range bound in {tok:?}"))?;
            let hi: i64 = hi
                .trim()
                .parse()
                .map_err(|_| format!("bad range bound in {tok:?}"))?;
            if lo > hi {
                return Err(format!("empty range {tok:?}"));
            }
            starts.extend((lo..=hi).map(BigInt::from));
        } else {
            starts.push(
                BigInt::from_str(tok.trim()).map_err(|_| format!("bad start value {tok:?}"))?,
            );
        }
    }
    Ok(starts)
}

fn symbolic_subject(
    table: &Option<PathBuf>,
    builtin: Option<BuiltinName>,
    a: Option<u64>,
    b: Option<u64>,
) -> Result<SymbolicMap, String> {
    match (table, builtin) {
        (Some(path), None) => {
            if a.is_some() || b.is_some() {
                return Err("--a/--b only apply to the affine builtin".into());
            }
            Ok(SymbolicMap::from_finite(&read_table(path)?))
        }
        (None, Some(name)) => BuiltinSpec { name, a, b }
            .resolve()
            .map_err(|e| e.to_string()),
        _ => Err("exactly one of --table or --builtin is required".into()),
    }
}

fn cmd_analyze(args: AnalyzeArgs, out: &mut dyn Write) -> Result<(), String> {
    let f = read_table(&args.table)?;
    let report = AnalysisReport::build(&args.table.display().to_string(), &f, args.mode.into());
    let content = match args.format {
        FormatArg::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        FormatArg::Text => report.render_text(),
    };
    emit(out, &args.out, &content)
}

fn outcome_json(outcome: &OrbitOutcome) -> serde_json::Value {
    match outcome {
        OrbitOutcome::ReachedBase { steps } => json!({"kind": "reached_base", "steps": steps}),
        OrbitOutcome::EnteredCycle { cycle, tail_length } => json!({
            "kind": "entered_cycle",
            "cycle": cycle.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "tail_length": tail_length,
        }),
        OrbitOutcome::BudgetExhausted { budget } => {
            json!({"kind": "budget_exhausted", "budget": budget})
        }
    }
}

fn cmd_orbit(args: OrbitArgs, out: &mut dyn Write) -> Result<(), String> {
    let map = symbolic_subject(&args.table, args.builtin, args.a, args.b)?;
    let starts = parse_starts(&args.start)?;
    let mut json_rows = Vec::new();
    let mut text = String::new();
    for start in &starts {
        let result = map.orbit(start, args.budget).map_err(|e| e.to_string())?;
        match args.format {
            FormatArg::Json => json_rows.push(json!({
                "start": start.to_string(),
                "trace": result.trace.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "outcome": outcome_json(&result.outcome),
            })),
            FormatArg::Text => {
                let trace: Vec<String> = result.trace.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(text, "start {start}");
                let _ = writeln!(text, "  trace: {}", trace.join(" "));
                let _ = writeln!(text, "  outcome: {}", result.outcome);
            }
        }
    }
    match args.format {
        FormatArg::Json => {
            let rendered = serde_json::to_string_pretty(&json_rows).expect("serializes");
            writeln!(out, "{rendered}").map_err(|e| e.to_string())
        }
        FormatArg::Text => write!(out, "{text}").map_err(|e| e.to_string()),
    }
}

fn witness_lines(ta: &Topology, tb: &Topology, pairs: &[(usize, usize)], arrow: &str) -> String {
    let mut s = String::new();
    for &(a, b) in pairs {
        let _ = writeln!(
            s,
            "  {} {arrow} {}",
            ta.classes()[a].label(),
            tb.classes()[b].label()
        );
    }
    s
}

fn witness_json(pairs: &[(usize, usize)]) -> serde_json::Value {
    json!(pairs
        .iter()
        .map(|&(a, b)| json!({"left": a, "right": b}))
        .collect::<Vec<_>>())
}

fn cmd_iso(args: IsoArgs, out: &mut dyn Write) -> Result<(), String> {
    let fa = read_table(&args.table_a)?;
    let fb = read_table(&args.table_b)?;
    let ta = build_topology(&fa);
    let tb = build_topology(&fb);
    let mode: CodeMode = args.mode.into();
    let decision = topologies_isomorphic(&ta, &tb, mode);
    match args.format {
        FormatArg::Json => {
            let value = match &decision {
                IsoDecision::Yes(pairs) => json!({
                    "isomorphic": true,
                    "witness": witness_json(pairs),
                }),
                IsoDecision::No => json!({
                    "isomorphic": false,
                    "left_code": canonical_code(&ta, mode).to_string(),
                    "right_code": canonical_code(&tb, mode).to_string(),
                }),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).expect("serializes")
            )
            .map_err(|e| e.to_string())
        }
        FormatArg::Text => {
            match &decision {
                IsoDecision::Yes(pairs) => {
                    writeln!(out, "isomorphic: yes").map_err(|e| e.to_string())?;
                    writeln!(out, "witness:").map_err(|e| e.to_string())?;
                    write!(out, "{}", witness_lines(&ta, &tb, pairs, "<->"))
                        .map_err(|e| e.to_string())?;
                }
                IsoDecision::No => {
                    writeln!(out, "isomorphic: no").map_err(|e| e.to_string())?;
                    writeln!(out, "left code:  {}", canonical_code(&ta, mode))
                        .map_err(|e| e.to_string())?;
                    writeln!(out, "right code: {}", canonical_code(&tb, mode))
                        .map_err(|e| e.to_string())?;
                }
            }
            Ok(())
        }
    }
}

fn embed_limit(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("FNTOPO_EMBED_LIMIT")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_EMBED_LIMIT)
}

fn cmd_embed(args: EmbedArgs, out: &mut dyn Write) -> Result<(), String> {
    let fa = read_table(&args.table_a)?;
    let fb = read_table(&args.table_b)?;
    let ta = build_topology(&fa);
    let tb = build_topology(&fb);
    let decision =
        embeds_into_with_limit(&ta, &tb, embed_limit(args.limit)).map_err(|e| e.to_string())?;
    match args.format {
        FormatArg::Json => {
            let value = match &decision {
                EmbedDecision::Yes(pairs) => {
                    json!({"embeds": true, "witness": witness_json(pairs)})
                }
                EmbedDecision::No => json!({"embeds": false}),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).expect("serializes")
            )
            .map_err(|e| e.to_string())
        }
        FormatArg::Text => {
            match &decision {
                EmbedDecision::Yes(pairs) => {
                    writeln!(out, "embeds: yes").map_err(|e| e.to_string())?;
                    writeln!(out, "witness:").map_err(|e| e.to_string())?;
                    write!(out, "{}", witness_lines(&ta, &tb, pairs, "->"))
                        .map_err(|e| e.to_string())?;
                }
                EmbedDecision::No => {
                    writeln!(out, "embeds: no").map_err(|e| e.to_string())?;
                }
            }
            Ok(())
        }
    }
}

fn cmd_rank(args: RankArgs, out: &mut dyn Write) -> Result<(), String> {
    let f = read_table(&args.table)?;
    let t = build_topology(&f);
    let ranks = extract_ranking(&t, &f);
    let check = verify_ranking(&f, &ranks).map_err(|e| e.to_string())?;
    match args.format {
        FormatArg::Json => {
            let value = json!({
                "ranks": ranks.as_map(),
                "check": match check {
                    RankCheck::Valid => "valid".to_string(),
                    RankCheck::Violation(x) => format!("violation at {x}"),
                },
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).expect("serializes")
            )
            .map_err(|e| e.to_string())
        }
        FormatArg::Text => {
            for (x, r) in ranks.iter() {
                writeln!(out, "{x}: {r}").map_err(|e| e.to_string())?;
            }
            match check {
                RankCheck::Valid => writeln!(out, "check: valid").map_err(|e| e.to_string()),
                RankCheck::Violation(x) => {
                    writeln!(out, "check: violation at {x}").map_err(|e| e.to_string())
                }
            }
        }
    }
}

fn chain_kind_name(kind: ChainKind) -> String {
    match kind {
        ChainKind::FiniteChain(k) => format!("finite-chain({k})"),
        ChainKind::DescendingToBase => "descending-to-base".into(),
        ChainKind::AscendingUnbounded => "ascending-unbounded".into(),
        ChainKind::DoublyUnbounded => "doubly-unbounded".into(),
        ChainKind::NotAChain => "not-a-chain".into(),
        ChainKind::Unknown => "unknown".into(),
    }
}

fn verdict_json(v: &TermVerdict, chain: Option<&crate::chains::ChainClass>) -> serde_json::Value {
    let mut value = json!({
        "status": v.status.to_string(),
        "required_base_conditions": v.required_base_conditions.as_ref().map(|set| {
            set.iter().map(|b| b.to_string()).collect::<Vec<_>>()
        }),
        "certificate": v.certificate,
    });
    if let Some(c) = chain {
        value["chain"] = json!({
            "kind": chain_kind_name(c.kind),
            "evidence": c.evidence,
        });
    }
    value
}

fn write_verdict(
    out: &mut dyn Write,
    format: FormatArg,
    v: &TermVerdict,
    chain: Option<&crate::chains::ChainClass>,
) -> Result<(), String> {
    match format {
        FormatArg::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&verdict_json(v, chain)).expect("serializes")
        )
        .map_err(|e| e.to_string()),
        FormatArg::Text => {
            writeln!(out, "status: {}", v.status).map_err(|e| e.to_string())?;
            if let Some(base) = &v.required_base_conditions {
                let parts: Vec<String> = base.iter().map(|b| b.to_string()).collect();
                writeln!(out, "required base conditions: {{{}}}", parts.join(","))
                    .map_err(|e| e.to_string())?;
            }
            writeln!(out, "certificate: {}", v.certificate).map_err(|e| e.to_string())?;
            if let Some(c) = chain {
                writeln!(out, "chain: {} ({})", chain_kind_name(c.kind), c.evidence)
                    .map_err(|e| e.to_string())?;
            }
            Ok(())
        }
    }
}

fn cmd_term(args: TermArgs, out: &mut dyn Write) -> Result<(), String> {
    match (&args.table, args.builtin) {
        (Some(path), None) => {
            let f = read_table(path)?;
            let v = classify_termination(&f);
            write_verdict(out, args.format, &v, None)
        }
        (None, Some(name)) => {
            let map = BuiltinSpec {
                name,
                a: args.a,
                b: args.b,
            }
            .resolve()
            .map_err(|e| e.to_string())?;
            let probes = parse_starts(&args.start)?;
            let v = classify_termination_symbolic(&map, &probes, args.budget)
                .map_err(|e| e.to_string())?;
            let window = Window {
                budget: args.budget,
                ..Window::default()
            };
            let chain = classify_chain_map(&map, &window);
            write_verdict(out, args.format, &v, Some(&chain))
        }
        _ => Err("exactly one of --table or --builtin is required".into()),
    }
}

fn parse_bigint_list(tokens: &[String], what: &str) -> Result<Vec<BigInt>, String> {
    tokens
        .iter()
        .map(|t| BigInt::from_str(t.trim()).map_err(|_| format!("bad {what} entry {t:?}")))
        .collect()
}

fn cmd_recur(args: RecurArgs, out: &mut dyn Write) -> Result<(), String> {
    let spec = if let Some(path) = &args.spec {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        parse_recurrence_spec(&text).map_err(|e| format!("{}: {e}", path.display()))?
    } else {
        if args.coeffs.is_empty() || args.bases.is_empty() {
            return Err("either --spec or both --coeffs and --bases are required".into());
        }
        let constant = match &args.constant {
            Some(c) => BigInt::from_str(c.trim()).map_err(|_| format!("bad --const {c:?}"))?,
            None => BigInt::ZERO,
        };
        let coefficients = parse_bigint_list(&args.coeffs, "--coeffs")?;
        let base_values = parse_bigint_list(&args.bases, "--bases")?;
        if let Some(m) = args.memory {
            if m != coefficients.len() {
                return Err(format!(
                    "--memory {m} disagrees with {} coefficients",
                    coefficients.len()
                ));
            }
        }
        RecurrenceSpec::new(constant, coefficients, base_values).map_err(|e| e.to_string())?
    };

    let (value, steps) = eval_accumulator_with_steps(&spec, args.n);
    if let Some(dot_path) = &args.dot {
        let horizon = args
            .horizon
            .unwrap_or_else(|| args.n.max(spec.memory() as u64));
        let t = projected_topology(&spec, horizon).map_err(|e| e.to_string())?;
        fs::write(dot_path, export_dot(&t)).map_err(|e| format!("{}: {e}", dot_path.display()))?;
    }
    match args.format {
        FormatArg::Json => {
            let value = json!({
                "n": args.n,
                "value": value.to_string(),
                "steps": steps,
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).expect("serializes")
            )
            .map_err(|e| e.to_string())
        }
        FormatArg::Text => {
            writeln!(out, "f({}) = {value}", args.n).map_err(|e| e.to_string())?;
            writeln!(out, "steps: {steps}").map_err(|e| e.to_string())
        }
    }
}

fn cmd_export(args: ExportArgs, out: &mut dyn Write) -> Result<(), String> {
    let f = read_table(&args.table)?;
    let dot = export_dot(&build_topology(&f));
    emit(out, &args.out, &dot)
}
