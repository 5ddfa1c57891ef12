//! Command-line interface. `stdout` carries only the answer lines; all
//! diagnostics go to `stderr`.
//!
//! Exit codes: 0 when the command ran (YES and NO alike), 1 for usage,
//! parse and I/O errors, 2 when a solver refused the instance size.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use untangle_core::reductions::{self, BinPackingInstance, Instance};
use untangle_core::{
    branch, dp, layerzero, oracle, patterns, verify_timeline, BudgetSpec, Objective, ObjectiveKind, SolveOutcome,
    StaticGraph, TemporalGraph, Timeline, Verdict, Vertex,
};

use crate::fileio::{self, ParseError};

/// Environment variable overriding the oracle and DP size caps.
pub const STATE_CAP_VAR: &str = "UNTANGLE_STATE_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Refused(untangle_core::Error),
    #[error("{0}")]
    Solver(untangle_core::Error),
    #[error("written witness failed verification: {0}")]
    WitnessRejected(String),
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Refused(_) => 2,
            _ => 1,
        }
    }
}

impl From<untangle_core::Error> for CliError {
    fn from(e: untangle_core::Error) -> Self {
        match e {
            untangle_core::Error::Refused { .. } => CliError::Refused(e),
            untangle_core::Error::Unsupported(_) => CliError::Usage(e.to_string()),
            _ => CliError::Solver(e),
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "untangle", version, about = "Exact solvers for temporal graph untangling")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide an instance; prints YES or NO.
    Solve(SolveArgs),
    /// Check a timeline; prints VALID or the first violation.
    Verify(VerifyArgs),
    /// Build an instance from a related problem.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Map a witness of a reduced instance back to its source.
    #[command(subcommand)]
    Extract(ExtractCommand),
    /// Generate instances.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Smallest length bound with a YES answer; prints it or NONE.
    MinEll(MinEllArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Max,
    Sum,
}

impl From<ObjectiveArg> for ObjectiveKind {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Max => ObjectiveKind::MaxLen,
            ObjectiveArg::Sum => ObjectiveKind::SumLen,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    Oracle,
    MaxDp,
    SumDp,
    Branch,
    Zero,
    Patterns,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Oracle => "oracle",
            Algo::MaxDp => "max-dp",
            Algo::SumDp => "sum-dp",
            Algo::Branch => "branch",
            Algo::Zero => "zero",
            Algo::Patterns => "patterns",
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BudgetArgs {
    /// Uniform interval budget per vertex.
    #[arg(long)]
    pub k: Option<u32>,
    /// Budget file (`.bud`) in any form.
    #[arg(long, value_name = "FILE")]
    pub budgets: Option<PathBuf>,
    /// Color class budget file (`.bud` with class lines).
    #[arg(long, value_name = "FILE")]
    pub colors: Option<PathBuf>,
}

impl BudgetArgs {
    fn load(&self, n: Vertex) -> CliResult<BudgetSpec> {
        let spec = match (self.k, &self.budgets, &self.colors) {
            (Some(k), _, _) => BudgetSpec::Uniform(k),
            (_, Some(path), _) => read_with(path, fileio::parse_budgets)?,
            (_, _, Some(path)) => {
                let spec = read_with(path, fileio::parse_budgets)?;
                if !matches!(spec, BudgetSpec::Multicolored { .. }) {
                    return Err(CliError::Usage(format!("{}: --colors needs class lines", path.display())));
                }
                spec
            }
            _ => unreachable!("clap requires one budget flag"),
        };
        spec.validate(n).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(spec)
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Temporal graph (`.tg`).
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub objective: ObjectiveArg,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long)]
    pub ell: u32,
    #[arg(long, value_enum, default_value = "auto")]
    pub algo: Algo,
    /// Write the witness timeline (`.tl`) here on YES.
    #[arg(long, value_name = "FILE")]
    pub witness: Option<PathBuf>,
    /// Reproducible witnesses. Every solver already runs sequentially, so
    /// this only documents intent.
    #[arg(long)]
    pub deterministic: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    /// Timeline (`.tl`).
    pub timeline: PathBuf,
    #[arg(long, value_enum)]
    pub objective: ObjectiveArg,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long)]
    pub ell: u32,
}

#[derive(Debug, Args)]
pub struct MinEllArgs {
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub objective: ObjectiveArg,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub algo: Algo,
}

#[derive(Debug, Args)]
pub struct ReduceOutput {
    /// Output graph (`.tg`).
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
    /// Output budgets (`.bud`).
    #[arg(long, value_name = "FILE")]
    pub budget_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WitnessMap {
    /// Certificate of the source instance to carry over.
    #[arg(long, value_name = "FILE", requires = "witness_out")]
    pub witness_in: Option<PathBuf>,
    /// Where to write the carried-over timeline (`.tl`).
    #[arg(long, value_name = "FILE", requires = "witness_in")]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    /// Odd cycle transversal on a static graph (`.tg` with tau 1) to the sum
    /// objective; the source certificate lists the removed vertices.
    Oct {
        graph: PathBuf,
        #[arg(long)]
        s: u32,
        #[command(flatten)]
        output: ReduceOutput,
        #[command(flatten)]
        witness: WitnessMap,
    },
    /// Two-layer sum instance with k = 1 to Almost 2-SAT.
    Almost2sat {
        graph: PathBuf,
        #[arg(long)]
        ell: u32,
        /// Output formula.
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Unary bin packing (`.bp`) to class budgets with max length 1; the
    /// source certificate lists the bin of each item.
    Binpacking {
        input: PathBuf,
        /// Largest accepted item size.
        #[arg(long, default_value_t = reductions::DEFAULT_SIZE_CAP)]
        size_cap: u32,
        #[command(flatten)]
        output: ReduceOutput,
        #[command(flatten)]
        witness: WitnessMap,
    },
    /// Class budgets to per-vertex budgets, max length 1.
    Multicolored {
        graph: PathBuf,
        #[arg(long, value_name = "FILE")]
        colors: PathBuf,
        #[command(flatten)]
        output: ReduceOutput,
        #[command(flatten)]
        witness: WitnessMap,
    },
    /// Per-vertex budgets to a uniform budget, max length 1.
    Uniform {
        graph: PathBuf,
        #[arg(long, value_name = "FILE")]
        budgets: PathBuf,
        #[command(flatten)]
        output: ReduceOutput,
        #[command(flatten)]
        witness: WitnessMap,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExtractCommand {
    /// Prints `X` followed by the transversal.
    Oct { witness: PathBuf },
    /// Prints `BINS` followed by the bin of each item of the padded instance.
    Binpacking { input: PathBuf, witness: PathBuf },
    /// Writes the source timeline, given the source graph.
    Multicolored {
        graph: PathBuf,
        witness: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Writes the source timeline, given the source graph.
    Uniform {
        graph: PathBuf,
        witness: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenerateCommand {
    /// Each vertex pair is an edge of each layer with probability `p`.
    Random {
        #[arg(long)]
        n: Vertex,
        #[arg(long)]
        tau: u32,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

pub fn run(cli: Cli, out: &mut impl Write) -> CliResult {
    match cli.command {
        Command::Solve(args) => cmd_solve(&args, out),
        Command::Verify(args) => cmd_verify(&args, out),
        Command::Reduce(cmd) => cmd_reduce(&cmd, out),
        Command::Extract(cmd) => cmd_extract(&cmd, out),
        Command::Generate(cmd) => cmd_generate(&cmd, out),
        Command::MinEll(args) => cmd_min_ell(&args, out),
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn read_with<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, ParseError>) -> CliResult<T> {
    parse(&read_text(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn write_text(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn read_numbers(path: &Path) -> CliResult<Vec<u32>> {
    read_text(path)?
        .split_whitespace()
        .map(|tok| tok.parse().map_err(|_| CliError::Usage(format!("{}: invalid number `{tok}`", path.display()))))
        .collect()
}

/// Size caps for the oracle (`n * tau`) and the dynamic programs (table cells).
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub oracle: u64,
    pub dp: u64,
}

impl Caps {
    pub fn from_env() -> CliResult<Self> {
        match std::env::var(STATE_CAP_VAR) {
            Ok(v) => {
                let cap = v.trim().parse().map_err(|_| CliError::Usage(format!("{STATE_CAP_VAR}: invalid cap `{v}`")))?;
                Ok(Caps { oracle: cap, dp: cap })
            }
            Err(_) => Ok(Caps { oracle: oracle::DEFAULT_CELL_CAP, dp: dp::DEFAULT_CELL_CAP }),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Picks the solver for `auto`: zero-length search for `ell = 0`; for the
/// max objective the search tree when `n * k <= 24` and the DP otherwise;
/// for the sum objective the DP (the caller falls back to patterns on
/// refusal). Class budgets only run on the search tree or the oracle.
fn auto_algo(g: &TemporalGraph, budget: &BudgetSpec, obj: Objective) -> Algo {
    if obj.ell == 0 {
        return Algo::Zero;
    }
    let per_vertex = budget.vertex_caps(g.n());
    match (obj.kind, per_vertex) {
        (ObjectiveKind::MaxLen, None) => Algo::Branch,
        (ObjectiveKind::SumLen, None) => Algo::Oracle,
        (ObjectiveKind::MaxLen, Some(ks)) => {
            let k = u64::from(ks.into_iter().max().unwrap_or(0));
            if u64::from(g.n()) * k <= 24 {
                Algo::Branch
            } else {
                Algo::MaxDp
            }
        }
        (ObjectiveKind::SumLen, Some(_)) => Algo::SumDp,
    }
}

/// Runs one solver, checking that it fits the objective first.
pub fn decide(
    g: &TemporalGraph,
    budget: &BudgetSpec,
    obj: Objective,
    algo: Algo,
    caps: Caps,
) -> CliResult<(SolveOutcome, Algo)> {
    let chosen = if algo == Algo::Auto { auto_algo(g, budget, obj) } else { algo };
    let wrong = |what: &str| Err(usage(format!("--algo {} {what}", chosen.name())));
    let outcome = match (chosen, obj.kind) {
        (Algo::Oracle, _) => oracle::oracle_solve_capped(g, budget, obj, caps.oracle),
        (Algo::MaxDp, ObjectiveKind::MaxLen) => dp::solve_max_dp_capped(g, budget, obj.ell, caps.dp),
        (Algo::SumDp, ObjectiveKind::SumLen) => {
            let r = dp::solve_sum_dp_capped(g, budget, obj.ell, caps.dp);
            if algo == Algo::Auto && matches!(r, Err(untangle_core::Error::Refused { .. })) {
                eprintln!("untangle: sum-dp refused, falling back to patterns");
                return Ok((patterns::solve_sum_patterns(g, budget, obj.ell)?, Algo::Patterns));
            }
            r
        }
        (Algo::Branch, ObjectiveKind::MaxLen) => branch::solve_max_branching(g, budget, obj.ell),
        (Algo::Patterns, ObjectiveKind::SumLen) => patterns::solve_sum_patterns(g, budget, obj.ell),
        (Algo::Zero, _) if obj.ell == 0 => layerzero::solve_zero(g, budget),
        (Algo::Zero, _) => return wrong("needs --ell 0"),
        (Algo::MaxDp | Algo::Branch, _) => return wrong("needs --objective max"),
        (Algo::SumDp | Algo::Patterns, _) => return wrong("needs --objective sum"),
        (Algo::Auto, _) => unreachable!("auto resolved above"),
    }?;
    Ok((outcome, chosen))
}

fn cmd_solve(args: &SolveArgs, out: &mut impl Write) -> CliResult {
    let g = read_with(&args.graph, fileio::parse_temporal_graph)?;
    let budget = args.budget.load(g.n())?;
    let obj = Objective { kind: args.objective.into(), ell: args.ell };
    let caps = Caps::from_env()?;
    let started = Instant::now();
    let (outcome, used) = decide(&g, &budget, obj, args.algo, caps)?;
    eprintln!("untangle: {} decided in {:.3} s", used.name(), started.elapsed().as_secs_f64());
    match &outcome {
        SolveOutcome::Yes(t) => {
            writeln!(out, "YES")?;
            if let Some(path) = &args.witness {
                write_text(path, &fileio::render_timeline(t))?;
                let back = read_with(path, fileio::parse_timeline)?;
                match verify_timeline(&g, &back, &budget, obj)? {
                    Verdict::Valid => {}
                    Verdict::Invalid(v) => return Err(CliError::WitnessRejected(v.to_string())),
                }
            }
        }
        SolveOutcome::No => writeln!(out, "NO")?,
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> CliResult {
    let g = read_with(&args.graph, fileio::parse_temporal_graph)?;
    let t = read_with(&args.timeline, fileio::parse_timeline)?;
    let budget = args.budget.load(g.n())?;
    let obj = Objective { kind: args.objective.into(), ell: args.ell };
    match verify_timeline(&g, &t, &budget, obj).map_err(|e| usage(e.to_string()))? {
        Verdict::Valid => writeln!(out, "VALID")?,
        Verdict::Invalid(v) => writeln!(out, "{v}")?,
    }
    Ok(())
}

fn cmd_min_ell(args: &MinEllArgs, out: &mut impl Write) -> CliResult {
    let g = read_with(&args.graph, fileio::parse_temporal_graph)?;
    let budget = args.budget.load(g.n())?;
    let kind: ObjectiveKind = args.objective.into();
    let caps = Caps::from_env()?;
    // beyond these bounds the answer can no longer change
    let top = match kind {
        ObjectiveKind::MaxLen => g.tau() - 1,
        ObjectiveKind::SumLen => g.n().saturating_mul(g.tau() - 1),
    };
    for ell in 0..=top {
        let (outcome, _) = decide(&g, &budget, Objective { kind, ell }, args.algo, caps)?;
        if outcome.is_yes() {
            writeln!(out, "{ell}")?;
            return Ok(());
        }
    }
    writeln!(out, "NONE")?;
    Ok(())
}

fn describe(inst: &Instance) -> String {
    format!("REDUCED n={} tau={} objective={} ell={}", inst.graph.n(), inst.graph.tau(), inst.objective.kind, inst.objective.ell)
}

fn write_instance(inst: &Instance, output: &ReduceOutput, out: &mut impl Write) -> CliResult {
    write_text(&output.out, &fileio::render_temporal_graph(&inst.graph))?;
    if let Some(path) = &output.budget_out {
        write_text(path, &fileio::render_budgets(&inst.budget))?;
    }
    writeln!(out, "{}", describe(inst))?;
    Ok(())
}

/// Writes the mapped certificate and checks it against the target instance.
fn write_mapped_witness(inst: &Instance, t: &Timeline, path: &Path) -> CliResult {
    match verify_timeline(&inst.graph, t, &inst.budget, inst.objective)? {
        Verdict::Valid => write_text(path, &fileio::render_timeline(t)),
        Verdict::Invalid(v) => Err(CliError::WitnessRejected(v.to_string())),
    }
}

fn cmd_reduce(cmd: &ReduceCommand, out: &mut impl Write) -> CliResult {
    match cmd {
        ReduceCommand::Oct { graph, s, output, witness } => {
            let g = read_with(graph, fileio::parse_temporal_graph)?;
            let g = StaticGraph::from_single_layer(&g).map_err(|e| usage(e.to_string()))?;
            let inst = reductions::reduce_oct_to_sum(&g, *s);
            write_instance(&inst, output, out)?;
            if let (Some(src), Some(dst)) = (&witness.witness_in, &witness.witness_out) {
                let x = read_numbers(src)?;
                if x.len() as u64 > u64::from(*s) {
                    return Err(usage(format!("transversal has {} vertices, more than s = {s}", x.len())));
                }
                let t = reductions::oct_to_timeline(&g, &x).map_err(|e| usage(e.to_string()))?;
                write_mapped_witness(&inst, &t, dst)?;
            }
        }
        ReduceCommand::Almost2sat { graph, ell, out: path } => {
            let g = read_with(graph, fileio::parse_temporal_graph)?;
            let f = reductions::reduce_sum_tau2_to_almost2sat(&g, *ell).map_err(|e| usage(e.to_string()))?;
            write_text(path, &render_two_cnf(&f))?;
            writeln!(out, "REDUCED variables={} clauses={} deletions={}", f.num_variables(), f.clauses.len(), f.deletions)?;
        }
        ReduceCommand::Binpacking { input, size_cap, output, witness } => {
            let bp = read_with(input, fileio::parse_bin_packing)?;
            bp.validate(*size_cap)?;
            let Some(bp) = bp.normalized() else {
                eprintln!("untangle: an item or the total size exceeds the bins; trivially infeasible");
                writeln!(out, "NO")?;
                return Ok(());
            };
            let inst = reductions::reduce_binpacking_to_multicolored(&bp)?;
            write_instance(&inst, output, out)?;
            if let (Some(src), Some(dst)) = (&witness.witness_in, &witness.witness_out) {
                let bins = read_numbers(src)?;
                let t = reductions::packing_to_timeline(&bp, &bins).map_err(|e| usage(e.to_string()))?;
                write_mapped_witness(&inst, &t, dst)?;
            }
        }
        ReduceCommand::Multicolored { graph, colors, output, witness } => {
            let g = read_with(graph, fileio::parse_temporal_graph)?;
            let budget = read_with(colors, fileio::parse_budgets)?;
            let inst = reductions::reduce_multicolored_to_nonuniform(&g, &budget).map_err(|e| usage(e.to_string()))?;
            write_instance(&inst, output, out)?;
            if let (Some(src), Some(dst)) = (&witness.witness_in, &witness.witness_out) {
                let t = read_with(src, fileio::parse_timeline)?;
                let lifted = reductions::multicolored_to_nonuniform_witness(&g, &budget, &t)
                    .map_err(|e| usage(e.to_string()))?;
                write_mapped_witness(&inst, &lifted, dst)?;
            }
        }
        ReduceCommand::Uniform { graph, budgets, output, witness } => {
            let g = read_with(graph, fileio::parse_temporal_graph)?;
            let budget = read_with(budgets, fileio::parse_budgets)?;
            let inst = reductions::reduce_nonuniform_to_uniform(&g, &budget).map_err(|e| usage(e.to_string()))?;
            write_instance(&inst, output, out)?;
            if let (Some(src), Some(dst)) = (&witness.witness_in, &witness.witness_out) {
                let t = read_with(src, fileio::parse_timeline)?;
                let lifted =
                    reductions::nonuniform_to_uniform_witness(&g, &budget, &t).map_err(|e| usage(e.to_string()))?;
                write_mapped_witness(&inst, &lifted, dst)?;
            }
        }
    }
    Ok(())
}

/// One clause per line, `clause <lit> <lit>`, with literals `x<v>_<i>` or
/// `-x<v>_<i>` for vertex `v` at layer `i`.
pub fn render_two_cnf(f: &reductions::TwoCnfInstance) -> String {
    let lit = |l: &reductions::Literal| format!("{}x{}_{}", if l.positive { "" } else { "-" }, l.v, l.layer);
    let mut text = format!("cnf2 1\nvariables {}\ndeletions {}\n", f.num_variables(), f.deletions);
    for c in &f.clauses {
        text.push_str(&format!("clause {} {}\n", lit(&c[0]), lit(&c[1])));
    }
    text
}

fn emit_timeline(t: &Timeline, path: Option<&PathBuf>, out: &mut impl Write) -> CliResult {
    let text = fileio::render_timeline(t);
    match path {
        Some(p) => write_text(p, &text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn cmd_extract(cmd: &ExtractCommand, out: &mut impl Write) -> CliResult {
    match cmd {
        ExtractCommand::Oct { witness } => {
            let t = read_with(witness, fileio::parse_timeline)?;
            let x = reductions::timeline_to_oct(&t);
            let ids: Vec<String> = x.iter().map(u32::to_string).collect();
            writeln!(out, "X {}", ids.join(" ").trim_end())?;
        }
        ExtractCommand::Binpacking { input, witness } => {
            let bp: BinPackingInstance = read_with(input, fileio::parse_bin_packing)?;
            let bp = bp.normalized().ok_or_else(|| usage("bin packing instance is trivially infeasible"))?;
            let t = read_with(witness, fileio::parse_timeline)?;
            let bins = reductions::timeline_to_packing(&bp, &t).map_err(|e| usage(e.to_string()))?;
            let ids: Vec<String> = bins.iter().map(u32::to_string).collect();
            writeln!(out, "BINS {}", ids.join(" "))?;
        }
        ExtractCommand::Multicolored { graph, witness, out: path } => {
            let g = read_with(graph, fileio::parse_temporal_graph)?;
            let t = read_with(witness, fileio::parse_timeline)?;
            emit_timeline(&reductions::nonuniform_to_multicolored_witness(g.tau(), g.n(), &t), path.as_ref(), out)?;
        }
        ExtractCommand::Uniform { graph, witness, out: path } => {
            let g = read_with(graph, fileio::parse_temporal_graph)?;
            let t = read_with(witness, fileio::parse_timeline)?;
            emit_timeline(&reductions::uniform_to_nonuniform_witness(g.tau(), g.n(), &t), path.as_ref(), out)?;
        }
    }
    Ok(())
}

fn cmd_generate(cmd: &GenerateCommand, out: &mut impl Write) -> CliResult {
    match cmd {
        GenerateCommand::Random { n, tau, p, seed, out: path } => {
            let g = reductions::generate_random(*n, *tau, *p, *seed).map_err(|e| usage(e.to_string()))?;
            let text = fileio::render_temporal_graph(&g);
            match path {
                Some(p) => write_text(p, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
        }
    }
    Ok(())
}
