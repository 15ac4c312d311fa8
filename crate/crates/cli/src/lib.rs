//! Command-line front end: read an instance, run a solver, kernel, reduction,
//! oracle or generator, and write a JSON document.

pub mod envelope;

use std::fmt;
use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use secluded_core::domset::{solve_secluded_qds, solve_small_secluded_qds};
use secluded_core::ffvd::{kernelize_secluded_ffvd, solve_secluded_ffvd, solve_small_secluded_ffvd};
use secluded_core::fvs::{kernelize_sfvs, solve_sfvs};
use secluded_core::graph::families;
use secluded_core::oracle::{oracle, OracleConfig, ProblemInstance};
use secluded_core::reductions::{self, SourceInstance};
use secluded_core::separator::{solve_secluded_separator, solve_small_secluded_separator};
use secluded_core::{Answer, Graph, Verdict, VertexSet};
use serde::Serialize;

use envelope::{family_docs, named_family, read_edge_list, to_envelope};
pub use envelope::{Envelope, Problem};

#[derive(Debug)]
pub enum CliError {
    /// Malformed input, located by document field.
    Field {
        field: String,
        msg: String,
    },
    Usage(String),
    Core(secluded_core::Error),
    Io {
        path: String,
        source: io::Error,
    },
}

impl CliError {
    pub fn field(field: impl Into<String>, msg: impl Into<String>) -> Self {
        CliError::Field { field: field.into(), msg: msg.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Field { field, msg } => write!(f, "{field}: {msg}"),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => e.fmt(f),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Core(e) => Some(e),
            CliError::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}

impl From<secluded_core::Error> for CliError {
    fn from(e: secluded_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// What a successful run reports through the exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Yes,
    No,
    Done,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Yes | Status::Done => 0,
            Status::No => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "secluded", version, about = "Solvers, kernels and reductions for secluded graph problems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide an instance with the dedicated solver (exhaustive search where there is none).
    Solve(RunArgs),
    /// Decide an instance by exhaustive enumeration.
    Oracle(RunArgs),
    /// Shrink an instance with its kernelization.
    Kernelize(RunArgs),
    /// Transform a source instance into a target instance.
    Reduce(ReduceArgs),
    /// Emit a random or structured graph as an envelope.
    Gen(GenArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct ParamArgs {
    #[arg(short = 'k')]
    pub k: Option<usize>,
    #[arg(short = 'l', long = "ell")]
    pub ell: Option<usize>,
    #[arg(short = 'p')]
    pub p: Option<usize>,
    #[arg(short = 'q')]
    pub q: Option<usize>,
    /// Terminal s of a separator instance.
    #[arg(long)]
    pub source: Option<usize>,
    /// Terminal t of a separator instance.
    #[arg(long)]
    pub target: Option<usize>,
    /// Terminal vertex of a cutting instance.
    #[arg(long)]
    pub terminal: Option<usize>,
    /// Forbidden pattern family: triangle, edge or p3.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Problem code; overrides the envelope's.
    #[arg(long)]
    pub problem: Option<Problem>,
    /// Envelope or edge list; '-' reads stdin.
    #[arg(long, default_value = "-")]
    pub input: String,
    #[arg(long, default_value = "-")]
    pub output: String,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Exhaustive searches enumerate at most 2^cap sets.
    #[arg(long, default_value_t = 20)]
    pub cap: u32,
    /// Write JSON even to a terminal.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ReduceArgs {
    #[arg(long)]
    pub from: Problem,
    #[arg(long)]
    pub to: Problem,
    /// Source envelope; repeat to compose several separator instances.
    #[arg(long, default_value = "-")]
    pub input: Vec<String>,
    #[arg(long, default_value = "-")]
    pub output: String,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Use the set-cover construction for p <= q/2.
    #[arg(long)]
    pub w2: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Gnp,
    Path,
    Cycle,
    Friendship,
    Theta,
}

#[derive(Args, Debug, Clone)]
pub struct GenArgs {
    #[arg(long)]
    pub model: Model,
    /// Vertex count (gnp, path, cycle), triangle count (friendship) or path count (theta).
    #[arg(short = 'n')]
    pub n: usize,
    /// Edge probability as num/den.
    #[arg(long, default_value = "1/2")]
    pub prob: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Problem code written into the envelope.
    #[arg(long, default_value = "sfvs")]
    pub problem: Problem,
    #[arg(long, default_value = "-")]
    pub output: String,
    #[command(flatten)]
    pub params: ParamArgs,
}

impl std::str::FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        envelope::parse_problem(s)
    }
}

#[derive(Serialize, Debug)]
pub struct Stats {
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
}

#[derive(Serialize, Debug)]
pub struct ResultDoc {
    pub answer: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub stats: Stats,
}

#[derive(Serialize, Debug)]
pub struct TraceEntry {
    pub rule: String,
    pub affected: Vec<usize>,
    pub removed: Vec<usize>,
    pub added: Vec<usize>,
}

#[derive(Serialize, Debug)]
pub struct VerdictDoc {
    pub answer: &'static str,
    pub justification: String,
}

#[derive(Serialize, Debug)]
pub struct KernelDoc {
    pub envelope: Envelope,
    pub rule_trace: Vec<TraceEntry>,
    pub original_n: usize,
    pub reduced_n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictDoc>,
}

pub fn run(cli: &Cli) -> Result<Status, CliError> {
    match &cli.command {
        Command::Solve(a) => decide(a, false),
        Command::Oracle(a) => decide(a, true),
        Command::Kernelize(a) => kernelize(a),
        Command::Reduce(a) => reduce(a),
        Command::Gen(a) => generate(a),
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|source| CliError::Io { path: path.to_string(), source })?;
    Ok(text)
}

fn write_output(path: &str, text: &str) -> Result<(), CliError> {
    let res = if path == "-" { io::stdout().write_all(text.as_bytes()) } else { fs::write(path, text) };
    res.map_err(|source| CliError::Io { path: path.to_string(), source })
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

/// Reads an envelope (or a bare edge list) and applies command-line overrides.
pub fn load(path: &str, problem: Option<Problem>, params: &ParamArgs) -> Result<Envelope, CliError> {
    let text = read_input(path)?;
    let mut env = if text.trim_start().starts_with('{') {
        Envelope::parse(&text)?
    } else {
        let g = read_edge_list(&text)?;
        let problem = problem.ok_or_else(|| CliError::field("problem", "edge-list input needs --problem"))?;
        Envelope::new(problem, &g)
    };
    if let Some(p) = problem {
        env.problem = p.code().to_string();
    }
    apply_params(&mut env, params)?;
    Ok(env)
}

fn apply_params(env: &mut Envelope, a: &ParamArgs) -> Result<(), CliError> {
    let pairs = [
        ("k", a.k),
        ("ell", a.ell),
        ("p", a.p),
        ("q", a.q),
        ("s", a.source),
        ("t", a.target),
        ("terminal", a.terminal),
    ];
    for (key, value) in pairs {
        if let Some(v) = value {
            env.params.insert(key.to_string(), v);
        }
    }
    if let Some(name) = &a.family {
        env.extras.family = Some(family_docs(&named_family(name)?));
    }
    Ok(())
}

fn members(s: &VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn from_answer(a: Answer) -> (bool, Option<Vec<usize>>, u64) {
    let witness = a.witness.map(|r| members(&r.solution));
    (witness.is_some(), witness, a.nodes_explored)
}

fn run_oracle(inst: &ProblemInstance, cap: u32) -> Result<(bool, Option<Vec<usize>>, u64), CliError> {
    let a = oracle(inst, &OracleConfig { cap })?;
    Ok((a.yes, a.witness.as_ref().map(members), a.subsets_checked))
}

/// The dedicated solver for an instance, if the library has one.
fn run_solver(inst: &ProblemInstance) -> Option<Result<Answer, secluded_core::Error>> {
    Some(match inst {
        ProblemInstance::Separator(s) if s.ell.is_some() => solve_small_secluded_separator(s),
        ProblemInstance::Separator(s) => solve_secluded_separator(s),
        ProblemInstance::Dom(d) if d.ell.is_some() => solve_small_secluded_qds(d),
        ProblemInstance::Dom(d) => solve_secluded_qds(d),
        ProblemInstance::Ffvd(f) if f.ell.is_some() => solve_small_secluded_ffvd(f),
        ProblemInstance::Ffvd(f) => solve_secluded_ffvd(f),
        ProblemInstance::Fvs(f) if f.ell.is_none() => solve_sfvs(f),
        _ => return None,
    })
}

fn decide(a: &RunArgs, exhaustive: bool) -> Result<Status, CliError> {
    let env = load(&a.input, a.problem, &a.params)?;
    let inst = env.instance()?;
    let start = Instant::now();
    let (yes, witness, nodes) = match run_solver(&inst).filter(|_| !exhaustive) {
        Some(res) => from_answer(res?),
        None => run_oracle(&inst, a.cap)?,
    };
    let doc = ResultDoc {
        answer: if yes { "yes" } else { "no" },
        witness,
        stats: Stats { nodes_explored: nodes, elapsed_ms: start.elapsed().as_millis() as u64 },
    };
    let text =
        if a.json || a.output != "-" || !io::stdout().is_terminal() { to_json(&doc) } else { human(&doc) };
    write_output(&a.output, &text)?;
    Ok(if yes { Status::Yes } else { Status::No })
}

fn human(doc: &ResultDoc) -> String {
    let mut s = String::from(doc.answer);
    if let Some(w) = &doc.witness {
        let ids: Vec<String> = w.iter().map(ToString::to_string).collect();
        s += &format!("\nwitness: {}", ids.join(" "));
    }
    s += &format!("\n{} nodes, {} ms\n", doc.stats.nodes_explored, doc.stats.elapsed_ms);
    s
}

fn verdict_doc(v: Option<Verdict>) -> Option<VerdictDoc> {
    v.map(|v| VerdictDoc { answer: if v.yes { "yes" } else { "no" }, justification: v.justification })
}

fn kernelize(a: &RunArgs) -> Result<Status, CliError> {
    let env = load(&a.input, a.problem, &a.params)?;
    let original_n = env.graph.n;
    let doc = match env.instance()? {
        ProblemInstance::Fvs(f) if f.ell.is_none() => {
            let out = kernelize_sfvs(&f)?;
            let kernel = out.kernel;
            let mut reduced = to_envelope(&ProblemInstance::Fvs(kernel.instance.clone()));
            let ids = kernel
                .instance
                .g
                .vertices()
                .map(|v| kernel.lift(&[v].into_iter().collect()).and_then(|s| s.iter().next()))
                .collect();
            reduced.extras.source_ids = Some(ids);
            let rule_trace = kernel
                .trace
                .steps
                .iter()
                .map(|s| TraceEntry {
                    rule: s.rule.to_string(),
                    affected: s.affected.clone(),
                    removed: s.removed.clone(),
                    added: s.added.clone(),
                })
                .collect();
            KernelDoc {
                reduced_n: kernel.instance.g.n(),
                envelope: reduced,
                rule_trace,
                original_n,
                verdict: verdict_doc(out.verdict),
            }
        }
        ProblemInstance::Ffvd(f) if f.ell.is_none() => {
            let out = kernelize_secluded_ffvd(&f)?;
            let kernel = out.kernel;
            let mut reduced = to_envelope(&ProblemInstance::Ffvd(kernel.instance.clone()));
            reduced.extras.source_ids = Some(kernel.to_original.iter().map(|&v| Some(v)).collect());
            let removed = f.g.vertices().filter(|&v| kernel.from_original(v).is_none()).collect();
            let step = TraceEntry {
                rule: "hitting-set kernel".to_string(),
                affected: members(&kernel.core),
                removed,
                added: Vec::new(),
            };
            KernelDoc {
                reduced_n: kernel.instance.g.n(),
                envelope: reduced,
                rule_trace: vec![step],
                original_n,
                verdict: verdict_doc(out.verdict),
            }
        }
        _ => {
            return Err(CliError::field(
                "problem",
                format!("no kernelization for {} (available: sfvs, sfvd)", env.problem),
            ))
        }
    };
    let status = match &doc.verdict {
        Some(v) if v.answer == "no" => Status::No,
        _ => Status::Done,
    };
    write_output(&a.output, &to_json(&doc))?;
    Ok(status)
}

fn single(inputs: &[String]) -> Result<&str, CliError> {
    match inputs {
        [one] => Ok(one),
        _ => Err(CliError::Usage("this reduction takes exactly one --input".into())),
    }
}

fn source(a: &ReduceArgs) -> Result<SourceInstance, CliError> {
    let env = load(single(&a.input)?, Some(a.from), &a.params)?;
    match env.instance()? {
        ProblemInstance::Source(src) => Ok(src),
        _ => unreachable!("source codes always build source instances"),
    }
}

fn reduced<T>(target: ProblemInstance, r: &reductions::Reduced<T>) -> Envelope {
    let mut env = to_envelope(&target);
    env.extras.source_ids = Some(r.source_ids.iter().map(|&v| Some(v)).collect());
    env
}

fn reduce(a: &ReduceArgs) -> Result<Status, CliError> {
    use Problem::*;
    let env = match (a.from, a.to) {
        (Fvs, Sfvs) | (Ffvd, Sfvd) | (Catv, Sssep) | (Mis, Ssfvs) | (Clique, Lsis) => match source(a)? {
            SourceInstance::Fvs(s) => {
                let r = reductions::fvs_to_sfvs(&s)?;
                reduced(ProblemInstance::Fvs(r.target.clone()), &r)
            }
            SourceInstance::Ffvd(s) => {
                let r = reductions::ffvd_to_sffvd(&s)?;
                reduced(ProblemInstance::Ffvd(r.target.clone()), &r)
            }
            SourceInstance::Catv(s) => {
                let r = reductions::catv_to_sssts(&s)?;
                reduced(ProblemInstance::Separator(r.target.clone()), &r)
            }
            SourceInstance::Mis(s) => {
                let r = reductions::mis_to_ssfvs(&s)?;
                reduced(ProblemInstance::Fvs(r.target.clone()), &r)
            }
            SourceInstance::Clique(s) => {
                let r = reductions::clique_to_lsis(&s)?;
                reduced(ProblemInstance::Lsis(r.target.clone()), &r)
            }
            SourceInstance::SetCover(_) => unreachable!(),
        },
        (SetCover, Sqds | Ssqds) => {
            let env = load(single(&a.input)?, Some(SetCover), &a.params)?;
            let (p, q) = (env.param("p")?, env.param("q")?);
            let ProblemInstance::Source(SourceInstance::SetCover(sc)) = env.instance()? else {
                unreachable!("set cover envelopes build set cover instances")
            };
            let small = a.to == Ssqds;
            let r = if a.w2 {
                reductions::setcover_to_secluded_qds_w2(&sc, p, q, small)?
            } else {
                reductions::setcover_to_secluded_qds(&sc, p, q, small)?
            };
            reduced(ProblemInstance::Dom(r.target.clone()), &r)
        }
        (Sssep, Sssep) => {
            let mut parts = Vec::new();
            for (i, path) in a.input.iter().enumerate() {
                match load(path, Some(Sssep), &a.params)?.instance()? {
                    ProblemInstance::Separator(s) => parts.push(s),
                    _ => unreachable!("sssep envelopes build separator instances, input {i}"),
                }
            }
            let c = reductions::compose_sssts(&parts)?;
            let mut env = to_envelope(&ProblemInstance::Separator(c.target));
            env.extras.composed_ids = Some(c.source_ids);
            env
        }
        (from, to) => {
            return Err(CliError::Usage(format!(
                "no reduction from {from} to {to}; available: fvs->sfvs, ffvd->sfvd, catv->sssep, \
                 sssep->sssep, setcover->sqds, setcover->ssqds, mis->ssfvs, clique->lsis"
            )))
        }
    };
    write_output(&a.output, &env.to_text())?;
    Ok(Status::Done)
}

fn parse_prob(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("--prob expects num/den with 0 < den and num <= den, got '{s}'"));
    let (num, den) = s.split_once('/').ok_or_else(bad)?;
    let (num, den): (u64, u64) =
        (num.trim().parse().map_err(|_| bad())?, den.trim().parse().map_err(|_| bad())?);
    if den == 0 || num > den {
        return Err(bad());
    }
    Ok((num, den))
}

/// The graph a generator run produces; fully determined by its arguments.
pub fn generated_graph(a: &GenArgs) -> Result<Graph, CliError> {
    Ok(match a.model {
        Model::Gnp => {
            let (num, den) = parse_prob(&a.prob)?;
            families::gnp(a.n, num, den, &mut ChaCha8Rng::seed_from_u64(a.seed))
        }
        Model::Path => families::path(a.n),
        Model::Cycle if a.n < 3 => return Err(CliError::Usage("cycles need -n >= 3".into())),
        Model::Cycle => families::cycle(a.n),
        Model::Friendship => families::friendship(a.n),
        Model::Theta => families::theta(a.n),
    })
}

fn generate(a: &GenArgs) -> Result<Status, CliError> {
    let g = generated_graph(a)?;
    let mut env = Envelope::new(a.problem, &g);
    apply_params(&mut env, &a.params)?;
    write_output(&a.output, &env.to_text())?;
    Ok(Status::Done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use secluded_core::domset::DomInstance;

    #[test]
    fn prob_parsing() {
        assert_eq!(parse_prob("7/20").unwrap(), (7, 20));
        assert!(parse_prob("3/0").is_err());
        assert!(parse_prob("5/4").is_err());
        assert!(parse_prob("half").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn dom_regime_errors_surface() {
        let g = families::path(3);
        let inst = ProblemInstance::Dom(DomInstance::small(g, 1, 2, 1, 1));
        assert!(run_solver(&inst).unwrap().is_err());
    }
}
