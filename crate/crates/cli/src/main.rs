//! Command-line surface: load a system file, enumerate, normalize, connect,
//! emit graphs, and run verification suites.
//!
//! All words in text I/O are 1-based and whitespace-separated; the empty
//! word is `-`. Data goes to stdout, counts and sizes to stderr. Exit
//! codes: 0 success, 1 check failure or no connection, 2 malformed input
//! or violated hypothesis.

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use coxwords::classify::{classify_subset, decomposition_label, is_finite, longest_element};
use coxwords::matrix::Automorphism;
use coxwords::maximality::maximality_graph;
use coxwords::moves::{connect, expression_graph, minimal_move_instances, system_family_tag};
use coxwords::twist::Twist;
use coxwords::verify::{
    verify_half_braid, verify_necessity, verify_right_angled, verify_word_property,
    VerificationReport,
};
use coxwords::words::{elements_up_to_length, format_word, parse_word, sort_elements};
use coxwords::{
    CoxeterSystem, Error, ExpressionGraph, Generator, MaximalityGraph, MoveSet, SystemFile, Word,
};
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "coxwords", version, about = "Word calculus for twisted involutions")]
struct Cli {
    /// System description file (JSON: rank, matrix with 0 for infinite
    /// bonds, optional 1-based theta, optional name).
    #[arg(long, global = true, value_name = "FILE")]
    system: Option<PathBuf>,

    /// Twist override: 1-based generator images, e.g. "3 2 1".
    #[arg(long, global = true, value_name = "IMAGES")]
    theta: Option<String>,

    /// Output format where a choice exists.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Bound on twisted-involution rank in sweeps; required for infinite
    /// systems.
    #[arg(long, global = true, value_name = "N")]
    rank_bound: Option<u32>,

    /// Bound on element length in enumerations; required for infinite
    /// systems.
    #[arg(long, global = true, value_name = "N")]
    length_bound: Option<usize>,

    /// Vertex cap for enumerations and expression graphs.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List elements, twisted involutions, or the reduced expressions of
    /// one twisted involution.
    Enumerate {
        #[arg(value_enum)]
        target: Target,
        /// Expression evaluating to the owner (expressions target only).
        word: Option<String>,
    },
    /// Normal form of a word over the generators.
    Normalize { word: String },
    /// Shortest move path between two reduced expressions.
    Connect {
        from: String,
        to: String,
        #[arg(long, value_enum, default_value_t = Regime::Full)]
        regime: Regime,
    },
    /// Emit the maximality graph or the expression graph of an element.
    Graph {
        word: String,
        #[arg(long, value_enum, default_value_t = Kind::Maximality)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Regime::Full)]
        regime: Regime,
    },
    /// Run verification suites; prints a report per suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Finite-type classification of the whole system.
    Classify,
}

#[derive(Copy, Clone, ValueEnum)]
enum Target {
    Elements,
    Involutions,
    Expressions,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, ValueEnum)]
enum Regime {
    Braid,
    Halfbraid,
    Full,
}

impl Regime {
    fn name(&self) -> &'static str {
        match self {
            Regime::Braid => "braid",
            Regime::Halfbraid => "halfbraid",
            Regime::Full => "full",
        }
    }

    fn move_set(&self, twist: &Twist<'_>) -> MoveSet {
        match self {
            Regime::Braid => MoveSet::braid_only(),
            Regime::Halfbraid => MoveSet::half_braid(twist),
            Regime::Full => MoveSet::full(twist),
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Kind {
    Maximality,
    Expressions,
}

#[derive(Copy, Clone, ValueEnum)]
enum Suite {
    WordProperty,
    Necessity,
    HalfBraid,
    RightAngled,
    All,
}

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(Cli::parse(), &mut out) {
        Ok(code) => code,
        Err(err) => {
            if let Some(io_err) = err.root_cause().downcast_ref::<io::Error>() {
                if io_err.kind() == io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    let path = cli
        .system
        .as_ref()
        .ok_or_else(|| anyhow!("--system <FILE> is required"))?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = SystemFile::parse(&text).with_context(|| format!("loading {}", path.display()))?;
    let sys = CoxeterSystem::new(file.coxeter_matrix()?);
    let theta = match &cli.theta {
        Some(images) => parse_theta(images, &sys)?,
        None => file.automorphism()?,
    };
    let twist = Twist::new(&sys, theta)?;
    let all: Word = sys.matrix().generators().collect();
    let finite = is_finite(sys.matrix(), &all);

    match &cli.command {
        Command::Enumerate { target, word } => {
            cmd_enumerate(&cli, &twist, *target, word.as_deref(), finite, out)
        }
        Command::Normalize { word } => cmd_normalize(&twist, word, out),
        Command::Connect { from, to, regime } => cmd_connect(&twist, from, to, *regime, out),
        Command::Graph { word, kind, regime } => {
            cmd_graph(&cli, &twist, word, *kind, *regime, out)
        }
        Command::Verify { suite } => cmd_verify(&cli, &twist, &file, *suite, finite, out),
        Command::Classify => cmd_classify(&twist, out),
    }
}

fn parse_theta(text: &str, sys: &CoxeterSystem) -> anyhow::Result<Automorphism> {
    let images = parse_word(text, sys.rank()).context("parsing --theta")?;
    if images.len() != sys.rank() {
        bail!(
            "--theta lists {} images for rank {}",
            images.len(),
            sys.rank()
        );
    }
    Ok(Automorphism::new(images, sys.matrix())?)
}

fn require_bound<T: Copy>(bound: Option<T>, finite: bool, flag: &str) -> anyhow::Result<Option<T>> {
    if bound.is_none() && !finite {
        bail!("the system is infinite; pass {flag}");
    }
    Ok(bound)
}

fn cmd_enumerate(
    cli: &Cli,
    twist: &Twist<'_>,
    target: Target,
    word: Option<&str>,
    finite: bool,
    out: &mut dyn Write,
) -> anyhow::Result<ExitCode> {
    let sys = twist.system();
    match target {
        Target::Elements => {
            let bound = if cli.cap.is_some() {
                cli.length_bound
            } else {
                require_bound(cli.length_bound, finite, "--length-bound or --cap")?
            };
            let mut elements = elements_up_to_length(sys, bound, cli.cap)?;
            sort_elements(sys, &mut elements);
            for w in &elements {
                writeln!(out, "{}", format_word(&sys.word(*w)))?;
            }
            eprintln!("count: {}", elements.len());
        }
        Target::Involutions => {
            let bound = if cli.cap.is_some() {
                cli.rank_bound
            } else {
                require_bound(cli.rank_bound, finite, "--rank-bound or --cap")?
            };
            let mut involutions = twist.enumerate_involutions(bound, cli.cap)?;
            twist.sort_involutions(&mut involutions);
            for w in &involutions {
                writeln!(out, "{}", format_word(&twist.reduced_expression(w)?))?;
            }
            eprintln!("count: {}", involutions.len());
        }
        Target::Expressions => {
            let word = word.ok_or_else(|| anyhow!("enumerate expressions needs a word"))?;
            let owner = twist.eval(&parse_word(word, sys.rank())?)?;
            let expressions = twist.reduced_expressions_bounded(&owner, cli.cap)?;
            for e in &expressions {
                writeln!(out, "{}", format_word(e))?;
            }
            eprintln!("count: {}", expressions.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_normalize(twist: &Twist<'_>, word: &str, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    let sys = twist.system();
    let letters = parse_word(word, sys.rank())?;
    let w = sys.normalize(&letters)?;
    writeln!(out, "{}", format_word(&sys.word(w)))?;
    eprintln!(
        "length: {} reduced: {}",
        sys.length(w),
        sys.length(w) == letters.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_connect(
    twist: &Twist<'_>,
    from: &str,
    to: &str,
    regime: Regime,
    out: &mut dyn Write,
) -> anyhow::Result<ExitCode> {
    let rank = twist.system().rank();
    let from = parse_word(from, rank)?;
    let to = parse_word(to, rank)?;
    let moves = regime.move_set(twist);
    match connect(twist, &from, &to, &moves) {
        Ok(Some(path)) => {
            writeln!(out, "{}", format_word(&from))?;
            for step in &path {
                writeln!(
                    out,
                    "{}  [{}]",
                    format_word(&step.word),
                    step.application.describe()
                )?;
            }
            eprintln!("steps: {}", path.len());
            Ok(ExitCode::SUCCESS)
        }
        Ok(None) => {
            writeln!(out, "not connected under {}", regime.name())?;
            Ok(ExitCode::from(1))
        }
        Err(Error::DifferentElement) => {
            eprintln!("error: the expressions evaluate to different elements");
            Ok(ExitCode::from(2))
        }
        Err(err) => Err(err.into()),
    }
}

fn emit_maximality(
    graph: &MaximalityGraph,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<()> {
    match format {
        Format::Dot => write!(out, "{}", graph.to_dot())?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&graph.to_json())?)?,
        Format::Text => {
            let vertices: Vec<String> = graph
                .vertices()
                .iter()
                .map(|&s| format!("s{}", s as usize + 1))
                .collect();
            writeln!(out, "vertices: {}", vertices.join(" "))?;
            for &(s, t) in graph.edges() {
                writeln!(out, "s{} -- s{}", s as usize + 1, t as usize + 1)?;
            }
        }
    }
    Ok(())
}

fn emit_expressions(
    graph: &ExpressionGraph,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<()> {
    match format {
        Format::Dot => write!(out, "{}", graph.to_dot())?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&graph.to_json())?)?,
        Format::Text => {
            for (i, word) in graph.words().iter().enumerate() {
                writeln!(out, "{i}: {}", format_word(word))?;
            }
            for &(i, j, kind) in graph.edges() {
                writeln!(out, "{i} -- {j} [{}]", kind.label())?;
            }
        }
    }
    Ok(())
}

fn cmd_graph(
    cli: &Cli,
    twist: &Twist<'_>,
    word: &str,
    kind: Kind,
    regime: Regime,
    out: &mut dyn Write,
) -> anyhow::Result<ExitCode> {
    let owner = twist.eval(&parse_word(word, twist.system().rank())?)?;
    match kind {
        Kind::Maximality => {
            let graph = maximality_graph(twist, &owner)?;
            emit_maximality(&graph, cli.format, out)?;
        }
        Kind::Expressions => {
            let moves = regime.move_set(twist);
            let graph = expression_graph(twist, &owner, &moves, cli.cap)?;
            eprintln!(
                "vertices: {} edges: {} components: {}",
                graph.words().len(),
                graph.edges().len(),
                graph.components().len()
            );
            emit_expressions(&graph, cli.format, out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn applicable_suites(twist: &Twist<'_>, finite: bool) -> Vec<Suite> {
    let mut suites = vec![Suite::WordProperty];
    if finite && system_family_tag(twist).is_some() {
        suites.push(Suite::Necessity);
    }
    if minimal_move_instances(twist)
        .iter()
        .all(|inst| inst.tag.is_half_braid())
    {
        suites.push(Suite::HalfBraid);
    }
    if twist.system().matrix().is_right_angled().is_ok() && twist.theta().is_identity() {
        suites.push(Suite::RightAngled);
    }
    suites
}

fn cmd_verify(
    cli: &Cli,
    twist: &Twist<'_>,
    file: &SystemFile,
    suite: Suite,
    finite: bool,
    out: &mut dyn Write,
) -> anyhow::Result<ExitCode> {
    let suites = match suite {
        Suite::All => applicable_suites(twist, finite),
        single => vec![single],
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for suite in suites {
        let report = match suite {
            Suite::WordProperty => {
                let bound = require_bound(cli.rank_bound, finite, "--rank-bound")?;
                verify_word_property(twist, bound, cli.cap)?
            }
            Suite::Necessity => verify_necessity(twist, cli.cap)?,
            Suite::HalfBraid => {
                let bound = require_bound(cli.rank_bound, finite, "--rank-bound")?;
                verify_half_braid(twist, bound, cli.cap)?
            }
            Suite::RightAngled => {
                verify_right_angled(twist, cli.length_bound.unwrap_or(6), cli.cap)?
            }
            Suite::All => unreachable!(),
        };
        reports.push(report.with_system(&file.display_name()));
    }
    let pass = reports.iter().all(|r| r.pass());
    match cli.format {
        Format::Json => {
            let values: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json()).collect();
            let body = if values.len() == 1 {
                values.into_iter().next().unwrap()
            } else {
                serde_json::Value::Array(values)
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&body)?)?;
        }
        _ => {
            for report in &reports {
                write!(out, "{}", report.to_text())?;
            }
        }
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_classify(twist: &Twist<'_>, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    let sys = twist.system();
    let all: Word = sys.matrix().generators().collect();
    match classify_subset(sys.matrix(), &all) {
        Ok(components) => {
            writeln!(out, "{}", decomposition_label(&components))?;
            let w0 = longest_element(sys, &all)?;
            writeln!(out, "longest element: {}", format_word(&sys.word(w0)))?;
            eprintln!("length: {}", sys.length(w0));
        }
        Err(Error::NotFinite(component)) => {
            let names: Vec<String> = component
                .iter()
                .map(|&s: &Generator| format!("s{}", s as usize + 1))
                .collect();
            writeln!(out, "not finite: component {{{}}}", names.join(", "))?;
        }
        Err(err) => return Err(err.into()),
    }
    Ok(ExitCode::SUCCESS)
}
