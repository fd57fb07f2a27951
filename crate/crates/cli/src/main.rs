//! `lse`: score nodes, simulate SI spreading and compare rankings from an
//! edge-list file.

mod manifest;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Args, Parser, Subcommand};
use lse_core::{
    betweenness, compare_report, degree_centrality, load_edge_list, lse_all, run_si,
    BetweennessMode, DegreeView, EntropyConfig, Graph, LogBase, Measure, SIConfig,
};

use crate::manifest::RunManifest;

const DEFAULT_RNG_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "lse",
    version,
    about = "Node influence ranking with local structure entropy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score every node with one measure.
    Centrality(CentralityArgs),
    /// Monte Carlo SI spreading from one seed node.
    Si(SiArgs),
    /// Top-k lists for degree, betweenness and LSE with pairwise overlaps.
    Compare(CompareArgs),
}

#[derive(Args)]
struct MeasureFlags {
    #[arg(long, value_parser = PossibleValuesParser::new(["pair-normalized", "eq1-literal"])
        .map(|s| s.parse::<BetweennessMode>().unwrap()))]
    betweenness_mode: Option<BetweennessMode>,

    #[arg(long, value_parser = PossibleValuesParser::new(["e", "2", "10"])
        .map(|s| s.parse::<LogBase>().unwrap()))]
    log_base: Option<LogBase>,

    #[arg(long, value_parser = PossibleValuesParser::new(["global", "induced"])
        .map(|s| s.parse::<DegreeView>().unwrap()))]
    degree_view: Option<DegreeView>,
}

impl MeasureFlags {
    fn entropy(&self) -> EntropyConfig {
        EntropyConfig {
            log_base: self.log_base.unwrap_or_default(),
            degree_view: self.degree_view.unwrap_or_default(),
        }
    }

    fn mode(&self) -> BetweennessMode {
        self.betweenness_mode.unwrap_or_default()
    }
}

#[derive(Args)]
struct CentralityArgs {
    #[arg(long)]
    input: PathBuf,

    #[arg(long, value_parser = PossibleValuesParser::new(["degree", "betweenness", "lse"])
        .map(|s| s.parse::<Measure>().unwrap()))]
    measure: Measure,

    #[command(flatten)]
    flags: MeasureFlags,

    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SiArgs {
    #[arg(long)]
    input: PathBuf,

    /// Label of the initially infected node.
    #[arg(long)]
    seed_node: String,

    /// Per-contact infection probability.
    #[arg(long, default_value_t = lse_core::si::DEFAULT_BETA)]
    beta: f64,

    #[arg(long, default_value_t = 10)]
    steps: usize,

    #[arg(long, default_value_t = 1000)]
    replicates: usize,

    #[arg(long, default_value_t = DEFAULT_RNG_SEED)]
    rng_seed: u64,

    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long)]
    input: PathBuf,

    #[arg(long, default_value_t = lse_core::ranking::DEFAULT_K,
        value_parser = clap::value_parser!(u64).range(1..).map(|k| k as usize))]
    k: usize,

    #[command(flatten)]
    flags: MeasureFlags,

    #[arg(long)]
    output: Option<PathBuf>,
}

/// Any failure the user can fix; always exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<(), UsageError>;

fn read_graph(path: &Path) -> Result<Graph, UsageError> {
    let file =
        File::open(path).map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    let (graph, _warnings) = load_edge_list(BufReader::new(file))
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    Ok(graph)
}

/// Writes `body` to the output file with the manifest as leading comment
/// lines, or to stdout with the manifest on stderr.
fn emit(
    output: Option<&Path>,
    manifest: &RunManifest,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> CmdResult {
    match output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
            let mut out = BufWriter::new(file);
            manifest.write_comments(&mut out)?;
            body(&mut out)?;
            out.flush()?;
        }
        None => {
            manifest.write_comments(&mut io::stderr().lock())?;
            let mut out = BufWriter::new(io::stdout().lock());
            body(&mut out)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn cmd_centrality(args: &CentralityArgs) -> CmdResult {
    let f = &args.flags;
    match args.measure {
        Measure::Lse if f.betweenness_mode.is_some() => {
            return Err(UsageError(
                "--betweenness-mode requires --measure betweenness".into(),
            ))
        }
        Measure::Betweenness | Measure::Degree
            if f.log_base.is_some() || f.degree_view.is_some() =>
        {
            return Err(UsageError(
                "--log-base and --degree-view require --measure lse".into(),
            ))
        }
        Measure::Degree if f.betweenness_mode.is_some() => {
            return Err(UsageError(
                "--betweenness-mode requires --measure betweenness".into(),
            ))
        }
        _ => {}
    }
    let graph = read_graph(&args.input)?;
    let scores = match args.measure {
        Measure::Degree => degree_centrality(&graph),
        Measure::Betweenness => betweenness(&graph, f.mode()),
        Measure::Lse => lse_all(&graph, &f.entropy()),
    };
    let mut manifest = RunManifest::new("centrality", &args.input);
    manifest.flag("measure", args.measure);
    for (k, v) in &scores.mode {
        manifest.flag(k, v);
    }
    manifest.flag("output", display_output(&args.output));
    manifest.flag("rng_seed", DEFAULT_RNG_SEED);
    emit(args.output.as_deref(), &manifest, |out| {
        scores.write_csv(out)
    })
}

fn cmd_si(args: &SiArgs) -> CmdResult {
    let graph = read_graph(&args.input)?;
    let seed_node = graph.node_by_label(&args.seed_node)?;
    let cfg = SIConfig {
        seed_node,
        beta: args.beta,
        steps: args.steps,
        replicates: args.replicates,
        rng_seed: args.rng_seed,
    };
    let trajectory = run_si(&graph, &cfg)?;
    let mut manifest = RunManifest::new("si", &args.input);
    manifest.flag("seed_node", &args.seed_node);
    manifest.flag("beta", args.beta);
    manifest.flag("steps", args.steps);
    manifest.flag("replicates", args.replicates);
    manifest.flag("output", display_output(&args.output));
    manifest.flag("rng_seed", args.rng_seed);
    emit(args.output.as_deref(), &manifest, |out| {
        trajectory.write_csv(out)
    })
}

fn cmd_compare(args: &CompareArgs) -> CmdResult {
    let graph = read_graph(&args.input)?;
    let entropy = args.flags.entropy();
    let mode = args.flags.mode();
    let report = compare_report(&graph, args.k, &entropy, mode)?;
    let mut manifest = RunManifest::new("compare", &args.input);
    manifest.flag("k", args.k);
    manifest.flag("betweenness_mode", mode);
    manifest.flag("log_base", entropy.log_base);
    manifest.flag("degree_view", entropy.degree_view);
    manifest.flag("output", display_output(&args.output));
    manifest.flag("rng_seed", DEFAULT_RNG_SEED);
    emit(args.output.as_deref(), &manifest, |out| {
        report.write_csv(out)
    })
}

fn display_output(output: &Option<PathBuf>) -> String {
    output
        .as_ref()
        .map_or_else(|| "-".to_owned(), |p| p.display().to_string())
}

fn main() -> ExitCode {
    env_logger::Builder::new()
        .filter_level(log::LevelFilter::Warn)
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Centrality(args) => cmd_centrality(args),
        Command::Si(args) => cmd_si(args),
        Command::Compare(args) => cmd_compare(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
