use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use invmetric_core::export::{island_quotient_dot, stick_graph_dot};
use invmetric_core::pipeline::run_pipeline;
use invmetric_core::report::Verdict;
use invmetric_core::scenario::ScenarioConfig;
use invmetric_core::verify::verify_suite;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

/// Construct and certify group-invariant proper metrics on discrete spaces.
#[derive(Parser)]
#[command(name = "invmetric", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the construction pipeline and emit a certification report.
    Run(CommonArgs),
    /// Re-run every module property for the scenario and report each one.
    Verify(CommonArgs),
    /// Export the window stick graph (or the island quotient) as DOT.
    ExportGraph(ExportArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Built-in scenario id (see the README for the list).
    #[arg(long)]
    scenario: Option<String>,
    /// JSON config file; command-line flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Window radius.
    #[arg(long)]
    window: Option<u32>,
    /// Ball radius for the properness checks (repeatable).
    #[arg(long = "radius")]
    radii: Vec<u32>,
    /// Report output path (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the window stick graph (and `<path>.quotient.dot`) here.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Search/enumeration budget.
    #[arg(long)]
    budget: Option<u64>,
    /// Include the exact value table of the final metric in the report.
    #[arg(long)]
    values: bool,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Which graph to export.
    #[arg(long, value_enum, default_value_t = GraphKind::Stick)]
    kind: GraphKind,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Stick,
    Quotient,
}

fn load_config(args: &CommonArgs) -> Result<ScenarioConfig> {
    let mut config = match (&args.config, &args.scenario) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            ScenarioConfig::from_json(&text)?
        }
        (None, Some(name)) => ScenarioConfig::for_scenario(name),
        (None, None) => bail!("pass --scenario or --config"),
    };
    if let Some(name) = &args.scenario {
        config.scenario = name.clone();
    }
    if let Some(w) = args.window {
        config.window_radius = Some(w);
    }
    if !args.radii.is_empty() {
        config.ball_radii = args.radii.clone();
    }
    if let Some(s) = args.seed {
        config.seed = s;
    }
    if let Some(b) = args.budget {
        config.budget = b;
    }
    if args.values {
        config.emit_value_table = true;
    }
    Ok(config)
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn write_dots(args: &CommonArgs, output: &invmetric_core::PipelineOutput) -> Result<()> {
    let Some(dot_path) = &args.dot else { return Ok(()) };
    let (Some(stick), Some(atlas)) = (&output.stick, &output.atlas) else {
        bail!("pipeline failed before the stick graph; nothing to export");
    };
    let window = &output.scenario.window;
    let partition = stick.islands(window)?;
    fs::write(dot_path, stick_graph_dot(stick, window, &partition)?)
        .with_context(|| format!("writing {}", dot_path.display()))?;
    let quotient_path = dot_path.with_extension("quotient.dot");
    fs::write(&quotient_path, island_quotient_dot(atlas, window, &partition)?)
        .with_context(|| format!("writing {}", quotient_path.display()))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Run(args) => {
            let config = load_config(&args)?;
            let started = std::time::Instant::now();
            let output = run_pipeline(&config)?;
            eprintln!(
                "pipeline finished in {:?}: verdict {:?}",
                started.elapsed(),
                output.report.verdict
            );
            emit(&output.report.to_json(), &args.out)?;
            write_dots(&args, &output)?;
            Ok(output.report.verdict == Verdict::CertifiedWitness)
        }
        Command::Verify(args) => {
            let config = load_config(&args)?;
            let report = verify_suite(&config)?;
            for p in &report.properties {
                eprintln!("{:>12} {}::{}", format!("{:?}", p.status), p.module, p.property);
            }
            emit(&report.to_json(), &args.out)?;
            Ok(report.passed)
        }
        Command::ExportGraph(args) => {
            let config = load_config(&args.common)?;
            let output = run_pipeline(&config)?;
            let (Some(stick), Some(atlas)) = (&output.stick, &output.atlas) else {
                bail!("pipeline failed before the stick graph; nothing to export");
            };
            let window = &output.scenario.window;
            let partition = stick.islands(window)?;
            let text = match args.kind {
                GraphKind::Stick => stick_graph_dot(stick, window, &partition)?,
                GraphKind::Quotient => island_quotient_dot(atlas, window, &partition)?,
            };
            match &args.common.dot {
                Some(path) => fs::write(path, &text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => emit(&text, &args.common.out)?,
            }
            Ok(true)
        }
    }
}
