use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mqdyn::model::{Geometry, ThermalConfig};
use mqdyn::runner::{emit, parse_orders, parse_pairs, run, OutputFormat, Preset, RunConfig};
use mqdyn::Error;

#[derive(Parser)]
#[command(name = "mqdyn", version, about = "MQ coherence and concurrence dynamics of dipolar spin clusters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate one system over a uniform tau grid and write the dataset.
    Run(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// fig1, fig2, fig3 or custom
    #[arg(long, default_value = "custom")]
    preset: String,
    /// Number of spins (custom runs only)
    #[arg(long)]
    n: Option<usize>,
    /// chain or ring (custom runs only)
    #[arg(long)]
    geometry: Option<String>,
    /// Nearest-neighbour dipolar coupling in 1/s
    #[arg(long)]
    dnn: Option<f64>,
    /// Target g for b·‖I_z‖, giving b = 2g/N
    #[arg(long, conflicts_with = "beta_b")]
    beta_norm: Option<f64>,
    /// Zeeman exponent b = βħω₀ used directly (default 10)
    #[arg(long)]
    beta_b: Option<f64>,
    #[arg(long)]
    tau_max: Option<f64>,
    #[arg(long)]
    tau_points: Option<usize>,
    /// Spin pairs, e.g. "1-2,1-3" (custom runs only)
    #[arg(long)]
    pairs: Option<String>,
    /// Integrated orders to emit, e.g. "0,2,4"
    #[arg(long)]
    orders: Option<String>,
    /// Output file (default <preset>.csv or <preset>.json)
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Log invariant violations instead of aborting
    #[arg(long)]
    lenient: bool,
}

fn build_config(args: &RunArgs) -> Result<RunConfig, Error> {
    let preset: Preset = args.preset.parse()?;
    let mut cfg = if preset == Preset::Custom {
        let n = args
            .n
            .ok_or_else(|| Error::Config("custom runs need --n".into()))?;
        let geometry: Geometry = args.geometry.as_deref().unwrap_or("chain").parse()?;
        RunConfig::custom(n, geometry)
    } else {
        if args.n.is_some() || args.geometry.is_some() || args.pairs.is_some() {
            return Err(Error::Config(format!(
                "preset {preset} fixes --n, --geometry and --pairs"
            )));
        }
        RunConfig::from_preset(preset)
    };
    if let Some(d) = args.dnn {
        cfg = cfg.with_d_nn(d);
    }
    if let Some(g) = args.beta_norm {
        cfg.thermal = ThermalConfig::NormTarget(g);
    }
    if let Some(b) = args.beta_b {
        cfg.thermal = ThermalConfig::Direct(b);
    }
    if let Some(t) = args.tau_max {
        cfg.tau_max = t;
    }
    if let Some(p) = args.tau_points {
        cfg.tau_points = p;
    }
    if let Some(p) = &args.pairs {
        cfg.pairs = parse_pairs(p)?;
    }
    if let Some(o) = &args.orders {
        cfg.emit_orders = parse_orders(o)?;
    }
    cfg.format = args.format.parse()?;
    cfg.workers = args.workers;
    cfg.strict = !args.lenient;
    let ext = match cfg.format {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
    };
    cfg.output_path = Some(args.out.clone().unwrap_or_else(|| PathBuf::from(format!("{preset}.{ext}"))));
    cfg.validate()?;
    Ok(cfg)
}

fn execute(args: &RunArgs) -> Result<(), Error> {
    let cfg = build_config(args)?;
    let result = run(&cfg)?;
    let path = cfg.output_path.as_deref().expect("set by build_config");
    for file in emit(&result, cfg.format, path)? {
        println!("wrote {}", file.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Run(args) => execute(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
