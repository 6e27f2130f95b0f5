//! `evoscape` binary: generate instances, run sweeps, enumerate networks,
//! and emit plot scripts.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use evoscape_cli::config::load_config;
use evoscape_cli::experiment::run_experiment;
use evoscape_cli::plot::emit_plot_script;
use evoscape_maxsat::{read_dimacs, write_dimacs, InstanceSpec, MaxSatLandscape};
use evoscape_stats::{enumerate_networks, enumerate_networks_with_limit};

#[derive(Parser)]
#[command(
    name = "evoscape",
    version,
    about = "Neutrality and evolvability measurements on MAX-k-SAT fitness landscapes"
)]
struct Cli {
    /// Master seed; overrides the config file's master_seed.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Experiment configuration file (key = value lines).
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Output directory; overrides the config file's out.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one uniform random MAX-k-SAT instance as a DIMACS CNF file.
    Generate {
        /// Number of variables.
        #[arg(long)]
        n: usize,
        /// Number of clauses.
        #[arg(long)]
        m: usize,
        /// Literals per clause.
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Run the sweep described by --config and write result CSVs.
    Measure,
    /// Exhaustively enumerate the neutral networks of a DIMACS instance.
    Networks {
        /// Instance to analyze.
        #[arg(long, value_name = "FILE")]
        dimacs: PathBuf,
        /// Raise the exhaustive-enumeration dimension cap (default 20).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Emit a gnuplot script (tau vs m, one curve per n) from a result CSV.
    Plot {
        /// Per-instance result CSV, as written by `measure`.
        #[arg(long, value_name = "FILE")]
        csv: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    // Usage error, same exit code clap uses for bad flags.
    if matches!(cli.command, Command::Measure) && cli.config.is_none() {
        eprintln!("error: measure requires --config <FILE>");
        return ExitCode::from(2);
    }

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let out_dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
    match cli.command {
        Command::Generate { n, m, k } => {
            let seed = cli.seed.unwrap_or(0);
            let spec = InstanceSpec {
                num_vars: n,
                num_clauses: m,
                literals_per_clause: k,
                seed,
            };
            let formula = spec.generate()?;
            fs::create_dir_all(&out_dir)
                .with_context(|| format!("cannot create {}", out_dir.display()))?;
            let path = out_dir.join(format!("maxsat_n{n}_m{m}_k{k}_s{seed}.cnf"));
            let file =
                File::create(&path).with_context(|| format!("cannot create {}", path.display()))?;
            let mut writer = BufWriter::new(file);
            write_dimacs(&mut writer, &formula)?;
            writer.flush()?;
            println!("wrote {}", path.display());
        }
        Command::Measure => {
            let config_path = cli.config.as_ref().expect("checked in main");
            let mut config = load_config(config_path)
                .with_context(|| format!("cannot load {}", config_path.display()))?;
            if let Some(seed) = cli.seed {
                config.master_seed = seed;
            }
            if let Some(out) = cli.out {
                config.output_dir = out;
            }
            let summary = run_experiment(&config)?;
            println!(
                "measured {} instances over {} sweep points ({} without usable walks)",
                summary.rows.len(),
                summary.points.len(),
                summary.num_warnings
            );
            println!("wrote {}", summary.instances_path.display());
            println!("wrote {}", summary.points_path.display());
            println!("wrote {}", summary.lags_path.display());
        }
        Command::Networks { dimacs, limit } => {
            let file =
                File::open(&dimacs).with_context(|| format!("cannot open {}", dimacs.display()))?;
            let formula = read_dimacs(BufReader::new(file))
                .with_context(|| format!("cannot parse {}", dimacs.display()))?;
            let landscape = MaxSatLandscape::new(formula);
            let partition = match limit {
                Some(limit) => enumerate_networks_with_limit(&landscape, limit),
                None => enumerate_networks(&landscape),
            }?;

            fs::create_dir_all(&out_dir)
                .with_context(|| format!("cannot create {}", out_dir.display()))?;
            let path = out_dir.join("networks.csv");
            let file =
                File::create(&path).with_context(|| format!("cannot create {}", path.display()))?;
            let mut writer = BufWriter::new(file);
            writeln!(writer, "# evoscape networks v1")?;
            writeln!(writer, "network_id,fitness,size")?;
            for (id, record) in partition.networks.iter().enumerate() {
                writeln!(writer, "{},{},{}", id, record.fitness, record.size)?;
            }
            writer.flush()?;

            let total: u64 = partition.networks.iter().map(|r| r.size).sum();
            let largest = partition.networks.iter().map(|r| r.size).max().unwrap_or(0);
            println!(
                "{} neutral networks over {} solutions (largest: {})",
                partition.num_networks(),
                total,
                largest
            );
            println!("wrote {}", path.display());
        }
        Command::Plot { csv } => {
            fs::create_dir_all(&out_dir)
                .with_context(|| format!("cannot create {}", out_dir.display()))?;
            let path = out_dir.join("plot.gp");
            emit_plot_script(&csv, &path)?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}
