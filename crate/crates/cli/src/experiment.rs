//! Batch experiment driver: sweeps over problem sizes, runs neutral walks,
//! and writes the three result CSVs (per instance, per point, lag profile).
//!
//! Output layout inside `output_dir`:
//!
//! * `instances.csv`: one row per generated instance
//! * `points.csv`: one row per `(n, m)` sweep point, averaged over instances
//! * `lags.csv`: mean autocorrelation profile per sweep point
//!
//! Every file starts with a schema comment line so downstream readers can
//! detect format drift, followed by an optional timestamp comment that can be
//! suppressed for byte-identical reruns.

use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{ensure, Context, Result};
use evoscape_core::{ConstantLandscape, Landscape, PopcountLandscape};
use evoscape_maxsat::{read_dimacs, InstanceSpec, MaxSatLandscape};
use evoscape_stats::{average_autocorrelation, neutral_degree_stats, StatsError};
use evoscape_walks::{mix_seed, run_evolvability_walks, WalkConfig, DEGREE_STREAM_TAG};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::{ExperimentConfig, Problem, SweepPoint};

/// First line of every CSV this tool writes.
pub const SCHEMA_VERSION_LINE: &str = "# evoscape results v1";

/// Sentinel written when a value is undefined for a row.
pub const NA: &str = "NA";

/// One instance worth of measurements, as written to `instances.csv`.
#[derive(Debug, Clone)]
pub struct ResultRow {
    pub num_vars: usize,
    pub num_clauses: usize,
    /// Clause density `m / n`, stored at full precision.
    pub alpha: f64,
    /// Seed the instance was generated from (and that seeded its walks).
    pub instance_seed: u64,
    pub mean_neutral_degree: f64,
    /// Averaged lag-1 autocorrelation; `None` when no walk was usable.
    pub rho_1: Option<f64>,
    /// Correlation length from the averaged profile, when defined.
    pub tau: Option<f64>,
    pub num_walks_used: usize,
    pub num_walks_discarded: usize,
}

/// Aggregate over all instances at one sweep point, as written to `points.csv`.
#[derive(Debug, Clone)]
pub struct PointSummary {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub alpha: f64,
    pub num_instances: usize,
    pub mean_neutral_degree: f64,
    /// Mean of per-instance `rho_1` over instances where it was defined.
    pub mean_rho_1: Option<f64>,
    /// Mean of per-instance `tau` over instances where it was defined.
    pub mean_tau: Option<f64>,
    pub num_tau_defined: usize,
    /// Mean of the per-walk correlation length means, where defined.
    pub mean_tau_per_walk: Option<f64>,
    /// Mean autocorrelation per lag, indexed by lag; entries are `None` when
    /// no instance produced a profile.
    pub mean_rho: Vec<Option<f64>>,
}

/// Everything `run_experiment` produced, for callers that want to inspect
/// results without re-reading the CSVs.
#[derive(Debug)]
pub struct ExperimentSummary {
    pub rows: Vec<ResultRow>,
    pub points: Vec<PointSummary>,
    pub instances_path: PathBuf,
    pub points_path: PathBuf,
    pub lags_path: PathBuf,
    /// Instances that produced no usable walk series.
    pub num_warnings: usize,
}

/// Per-instance measurement bundle kept in memory for aggregation.
struct InstanceOutcome {
    row: ResultRow,
    rho: Option<Vec<f64>>,
    tau_per_walk_mean: Option<f64>,
}

/// Landscape source for one sweep: either generated per instance or shared.
enum LandscapeSource {
    GeneratedMaxSat,
    Shared(Box<dyn Landscape + Sync>),
}

/// Runs the full sweep described by `config` and writes the result CSVs.
///
/// Output files are created before any measurement starts, so an unwritable
/// output directory fails fast. An instance whose walks all get discarded is
/// reported as a row with `NA` statistics plus a stderr warning; it does not
/// abort the run.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentSummary> {
    config
        .validate()
        .context("invalid experiment configuration")?;
    ensure!(config.max_lag >= 1, "max_lag must be at least 1");

    fs::create_dir_all(&config.output_dir).with_context(|| {
        format!(
            "cannot create output directory {}",
            config.output_dir.display()
        )
    })?;
    let instances_path = config.output_dir.join("instances.csv");
    let points_path = config.output_dir.join("points.csv");
    let lags_path = config.output_dir.join("lags.csv");

    // Open all outputs before computing anything.
    let mut instances_csv = open_output(&instances_path, config.timestamp)?;
    let mut points_csv = open_output(&points_path, config.timestamp)?;
    let mut lags_csv = open_output(&lags_path, config.timestamp)?;
    writeln!(
        instances_csv,
        "n,m,alpha,instance_seed,mean_neutral_degree,rho_1,tau,num_walks_used,num_walks_discarded"
    )?;
    writeln!(
        points_csv,
        "n,m,alpha,num_instances,mean_neutral_degree,mean_rho_1,mean_tau,num_tau_defined,mean_tau_per_walk"
    )?;
    writeln!(lags_csv, "n,m,lag,mean_rho")?;

    let (source, sweep) = resolve_problem(config)?;

    let mut rows = Vec::new();
    let mut points = Vec::new();
    let mut num_warnings = 0usize;
    for point in &sweep {
        let outcomes: Vec<InstanceOutcome> = (0..config.instances_per_point)
            .into_par_iter()
            .map(|index| run_instance(config, *point, index, &source))
            .collect::<Result<_>>()?;

        for outcome in &outcomes {
            if outcome.row.num_walks_used == 0 {
                num_warnings += 1;
                eprintln!(
                    "warning: n={} m={} seed={}: no usable walk series, reporting NA",
                    outcome.row.num_vars, outcome.row.num_clauses, outcome.row.instance_seed
                );
            }
            write_instance_row(&mut instances_csv, &outcome.row)?;
        }

        let summary = aggregate_point(*point, &outcomes, config.max_lag);
        write_point_row(&mut points_csv, &summary)?;
        write_lag_rows(&mut lags_csv, &summary)?;
        println!(
            "n={} m={}: mean neutral degree {:.3}, rho_1 {}, tau {}",
            summary.num_vars,
            summary.num_clauses,
            summary.mean_neutral_degree,
            na_or(summary.mean_rho_1),
            na_or(summary.mean_tau),
        );

        rows.extend(outcomes.into_iter().map(|o| o.row));
        points.push(summary);
    }

    instances_csv.flush()?;
    points_csv.flush()?;
    lags_csv.flush()?;

    Ok(ExperimentSummary {
        rows,
        points,
        instances_path,
        points_path,
        lags_path,
        num_warnings,
    })
}

/// Resolves the configured problem into a landscape source plus the sweep
/// points to visit. Non-generated problems collapse to a single point.
fn resolve_problem(config: &ExperimentConfig) -> Result<(LandscapeSource, Vec<SweepPoint>)> {
    match &config.problem {
        Problem::MaxSat => Ok((LandscapeSource::GeneratedMaxSat, config.sweep.clone())),
        Problem::Dimacs(path) => {
            let file = File::open(path)
                .with_context(|| format!("cannot open DIMACS file {}", path.display()))?;
            let formula = read_dimacs(BufReader::new(file))
                .with_context(|| format!("cannot parse DIMACS file {}", path.display()))?;
            let point = SweepPoint {
                num_vars: formula.num_vars(),
                num_clauses: formula.num_clauses(),
            };
            Ok((
                LandscapeSource::Shared(Box::new(MaxSatLandscape::new(formula))),
                vec![point],
            ))
        }
        Problem::Constant(dimension) => {
            let point = SweepPoint {
                num_vars: *dimension,
                num_clauses: 0,
            };
            Ok((
                LandscapeSource::Shared(Box::new(ConstantLandscape::new(*dimension, 0.0))),
                vec![point],
            ))
        }
        Problem::Popcount(dimension) => {
            let point = SweepPoint {
                num_vars: *dimension,
                num_clauses: 0,
            };
            Ok((
                LandscapeSource::Shared(Box::new(PopcountLandscape::new(*dimension))),
                vec![point],
            ))
        }
    }
}

/// Derives the per-instance seed by chaining the master seed through the
/// sweep coordinates and the instance index.
pub fn instance_seed(master_seed: u64, point: SweepPoint, index: usize) -> u64 {
    let s = mix_seed(master_seed, point.num_vars as u64);
    let s = mix_seed(s, point.num_clauses as u64);
    mix_seed(s, index as u64)
}

fn run_instance(
    config: &ExperimentConfig,
    point: SweepPoint,
    index: usize,
    source: &LandscapeSource,
) -> Result<InstanceOutcome> {
    let seed = instance_seed(config.master_seed, point, index);

    let generated;
    let landscape: &dyn Landscape = match source {
        LandscapeSource::Shared(shared) => shared.as_ref(),
        LandscapeSource::GeneratedMaxSat => {
            let spec = InstanceSpec {
                num_vars: point.num_vars,
                num_clauses: point.num_clauses,
                literals_per_clause: config.literals_per_clause,
                seed,
            };
            generated = MaxSatLandscape::new(spec.generate()?);
            &generated
        }
    };

    let walk = WalkConfig {
        seed,
        ..config.walk
    };
    let traces = run_evolvability_walks(landscape, &walk)?;
    let report = match average_autocorrelation(&traces, config.max_lag, walk.min_usable_length) {
        Ok(report) => Some(report),
        Err(StatsError::NoUsableSeries { .. }) => None,
        Err(other) => return Err(other.into()),
    };

    let mut degree_rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, DEGREE_STREAM_TAG));
    let degrees = neutral_degree_stats(landscape, config.degree_samples, &mut degree_rng);

    let (rho_1, tau, used, discarded, rho, tau_per_walk_mean) = match report {
        Some(report) => (
            Some(report.rho[1]),
            report.tau,
            report.num_series_used,
            report.num_series_discarded,
            Some(report.rho),
            report.tau_per_walk_mean,
        ),
        None => (None, None, 0, walk.num_walks, None, None),
    };

    Ok(InstanceOutcome {
        row: ResultRow {
            num_vars: point.num_vars,
            num_clauses: point.num_clauses,
            alpha: point.num_clauses as f64 / point.num_vars as f64,
            instance_seed: seed,
            mean_neutral_degree: degrees.mean,
            rho_1,
            tau,
            num_walks_used: used,
            num_walks_discarded: discarded,
        },
        rho,
        tau_per_walk_mean,
    })
}

fn aggregate_point(
    point: SweepPoint,
    outcomes: &[InstanceOutcome],
    max_lag: usize,
) -> PointSummary {
    let num_instances = outcomes.len();
    let mean_neutral_degree = mean(outcomes.iter().map(|o| o.row.mean_neutral_degree));
    let mean_rho_1 = mean_defined(outcomes.iter().map(|o| o.row.rho_1));
    let taus: Vec<f64> = outcomes.iter().filter_map(|o| o.row.tau).collect();
    let mean_tau = if taus.is_empty() {
        None
    } else {
        Some(taus.iter().sum::<f64>() / taus.len() as f64)
    };
    let mean_tau_per_walk = mean_defined(outcomes.iter().map(|o| o.tau_per_walk_mean));

    let mean_rho = (0..=max_lag)
        .map(|lag| mean_defined(outcomes.iter().map(|o| o.rho.as_ref().map(|r| r[lag]))))
        .collect();

    PointSummary {
        num_vars: point.num_vars,
        num_clauses: point.num_clauses,
        alpha: point.num_clauses as f64 / point.num_vars as f64,
        num_instances,
        mean_neutral_degree,
        mean_rho_1,
        mean_tau,
        num_tau_defined: taus.len(),
        mean_tau_per_walk,
        mean_rho,
    }
}

fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut count = 0usize;
    for v in values {
        sum += v;
        count += 1;
    }
    if count == 0 {
        f64::NAN
    } else {
        sum / count as f64
    }
}

/// Mean over the `Some` entries; `None` when nothing was defined.
fn mean_defined(values: impl Iterator<Item = Option<f64>>) -> Option<f64> {
    let mut sum = 0.0;
    let mut count = 0usize;
    for v in values.flatten() {
        sum += v;
        count += 1;
    }
    if count == 0 {
        None
    } else {
        Some(sum / count as f64)
    }
}

fn open_output(path: &PathBuf, timestamp: bool) -> Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    let mut writer = BufWriter::new(file);
    write_preamble(&mut writer, timestamp)?;
    Ok(writer)
}

fn write_preamble<W: Write>(writer: &mut W, timestamp: bool) -> io::Result<()> {
    writeln!(writer, "{SCHEMA_VERSION_LINE}")?;
    if timestamp {
        let now = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
        writeln!(writer, "# generated {now}")?;
    }
    Ok(())
}

/// Formats an optional value, using the `NA` sentinel when undefined.
fn na_or(value: Option<f64>) -> String {
    match value {
        Some(v) => v.to_string(),
        None => NA.to_string(),
    }
}

fn write_instance_row<W: Write>(writer: &mut W, row: &ResultRow) -> io::Result<()> {
    writeln!(
        writer,
        "{},{},{},{},{},{},{},{},{}",
        row.num_vars,
        row.num_clauses,
        row.alpha,
        row.instance_seed,
        row.mean_neutral_degree,
        na_or(row.rho_1),
        na_or(row.tau),
        row.num_walks_used,
        row.num_walks_discarded,
    )
}

fn write_point_row<W: Write>(writer: &mut W, p: &PointSummary) -> io::Result<()> {
    writeln!(
        writer,
        "{},{},{},{},{},{},{},{},{}",
        p.num_vars,
        p.num_clauses,
        p.alpha,
        p.num_instances,
        p.mean_neutral_degree,
        na_or(p.mean_rho_1),
        na_or(p.mean_tau),
        p.num_tau_defined,
        na_or(p.mean_tau_per_walk),
    )
}

fn write_lag_rows<W: Write>(writer: &mut W, p: &PointSummary) -> io::Result<()> {
    for (lag, rho) in p.mean_rho.iter().enumerate() {
        writeln!(
            writer,
            "{},{},{},{}",
            p.num_vars,
            p.num_clauses,
            lag,
            na_or(*rho)
        )?;
    }
    Ok(())
}
