//! Flat key = value experiment configuration.
//!
//! One `key = value` pair per line; `#` starts a comment; blank lines are
//! skipped. Keys, all optional unless noted:
//!
//! ```text
//! problem             maxsat | dimacs:<path> | constant:<N> | popcount:<N>   (default maxsat)
//! k                   literals per clause                                    (default 3)
//! sweep               space/comma-separated N:m pairs; required for maxsat
//! instances_per_point instances per sweep point                              (default 30)
//! walk_length         steps per neutral walk                                 (default 100)
//! num_walks           walks per instance                                     (default 1000)
//! min_usable_length   shortest trace entering the average                    (default 20)
//! max_lag             autocorrelation lags computed, >= 1                    (default 20)
//! degree_samples      solutions sampled for neutral-degree stats             (default 10000)
//! master_seed         64-bit experiment seed                                 (default 0)
//! timestamp           on | off, timestamp comment in CSV headers             (default on)
//! out                 output directory                                       (default results)
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use evoscape_walks::WalkConfig;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config: {0}")]
    Io(String),
    #[error("line {line}: expected 'key = value', found {found:?}")]
    NotKeyValue { line: usize, found: String },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key {key:?}")]
    DuplicateKey { line: usize, key: String },
    #[error("line {line}: bad value {value:?} for {key} (expected {expected})")]
    BadValue {
        line: usize,
        key: &'static str,
        value: String,
        expected: &'static str,
    },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    MaxSat,
    Dimacs(PathBuf),
    Constant(usize),
    Popcount(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepPoint {
    pub num_vars: usize,
    pub num_clauses: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub problem: Problem,
    pub literals_per_clause: usize,
    pub sweep: Vec<SweepPoint>,
    pub instances_per_point: usize,
    pub walk: WalkConfig,
    pub max_lag: usize,
    pub degree_samples: usize,
    pub master_seed: u64,
    pub timestamp: bool,
    pub output_dir: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            problem: Problem::MaxSat,
            literals_per_clause: 3,
            sweep: Vec::new(),
            instances_per_point: 30,
            walk: WalkConfig::default(),
            max_lag: 20,
            degree_samples: 10_000,
            master_seed: 0,
            timestamp: true,
            output_dir: PathBuf::from("results"),
        }
    }
}

impl ExperimentConfig {
    /// Checks cross-field consistency; parsing calls this automatically, so
    /// only hand-built configs need it.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.problem == Problem::MaxSat && self.sweep.is_empty() {
            return Err(ConfigError::Invalid(
                "problem maxsat needs a sweep of N:m points".to_string(),
            ));
        }
        if let Problem::Constant(0) | Problem::Popcount(0) = self.problem {
            return Err(ConfigError::Invalid(
                "problem dimension must be positive".to_string(),
            ));
        }
        if let Err(e) = self.walk.validate() {
            return Err(ConfigError::Invalid(e.to_string()));
        }
        Ok(())
    }
}

pub fn load_config(path: &Path) -> Result<ExperimentConfig, ConfigError> {
    let text = fs::read_to_string(path)
        .map_err(|e| ConfigError::Io(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<ExperimentConfig, ConfigError> {
    let mut config = ExperimentConfig::default();
    let mut seen: Vec<&str> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(ConfigError::NotKeyValue {
                line,
                found: content.to_string(),
            });
        };
        let key = key.trim();
        let value = value.trim();
        let canonical = apply_key(&mut config, key, value, line)?;
        if seen.contains(&canonical) {
            return Err(ConfigError::DuplicateKey {
                line,
                key: key.to_string(),
            });
        }
        seen.push(canonical);
    }

    config.validate()?;
    Ok(config)
}

fn apply_key(
    config: &mut ExperimentConfig,
    key: &str,
    value: &str,
    line: usize,
) -> Result<&'static str, ConfigError> {
    fn positive(value: &str, line: usize, key: &'static str) -> Result<usize, ConfigError> {
        match value.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(ConfigError::BadValue {
                line,
                key,
                value: value.to_string(),
                expected: "a positive integer",
            }),
        }
    }

    match key {
        "problem" => {
            config.problem = parse_problem(value, line)?;
            Ok("problem")
        }
        "k" => {
            config.literals_per_clause = positive(value, line, "k")?;
            Ok("k")
        }
        "sweep" => {
            config.sweep = parse_sweep(value, line)?;
            Ok("sweep")
        }
        "instances_per_point" => {
            config.instances_per_point = positive(value, line, "instances_per_point")?;
            Ok("instances_per_point")
        }
        "walk_length" => {
            config.walk.walk_length = positive(value, line, "walk_length")?;
            Ok("walk_length")
        }
        "num_walks" => {
            config.walk.num_walks = positive(value, line, "num_walks")?;
            Ok("num_walks")
        }
        "min_usable_length" => {
            config.walk.min_usable_length = positive(value, line, "min_usable_length")?;
            Ok("min_usable_length")
        }
        "max_lag" => {
            config.max_lag = positive(value, line, "max_lag")?;
            Ok("max_lag")
        }
        "degree_samples" => {
            config.degree_samples = positive(value, line, "degree_samples")?;
            Ok("degree_samples")
        }
        "master_seed" => {
            config.master_seed = value.parse().map_err(|_| ConfigError::BadValue {
                line,
                key: "master_seed",
                value: value.to_string(),
                expected: "a 64-bit unsigned integer",
            })?;
            Ok("master_seed")
        }
        "timestamp" => {
            config.timestamp = match value {
                "on" => true,
                "off" => false,
                _ => {
                    return Err(ConfigError::BadValue {
                        line,
                        key: "timestamp",
                        value: value.to_string(),
                        expected: "on or off",
                    })
                }
            };
            Ok("timestamp")
        }
        "out" => {
            config.output_dir = PathBuf::from(value);
            Ok("out")
        }
        _ => Err(ConfigError::UnknownKey {
            line,
            key: key.to_string(),
        }),
    }
}

fn parse_problem(value: &str, line: usize) -> Result<Problem, ConfigError> {
    let bad = |expected| ConfigError::BadValue {
        line,
        key: "problem",
        value: value.to_string(),
        expected,
    };
    if value == "maxsat" {
        return Ok(Problem::MaxSat);
    }
    if let Some(path) = value.strip_prefix("dimacs:") {
        if path.is_empty() {
            return Err(bad("dimacs:<path>"));
        }
        return Ok(Problem::Dimacs(PathBuf::from(path)));
    }
    if let Some(n) = value.strip_prefix("constant:") {
        let n = n.parse().map_err(|_| bad("constant:<N>"))?;
        return Ok(Problem::Constant(n));
    }
    if let Some(n) = value.strip_prefix("popcount:") {
        let n = n.parse().map_err(|_| bad("popcount:<N>"))?;
        return Ok(Problem::Popcount(n));
    }
    Err(bad("maxsat, dimacs:<path>, constant:<N> or popcount:<N>"))
}

fn parse_sweep(value: &str, line: usize) -> Result<Vec<SweepPoint>, ConfigError> {
    let bad = || ConfigError::BadValue {
        line,
        key: "sweep",
        value: value.to_string(),
        expected: "N:m pairs such as 16:39 16:59",
    };
    let mut points = Vec::new();
    for token in value.split([',', ' ', '\t']).filter(|t| !t.is_empty()) {
        let (n, m) = token.split_once(':').ok_or_else(bad)?;
        let num_vars: usize = n.parse().map_err(|_| bad())?;
        let num_clauses: usize = m.parse().map_err(|_| bad())?;
        if num_vars == 0 || num_clauses == 0 {
            return Err(bad());
        }
        points.push(SweepPoint {
            num_vars,
            num_clauses,
        });
    }
    if points.is_empty() {
        return Err(bad());
    }
    Ok(points)
}
