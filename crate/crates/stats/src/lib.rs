//! Statistics over walk observation series and whole landscapes.
//!
//! The central quantities: the sample autocorrelation function of a series,
//! the correlation length derived from its lag-1 value, and the average of
//! per-walk autocorrelations across many walks. Alongside them, exhaustive
//! neutral-network enumeration (with two independent algorithms that must
//! agree) and sampled neutral-degree summaries.

mod autocorr;
mod degrees;
mod networks;

pub use autocorr::{autocorrelation, average_autocorrelation, correlation_length, AutocorrReport};
pub use degrees::{neutral_degree_stats, NeutralDegreeSummary};
pub use networks::{
    enumerate_networks, enumerate_networks_union_find, enumerate_networks_with_limit,
    NetworkPartition, NetworkRecord, DEFAULT_EXHAUSTIVE_LIMIT,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StatsError {
    #[error("series variance is zero, autocorrelation undefined")]
    DegenerateSeries,
    #[error("series of length {len} is too short, need at least 2 observations")]
    SeriesTooShort { len: usize },
    #[error("max lag {max_lag} must be below the series length {len}")]
    LagExceedsSeries { max_lag: usize, len: usize },
    #[error("correlation length undefined for lag-1 autocorrelation {rho1} (needs rho1 > 0)")]
    CorrelationLengthUndefined { rho1: f64 },
    #[error("correlation length diverges for lag-1 autocorrelation {rho1} (needs rho1 < 1)")]
    CorrelationLengthDiverges { rho1: f64 },
    #[error("no usable series: all {discarded} were too short or had zero variance")]
    NoUsableSeries { discarded: usize },
    #[error("dimension {dimension} exceeds the exhaustive enumeration limit {limit}")]
    DimensionTooLarge { dimension: usize, limit: usize },
}
