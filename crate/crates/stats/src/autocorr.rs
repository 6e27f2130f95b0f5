use evoscape_walks::WalkTrace;

use crate::StatsError;

/// Sample autocorrelation of `series` for lags `0..=max_lag`.
///
/// The estimator centers on the whole-series mean and divides by the full
/// sum of squares:
///
/// ```text
/// r(k) = sum_{t=0}^{L-1-k} (y_t - m)(y_{t+k} - m) / sum_{t=0}^{L-1} (y_t - m)^2
/// ```
///
/// which guarantees r(0) = 1 and |r(k)| <= 1. A constant series has zero
/// denominator and is reported as [`StatsError::DegenerateSeries`] so
/// callers can count and skip such walks.
pub fn autocorrelation(series: &[f64], max_lag: usize) -> Result<Vec<f64>, StatsError> {
    let len = series.len();
    if len < 2 {
        return Err(StatsError::SeriesTooShort { len });
    }
    if max_lag >= len {
        return Err(StatsError::LagExceedsSeries { max_lag, len });
    }
    let mean = series.iter().sum::<f64>() / len as f64;
    let centered: Vec<f64> = series.iter().map(|y| y - mean).collect();
    let denominator: f64 = centered.iter().map(|d| d * d).sum();
    if denominator == 0.0 {
        return Err(StatsError::DegenerateSeries);
    }
    let mut rho = Vec::with_capacity(max_lag + 1);
    rho.push(1.0);
    for k in 1..=max_lag {
        let numerator: f64 = centered[..len - k]
            .iter()
            .zip(&centered[k..])
            .map(|(a, b)| a * b)
            .sum();
        rho.push(numerator / denominator);
    }
    Ok(rho)
}

/// Correlation length tau = -1 / ln(rho1), defined for 0 < rho1 < 1.
/// Larger tau means slower decorrelation, a smoother landscape.
pub fn correlation_length(rho1: f64) -> Result<f64, StatsError> {
    // NaN lands here too, not in the divergent branch.
    if rho1.is_nan() || rho1 <= 0.0 {
        return Err(StatsError::CorrelationLengthUndefined { rho1 });
    }
    if rho1 >= 1.0 {
        return Err(StatsError::CorrelationLengthDiverges { rho1 });
    }
    Ok(-1.0 / rho1.ln())
}

/// Cross-walk autocorrelation summary.
///
/// `tau` comes from the averaged lag-1 value; `tau_per_walk_mean` is the
/// labeled alternative that averages each usable walk's own correlation
/// length (over walks where it is defined). The two orderings of averaging
/// are not equivalent, so both are reported.
#[derive(Debug, Clone, PartialEq)]
pub struct AutocorrReport {
    pub rho: Vec<f64>,
    pub tau: Option<f64>,
    pub tau_per_walk_mean: Option<f64>,
    pub num_series_used: usize,
    pub num_series_discarded: usize,
    pub total_observations: usize,
}

/// Unweighted per-trace mean of r(k) over usable traces.
///
/// A trace is usable if it holds at least `max(min_usable_length, max_lag
/// + 1)` observations and has nonzero variance; the rest are counted in
/// `num_series_discarded`. `total_observations` covers used traces only.
pub fn average_autocorrelation(
    traces: &[WalkTrace],
    max_lag: usize,
    min_usable_length: usize,
) -> Result<AutocorrReport, StatsError> {
    let needed = min_usable_length.max(max_lag + 1);
    let mut sums = vec![0.0; max_lag + 1];
    let mut used = 0usize;
    let mut discarded = 0usize;
    let mut total_observations = 0usize;
    let mut tau_sum = 0.0;
    let mut tau_count = 0usize;

    for trace in traces {
        if trace.observations.len() < needed {
            discarded += 1;
            continue;
        }
        match autocorrelation(&trace.observations, max_lag) {
            Ok(rho) => {
                for (sum, r) in sums.iter_mut().zip(&rho) {
                    *sum += r;
                }
                if max_lag >= 1 {
                    if let Ok(tau) = correlation_length(rho[1]) {
                        tau_sum += tau;
                        tau_count += 1;
                    }
                }
                used += 1;
                total_observations += trace.observations.len();
            }
            Err(_) => discarded += 1,
        }
    }

    if used == 0 {
        return Err(StatsError::NoUsableSeries { discarded });
    }
    let rho: Vec<f64> = sums.iter().map(|sum| sum / used as f64).collect();
    let tau = if max_lag >= 1 {
        correlation_length(rho[1]).ok()
    } else {
        None
    };
    let tau_per_walk_mean = (tau_count > 0).then(|| tau_sum / tau_count as f64);
    Ok(AutocorrReport {
        rho,
        tau,
        tau_per_walk_mean,
        num_series_used: used,
        num_series_discarded: discarded,
        total_observations,
    })
}
