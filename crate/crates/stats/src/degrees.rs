use evoscape_core::{BitString, Landscape};
use rand::Rng;

/// Sampled distribution of the neutral degree (count of equal-fitness
/// neighbors) over uniform random solutions. `variance` is the population
/// variance of the sample; `histogram[d]` counts solutions with degree `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct NeutralDegreeSummary {
    pub mean: f64,
    pub variance: f64,
    pub histogram: Vec<u64>,
    pub samples: usize,
}

pub fn neutral_degree_stats<R: Rng + ?Sized>(
    landscape: &dyn Landscape,
    samples: usize,
    rng: &mut R,
) -> NeutralDegreeSummary {
    assert!(samples >= 1, "need at least one sample");
    let n = landscape.dimension();
    let mut histogram = vec![0u64; n + 1];
    let mut sum = 0u64;
    let mut sum_of_squares = 0u64;
    for _ in 0..samples {
        let solution = BitString::random(n, rng);
        // One neighborhood scan per sample instead of n full evaluations.
        let mut cursor = landscape.cursor(solution);
        let own = cursor.fitness();
        let degree = cursor
            .neighbor_fitnesses()
            .iter()
            .filter(|&&f| f == own)
            .count();
        histogram[degree] += 1;
        sum += degree as u64;
        sum_of_squares += (degree * degree) as u64;
    }
    let mean = sum as f64 / samples as f64;
    let variance = (sum_of_squares as f64 / samples as f64 - mean * mean).max(0.0);
    NeutralDegreeSummary {
        mean,
        variance,
        histogram,
        samples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use evoscape_core::{ConstantLandscape, PopcountLandscape};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn constant_landscape_pins_the_degree_at_n() {
        let summary = neutral_degree_stats(
            &ConstantLandscape::new(8, 1.5),
            500,
            &mut ChaCha8Rng::seed_from_u64(1),
        );
        assert_eq!(summary.mean, 8.0);
        assert_eq!(summary.variance, 0.0);
        assert_eq!(summary.histogram[8], 500);
        assert_eq!(summary.samples, 500);
    }

    #[test]
    fn popcount_landscape_has_zero_neutral_degree() {
        let summary = neutral_degree_stats(
            &PopcountLandscape::new(8),
            500,
            &mut ChaCha8Rng::seed_from_u64(2),
        );
        assert_eq!(summary.mean, 0.0);
        assert_eq!(summary.variance, 0.0);
        assert_eq!(summary.histogram[0], 500);
    }

    #[test]
    fn histogram_mass_equals_sample_count() {
        let summary = neutral_degree_stats(
            &ConstantLandscape::new(4, 0.0),
            123,
            &mut ChaCha8Rng::seed_from_u64(3),
        );
        let mass: u64 = summary.histogram.iter().sum();
        assert_eq!(mass, 123);
    }

    #[test]
    #[should_panic(expected = "at least one sample")]
    fn zero_samples_rejected() {
        neutral_degree_stats(
            &ConstantLandscape::new(4, 0.0),
            0,
            &mut ChaCha8Rng::seed_from_u64(4),
        );
    }
}
