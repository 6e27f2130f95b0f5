//! Neighborhood, neutrality and evolvability operations.
//!
//! These are the reference implementations: every neighbor is evaluated in
//! full. Walk samplers use [`crate::NeighborhoodCursor`] for the same
//! quantities; tests check the two routes against each other.

use crate::{BitString, Landscape, LandscapeError};

/// Choice of evolvability function. Only the maximal variant is defined for
/// now; the enum leaves room for other aggregations of neighbor fitness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvolvabilityKind {
    /// The best fitness reachable in one bit flip.
    #[default]
    MaxNeighborFitness,
}

fn check_dimension(landscape: &dyn Landscape, s: &BitString) -> Result<(), LandscapeError> {
    if s.len() != landscape.dimension() {
        return Err(LandscapeError::DimensionMismatch {
            expected: landscape.dimension(),
            actual: s.len(),
        });
    }
    Ok(())
}

/// The Hamming-1 neighborhood of `s`, ascending bit index. `s` itself is
/// never in the result.
pub fn neighbors(
    landscape: &dyn Landscape,
    s: &BitString,
) -> Result<Vec<BitString>, LandscapeError> {
    check_dimension(landscape, s)?;
    Ok((0..s.len()).map(|bit| s.flipped(bit)).collect())
}

/// Neighbors of `s` whose fitness equals `f(s)` exactly. Exact equality is
/// deliberate: clause-count fitness is an integer, so no epsilon applies.
pub fn neutral_neighbors(
    landscape: &dyn Landscape,
    s: &BitString,
) -> Result<Vec<BitString>, LandscapeError> {
    check_dimension(landscape, s)?;
    let own = landscape.fitness(s);
    Ok((0..s.len())
        .map(|bit| s.flipped(bit))
        .filter(|neighbor| landscape.fitness(neighbor) == own)
        .collect())
}

/// Number of neutral neighbors of `s`; between 0 and the dimension.
pub fn neutral_degree(landscape: &dyn Landscape, s: &BitString) -> Result<usize, LandscapeError> {
    Ok(neutral_neighbors(landscape, s)?.len())
}

/// Evolvability of `s`: for [`EvolvabilityKind::MaxNeighborFitness`], the
/// maximum fitness over the neighborhood (`s` excluded, so the value can be
/// below `f(s)` at a strict local optimum).
pub fn evolvability(
    landscape: &dyn Landscape,
    s: &BitString,
    kind: EvolvabilityKind,
) -> Result<f64, LandscapeError> {
    check_dimension(landscape, s)?;
    match kind {
        EvolvabilityKind::MaxNeighborFitness => {
            let best = (0..s.len())
                .map(|bit| landscape.fitness(&s.flipped(bit)))
                .fold(f64::NEG_INFINITY, f64::max);
            Ok(best)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ConstantLandscape, PopcountLandscape};

    #[test]
    fn neighbors_are_all_single_flips_in_order() {
        let landscape = ConstantLandscape::new(2, 0.0);
        let s: BitString = "00".parse().unwrap();
        let ns = neighbors(&landscape, &s).unwrap();
        assert_eq!(ns.len(), 2);
        assert_eq!(ns[0].to_string(), "10");
        assert_eq!(ns[1].to_string(), "01");
    }

    #[test]
    fn single_bit_neighborhood() {
        let landscape = ConstantLandscape::new(1, 0.0);
        let s: BitString = "1".parse().unwrap();
        let ns = neighbors(&landscape, &s).unwrap();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0].to_string(), "0");
    }

    #[test]
    fn neighbors_distinct_and_at_distance_one() {
        let landscape = ConstantLandscape::new(16, 0.0);
        let s: BitString = "0101010101010101".parse().unwrap();
        let ns = neighbors(&landscape, &s).unwrap();
        assert_eq!(ns.len(), 16);
        for (i, a) in ns.iter().enumerate() {
            assert_eq!(a.hamming_distance(&s), 1);
            assert_ne!(a, &s);
            for b in &ns[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn neighbors_rejects_wrong_length() {
        let landscape = ConstantLandscape::new(4, 0.0);
        let s: BitString = "000".parse().unwrap();
        assert_eq!(
            neighbors(&landscape, &s),
            Err(LandscapeError::DimensionMismatch {
                expected: 4,
                actual: 3
            })
        );
    }

    #[test]
    fn constant_landscape_is_fully_neutral() {
        let landscape = ConstantLandscape::new(8, 2.5);
        let s: BitString = "00110011".parse().unwrap();
        assert_eq!(neutral_neighbors(&landscape, &s).unwrap().len(), 8);
        assert_eq!(neutral_degree(&landscape, &s).unwrap(), 8);
    }

    #[test]
    fn popcount_landscape_has_no_neutrality() {
        let landscape = PopcountLandscape::new(6);
        let s: BitString = "010110".parse().unwrap();
        assert!(neutral_neighbors(&landscape, &s).unwrap().is_empty());
        assert_eq!(neutral_degree(&landscape, &s).unwrap(), 0);
    }

    #[test]
    fn evolvability_on_constant_landscape() {
        let landscape = ConstantLandscape::new(5, 3.0);
        let s: BitString = "00000".parse().unwrap();
        let e = evolvability(&landscape, &s, EvolvabilityKind::MaxNeighborFitness).unwrap();
        assert_eq!(e, 3.0);
    }

    #[test]
    fn evolvability_on_popcount() {
        let landscape = PopcountLandscape::new(4);
        let s: BitString = "0101".parse().unwrap();
        let e = evolvability(&landscape, &s, EvolvabilityKind::MaxNeighborFitness).unwrap();
        assert_eq!(e, 3.0);

        // All-ones: every flip goes down, so evolvability sits below f(s).
        let top: BitString = "1111".parse().unwrap();
        let e = evolvability(&landscape, &top, EvolvabilityKind::MaxNeighborFitness).unwrap();
        assert_eq!(e, 3.0);
        assert!(e < landscape.fitness(&top));
    }

    #[test]
    fn evolvability_bounds_every_neighbor() {
        let landscape = PopcountLandscape::new(8);
        let s: BitString = "01100101".parse().unwrap();
        let e = evolvability(&landscape, &s, EvolvabilityKind::MaxNeighborFitness).unwrap();
        let ns = neighbors(&landscape, &s).unwrap();
        assert!(ns.iter().all(|n| landscape.fitness(n) <= e));
        assert!(ns.iter().any(|n| landscape.fitness(n) == e));
    }
}
