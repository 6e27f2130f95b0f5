//! Cross-checks of indexing and neighborhood semantics against brute force.

use evoscape_core::{
    evolvability, neighbors, neutral_degree, BitString, EvolvabilityKind, FullScanCursor,
    Landscape, NeighborhoodCursor, PopcountLandscape,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn index_round_trip_covers_the_whole_cube() {
    for dimension in [1, 5, 11] {
        for index in 0..(1u64 << dimension) {
            let s = BitString::from_index(index, dimension);
            assert_eq!(s.len(), dimension);
            assert_eq!(s.to_index(), index);
        }
    }
}

#[test]
fn neighbors_enumerate_exactly_the_hamming_ball_of_radius_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let landscape = PopcountLandscape::new(9);
    for _ in 0..50 {
        let s = BitString::random(9, &mut rng);
        let listed = neighbors(&landscape, &s).unwrap();
        assert_eq!(listed.len(), 9);
        for (bit, neighbor) in listed.iter().enumerate() {
            assert_eq!(s.hamming_distance(neighbor), 1);
            assert_eq!(neighbor, &s.flipped(bit));
        }
    }
}

#[test]
fn cursor_agrees_with_direct_evaluation_under_random_moves() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let landscape = PopcountLandscape::new(8);
    let mut cursor = FullScanCursor::new(&landscape, BitString::random(8, &mut rng));
    for _ in 0..200 {
        assert_eq!(cursor.fitness(), landscape.fitness(cursor.solution()));
        let scan = cursor.neighbor_fitnesses().to_vec();
        for (bit, fitness) in scan.iter().enumerate() {
            assert_eq!(*fitness, landscape.fitness(&cursor.solution().flipped(bit)));
        }
        let bit = rng.random_range(0..8);
        cursor.move_to_neighbor(bit);
    }
}

#[test]
fn degree_and_evolvability_match_brute_force_on_popcount() {
    let landscape = PopcountLandscape::new(6);
    for index in 0..(1u64 << 6) {
        let s = BitString::from_index(index, 6);
        let ones = s.count_ones();
        // No two single-flip neighbors share a popcount with the center.
        assert_eq!(neutral_degree(&landscape, &s).unwrap(), 0);
        let best = evolvability(&landscape, &s, EvolvabilityKind::MaxNeighborFitness).unwrap();
        let expected = if ones == 6 { 5.0 } else { (ones + 1) as f64 };
        assert_eq!(best, expected);
    }
}
