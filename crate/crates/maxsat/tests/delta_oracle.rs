//! Incremental evaluation must agree with full re-evaluation everywhere.

use evoscape_core::{BitString, FullScanCursor, Landscape, NeighborhoodCursor};
use evoscape_maxsat::{InstanceSpec, MaxSatLandscape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn landscape(seed: u64) -> MaxSatLandscape {
    let spec = InstanceSpec {
        num_vars: 12,
        num_clauses: 52,
        literals_per_clause: 3,
        seed,
    };
    MaxSatLandscape::new(spec.generate().unwrap())
}

#[test]
fn flip_delta_matches_full_reevaluation() {
    for seed in 0..5 {
        let landscape = landscape(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for _ in 0..20 {
            let s = BitString::random(12, &mut rng);
            let base = landscape.fitness(&s);
            for bit in 0..12 {
                let delta = landscape.flip_delta(&s, bit).unwrap() as f64;
                assert_eq!(base + delta, landscape.fitness(&s.flipped(bit)));
            }
        }
    }
}

#[test]
fn cursor_stays_consistent_along_random_move_sequences() {
    for seed in 0..5 {
        let landscape = landscape(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xcafe);
        let start = BitString::random(12, &mut rng);
        let mut cursor = landscape.cursor(start);
        for _ in 0..200 {
            let expected: Vec<f64> = (0..12)
                .map(|bit| landscape.fitness(&cursor.solution().flipped(bit)))
                .collect();
            assert_eq!(cursor.neighbor_fitnesses(), expected.as_slice());
            assert_eq!(cursor.fitness(), landscape.fitness(cursor.solution()));
            let bit = rng.random_range(0..12);
            cursor.move_to_neighbor(bit);
        }
    }
}

#[test]
fn delta_cursor_and_full_scan_cursor_agree() {
    let landscape = landscape(41);
    let start: BitString = BitString::zeros(12);
    let mut fast = landscape.cursor(start.clone());
    let mut slow = FullScanCursor::new(&landscape, start);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        assert_eq!(fast.solution(), slow.solution());
        assert_eq!(fast.fitness(), slow.fitness());
        assert_eq!(fast.neighbor_fitnesses(), slow.neighbor_fitnesses());
        let bit = rng.random_range(0..12);
        fast.move_to_neighbor(bit);
        slow.move_to_neighbor(bit);
    }
}
