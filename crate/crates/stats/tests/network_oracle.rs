//! Dual-algorithm network enumeration on real MAX-3-SAT landscapes, plus
//! the structural invariants any correct partition must satisfy.

use evoscape_core::{BitString, Landscape};
use evoscape_maxsat::{InstanceSpec, MaxSatLandscape};
use evoscape_stats::{enumerate_networks, enumerate_networks_union_find, NetworkPartition};

fn landscape(num_vars: usize, num_clauses: usize, seed: u64) -> MaxSatLandscape {
    let spec = InstanceSpec {
        num_vars,
        num_clauses,
        literals_per_clause: 3,
        seed,
    };
    MaxSatLandscape::new(spec.generate().unwrap())
}

fn check_invariants(partition: &NetworkPartition, landscape: &dyn Landscape) {
    let n = partition.dimension;
    let total: u64 = partition.networks.iter().map(|r| r.size).sum();
    assert_eq!(total, 1 << n);

    for (index, &id) in partition.assignment.iter().enumerate() {
        let solution = BitString::from_index(index as u64, n);
        let fitness = landscape.fitness(&solution);
        assert_eq!(fitness, partition.networks[id as usize].fitness);
        for bit in 0..n {
            let neighbor_index = index ^ (1 << bit);
            let neighbor = BitString::from_index(neighbor_index as u64, n);
            let neighbor_id = partition.assignment[neighbor_index];
            // Every neutral edge stays inside one network.
            if landscape.fitness(&neighbor) == fitness {
                assert_eq!(neighbor_id, id);
            }
        }
    }
}

#[test]
fn bfs_and_union_find_agree_on_random_instances() {
    for seed in 0..30 {
        let num_vars = 8 + 2 * (seed as usize % 3);
        let landscape = landscape(num_vars, (num_vars as f64 * 2.5) as usize, seed);
        let bfs = enumerate_networks(&landscape).unwrap();
        let union_find = enumerate_networks_union_find(&landscape).unwrap();
        assert_eq!(bfs, union_find);
        check_invariants(&bfs, &landscape);
    }
}

#[test]
fn reference_instance_partition_is_stable() {
    let landscape = landscape(12, 30, 99);
    let partition = enumerate_networks(&landscape).unwrap();
    assert_eq!(
        partition,
        enumerate_networks_union_find(&landscape).unwrap()
    );
    check_invariants(&partition, &landscape);
    let total: u64 = partition.networks.iter().map(|r| r.size).sum();
    assert_eq!(total, 4096);
    assert!(partition.num_networks() > 1);
}
