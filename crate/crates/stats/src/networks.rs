use std::collections::VecDeque;

use evoscape_core::{BitString, Landscape};

use crate::StatsError;

/// Exhaustive enumeration refuses above this dimension by default: the
/// fitness table and assignment vector stay in the tens of megabytes.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct NetworkRecord {
    pub fitness: f64,
    pub size: u64,
}

/// Partition of the whole hypercube into neutral networks: maximal sets of
/// solutions connected through neutral neighbors.
///
/// `assignment[i]` is the network id of the solution with index `i` (bit
/// `b` of `i` = bit `b` of the solution). Ids are assigned in order of each
/// network's smallest solution index, so any two correct enumerations of
/// the same landscape produce identical labels.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkPartition {
    pub dimension: usize,
    pub assignment: Vec<u32>,
    pub networks: Vec<NetworkRecord>,
}

impl NetworkPartition {
    pub fn num_networks(&self) -> usize {
        self.networks.len()
    }

    pub fn network_of(&self, s: &BitString) -> u32 {
        self.assignment[s.to_index() as usize]
    }
}

fn check_limit(landscape: &dyn Landscape, limit: usize) -> Result<(), StatsError> {
    let dimension = landscape.dimension();
    if dimension > limit {
        return Err(StatsError::DimensionTooLarge { dimension, limit });
    }
    Ok(())
}

fn fitness_table(landscape: &dyn Landscape) -> Vec<f64> {
    let n = landscape.dimension();
    (0..1u64 << n)
        .map(|index| landscape.fitness(&BitString::from_index(index, n)))
        .collect()
}

/// Exact neutral-network partition by breadth-first flood fill over neutral
/// edges, visiting all 2^N solutions.
pub fn enumerate_networks(landscape: &dyn Landscape) -> Result<NetworkPartition, StatsError> {
    enumerate_networks_with_limit(landscape, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn enumerate_networks_with_limit(
    landscape: &dyn Landscape,
    limit: usize,
) -> Result<NetworkPartition, StatsError> {
    check_limit(landscape, limit)?;
    let n = landscape.dimension();
    let size = 1usize << n;
    let fitness = fitness_table(landscape);
    let mut assignment = vec![u32::MAX; size];
    let mut networks = Vec::new();
    let mut queue = VecDeque::new();

    for root in 0..size {
        if assignment[root] != u32::MAX {
            continue;
        }
        let id = networks.len() as u32;
        let level = fitness[root];
        let mut count = 0u64;
        assignment[root] = id;
        queue.push_back(root);
        while let Some(solution) = queue.pop_front() {
            count += 1;
            for bit in 0..n {
                let neighbor = solution ^ (1 << bit);
                if assignment[neighbor] == u32::MAX && fitness[neighbor] == level {
                    assignment[neighbor] = id;
                    queue.push_back(neighbor);
                }
            }
        }
        networks.push(NetworkRecord {
            fitness: level,
            size: count,
        });
    }

    Ok(NetworkPartition {
        dimension: n,
        assignment,
        networks,
    })
}

struct DisjointSets {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSets {
    fn new(count: usize) -> Self {
        Self {
            parent: (0..count as u32).collect(),
            size: vec![1; count],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        // Path halving keeps find iterative and near-constant.
        while self.parent[x as usize] != x {
            let grandparent = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grandparent;
            x = grandparent;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
    }
}

/// Independent second enumeration used as an oracle for
/// [`enumerate_networks`]: unions every neutral edge, then relabels roots in
/// first-appearance order so the result is comparable field by field.
pub fn enumerate_networks_union_find(
    landscape: &dyn Landscape,
) -> Result<NetworkPartition, StatsError> {
    check_limit(landscape, DEFAULT_EXHAUSTIVE_LIMIT)?;
    let n = landscape.dimension();
    let size = 1usize << n;
    let fitness = fitness_table(landscape);
    let mut sets = DisjointSets::new(size);

    for solution in 0..size {
        for bit in 0..n {
            let neighbor = solution ^ (1 << bit);
            if neighbor > solution && fitness[neighbor] == fitness[solution] {
                sets.union(solution as u32, neighbor as u32);
            }
        }
    }

    let mut labels = vec![u32::MAX; size];
    let mut assignment = vec![u32::MAX; size];
    let mut networks: Vec<NetworkRecord> = Vec::new();
    for solution in 0..size {
        let root = sets.find(solution as u32) as usize;
        if labels[root] == u32::MAX {
            labels[root] = networks.len() as u32;
            networks.push(NetworkRecord {
                fitness: fitness[solution],
                size: 0,
            });
        }
        let id = labels[root];
        assignment[solution] = id;
        networks[id as usize].size += 1;
    }

    Ok(NetworkPartition {
        dimension: n,
        assignment,
        networks,
    })
}
