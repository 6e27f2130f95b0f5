use evoscape_core::{BitString, EvolvabilityKind, Landscape, NeighborhoodCursor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::seeding::{mix_seed, START_STREAM_TAG, WALK_STREAM_TAG_BASE};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WalkError {
    #[error("walk_length must be positive")]
    ZeroWalkLength,
    #[error("num_walks must be positive")]
    ZeroNumWalks,
    #[error("min_usable_length must be positive")]
    ZeroMinUsableLength,
    #[error("min_usable_length {min_usable_length} exceeds walk_length {walk_length}")]
    MinUsableExceedsLength {
        min_usable_length: usize,
        walk_length: usize,
    },
}

/// Parameters for a batch of walks on one landscape.
///
/// `walk_length` counts steps, so a full walk yields `walk_length + 1`
/// observations. Traces shorter than `min_usable_length` are excluded from
/// autocorrelation averaging downstream. The defaults (100 steps, 1000
/// walks, floor of 20) stabilize averaged lag-1 autocorrelation at desk
/// scale; all are configurable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkConfig {
    pub walk_length: usize,
    pub num_walks: usize,
    pub min_usable_length: usize,
    pub seed: u64,
    pub evolvability_kind: EvolvabilityKind,
}

impl Default for WalkConfig {
    fn default() -> Self {
        Self {
            walk_length: 100,
            num_walks: 1000,
            min_usable_length: 20,
            seed: 0,
            evolvability_kind: EvolvabilityKind::MaxNeighborFitness,
        }
    }
}

impl WalkConfig {
    pub fn validate(&self) -> Result<(), WalkError> {
        if self.walk_length == 0 {
            return Err(WalkError::ZeroWalkLength);
        }
        if self.num_walks == 0 {
            return Err(WalkError::ZeroNumWalks);
        }
        if self.min_usable_length == 0 {
            return Err(WalkError::ZeroMinUsableLength);
        }
        if self.min_usable_length > self.walk_length {
            return Err(WalkError::MinUsableExceedsLength {
                min_usable_length: self.min_usable_length,
                walk_length: self.walk_length,
            });
        }
        Ok(())
    }
}

/// One walk's observation series.
///
/// `network_fitness` is set for neutral-based walks, where every underlying
/// solution has exactly that fitness; plain random walks leave it `None`.
/// `terminated_early` marks a neutral walk stranded on a solution with
/// neutral degree zero, a normal outcome rather than an error.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkTrace {
    pub observations: Vec<f64>,
    pub terminated_early: bool,
    pub start: BitString,
    pub network_fitness: Option<f64>,
}

/// Steps uniformly among neutral neighbors, with revisits allowed. Each
/// visited solution costs one neighborhood scan, shared between neighbor
/// selection and the evolvability read.
pub struct NeutralWalker<'a> {
    cursor: Box<dyn NeighborhoodCursor + 'a>,
    network_fitness: f64,
    candidates: Vec<usize>,
}

impl<'a> NeutralWalker<'a> {
    pub fn new(landscape: &'a dyn Landscape, start: BitString) -> Self {
        let cursor = landscape.cursor(start);
        let network_fitness = cursor.fitness();
        Self {
            cursor,
            network_fitness,
            candidates: Vec::new(),
        }
    }

    pub fn solution(&self) -> &BitString {
        self.cursor.solution()
    }

    pub fn fitness(&self) -> f64 {
        self.cursor.fitness()
    }

    pub fn network_fitness(&self) -> f64 {
        self.network_fitness
    }

    pub fn neutral_degree(&mut self) -> usize {
        let own = self.network_fitness;
        self.cursor
            .neighbor_fitnesses()
            .iter()
            .filter(|&&f| f == own)
            .count()
    }

    /// Best fitness among the current solution's neighbors.
    pub fn max_neighbor_fitness(&mut self) -> f64 {
        self.cursor
            .neighbor_fitnesses()
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Moves to a uniformly chosen neutral neighbor. Returns false, without
    /// moving, when the current solution has none.
    pub fn step<R: Rng + ?Sized>(&mut self, rng: &mut R) -> bool {
        let own = self.network_fitness;
        self.candidates.clear();
        let scan = self.cursor.neighbor_fitnesses();
        for (bit, &f) in scan.iter().enumerate() {
            if f == own {
                self.candidates.push(bit);
            }
        }
        if self.candidates.is_empty() {
            return false;
        }
        let bit = self.candidates[rng.random_range(0..self.candidates.len())];
        self.cursor.move_to_neighbor(bit);
        debug_assert_eq!(self.cursor.fitness(), own);
        true
    }
}

/// Unrestricted random walk: each step flips a uniformly chosen bit.
/// Observations are the fitness series f(s_0)..f(s_L).
pub fn random_walk<R: Rng + ?Sized>(
    landscape: &dyn Landscape,
    start: BitString,
    length: usize,
    rng: &mut R,
) -> WalkTrace {
    let mut cursor = landscape.cursor(start.clone());
    let mut observations = Vec::with_capacity(length + 1);
    observations.push(cursor.fitness());
    for _ in 0..length {
        cursor.move_to_neighbor(rng.random_range(0..landscape.dimension()));
        observations.push(cursor.fitness());
    }
    WalkTrace {
        observations,
        terminated_early: false,
        start,
        network_fitness: None,
    }
}

/// Neutral random walk: stays on the start's neutral network. Observations
/// are the (constant) fitness series; the walk stops early if it reaches a
/// solution with no neutral neighbor.
pub fn neutral_random_walk<R: Rng + ?Sized>(
    landscape: &dyn Landscape,
    start: BitString,
    length: usize,
    rng: &mut R,
) -> WalkTrace {
    let mut walker = NeutralWalker::new(landscape, start.clone());
    let network_fitness = walker.network_fitness();
    let mut observations = Vec::with_capacity(length + 1);
    observations.push(walker.fitness());
    let mut terminated_early = false;
    for _ in 0..length {
        if !walker.step(rng) {
            terminated_early = true;
            break;
        }
        observations.push(walker.fitness());
    }
    WalkTrace {
        observations,
        terminated_early,
        start,
        network_fitness: Some(network_fitness),
    }
}

/// Neutral random walk observed through evolvability: observations are the
/// best neighbor fitness at each visited solution.
pub fn evolvability_walk<R: Rng + ?Sized>(
    landscape: &dyn Landscape,
    start: BitString,
    config: &WalkConfig,
    rng: &mut R,
) -> WalkTrace {
    let mut walker = NeutralWalker::new(landscape, start.clone());
    let network_fitness = walker.network_fitness();
    let observe = |walker: &mut NeutralWalker| match config.evolvability_kind {
        EvolvabilityKind::MaxNeighborFitness => walker.max_neighbor_fitness(),
    };
    let mut observations = Vec::with_capacity(config.walk_length + 1);
    observations.push(observe(&mut walker));
    let mut terminated_early = false;
    for _ in 0..config.walk_length {
        if !walker.step(rng) {
            terminated_early = true;
            break;
        }
        observations.push(observe(&mut walker));
    }
    WalkTrace {
        observations,
        terminated_early,
        start,
        network_fitness: Some(network_fitness),
    }
}

/// `count` solutions drawn uniformly and independently from the hypercube.
pub fn sample_starts<R: Rng + ?Sized>(
    landscape: &dyn Landscape,
    count: usize,
    rng: &mut R,
) -> Vec<BitString> {
    (0..count)
        .map(|_| BitString::random(landscape.dimension(), rng))
        .collect()
}

/// Runs `config.num_walks` evolvability walks from uniform random starts.
///
/// Stream layout (see the seeding module): starts come from the stream
/// tagged `START_STREAM_TAG`, walk `i` from `WALK_STREAM_TAG_BASE + i`, so
/// traces are reproducible individually and independent of execution order.
pub fn run_evolvability_walks(
    landscape: &dyn Landscape,
    config: &WalkConfig,
) -> Result<Vec<WalkTrace>, WalkError> {
    config.validate()?;
    let mut start_rng = ChaCha8Rng::seed_from_u64(mix_seed(config.seed, START_STREAM_TAG));
    let starts = sample_starts(landscape, config.num_walks, &mut start_rng);
    Ok(starts
        .into_iter()
        .enumerate()
        .map(|(i, start)| {
            let tag = WALK_STREAM_TAG_BASE + i as u64;
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(config.seed, tag));
            evolvability_walk(landscape, start, config, &mut rng)
        })
        .collect())
}
