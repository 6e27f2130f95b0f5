//! Walk samplers over fitness landscapes.
//!
//! Two kinds of walk feed the statistics layer:
//!
//! * plain random walks, whose fitness series measures ruggedness;
//! * neutral random walks, which stay on one neutral network and whose
//!   evolvability series (best neighbor fitness at each visited solution)
//!   measures how the quality of the network's surroundings decorrelates.
//!
//! Walks are sampled from uniform random starts. Note the induced weighting:
//! a neutral network is hit with probability proportional to its size, so
//! averages over walks are size-biased averages over networks.

mod seeding;
mod walk;

pub use seeding::{
    mix_seed, splitmix64, DEGREE_STREAM_TAG, START_STREAM_TAG, WALK_STREAM_TAG_BASE,
};
pub use walk::{
    evolvability_walk, neutral_random_walk, random_walk, run_evolvability_walks, sample_starts,
    NeutralWalker, WalkConfig, WalkError, WalkTrace,
};
