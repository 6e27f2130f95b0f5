//! Seed derivation for independent random streams.
//!
//! Every sub-experiment gets its own 64-bit seed derived with [`mix_seed`],
//! so any instance or walk can be reproduced in isolation. The convention,
//! used by the experiment runner:
//!
//! * instance seed = chained mix of the master seed with N, then m, then the
//!   instance index;
//! * within an instance, tag [`START_STREAM_TAG`] draws the walk starts, tag
//!   [`WALK_STREAM_TAG_BASE`]` + i` drives walk `i`, and
//!   [`DEGREE_STREAM_TAG`] samples solutions for neutral-degree statistics.

/// Stream tag that draws walk start solutions.
pub const START_STREAM_TAG: u64 = 0;
/// Walk `i` uses stream tag `WALK_STREAM_TAG_BASE + i`.
pub const WALK_STREAM_TAG_BASE: u64 = 1;
/// Stream tag for neutral-degree sampling, outside the walk tag range.
pub const DEGREE_STREAM_TAG: u64 = u64::MAX;

/// The splitmix64 finalizer: one step of the splitmix64 generator seeded at
/// `x`. Full 64-bit avalanche, bijective.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a stream seed from a base seed and a tag. Asymmetric in its
/// arguments, so chained mixes keep order information.
pub fn mix_seed(base: u64, tag: u64) -> u64 {
    splitmix64(base ^ splitmix64(tag))
}
