//! Seeded random streams.
//!
//! Every random draw in the crate comes from ChaCha8 (`rand_chacha` 0.3).
//! A run is identified by a 64-bit seed; the ChaCha key is derived from it
//! with `SeedableRng::seed_from_u64` and independent streams (one per
//! Monte-Carlo trial, or per purpose inside a generator) are selected
//! through the ChaCha stream id. The generator is counter based, so trial
//! `t` of seed `s` is the same sequence no matter which thread runs it or
//! in which order trials are scheduled.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

/// Stream ids reserved for the graph generators. Monte-Carlo trials use
/// their trial index, so these sit at the top of the id space.
pub(crate) const STREAM_DEGREES: u64 = u64::MAX;
pub(crate) const STREAM_PAIRING: u64 = u64::MAX - 1;
pub(crate) const STREAM_EDGES: u64 = u64::MAX - 2;

pub fn stream_rng(seed: u64, stream: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
