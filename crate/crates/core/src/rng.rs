//! Deterministic random streams.
//!
//! Every trial owns one ChaCha8 key derived from its seed; independent
//! consumers (graph sampling, random lists, subset sampling) read disjoint
//! ChaCha streams of that key, so no two consumers share state.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Name of the generator, echoed in reports.
pub const GENERATOR_NAME: &str = "ChaCha8Rng (rand_chacha 0.9, seed_from_u64, per-purpose stream)";

/// Consumers of randomness within a trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stream {
    Graph = 0,
    Lists = 1,
    Subsets = 2,
}

pub fn stream_rng(seed: u64, stream: Stream) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}
