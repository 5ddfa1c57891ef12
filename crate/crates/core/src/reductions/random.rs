use alloc::vec::Vec;

use rand::distr::{Bernoulli, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{TemporalGraph, Vertex};
use crate::{Error, Result};

/// Random temporal graph: every vertex pair is present in every layer
/// independently with probability `p`.
///
/// Draws come from ChaCha8 seeded with `seed`, layer by layer and pair by pair
/// in `(u, v)` order, so the output is identical on every platform.
pub fn generate_random(n: Vertex, tau: u32, p: f64, seed: u64) -> Result<TemporalGraph> {
    let coin = Bernoulli::new(p).map_err(|_| Error::Precondition("edge probability must lie in [0, 1]"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let layers: Vec<Vec<(Vertex, Vertex)>> = (0..tau)
        .map(|_| {
            let mut layer = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    if coin.sample(&mut rng) {
                        layer.push((u, v));
                    }
                }
            }
            layer
        })
        .collect();
    TemporalGraph::new(n, layers)
}
