#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use untangle_core::reductions::generate_random;
use untangle_core::{BudgetSpec, TemporalGraph};

/// One instance of the small sweep family.
#[derive(Debug, Clone)]
pub struct Case {
    pub g: TemporalGraph,
    pub budget: BudgetSpec,
    pub ell: u32,
}

/// Deterministic family: n <= 3, tau <= 4, budgets <= 2, ell <= 2, with
/// uniform and per-vertex budgets.
pub fn small_sweep(count: usize, seed: u64) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.random_range(2..=3);
            let tau = rng.random_range(1..=4);
            let p = [0.3, 0.5, 0.8][rng.random_range(0..3)];
            let g = generate_random(n, tau, p, seed.wrapping_mul(1_000_003).wrapping_add(i as u64)).unwrap();
            let budget = if rng.random_bool(0.5) {
                BudgetSpec::Uniform(rng.random_range(0..=2))
            } else {
                BudgetSpec::NonUniform((0..n).map(|_| rng.random_range(0..=2)).collect())
            };
            Case { g, budget, ell: rng.random_range(0..=2) }
        })
        .collect()
}
