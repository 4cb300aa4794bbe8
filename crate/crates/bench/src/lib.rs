//! Seeded instance builders shared by the benchmark targets.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wtl_core::model::DfaWtl;
use wtl_core::random::random_dfawtl_with_size;

/// Reproducible machines of a fixed size; `density` 0.6 keeps a healthy mix
/// of deficient and complete states.
pub fn seeded_machines(seed: u64, count: usize, states: usize, letters: usize) -> Vec<DfaWtl> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_dfawtl_with_size(&mut rng, states, letters, 0.6, 0.3))
        .collect()
}

/// Reproducible constant-jump machines for the equivalence pipeline.
pub fn seeded_constant_machines(seed: u64, count: usize, states: usize) -> Vec<DfaWtl> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let m = random_dfawtl_with_size(&mut rng, states, 2, 0.55, 0.35).trim();
        if !wtl_core::classify(&m).is_linear() {
            out.push(m);
        }
    }
    out
}
