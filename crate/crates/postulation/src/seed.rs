//! Deterministic seed derivation.
//!
//! Every random draw in the crate flows through a ChaCha stream keyed by a
//! SHA-256 digest of the relevant context, so results are reproducible across
//! platforms and independent of evaluation order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Per-trial seed: hash of (base seed, trial index, scheme signature, degree).
/// Parallel sweeps stay order-independent because nothing else enters the key.
pub fn trial_seed(base_seed: u64, trial: u32, signature: &str, d: u32) -> u64 {
    let mut h = Sha256::new();
    h.update(b"postulation.trial");
    h.update(base_seed.to_le_bytes());
    h.update(trial.to_le_bytes());
    h.update((signature.len() as u64).to_le_bytes());
    h.update(signature.as_bytes());
    h.update(d.to_le_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().unwrap())
}

/// Stream for one component's support draw. Keyed by component index so a
/// scheme extended by further components reuses the exact same points for the
/// shared prefix.
pub fn component_rng(seed: u64, component_index: usize) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(b"postulation.point");
    h.update(seed.to_le_bytes());
    h.update((component_index as u64).to_le_bytes());
    ChaCha8Rng::from_seed(h.finalize().into())
}
