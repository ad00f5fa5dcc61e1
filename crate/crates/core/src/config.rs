//! Process-wide knobs that affect randomized steps and search limits.
//!
//! Every knob is echoed in CLI output headers so that runs can be repeated.

use std::sync::RwLock;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    /// Seed for every randomized linear-algebra trial.
    pub seed: u64,
    /// Random trials used by isomorphism testing and idempotent search.
    pub trials: usize,
    /// Largest absolute value of a random coefficient.
    pub coeff_range: i64,
    /// Upper bound on vertices in an exchange-graph enumeration.
    pub node_cap: usize,
    /// Path length guard for algebra construction, as a multiple of the vertex count.
    pub length_factor: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 20240917, trials: 32, coeff_range: 1 << 20, node_cap: 100_000, length_factor: 4 }
    }
}

static CONFIG: RwLock<Option<Config>> = RwLock::new(None);

pub fn get() -> Config {
    CONFIG.read().unwrap().clone().unwrap_or_default()
}

/// Replaces the active configuration. Caches keyed on algebras are not
/// invalidated, so this should be called before any computation starts.
pub fn set(c: Config) {
    *CONFIG.write().unwrap() = Some(c);
}
