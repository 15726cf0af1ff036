use serde::{Deserialize, Serialize};

/// Numerical tolerances shared by the checks in this crate.
///
/// `algebraic` applies to deterministic identities, `sweep` to randomized
/// property sweeps and `verdict` to the hold/equality decisions reported by
/// certificates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub algebraic: f64,
    pub sweep: f64,
    pub verdict: f64,
    /// Angular bound (radians) for calling two vectors parallel.
    pub parallel_angle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            algebraic: 1e-12,
            sweep: 1e-9,
            verdict: 1e-9,
            parallel_angle: 1e-6,
        }
    }
}

impl Tolerances {
    /// Parses a `key = value` config file. Missing keys keep their defaults.
    pub fn from_toml_str(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }
}
