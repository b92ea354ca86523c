use std::str::FromStr;

use g2rep::{generic_group_point, GroupPoint};
use laurent::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// How equalities of functions on G are decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exact comparison at `trials` sampled rational points.
    Randomized,
    /// Exact comparison at h(u,v)·x₁(t₁)x₂(t₂)x₁(t₃)x₂(t₄)x₁(t₅)x₂(t₆) with all eight parameters symbolic.
    Symbolic,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "randomized" => Ok(Mode::Randomized),
            "symbolic" => Ok(Mode::Symbolic),
            _ => Err(format!("unknown mode {s:?} (expected randomized or symbolic)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub trials: usize,
    pub rng_seed: u64,
    pub mode: Mode,
}

impl Default for Config {
    fn default() -> Self {
        Config { trials: 20, rng_seed: 1, mode: Mode::Randomized }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl Config {
    pub fn symbolic(self) -> Self {
        Config { mode: Mode::Symbolic, ..self }
    }

    pub fn randomized(self) -> Self {
        Config { mode: Mode::Randomized, ..self }
    }

    /// Generator for one named check. Streams are independent of execution order.
    pub fn rng(&self, stream: &str) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.rng_seed);
        rng.set_stream(fnv1a(stream));
        rng
    }

    /// Sample points for a check; see [`generic_group_point`].
    pub fn points(&self, stream: &str, count: usize) -> Vec<GroupPoint<Rational>> {
        let mut rng = self.rng(stream);
        (0..count).map(|_| generic_group_point(&mut rng)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_deterministic_and_distinct() {
        let c = Config::default();
        assert_eq!(c.points("a", 2), c.points("a", 2));
        assert_ne!(c.points("a", 1), c.points("b", 1));
        assert_eq!("symbolic".parse::<Mode>(), Ok(Mode::Symbolic));
        assert!("exact".parse::<Mode>().is_err());
    }
}
