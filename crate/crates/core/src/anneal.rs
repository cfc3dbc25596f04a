//! Simulated annealing for binary words with large total run length.
//!
//! Moves flip one letter. A move that lowers the objective by `d` is taken
//! with probability `exp(-d / t)`, and `t` shrinks geometrically after every
//! iteration. Restart `r` draws from a [`SplitMix64`] seeded with `seed + r`,
//! so restarts are independent and can run in any order or in parallel;
//! [`merge_restarts`] picks the same winner regardless.
//!
//! Restart 0 starts from the `u(k)` baseline (see [`baseline_word`]); the
//! other restarts start from uniformly random words.

use alloc::vec::Vec;

use crate::bounds::word_u;
use crate::runs::trl_of;
use crate::word::{Alphabet, Word};
use crate::{Error, Result};

/// SplitMix64 (Steele, Lea and Flood). Small, fast and identical on every
/// platform.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound` by multiply-shift.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnnealConfig {
    pub n: usize,
    pub seed: u64,
    pub iterations: u64,
    pub restarts: u32,
    pub initial_temperature: f64,
    pub cooling_factor: f64,
}

impl AnnealConfig {
    pub const DEFAULT_ITERATIONS: u64 = 100_000;
    pub const DEFAULT_RESTARTS: u32 = 20;
    pub const DEFAULT_TEMPERATURE: f64 = 2.0;
    pub const DEFAULT_COOLING: f64 = 0.9999;

    pub fn new(n: usize, seed: u64) -> Self {
        AnnealConfig {
            n,
            seed,
            iterations: Self::DEFAULT_ITERATIONS,
            restarts: Self::DEFAULT_RESTARTS,
            initial_temperature: Self::DEFAULT_TEMPERATURE,
            cooling_factor: Self::DEFAULT_COOLING,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidArgument(msg.into()));
        if self.n < 2 {
            return bad("annealing needs n >= 2");
        }
        if self.iterations < 1 || self.restarts < 1 {
            return bad("iterations and restarts must be at least 1");
        }
        if !(self.initial_temperature.is_finite() && self.initial_temperature > 0.0) {
            return bad("initial temperature must be positive");
        }
        if !(self.cooling_factor > 0.0 && self.cooling_factor < 1.0) {
            return bad("cooling factor must lie in (0, 1)");
        }
        Ok(())
    }
}

/// Best word found by one restart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestartOutcome {
    pub restart: u32,
    pub best: Vec<u8>,
    pub best_trl: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best_word: Word,
    pub best_trl: u64,
    /// `best_trl / n^2`.
    pub ratio: f64,
    /// Total run length of [`baseline_word`].
    pub baseline_u: u64,
    /// Best value of each restart, in restart order.
    pub history: Vec<u64>,
}

/// `u(k)` with `k = floor((n - 2) / 4)`, continued with its period `2k + 1`
/// up to length `n`. Continuing a periodic suffix only lengthens runs, so
/// the result has total run length at least that of `u(k)`. Lengths below 6
/// use `a^n`.
pub fn baseline_word(n: usize) -> Word {
    let k = n.saturating_sub(2) / 4;
    if k == 0 {
        return Word::from_raw(alloc::vec![0; n], Alphabet::BINARY);
    }
    let u = word_u(k).expect("k >= 1");
    let period = 2 * k + 1;
    let mut symbols = u.symbols().to_vec();
    while symbols.len() < n {
        symbols.push(symbols[symbols.len() - period]);
    }
    Word::from_raw(symbols, Alphabet::BINARY)
}

/// One annealing trajectory. Deterministic in `(config, restart)`.
pub fn anneal_restart(config: &AnnealConfig, restart: u32) -> RestartOutcome {
    let n = config.n;
    let mut rng = SplitMix64::new(config.seed.wrapping_add(restart as u64));
    let mut current: Vec<u8> = if restart == 0 {
        baseline_word(n).symbols().to_vec()
    } else {
        (0..n).map(|_| (rng.next_u64() >> 63) as u8).collect()
    };
    let mut current_trl = trl_of(&current);
    let mut best = current.clone();
    let mut best_trl = current_trl;
    let mut temperature = config.initial_temperature;
    for _ in 0..config.iterations {
        let i = rng.below(n as u64) as usize;
        current[i] ^= 1;
        let candidate = trl_of(&current);
        let accept = candidate >= current_trl || {
            let delta = candidate as f64 - current_trl as f64;
            rng.next_f64() < libm::exp(delta / temperature)
        };
        if accept {
            current_trl = candidate;
            if current_trl > best_trl {
                best_trl = current_trl;
                best.copy_from_slice(&current);
            }
        } else {
            current[i] ^= 1;
        }
        temperature *= config.cooling_factor;
    }
    RestartOutcome {
        restart,
        best,
        best_trl,
    }
}

/// Combines restart outcomes given in any order. Ties go to the lowest
/// restart index.
pub fn merge_restarts(config: &AnnealConfig, mut outcomes: Vec<RestartOutcome>) -> SearchResult {
    outcomes.sort_by_key(|o| o.restart);
    let history = outcomes.iter().map(|o| o.best_trl).collect();
    let winner = outcomes
        .iter()
        .fold(None::<&RestartOutcome>, |acc, o| match acc {
            Some(a) if a.best_trl >= o.best_trl => Some(a),
            _ => Some(o),
        })
        .expect("at least one restart");
    let n = config.n as f64;
    SearchResult {
        best_word: Word::from_raw(winner.best.clone(), Alphabet::BINARY),
        best_trl: winner.best_trl,
        ratio: winner.best_trl as f64 / (n * n),
        baseline_u: trl_of(baseline_word(config.n).symbols()),
        history,
    }
}

/// Runs every restart sequentially.
pub fn anneal_max_trl(config: &AnnealConfig) -> Result<SearchResult> {
    config.validate()?;
    let outcomes = (0..config.restarts)
        .map(|r| anneal_restart(config, r))
        .collect();
    Ok(merge_restarts(config, outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runs::trl;
    use alloc::string::ToString;

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 1234567, as published with the generator.
        let mut rng = SplitMix64::new(1234567);
        assert_eq!(rng.next_u64(), 6457827717110365317);
        assert_eq!(rng.next_u64(), 3203168211198807973);
        assert_eq!(rng.next_u64(), 9817491932198370423);
    }

    #[test]
    fn uniform_helpers_stay_in_range() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..1000 {
            assert!(rng.below(13) < 13);
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn baseline_words() {
        assert_eq!(baseline_word(10).to_string(), "ababaababa");
        assert_eq!(baseline_word(12).to_string(), "ababaababaab");
        assert_eq!(baseline_word(4).to_string(), "aaaa");
        assert_eq!(trl(&baseline_word(10)), 28);
        for n in 6..40 {
            let w = baseline_word(n);
            assert_eq!(w.len(), n);
            let k = (n - 2) / 4;
            assert!(trl(&w) >= trl(&word_u(k).unwrap()));
        }
    }

    #[test]
    fn short_run_is_deterministic_and_beats_baseline() {
        let mut cfg = AnnealConfig::new(12, 42);
        cfg.iterations = 2_000;
        cfg.restarts = 3;
        let a = anneal_max_trl(&cfg).unwrap();
        let b = anneal_max_trl(&cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(trl(&a.best_word), a.best_trl);
        assert!(a.best_trl >= a.baseline_u);
        assert_eq!(a.history.len(), 3);
    }

    #[test]
    fn merge_is_order_independent() {
        let mut cfg = AnnealConfig::new(9, 5);
        cfg.iterations = 500;
        cfg.restarts = 4;
        let mut outcomes: Vec<_> = (0..4).map(|r| anneal_restart(&cfg, r)).collect();
        let forward = merge_restarts(&cfg, outcomes.clone());
        outcomes.reverse();
        assert_eq!(merge_restarts(&cfg, outcomes), forward);
    }

    #[test]
    fn config_validation() {
        assert!(AnnealConfig::new(1, 0).validate().is_err());
        let mut c = AnnealConfig::new(10, 0);
        c.cooling_factor = 1.0;
        assert!(c.validate().is_err());
        c.cooling_factor = 0.5;
        c.restarts = 0;
        assert!(c.validate().is_err());
    }
}
