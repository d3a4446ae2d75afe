use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Randomization and amplification settings shared by the edge and vertex
/// connectivity algorithms.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub seed: u64,
    /// Multiplier `c` in the per-call sample counts.
    pub sampling_constant: f64,
    /// Multiplier `a` in the default repetition count `⌈a·log₂ n⌉`.
    pub amplification: f64,
    /// Overrides the repetition count when set.
    pub repetitions: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            seed: 0,
            sampling_constant: 3.0,
            amplification: 3.0,
            repetitions: None,
        }
    }
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn repetitions(&self, n: usize) -> usize {
        self.repetitions
            .unwrap_or_else(|| (self.amplification * log2(n)).ceil() as usize)
            .max(1)
    }

    /// Independent random stream for the task identified by `tag`. Streams
    /// depend only on the seed and the tag, never on execution order.
    pub fn stream(&self, tag: &[u64]) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(tag.iter().fold(0x243f_6a88_85a3_08d3, |h, &t| splitmix(h ^ t)));
        rng
    }
}

pub(crate) fn log2(n: usize) -> f64 {
    (n.max(2) as f64).log2()
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// `⌈log₂(num / den)⌉` for positive integers, possibly negative.
pub(crate) fn ceil_log2_ratio(num: u64, den: u64) -> i64 {
    let den = den.max(1) as u128;
    let num = num as u128;
    if num <= den {
        // 2^j ≥ num/den for j = 0; go lower only while the bound still holds.
        let mut j = 0i64;
        while num > 0 && (num << (-(j - 1)) as u32) <= den {
            j -= 1;
        }
        return j;
    }
    let mut j = 0i64;
    while (den << j as u32) < num {
        j += 1;
    }
    j
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn ceil_log2_ratio_values() {
        assert_eq!(ceil_log2_ratio(8, 1), 3);
        assert_eq!(ceil_log2_ratio(9, 1), 4);
        assert_eq!(ceil_log2_ratio(43, 1), 6);
        assert_eq!(ceil_log2_ratio(1, 1), 0);
        assert_eq!(ceil_log2_ratio(1, 2), -1);
        assert_eq!(ceil_log2_ratio(3, 8), -1);
        assert_eq!(ceil_log2_ratio(1, 8), -3);
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let cfg = Config::with_seed(7);
        let a: u64 = cfg.stream(&[1, 2]).gen();
        let b: u64 = cfg.stream(&[1, 2]).gen();
        let c: u64 = cfg.stream(&[2, 1]).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn default_repetitions() {
        let cfg = Config::default();
        assert_eq!(cfg.repetitions(8), 9);
        assert_eq!(cfg.repetitions(12), 11);
        assert_eq!(cfg.repetitions(1), 3);
    }
}
