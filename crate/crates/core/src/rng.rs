//! Seeded randomness for every "generic" choice.

use rand::{Rng as _, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::qpoly::{Int, Rat};

pub type Rng = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent child generator; `tag` separates sibling streams.
pub fn split(rng: &mut Rng, tag: u64) -> Rng {
    let s = rng.next_u64() ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    ChaCha8Rng::seed_from_u64(s)
}

/// Uniform integer in `[-bound, bound]`.
pub fn small_int(rng: &mut Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

/// Nonzero integer in `[-bound, bound]`.
pub fn small_nonzero(rng: &mut Rng, bound: i64) -> i64 {
    loop {
        let k = small_int(rng, bound.max(1));
        if k != 0 {
            return k;
        }
    }
}

/// Rational with numerator in `[-bound, bound]` and denominator in `[1, bound]`.
pub fn small_rat(rng: &mut Rng, bound: i64) -> Rat {
    let n = small_int(rng, bound);
    let d = rng.gen_range(1..=bound.max(1));
    Rat::new(Int::from(n), Int::from(d))
}
