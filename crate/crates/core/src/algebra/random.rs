//! Seeded random octonions for the randomized checks.

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::octonion::Octonion;
use super::scalar::Dyadic;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Coefficients uniform on `{-4, ..., 4} / 2`.
pub fn dyadic_octonion<R: Rng>(rng: &mut R) -> Octonion<Dyadic> {
    Octonion::new(std::array::from_fn(|_| {
        Dyadic::halves(rng.gen_range(-4..=4))
    }))
}

/// Same distribution as [`dyadic_octonion`], as general rationals.
pub fn rational_octonion<R: Rng>(rng: &mut R) -> Octonion<Rational64> {
    dyadic_octonion(rng).map(Dyadic::to_rational)
}

/// A nonzero rational octonion with small odd denominators mixed in.
pub fn nonzero_rational_octonion<R: Rng>(rng: &mut R) -> Octonion<Rational64> {
    loop {
        let o = Octonion::new(std::array::from_fn(|_| {
            Rational64::new(rng.gen_range(-6..=6), rng.gen_range(1..=5))
        }));
        if !o.is_zero() {
            return o;
        }
    }
}
