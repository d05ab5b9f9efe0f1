#![allow(dead_code)]

use cherednik_core::{CentralPoly, Coeff, Gen, GenOrder, NcPoly, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type P = CentralPoly<Rational>;

pub fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_gen(rng: &mut impl Rng) -> Gen {
    Gen::ALL[rng.gen_range(0..Gen::ALL.len())]
}

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Vec<Gen> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_gen(rng)).collect()
}

/// Random combination of raw (not necessarily normal) words.
pub fn random_poly(
    rng: &mut impl Rng,
    order: GenOrder,
    max_len: usize,
    max_terms: usize,
) -> NcPoly<Rational> {
    let n = rng.gen_range(1..=max_terms);
    NcPoly::from_terms(
        order,
        (0..n).map(|_| {
            (
                random_word(rng, max_len),
                Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)),
            )
        }),
    )
}

/// `a Delta + q tau^2 + b tau + k`
pub fn family_member(a: i64, qq: i64, b: i64, k: i64) -> P {
    P::from_terms([
        ((1, 0), q(a)),
        ((0, 2), q(qq)),
        ((0, 1), q(b)),
        ((0, 0), q(k)),
    ])
}

/// The grid `a in {0,1,2}`, `q in {0, 3a, 3a+1}`, `b, k in {0,1}`, without repeats.
pub fn parameter_grid() -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for a in 0..=2 {
        for qq in [0, 3 * a, 3 * a + 1] {
            for b in 0..=1 {
                for k in 0..=1 {
                    if !out.contains(&(a, qq, b, k)) {
                        out.push((a, qq, b, k));
                    }
                }
            }
        }
    }
    out
}

/// `0`, `tau`, `Delta + 3 tau^2`
pub fn test_family() -> Vec<P> {
    vec![P::zero(), P::tau(), family_member(1, 3, 0, 0)]
}
