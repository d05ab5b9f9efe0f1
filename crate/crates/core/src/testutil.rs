use proptest::prelude::*;

use crate::central::CentralPoly;
use crate::field::{Coeff, Rational};
use crate::generator::{Gen, GenOrder};
use crate::ncpoly::{NcPoly, Word};

pub fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

pub fn gen() -> impl Strategy<Value = Gen> {
    prop::sample::select(Gen::ALL.to_vec())
}

pub fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(gen(), 0..=max_len)
}

pub fn ncpoly(
    order: GenOrder,
    max_len: usize,
    max_terms: usize,
) -> impl Strategy<Value = NcPoly<Rational>> {
    prop::collection::vec((word(max_len), -3i64..=3), 1..=max_terms)
        .prop_map(move |ts| NcPoly::from_terms(order, ts.into_iter().map(|(w, c)| (w, q(c)))))
}

/// The admissible family `a Delta + 3a tau^2 + b tau + k`.
pub fn admissible() -> impl Strategy<Value = CentralPoly<Rational>> {
    (0i64..=2, 0i64..=1, 0i64..=1).prop_map(|(a, b, k)| {
        CentralPoly::from_terms([
            ((1, 0), q(a)),
            ((0, 2), q(3 * a)),
            ((0, 1), q(b)),
            ((0, 0), q(k)),
        ])
    })
}
