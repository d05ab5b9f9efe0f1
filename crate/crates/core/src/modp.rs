//! Positive-characteristic checks: `p^2`-th powers of plane letters and
//! restricted powers of gl2 are central, and `[v^p, w]` avoids the dual
//! plane.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::Gl2Cherednik;
use crate::calculus::check_central;
use crate::error::{EngineError, Result};
use crate::field::Coeff;
use crate::generator::{Gen, GenOrder};
use crate::ncpoly::NcPoly;

/// Largest exponent `p^2` the suite will build (`x^25` at `p = 5`).
pub const MAX_P_SQUARE: u64 = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ModpEntry<K: Coeff> {
    pub claim: String,
    pub element: NcPoly<K>,
    pub status: Status,
    /// Nonzero witness when the claim fails, with the generator it was
    /// computed against when the claim is a centrality claim.
    pub residual: Option<NcPoly<K>>,
    pub against: Option<Gen>,
}

impl<K: Coeff> ModpEntry<K> {
    fn new(
        claim: String,
        element: NcPoly<K>,
        residual: Option<NcPoly<K>>,
        against: Option<Gen>,
    ) -> Self {
        let status = if residual.is_none() {
            Status::Pass
        } else {
            Status::Fail
        };
        ModpEntry {
            claim,
            element,
            status,
            residual,
            against,
        }
    }

    fn central(claim: String, element: NcPoly<K>, residual: Option<(Gen, NcPoly<K>)>) -> Self {
        let (against, residual) = match residual {
            Some((g, r)) => (Some(g), Some(r)),
            None => (None, None),
        };
        Self::new(claim, element, residual, against)
    }
}

#[derive(Clone, Debug)]
pub struct ModpReport<K: Coeff> {
    pub p: u64,
    pub c: String,
    pub entries: Vec<ModpEntry<K>>,
}

impl<K: Coeff> ModpReport<K> {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }
}

fn prime<K: Coeff>() -> Result<u64> {
    match K::characteristic() {
        0 => Err(EngineError::Invalid(
            "p-center checks need a prime field".into(),
        )),
        p => Ok(p),
    }
}

fn first_residual<K: Coeff>(
    algebra: &Gl2Cherednik<K>,
    element: NcPoly<K>,
) -> Result<(NcPoly<K>, Option<(Gen, NcPoly<K>)>)> {
    let mut n = algebra.normalizer();
    let check = check_central(&mut n, element)?;
    let residual = check.residuals.first().cloned();
    Ok((check.element, residual))
}

/// `v^(p^2)` commutes with all eight generators.
pub fn p_square_central<K: Coeff>(algebra: &Gl2Cherednik<K>, v: Gen) -> Result<ModpEntry<K>> {
    let p = prime::<K>()?;
    if !v.is_v() {
        return Err(EngineError::Invalid(format!("{v} is not a plane letter")));
    }
    let e = p * p;
    if e > MAX_P_SQUARE {
        return Err(EngineError::Invalid(format!(
            "{v}^{e} exceeds the configured ceiling {MAX_P_SQUARE}"
        )));
    }
    let power = NcPoly::word(GenOrder::Default, &vec![v; e as usize]);
    let (element, residual) = first_residual(algebra, power)?;
    Ok(ModpEntry::central(
        format!("{v}^{e} is central"),
        element,
        residual,
    ))
}

/// `[v^p, w]` has no `x1`, `y1` letters and equals `ad(v)^p (w)`.
pub fn p_power_landing<K: Coeff>(
    algebra: &Gl2Cherednik<K>,
    v: Gen,
    w: Gen,
) -> Result<ModpEntry<K>> {
    let p = prime::<K>()?;
    if !matches!(v, Gen::X | Gen::Y) || !matches!(w, Gen::X1 | Gen::Y1) {
        return Err(EngineError::Invalid(format!(
            "need v in {{x, y}} and w in {{x1, y1}}, got {v}, {w}"
        )));
    }
    let o = GenOrder::Default;
    let mut n = algebra.normalizer();
    let vp = NcPoly::word(o, &vec![v; p as usize]);
    let wp = NcPoly::gen(o, w);
    let bracket = n.commutator(&vp, &wp)?;
    let vg = NcPoly::gen(o, v);
    let mut iterated = wp;
    for _ in 0..p {
        iterated = n.commutator(&vg, &iterated)?;
    }
    let leaked = bracket.filter(|word| word.iter().any(|g| matches!(g, Gen::X1 | Gen::Y1)));
    let residual = if !leaked.is_zero() {
        Some(leaked)
    } else {
        let diff = bracket.clone() - iterated;
        (!diff.is_zero()).then_some(diff)
    };
    Ok(ModpEntry::new(
        format!("[{v}^{p}, {w}] = ad({v})^{p}({w}) avoids x1, y1"),
        bracket,
        residual,
        None,
    ))
}

/// `e^p`, `f^p`, `h^p - h`, `tau^p - tau` are central. Needs `p >= 3`.
pub fn restricted_powers_central<K: Coeff>(algebra: &Gl2Cherednik<K>) -> Result<Vec<ModpEntry<K>>> {
    let p = prime::<K>()?;
    if p < 3 {
        return Err(EngineError::Invalid(
            "restricted power checks need p >= 3".into(),
        ));
    }
    let o = GenOrder::Default;
    let cases = [
        (
            format!("e^{p} is central"),
            NcPoly::word(o, &vec![Gen::E; p as usize]),
        ),
        (
            format!("f^{p} is central"),
            NcPoly::word(o, &vec![Gen::F; p as usize]),
        ),
        (
            format!("h^{p} - h is central"),
            NcPoly::word(o, &vec![Gen::H; p as usize]) - NcPoly::gen(o, Gen::H),
        ),
        (
            format!("tau^{p} - tau is central"),
            NcPoly::word(o, &vec![Gen::Tau; p as usize]) - NcPoly::gen(o, Gen::Tau),
        ),
    ];
    cases
        .into_par_iter()
        .map(|(claim, elem)| {
            let (element, residual) = first_residual(algebra, elem)?;
            Ok(ModpEntry::central(claim, element, residual))
        })
        .collect()
}

/// Every claim that applies at this prime.
pub fn modp_suite<K: Coeff>(algebra: &Gl2Cherednik<K>) -> Result<ModpReport<K>> {
    let p = prime::<K>()?;
    let squares: Vec<Result<ModpEntry<K>>> = [Gen::X, Gen::Y, Gen::X1, Gen::Y1]
        .into_par_iter()
        .map(|v| p_square_central(algebra, v))
        .collect();
    let landings: Vec<Result<ModpEntry<K>>> = [
        (Gen::X, Gen::X1),
        (Gen::X, Gen::Y1),
        (Gen::Y, Gen::X1),
        (Gen::Y, Gen::Y1),
    ]
    .into_par_iter()
    .map(|(v, w)| p_power_landing(algebra, v, w))
    .collect();
    let mut entries: Vec<ModpEntry<K>> =
        squares.into_iter().chain(landings).collect::<Result<_>>()?;
    if p >= 3 {
        entries.extend(restricted_powers_central(algebra)?);
    }
    Ok(ModpReport {
        p,
        c: algebra.c().to_string(),
        entries,
    })
}
