//! Evaluation of parsed expressions in a coefficient field.

use cherednik_core::{CentralPoly, Coeff, EngineError, Gen, Gl2Cherednik, NcPoly, Normalizer};
use num_rational::BigRational;
use thiserror::Error;

use crate::expr::{Expr, Var};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("`{0}` is not central; only tau and Delta may appear here")]
    NotCentral(&'static str),
    #[error("{0} is not defined in the coefficient field")]
    Literal(BigRational),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

pub fn scalar<K: Coeff>(n: &BigRational) -> Result<K, EvalError> {
    K::from_ratio(n.numer(), n.denom()).ok_or_else(|| EvalError::Literal(n.clone()))
}

/// A polynomial in `Delta` and `tau`.
pub fn central<K: Coeff>(e: &Expr) -> Result<CentralPoly<K>, EvalError> {
    Ok(match e {
        Expr::Num(n) => CentralPoly::constant(scalar(n)?),
        Expr::Var(Var::Tau) => CentralPoly::tau(),
        Expr::Var(Var::Delta) => CentralPoly::delta(),
        Expr::Var(v) => return Err(EvalError::NotCentral(v.name())),
        Expr::Neg(a) => -central(a)?,
        Expr::Add(a, b) => central(a)? + central(b)?,
        Expr::Sub(a, b) => central(a)? - central(b)?,
        Expr::Mul(a, b) => central(a)? * central(b)?,
        Expr::Pow(a, n) => central(a)?.pow(*n),
    })
}

/// A scalar, for weights such as `lambda` and `mu`.
pub fn constant<K: Coeff>(e: &Expr) -> Result<K, EvalError> {
    let p = central::<K>(e)?;
    if p.delta_degree().unwrap_or(0) > 0 || p.tau_degree().unwrap_or(0) > 0 {
        return Err(EvalError::NotCentral("weight"));
    }
    Ok(p.coeff(0, 0))
}

fn gen_of(v: Var) -> Option<Gen> {
    Some(match v {
        Var::Tau => Gen::Tau,
        Var::H => Gen::H,
        Var::E => Gen::E,
        Var::F => Gen::F,
        Var::X => Gen::X,
        Var::Y => Gen::Y,
        Var::X1 => Gen::X1,
        Var::Y1 => Gen::Y1,
        Var::Delta => return None,
    })
}

/// An element of the algebra, in normal form for `n`'s order. `Delta`
/// stands for the Casimir.
pub fn element<K: Coeff>(
    n: &mut Normalizer<'_, K>,
    algebra: &Gl2Cherednik<K>,
    e: &Expr,
) -> Result<NcPoly<K>, EvalError> {
    let order = n.table().order();
    Ok(match e {
        Expr::Num(c) => NcPoly::constant(order, scalar(c)?),
        Expr::Var(v) => match gen_of(*v) {
            Some(g) => NcPoly::gen(order, g),
            None => algebra.convert(&algebra.embed(&CentralPoly::delta())?, order)?,
        },
        Expr::Neg(a) => -element(n, algebra, a)?,
        Expr::Add(a, b) => element(n, algebra, a)? + element(n, algebra, b)?,
        Expr::Sub(a, b) => element(n, algebra, a)? - element(n, algebra, b)?,
        Expr::Mul(a, b) => {
            let (x, y) = (element(n, algebra, a)?, element(n, algebra, b)?);
            n.mul(&x, &y)?
        }
        Expr::Pow(a, k) => {
            let x = element(n, algebra, a)?;
            n.pow(&x, *k)?
        }
    })
}
