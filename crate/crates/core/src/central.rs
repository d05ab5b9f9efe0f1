//! Commutative polynomials in the Casimir `Delta` and the central `tau`,
//! the coordinates used for the center of the enveloping algebra of gl2.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::EngineError;
use crate::field::Coeff;

/// Which central coordinate a substitution acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CentralVar {
    Delta,
    Tau,
}

/// Sparse polynomial in `Delta` and `tau`, keyed by `(delta_degree, tau_degree)`.
/// Zero coefficients are never stored, so structural equality is equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CentralPoly<K: Coeff> {
    terms: BTreeMap<(u32, u32), K>,
}

impl<K: Coeff> Default for CentralPoly<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Coeff> CentralPoly<K> {
    pub fn zero() -> Self {
        CentralPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * Delta^n * tau^m`.
    pub fn monomial(c: K, delta_deg: u32, tau_deg: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((delta_deg, tau_deg), c);
        }
        CentralPoly { terms }
    }

    pub fn delta() -> Self {
        Self::monomial(K::one(), 1, 0)
    }

    pub fn tau() -> Self {
        Self::monomial(K::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), K)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &K)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, delta_deg: u32, tau_deg: u32) -> K {
        self.terms
            .get(&(delta_deg, tau_deg))
            .cloned()
            .unwrap_or_else(K::zero)
    }

    pub fn add_term(&mut self, key: (u32, u32), c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Degree in `Delta`, `None` for the zero polynomial.
    pub fn delta_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn tau_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CentralPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.clone() * c.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replace `var` by `var + shift` and expand.
    pub fn substitute_shift(&self, var: CentralVar, shift: &K) -> Self {
        let shifted = match var {
            CentralVar::Delta => Self::delta() + Self::constant(shift.clone()),
            CentralVar::Tau => Self::tau() + Self::constant(shift.clone()),
        };
        let mut out = Self::zero();
        for (&(n, m), c) in &self.terms {
            let (fixed, moving) = match var {
                CentralVar::Delta => (Self::monomial(c.clone(), 0, m), n),
                CentralVar::Tau => (Self::monomial(c.clone(), n, 0), m),
            };
            out = out + &fixed * &shifted.pow(moving);
        }
        out
    }

    /// `psi(tau) - psi(tau - 1)` for a polynomial in `tau` alone.
    pub fn discrete_derivative(&self) -> Result<Self, EngineError> {
        if self.delta_degree().unwrap_or(0) > 0 {
            return Err(EngineError::NotPureTau(self.to_string()));
        }
        Ok(self.clone() - self.substitute_shift(CentralVar::Tau, &(-K::one())))
    }

    /// Split into the part without `Delta` and the rest.
    pub fn split_pure_tau(&self) -> (Self, Self) {
        let mut pure = Self::zero();
        let mut rest = Self::zero();
        for (&k, c) in &self.terms {
            if k.0 == 0 {
                pure.add_term(k, c.clone());
            } else {
                rest.add_term(k, c.clone());
            }
        }
        (pure, rest)
    }

    pub fn without_constant(&self) -> Self {
        let mut p = self.clone();
        p.terms.remove(&(0, 0));
        p
    }
}

impl<K: Coeff> Add for CentralPoly<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Coeff> Sub for CentralPoly<K> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
        self
    }
}

impl<K: Coeff> Neg for CentralPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        CentralPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<K: Coeff> Mul for &CentralPoly<K> {
    type Output = CentralPoly<K>;
    fn mul(self, rhs: &CentralPoly<K>) -> CentralPoly<K> {
        let mut out = CentralPoly::zero();
        for (&(n1, m1), c1) in &self.terms {
            for (&(n2, m2), c2) in &rhs.terms {
                out.add_term((n1 + n2, m1 + m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<K: Coeff> Mul for CentralPoly<K> {
    type Output = CentralPoly<K>;
    fn mul(self, rhs: CentralPoly<K>) -> CentralPoly<K> {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, n: u32, m: u32) -> fmt::Result {
    let mut parts = Vec::new();
    match n {
        0 => {}
        1 => parts.push("Delta".to_string()),
        _ => parts.push(format!("Delta^{n}")),
    }
    match m {
        0 => {}
        1 => parts.push("tau".to_string()),
        _ => parts.push(format!("tau^{m}")),
    }
    write!(f, "{}", parts.join("*"))
}

/// Terms print by descending total degree, then descending `Delta` degree,
/// in the expression grammar accepted by the command-line parser.
impl<K: Coeff> fmt::Display for CentralPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for (i, (n, m)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(n, m)];
            write_signed_term(f, i == 0, c, n + m == 0, |f| write_monomial(f, n, m))?;
        }
        Ok(())
    }
}

impl<K: Coeff> fmt::Debug for CentralPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shared term printer: `c*m`, with sign folded into the separator.
///
/// Rationals carry their own sign; prime-field elements are printed as
/// their representative in `[0, p)`.
pub(crate) fn write_signed_term<K: Coeff>(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &K,
    is_constant: bool,
    body: impl FnOnce(&mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    let text = c.to_string();
    let (negative, magnitude) = match text.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, text),
    };
    if first {
        if negative {
            write!(f, "-")?;
        }
    } else if negative {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if is_constant {
        write!(f, "{magnitude}")
    } else {
        if magnitude != "1" {
            write!(f, "{magnitude}*")?;
        }
        body(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use proptest::prelude::*;

    type P = CentralPoly<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn tau_poly(coeffs: &[i64]) -> P {
        P::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| ((0, i as u32), q(c))),
        )
    }

    #[test]
    fn discrete_derivative_examples() {
        assert_eq!(P::one().discrete_derivative().unwrap(), P::zero());
        assert_eq!(P::tau().discrete_derivative().unwrap(), P::one());
        // tau^2 - (tau-1)^2 = 2 tau - 1
        assert_eq!(
            tau_poly(&[0, 0, 1]).discrete_derivative().unwrap(),
            tau_poly(&[-1, 2])
        );
        assert!(P::delta().discrete_derivative().is_err());
    }

    #[test]
    fn shift_examples() {
        let tau2 = tau_poly(&[0, 0, 1]);
        assert_eq!(
            tau2.substitute_shift(CentralVar::Tau, &q(-1)),
            tau_poly(&[1, -2, 1])
        );
        let d_plus_t = P::delta() + P::tau();
        assert_eq!(
            d_plus_t.substitute_shift(CentralVar::Delta, &q(-1)),
            P::delta() + P::tau() - P::one()
        );
        assert_eq!(P::one().substitute_shift(CentralVar::Tau, &q(-1)), P::one());
    }

    #[test]
    fn display_is_graded() {
        let p = P::delta() + tau_poly(&[-1, 0, 3]);
        assert_eq!(p.to_string(), "3*tau^2 + Delta - 1");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(
            (-P::tau()).scale(&Rational::new(1, 2)).to_string(),
            "-1/2*tau"
        );
    }

    fn poly() -> impl Strategy<Value = P> {
        proptest::collection::vec(((0u32..3, 0u32..4), -5i64..6), 0..6)
            .prop_map(|ts| P::from_terms(ts.into_iter().map(|(k, c)| (k, q(c)))))
    }

    fn tau_only() -> impl Strategy<Value = P> {
        proptest::collection::vec(-5i64..6, 0..6).prop_map(|cs| tau_poly(&cs))
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!(&a * &(b.clone() + c.clone()), &a * &b + &a * &c);
            prop_assert_eq!(a.clone() - a.clone(), P::zero());
        }

        #[test]
        fn derivative_matches_shift(psi in tau_only()) {
            let d = psi.discrete_derivative().unwrap();
            prop_assert_eq!(d.clone(), psi.clone() - psi.substitute_shift(CentralVar::Tau, &q(-1)));
            match psi.tau_degree() {
                Some(k) if k > 0 => prop_assert_eq!(d.tau_degree(), Some(k - 1)),
                _ => prop_assert!(d.is_zero()),
            }
        }

        #[test]
        fn derivative_is_linear(a in tau_only(), b in tau_only(), s in -4i64..5) {
            let lhs = (a.scale(&q(s)) + b.clone()).discrete_derivative().unwrap();
            let rhs = a.discrete_derivative().unwrap().scale(&q(s)) + b.discrete_derivative().unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
