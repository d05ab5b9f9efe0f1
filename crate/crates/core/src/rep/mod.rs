//! Verma modules `M(lambda, mu)`, the obstructions `alpha_m` and the
//! finite-dimensionality test for the simple quotients.

pub mod irrep;

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{embed_with, Gl2Cherednik};
use crate::central::CentralPoly;
use crate::error::Result;
use crate::field::Coeff;
use crate::generator::{Gen, GenOrder};
use crate::linalg::{rref, ColumnSystem};
use crate::ncpoly::{NcPoly, Word};
use crate::rewrite::Normalizer;

pub use irrep::Gl2Irrep;

/// Exponents `(a, b, c)` of the basis vector `f^a x1^b y1^c v`.
pub type Triple = (u32, u32, u32);

/// Finite combination of the basis vectors `f^a x1^b y1^c v` of
/// `M(lambda, mu)`.
#[derive(Clone, PartialEq, Eq)]
pub struct VermaElement<K: Coeff> {
    lambda: K,
    mu: K,
    coeffs: BTreeMap<Triple, K>,
}

impl<K: Coeff> VermaElement<K> {
    pub fn zero(lambda: K, mu: K) -> Self {
        VermaElement {
            lambda,
            mu,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(lambda: K, mu: K, t: Triple) -> Self {
        let mut v = Self::zero(lambda, mu);
        v.add(t, K::one());
        v
    }

    pub fn highest_weight(lambda: K, mu: K) -> Self {
        Self::basis(lambda, mu, (0, 0, 0))
    }

    pub fn add(&mut self, t: Triple, c: K) {
        if c.is_zero() {
            return;
        }
        let v = self.coeffs.entry(t).or_insert_with(K::zero);
        *v += c;
        if v.is_zero() {
            self.coeffs.remove(&t);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &K) {
        for (t, v) in &other.coeffs {
            self.add(*t, v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut v = Self::zero(self.lambda.clone(), self.mu.clone());
        v.add_scaled(self, c);
        v
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut v = self.clone();
        v.add_scaled(other, &(-K::one()));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Triple, &K)> {
        self.coeffs.iter()
    }

    pub fn lambda(&self) -> &K {
        &self.lambda
    }

    pub fn mu(&self) -> &K {
        &self.mu
    }

    /// Weights relative to `(lambda, mu)`: `(-2a + b - c, -b - c)`.
    pub fn relative_weight(t: Triple) -> (i64, i64) {
        let (a, b, c) = (t.0 as i64, t.1 as i64, t.2 as i64);
        (-2 * a + b - c, -b - c)
    }

    /// Common relative weight of all terms, if homogeneous and nonzero.
    pub fn weight(&self) -> Option<(i64, i64)> {
        let mut it = self.coeffs.keys().map(|t| Self::relative_weight(*t));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

impl<K: Coeff> VermaElement<K> {
    /// The element `p` of `U(kf + V*)` with `self = p.v`.
    pub fn to_poly(&self) -> NcPoly<K> {
        NcPoly::from_terms(
            GenOrder::Triangular,
            self.coeffs
                .iter()
                .map(|(&t, c)| (VermaModule::<K>::triple_word(t), c.clone())),
        )
    }
}

impl<K: Coeff> fmt::Display for VermaElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        if p.is_zero() {
            return write!(f, "0");
        }
        if p.len() == 1 {
            let (w, c) = p.terms().next().unwrap();
            if w.is_empty() && c.is_one() {
                return write!(f, "v");
            }
            if c.is_one() {
                return write!(f, "{p}.v");
            }
        }
        write!(f, "({p}).v")
    }
}

impl<K: Coeff> fmt::Debug for VermaElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `M(lambda, mu)` with a normalizer in the triangular order, where the
/// action on the highest-weight vector is read off a word's suffix.
pub struct VermaModule<'a, K: Coeff> {
    algebra: &'a Gl2Cherednik<K>,
    lambda: K,
    mu: K,
    norm: Normalizer<'a, K>,
}

impl<'a, K: Coeff> VermaModule<'a, K> {
    pub fn new(algebra: &'a Gl2Cherednik<K>, lambda: K, mu: K) -> Self {
        VermaModule {
            algebra,
            lambda,
            mu,
            norm: Normalizer::new(algebra.table_for(GenOrder::Triangular)),
        }
    }

    pub fn lambda(&self) -> &K {
        &self.lambda
    }

    pub fn mu(&self) -> &K {
        &self.mu
    }

    pub fn highest_weight(&self) -> VermaElement<K> {
        VermaElement::highest_weight(self.lambda.clone(), self.mu.clone())
    }

    pub fn basis(&self, t: Triple) -> VermaElement<K> {
        VermaElement::basis(self.lambda.clone(), self.mu.clone(), t)
    }

    /// Value on `v` of a word normal in the triangular order.
    fn evaluate_word(&self, w: &[Gen]) -> Option<(Triple, K)> {
        let mut t = (0, 0, 0);
        let mut scalar = K::one();
        for &g in w {
            match g {
                Gen::F => t.0 += 1,
                Gen::X1 => t.1 += 1,
                Gen::Y1 => t.2 += 1,
                Gen::Tau => scalar *= self.mu.clone(),
                Gen::H => scalar *= self.lambda.clone(),
                // e, x, y sit rightmost and kill v
                Gen::E | Gen::X | Gen::Y => return None,
            }
        }
        Some((t, scalar))
    }

    fn triple_word(t: Triple) -> Word {
        let mut w = vec![Gen::F; t.0 as usize];
        w.extend(std::iter::repeat_n(Gen::X1, t.1 as usize));
        w.extend(std::iter::repeat_n(Gen::Y1, t.2 as usize));
        w
    }

    /// `g . w`.
    pub fn act(&mut self, g: &NcPoly<K>, w: &VermaElement<K>) -> Result<VermaElement<K>> {
        let g = if g.order() == GenOrder::Triangular {
            g.clone()
        } else {
            self.norm
                .normalize(&g.clone().with_order(GenOrder::Triangular))?
        };
        let mut out = VermaElement::zero(self.lambda.clone(), self.mu.clone());
        for (t, c) in w.coeffs() {
            let vec = NcPoly::word(GenOrder::Triangular, &Self::triple_word(*t));
            let prod = self.norm.mul(&g, &vec)?;
            for (word, k) in prod.terms() {
                if let Some((nt, s)) = self.evaluate_word(word) {
                    out.add(nt, s * k.clone() * c.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn act_gen(&mut self, g: Gen, w: &VermaElement<K>) -> Result<VermaElement<K>> {
        self.act(&NcPoly::gen(GenOrder::Triangular, g), w)
    }

    /// Maximal vectors among the basis vectors with `a + b + c <= depth`.
    ///
    /// Solved per weight slice. Images under `e`, `x`, `y` are computed in
    /// full, including components outside the window, so every returned
    /// vector is exactly maximal.
    pub fn maximal_vectors(&mut self, depth: u32) -> Result<Vec<VermaElement<K>>> {
        let mut slices: BTreeMap<(i64, i64), Vec<Triple>> = BTreeMap::new();
        for a in 0..=depth {
            for b in 0..=depth - a {
                for c in 0..=depth - a - b {
                    slices
                        .entry(VermaElement::<K>::relative_weight((a, b, c)))
                        .or_default()
                        .push((a, b, c));
                }
            }
        }
        let mut out = Vec::new();
        // highest weight first
        for (_, triples) in slices.iter().rev() {
            let mut sys: ColumnSystem<(Gen, Triple), K> = ColumnSystem::new(triples.len());
            for (col, &t) in triples.iter().enumerate() {
                let v = self.basis(t);
                for g in [Gen::E, Gen::X, Gen::Y] {
                    for (nt, k) in self.act_gen(g, &v)?.coeffs() {
                        sys.push((g, *nt), col, k.clone());
                    }
                }
            }
            let mut kernel = sys.nullspace();
            rref(&mut kernel, triples.len());
            for v in kernel {
                let mut e = VermaElement::zero(self.lambda.clone(), self.mu.clone());
                for (t, c) in triples.iter().zip(v) {
                    e.add(*t, c);
                }
                out.push(e);
            }
        }
        out.sort_by_key(|v| v.coeffs().map(|(t, _)| (t.0 + t.1 + t.2, *t)).min());
        Ok(out)
    }

    pub fn algebra(&self) -> &'a Gl2Cherednik<K> {
        self.algebra
    }
}

/// `g . w` in `M(lambda, mu)`, where `(lambda, mu)` are read from `w`.
pub fn verma_act<K: Coeff>(
    g: &NcPoly<K>,
    w: &VermaElement<K>,
    algebra: &Gl2Cherednik<K>,
) -> Result<VermaElement<K>> {
    VermaModule::new(algebra, w.lambda().clone(), w.mu().clone()).act(g, w)
}

pub fn maximal_vectors<K: Coeff>(
    algebra: &Gl2Cherednik<K>,
    lambda: K,
    mu: K,
    depth: u32,
) -> Result<Vec<VermaElement<K>>> {
    VermaModule::new(algebra, lambda, mu).maximal_vectors(depth)
}

/// `alpha_m` and what is known about it.
#[derive(Clone, Debug)]
pub struct AlphaM<K: Coeff> {
    pub m: u32,
    /// `[y^m, x1^m]` modulo the left ideal `H_c V`, in the default order.
    pub alpha: NcPoly<K>,
    /// The remainder has no `x1`, `y1` letters.
    pub in_ug: bool,
    /// Commutes with `e`, `f`, `h`.
    pub central_in_ug: bool,
    /// The same element as a polynomial in `Delta`, `tau`, when central.
    pub as_central: Option<CentralPoly<K>>,
}

/// `[y^m, x1^m]` normalized in `order`, then reduced modulo `H_c V`.
///
/// The reduction happens in the triangular basis, where `x`, `y` are
/// rightmost and `H_c V` is spanned by the words ending in them. Returned in
/// the default order.
pub fn alpha_m_in<K: Coeff>(
    algebra: &Gl2Cherednik<K>,
    m: u32,
    order: GenOrder,
) -> Result<NcPoly<K>> {
    let mut n = Normalizer::new(algebra.table_for(order));
    let ym = NcPoly::word(order, &vec![Gen::Y; m as usize]);
    let x1m = NcPoly::word(order, &vec![Gen::X1; m as usize]);
    let bracket = n.commutator(&ym, &x1m)?;
    let bracket = if order == GenOrder::Triangular {
        bracket
    } else {
        algebra.convert(&bracket, GenOrder::Triangular)?
    };
    let rest = bracket.filter(|w| !matches!(w.last(), Some(Gen::X | Gen::Y)));
    algebra.convert(&rest, GenOrder::Default)
}

pub fn alpha_m<K: Coeff>(algebra: &Gl2Cherednik<K>, m: u32) -> Result<AlphaM<K>> {
    let alpha = alpha_m_in(algebra, m, GenOrder::Triangular)?;
    let in_ug = !alpha.contains_gen(Gen::X1) && !alpha.contains_gen(Gen::Y1);
    let mut n = algebra.normalizer();
    let mut central_in_ug = in_ug;
    if in_ug {
        for g in [Gen::E, Gen::F, Gen::H] {
            if !n
                .commutator(&alpha, &NcPoly::gen(GenOrder::Default, g))?
                .is_zero()
            {
                central_in_ug = false;
            }
        }
    }
    let as_central = if central_in_ug {
        express_central(&mut n, &alpha)?
    } else {
        None
    };
    Ok(AlphaM {
        m,
        alpha,
        in_ug,
        central_in_ug,
        as_central,
    })
}

/// Write an element of `U(gl2)` as a polynomial in `Delta`, `tau`, if it is one.
pub fn express_central<K: Coeff>(
    n: &mut Normalizer<'_, K>,
    p: &NcPoly<K>,
) -> Result<Option<CentralPoly<K>>> {
    if p.v_degree().unwrap_or(0) > 0 {
        return Ok(None);
    }
    let len = p.degree().unwrap_or(0) as u32;
    let basis: Vec<(u32, u32)> = (0..=len / 2)
        .flat_map(|i| (0..=len).map(move |j| (i, j)))
        .filter(|(i, j)| 2 * i + j <= len)
        .collect();
    let mut sys: ColumnSystem<Word, K> = ColumnSystem::new(basis.len());
    for (col, &(i, j)) in basis.iter().enumerate() {
        let img = embed_with(n, &CentralPoly::monomial(K::one(), i, j))?;
        for (w, v) in img.into_terms() {
            sys.push(w, col, v);
        }
    }
    let rhs = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    Ok(sys
        .solve(&rhs)
        .map(|sol| CentralPoly::from_terms(basis.into_iter().zip(sol))))
}

/// Verdict on `L(lambda, mu)`.
#[derive(Clone, Debug)]
pub struct FiniteDimReport<K: Coeff> {
    pub lambda: K,
    pub mu: K,
    /// `lambda` is a non-negative integer.
    pub lambda_integral: bool,
    /// `f^(lambda+1)` kills `V(lambda, mu)`; reported separately from the
    /// `alpha_m` condition.
    pub f_nilpotent: Option<bool>,
    /// `(m, alpha_m kills V(lambda, mu), alpha_m central in U(gl2))`.
    pub per_m: Vec<(u32, bool, bool)>,
    /// Least `m` with `alpha_m V(lambda, mu) = 0`.
    pub witness: Option<u32>,
}

impl<K: Coeff> FiniteDimReport<K> {
    pub fn finite_dimensional(&self) -> bool {
        self.lambda_integral && self.witness.is_some()
    }
}

pub fn finite_dim_test<K: Coeff>(
    algebra: &Gl2Cherednik<K>,
    lambda: &K,
    mu: &K,
    m_max: u32,
) -> Result<FiniteDimReport<K>> {
    let mut report = FiniteDimReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        lambda_integral: false,
        f_nilpotent: None,
        per_m: Vec::new(),
        witness: None,
    };
    let Some(lam) = lambda.as_nonneg_integer() else {
        return Ok(report);
    };
    report.lambda_integral = true;
    let irrep = Gl2Irrep::new(lam, mu.clone());
    let f_pow = NcPoly::word(GenOrder::Default, &vec![Gen::F; lam as usize + 1]);
    report.f_nilpotent = Some(irrep.annihilates(&f_pow)?);
    for m in 1..=m_max {
        let a = alpha_m(algebra, m)?;
        let kills = a.in_ug && irrep.annihilates(&a.alpha)?;
        report.per_m.push((m, kills, a.central_in_ug));
        if kills && report.witness.is_none() {
            report.witness = Some(m);
            break;
        }
    }
    Ok(report)
}
