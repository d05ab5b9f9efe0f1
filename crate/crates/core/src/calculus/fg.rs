//! The endomorphisms `F`, `G` of the center of `U(gl2)`, defined by
//! `[a, x] = (2h F(a) + G(a)) x + 4e F(a) y`.

use crate::algebra::{embed_with, Gl2Cherednik};
use crate::central::{CentralPoly, CentralVar};
use crate::error::{EngineError, Result};
use crate::field::Coeff;
use crate::generator::{Gen, GenOrder};
use crate::linalg::ColumnSystem;
use crate::ncpoly::{NcPoly, Word};

/// Rows `F(Delta^n)`, `G(Delta^n)` produced by the recursions
///
/// ```text
/// F(Delta b) = b + (Delta - 1) F(b) - G(b)
/// G(Delta b) = -3 b - 4 F(b) Delta + (Delta + 3) G(b)
/// ```
///
/// starting from `F(1) = G(1) = 0`. Division-free, so valid in every
/// characteristic.
#[derive(Clone, Debug)]
pub struct FgTable<K: Coeff> {
    rows: Vec<(CentralPoly<K>, CentralPoly<K>)>,
}

impl<K: Coeff> Default for FgTable<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Coeff> FgTable<K> {
    pub fn new() -> Self {
        FgTable {
            rows: vec![(CentralPoly::zero(), CentralPoly::zero())],
        }
    }

    pub fn up_to(n: u32) -> Self {
        let mut t = Self::new();
        t.extend_to(n);
        t
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn extend_to(&mut self, n: u32) {
        while self.rows.len() <= n as usize {
            let k = self.rows.len() as u32 - 1;
            let (f, g) = self.rows.last().unwrap().clone();
            self.rows.push(recursion_step(
                &CentralPoly::monomial(K::one(), k, 0),
                &f,
                &g,
            ));
        }
    }

    /// `(F(Delta^n), G(Delta^n))`
    pub fn row(&mut self, n: u32) -> &(CentralPoly<K>, CentralPoly<K>) {
        self.extend_to(n);
        &self.rows[n as usize]
    }
}

/// One application of the `Delta`-multiplication recursions:
/// `(F(Delta b), G(Delta b))` from `b`, `F(b)`, `G(b)`.
pub fn recursion_step<K: Coeff>(
    beta: &CentralPoly<K>,
    f_beta: &CentralPoly<K>,
    g_beta: &CentralPoly<K>,
) -> (CentralPoly<K>, CentralPoly<K>) {
    let delta = CentralPoly::<K>::delta();
    let one = CentralPoly::<K>::one();
    let f = beta.clone() + &(delta.clone() - one) * f_beta - g_beta.clone();
    let g = beta.scale(&K::from_i64(-3)) - (&delta * f_beta).scale(&K::from_i64(4))
        + &(delta + CentralPoly::constant(K::from_i64(3))) * g_beta;
    (f, g)
}

/// `(F(a), G(a))` by linearity over monomials `tau^m Delta^n`:
/// `F(tau^m Delta^n) = (tau-1)^m F(Delta^n)` and
/// `G(tau^m Delta^n) = (tau-1)^m G(Delta^n) + (tau^m)' Delta^n`.
pub fn fg<K: Coeff>(alpha: &CentralPoly<K>) -> (CentralPoly<K>, CentralPoly<K>) {
    let mut table = FgTable::new();
    fg_with(&mut table, alpha)
}

pub fn fg_with<K: Coeff>(
    table: &mut FgTable<K>,
    alpha: &CentralPoly<K>,
) -> (CentralPoly<K>, CentralPoly<K>) {
    let mut f = CentralPoly::zero();
    let mut g = CentralPoly::zero();
    let minus_one = -K::one();
    for (&(n, m), c) in alpha.terms() {
        let (fd, gd) = table.row(n).clone();
        let tau_m = CentralPoly::monomial(K::one(), 0, m);
        let shifted = tau_m.substitute_shift(CentralVar::Tau, &minus_one);
        let diff = tau_m.discrete_derivative().expect("pure tau");
        let delta_n = CentralPoly::monomial(K::one(), n, 0);
        f = f + (&shifted * &fd).scale(c);
        g = g + (&shifted * &gd + &diff * &delta_n).scale(c);
    }
    (f, g)
}

pub fn f_of<K: Coeff>(alpha: &CentralPoly<K>) -> CentralPoly<K> {
    fg(alpha).0
}

pub fn g_of<K: Coeff>(alpha: &CentralPoly<K>) -> CentralPoly<K> {
    fg(alpha).1
}

/// `(F(a), G(a))` read off from the commutator `[a, x]` computed in the
/// algebra. Independent of the recursions; needs 2 to be invertible.
pub fn fg_extract<K: Coeff>(
    alpha: &CentralPoly<K>,
    algebra: &Gl2Cherednik<K>,
) -> Result<(CentralPoly<K>, CentralPoly<K>)> {
    if K::characteristic() == 2 {
        return Err(EngineError::Extraction(
            "extraction divides by 2 and 4; unavailable in characteristic 2".into(),
        ));
    }
    let order = GenOrder::Default;
    let mut n = algebra.normalizer();
    let a_emb = embed_with(&mut n, alpha)?;
    let bracket = n.commutator(&a_emb, &NcPoly::gen(order, Gen::X))?;

    let mut coeff_x = NcPoly::zero(order);
    let mut coeff_y = NcPoly::zero(order);
    for (w, c) in bracket.terms() {
        let split = w
            .split_last()
            .filter(|(_, pre)| pre.iter().all(|g| !g.is_v()));
        match split {
            Some((&Gen::X, pre)) => coeff_x.add_term(pre.to_vec(), c.clone()),
            Some((&Gen::Y, pre)) => coeff_y.add_term(pre.to_vec(), c.clone()),
            _ => {
                return Err(EngineError::Extraction(format!(
                    "[{alpha}, x] = {bracket} is not of the form A x + B y"
                )))
            }
        }
    }

    // Unknowns range over tau^m Delta^n with n, m up to those of alpha.
    let dn = alpha.delta_degree().unwrap_or(0);
    let tm = alpha.tau_degree().unwrap_or(0);
    let basis: Vec<(u32, u32)> = (0..=dn)
        .flat_map(|i| (0..=tm).map(move |j| (i, j)))
        .collect();
    let mut images = Vec::with_capacity(basis.len());
    for &(i, j) in &basis {
        images.push(embed_with(&mut n, &CentralPoly::monomial(K::one(), i, j))?);
    }

    // 4 e F = B
    let e = NcPoly::gen(order, Gen::E);
    let mut sys_f: ColumnSystem<Word, K> = ColumnSystem::new(basis.len());
    for (col, img) in images.iter().enumerate() {
        for (w, v) in n.mul(&e, img)?.into_terms() {
            sys_f.push(w, col, v.clone() * K::from_i64(4));
        }
    }
    let rhs_f = coeff_y
        .terms()
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect();
    let f_sol = sys_f.solve(&rhs_f).ok_or_else(|| {
        EngineError::Extraction(format!(
            "y-coefficient {coeff_y} is not 4e times a central element"
        ))
    })?;
    let f = CentralPoly::from_terms(basis.iter().copied().zip(f_sol));

    // G = A - 2h F
    let f_emb = embed_with(&mut n, &f)?;
    let two_h_f = n
        .mul(&NcPoly::gen(order, Gen::H), &f_emb)?
        .scale(&K::from_i64(2));
    let g_target = coeff_x - two_h_f;
    let mut sys_g: ColumnSystem<Word, K> = ColumnSystem::new(basis.len());
    for (col, img) in images.iter().enumerate() {
        for (w, v) in img.terms() {
            sys_g.push(w.clone(), col, v.clone());
        }
    }
    let rhs_g = g_target
        .terms()
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect();
    let g_sol = sys_g.solve(&rhs_g).ok_or_else(|| {
        EngineError::Extraction(format!(
            "x-coefficient minus 2hF is not central: {g_target}"
        ))
    })?;
    let g = CentralPoly::from_terms(basis.iter().copied().zip(g_sol));
    Ok((f, g))
}
