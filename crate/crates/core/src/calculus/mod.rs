//! Center calculus: the Jacobi condition, inverting `F`, the central
//! elements `B` and `D`, and bounded scans of the center.

pub mod fg;

use std::collections::BTreeMap;

use crate::algebra::{b_words, d_words, embed_with, Gl2Cherednik};
use crate::central::CentralPoly;
use crate::centrality::{monomial_box, solve_centrality};
use crate::error::{EngineError, Result};
use crate::field::Coeff;
use crate::generator::{Gen, GenOrder};
use crate::linalg::{echelonize, ColumnSystem};
use crate::ncpoly::{word_v_degree, NcPoly};
use crate::rewrite::Normalizer;

use self::fg::{fg, fg_with, FgTable};

/// `4 Delta F(F(c)) + 6 F(c) - 6 G(F(c)) - G(G(c))`; `c` is admissible
/// exactly when this vanishes.
pub fn jacobi_residual<K: Coeff>(c: &CentralPoly<K>) -> CentralPoly<K> {
    let mut t = FgTable::new();
    let (f_c, g_c) = fg_with(&mut t, c);
    let (ff, gf) = fg_with(&mut t, &f_c);
    let gg = fg_with(&mut t, &g_c).1;
    (&CentralPoly::delta() * &ff).scale(&K::from_i64(4)) + f_c.scale(&K::from_i64(6))
        - gf.scale(&K::from_i64(6))
        - gg
}

/// One `a` with `F(a) = beta`, with no pure-`tau` part (the kernel of `F`
/// is `k[tau]`). `max_delta_degree` bounds the `Delta`-degree of `a`.
pub fn solve_f<K: Coeff>(beta: &CentralPoly<K>, max_delta_degree: u32) -> Result<CentralPoly<K>> {
    if beta.is_zero() {
        return Ok(CentralPoly::zero());
    }
    let tm = beta.tau_degree().unwrap_or(0);
    let basis: Vec<(u32, u32)> = (1..=max_delta_degree)
        .flat_map(|n| (0..=tm).map(move |m| (n, m)))
        .collect();
    let mut table = FgTable::up_to(max_delta_degree);
    let mut sys: ColumnSystem<(u32, u32), K> = ColumnSystem::new(basis.len());
    for (col, &(n, m)) in basis.iter().enumerate() {
        let image = fg_with(&mut table, &CentralPoly::monomial(K::one(), n, m)).0;
        for (&key, v) in image.terms() {
            sys.push(key, col, v.clone());
        }
    }
    let rhs: BTreeMap<(u32, u32), K> = beta.terms().map(|(k, v)| (*k, v.clone())).collect();
    let sol = sys.solve(&rhs).ok_or_else(|| {
        EngineError::NoSolution(format!(
            "F(a) = {beta} with Delta-degree of a at most {max_delta_degree}"
        ))
    })?;
    Ok(CentralPoly::from_terms(basis.into_iter().zip(sol)))
}

/// Outcome of checking an element against all eight generators.
#[derive(Clone, Debug)]
pub struct CentralityCheck<K: Coeff> {
    pub element: NcPoly<K>,
    /// Nonzero commutators `[element, g]`.
    pub residuals: Vec<(Gen, NcPoly<K>)>,
}

impl<K: Coeff> CentralityCheck<K> {
    pub fn is_central(&self) -> bool {
        self.residuals.is_empty()
    }
}

pub fn check_central<K: Coeff>(
    n: &mut Normalizer<'_, K>,
    element: NcPoly<K>,
) -> Result<CentralityCheck<K>> {
    let order = n.table().order();
    let mut residuals = Vec::new();
    for g in Gen::ALL {
        let r = n.commutator(&element, &NcPoly::gen(order, g))?;
        if !r.is_zero() {
            residuals.push((g, r));
        }
    }
    Ok(CentralityCheck { element, residuals })
}

/// `B = y1 x - x1 y - c`, checked against every generator.
pub fn central_b<K: Coeff>(algebra: &Gl2Cherednik<K>) -> Result<CentralityCheck<K>> {
    let mut n = algebra.normalizer();
    let b = n.normalize(&b_words(GenOrder::Default))?;
    let c = embed_with(&mut n, algebra.c())?;
    check_central(&mut n, b - c)
}

/// Which reading of the hand-derived lift formula matched the solved `z`.
#[derive(Clone, Debug)]
pub struct LiftCandidate<K: Coeff> {
    pub label: &'static str,
    pub value: CentralPoly<K>,
    /// `z - value` lies in `k[tau]`.
    pub matches_mod_tau: bool,
    /// `z - value` is a constant.
    pub matches_mod_constants: bool,
}

#[derive(Clone, Debug)]
pub struct DLift<K: Coeff> {
    /// Central correction, with zero constant term.
    pub z: CentralPoly<K>,
    /// `D = d - z`, with its centrality check.
    pub check: CentralityCheck<K>,
    /// `a` with `F(a) = c + Delta F(c)`.
    pub alpha: Option<CentralPoly<K>>,
    pub candidates: Vec<LiftCandidate<K>>,
}

impl<K: Coeff> DLift<K> {
    pub fn d(&self) -> &NcPoly<K> {
        &self.check.element
    }

    /// First reading of the closed form agreeing with `z` modulo `k[tau]`.
    pub fn matching_candidate(&self) -> Option<&LiftCandidate<K>> {
        self.candidates.iter().find(|c| c.matches_mod_tau)
    }
}

/// Solve `[d - z, x] = 0` for central `z` in the box
/// `{Delta^n tau^m : n, m <= bound}` and check `D = d - z` is central.
pub fn central_d_lift<K: Coeff>(algebra: &Gl2Cherednik<K>, bound: u32) -> Result<DLift<K>> {
    let order = GenOrder::Default;
    let mut n = algebra.normalizer();
    let d = n.normalize(&d_words(order))?;
    let x = NcPoly::gen(order, Gen::X);
    let target = n.commutator(&d, &x)?;

    let basis: Vec<(u32, u32)> = (0..=bound)
        .flat_map(|i| (0..=bound).map(move |j| (i, j)))
        .filter(|&k| k != (0, 0))
        .collect();
    let mut sys: ColumnSystem<Vec<Gen>, K> = ColumnSystem::new(basis.len());
    for (col, &(i, j)) in basis.iter().enumerate() {
        let emb = embed_with(&mut n, &CentralPoly::monomial(K::one(), i, j))?;
        for (w, v) in n.commutator(&emb, &x)?.into_terms() {
            sys.push(w, col, v);
        }
    }
    let rhs = target
        .terms()
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect();
    let sol = sys.solve(&rhs).ok_or_else(|| {
        EngineError::NoSolution(format!(
            "no central z with Delta- and tau-degree at most {bound} lifts d"
        ))
    })?;
    let z = CentralPoly::from_terms(basis.into_iter().zip(sol));
    let z_emb = embed_with(&mut n, &z)?;
    let check = check_central(&mut n, d - z_emb)?;

    let c = algebra.c().clone();
    let (f_c, _) = fg(&c);
    let goal = c.clone() + &CentralPoly::delta() * &f_c;
    let alpha_bound = goal.delta_degree().unwrap_or(0) + 1;
    let alpha = solve_f(&goal, alpha_bound).ok();
    let mut candidates = Vec::new();
    if let Some(a) = &alpha {
        let half = K::one().checked_div(&K::from_i64(2));
        let three_halves = K::from_i64(3).checked_div(&K::from_i64(2));
        if let (Some(half), Some(th)) = (half, three_halves) {
            let half_a = a.scale(&half);
            let tau_c = &(CentralPoly::tau() + CentralPoly::constant(th.clone())) * &c;
            let half_delta_c = (&CentralPoly::delta() * &c).scale(&half);
            let readings = [
                ("(tau + 3/2)*c + alpha/2", tau_c.clone() + half_a.clone()),
                (
                    "tau + 3/2*c + alpha/2",
                    CentralPoly::tau() + c.scale(&th) + half_a.clone(),
                ),
                (
                    "(tau + 3/2)*c + (Delta*c - alpha)/2",
                    tau_c + half_delta_c - half_a,
                ),
            ];
            for (label, value) in readings {
                let diff = z.clone() - value.clone();
                candidates.push(LiftCandidate {
                    label,
                    matches_mod_tau: diff.delta_degree().unwrap_or(0) == 0,
                    matches_mod_constants: diff.without_constant().is_zero(),
                    value,
                });
            }
        }
    }
    Ok(DLift {
        z,
        check,
        alpha,
        candidates,
    })
}

/// Search box for center scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBox {
    /// Plane letters per word.
    pub v_degree: u32,
    /// gl2 letters per word.
    pub ug_degree: u32,
    /// Optional bound on total word length.
    pub total: Option<u32>,
}

impl ScanBox {
    pub fn total(n: u32) -> Self {
        ScanBox {
            v_degree: n,
            ug_degree: n,
            total: Some(n),
        }
    }

    pub fn split(v_degree: u32, ug_degree: u32) -> Self {
        ScanBox {
            v_degree,
            ug_degree,
            total: None,
        }
    }

    /// Whether every word of `p` fits.
    pub fn contains(&self, p: &NcPoly<impl Coeff>) -> bool {
        p.terms().all(|(w, _)| {
            let v = word_v_degree(w);
            let g = w.len() as u32 - v;
            v <= self.v_degree
                && g <= self.ug_degree
                && self.total.is_none_or(|t| w.len() as u32 <= t)
        })
    }
}

#[derive(Clone, Debug)]
pub struct CenterScan<K: Coeff> {
    pub scan_box: ScanBox,
    /// Echelonized basis of the central elements in the box.
    pub basis: Vec<NcPoly<K>>,
    /// Products `B^i D^j` that fit in the box, labelled `(i, j)`.
    pub products: Vec<((u32, u32), NcPoly<K>)>,
    /// Whether the products span exactly the scanned center.
    pub products_span_equal: bool,
}

/// Central elements among the normal monomials in the box, compared with
/// the span of the products `B^i D^j` lying in the same box.
pub fn center_scan<K: Coeff>(
    algebra: &Gl2Cherednik<K>,
    scan_box: ScanBox,
    lift_bound: u32,
) -> Result<CenterScan<K>> {
    let table = algebra.table();
    let space: Vec<NcPoly<K>> = monomial_box(table, scan_box.v_degree, scan_box.ug_degree)
        .into_iter()
        .filter(|m| scan_box.contains(m))
        .collect();
    let basis = solve_centrality(table, &space)?;

    let mut products = Vec::new();
    let b = central_b(algebra)?.element;
    let d = match central_d_lift(algebra, lift_bound) {
        Ok(l) if l.check.is_central() => Some(l.check.element),
        _ => None,
    };
    let mut n = algebra.normalizer();
    // B and D both have V-degree 2
    let max_pow = scan_box.v_degree / 2;
    let b_pows = powers(&mut n, &b, max_pow)?;
    let d_pows = match &d {
        Some(d) => powers(&mut n, d, max_pow)?,
        None => vec![NcPoly::one(GenOrder::Default)],
    };
    for (i, bp) in b_pows.iter().enumerate() {
        for (j, dp) in d_pows.iter().enumerate() {
            if i + j > max_pow as usize {
                continue;
            }
            let prod = n.mul(bp, dp)?;
            if scan_box.contains(&prod) {
                products.push(((i as u32, j as u32), prod));
            }
        }
    }
    let product_elems: Vec<NcPoly<K>> = products.iter().map(|(_, p)| p.clone()).collect();
    let products_span_equal = echelonize(table.order(), &product_elems) == basis;
    Ok(CenterScan {
        scan_box,
        basis,
        products,
        products_span_equal,
    })
}

fn powers<K: Coeff>(n: &mut Normalizer<'_, K>, a: &NcPoly<K>, max: u32) -> Result<Vec<NcPoly<K>>> {
    let mut out = vec![NcPoly::one(a.order())];
    for i in 0..max as usize {
        let next = n.mul(&out[i], a)?;
        out.push(next);
    }
    Ok(out)
}
