//! Central elements inside a finite search space.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::field::Coeff;
use crate::generator::Gen;
use crate::linalg::{echelonize, ColumnSystem};
use crate::ncpoly::{word_biweight, NcPoly, Word};
use crate::rewrite::Normalizer;
use crate::table::RelationTable;

/// Basis of the elements of `span(search_space)` commuting with all eight
/// generators. Commutators are computed in full; nothing is truncated.
///
/// Commutators preserve biweight, so when every element is
/// biweight-homogeneous each slice is solved on its own. Otherwise the
/// whole space is one system.
pub fn solve_centrality<K: Coeff>(
    table: &RelationTable<K>,
    search_space: &[NcPoly<K>],
) -> Result<Vec<NcPoly<K>>> {
    let elems: Vec<&NcPoly<K>> = search_space.iter().filter(|e| !e.is_zero()).collect();
    let mut slices: BTreeMap<Option<(i32, i32)>, Vec<&NcPoly<K>>> = BTreeMap::new();
    if elems.iter().all(|e| e.is_biweight_homogeneous()) {
        for e in elems {
            slices.entry(e.biweight()).or_default().push(e);
        }
    } else {
        slices.insert(None, elems);
    }
    let mut n = Normalizer::new(table);
    let mut found = Vec::new();
    for elems in slices.values() {
        found.extend(solve_slice(&mut n, elems)?);
    }
    Ok(echelonize(table.order(), &found))
}

fn solve_slice<K: Coeff>(
    n: &mut Normalizer<'_, K>,
    elems: &[&NcPoly<K>],
) -> Result<Vec<NcPoly<K>>> {
    let order = n.table().order();
    let mut sys: ColumnSystem<(Gen, Word), K> = ColumnSystem::new(elems.len());
    for (col, z) in elems.iter().enumerate() {
        for g in Gen::ALL {
            let c = n.commutator(z, &NcPoly::gen(order, g))?;
            for (w, v) in c.into_terms() {
                sys.push((g, w), col, v);
            }
        }
    }
    Ok(sys
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut z = NcPoly::zero(order);
            for (e, c) in elems.iter().zip(v) {
                z.add_scaled(e, &c);
            }
            z
        })
        .filter(|z| !z.is_zero())
        .collect())
}

/// All normal words with at most `v_bound` plane letters and `g_bound` gl2
/// letters, as monomials.
pub fn monomial_box<K: Coeff>(
    table: &RelationTable<K>,
    v_bound: u32,
    g_bound: u32,
) -> Vec<NcPoly<K>> {
    let order = table.order();
    let seq = order.sequence();
    let mut out = Vec::new();
    let mut word = Vec::new();
    fn rec(
        seq: &[Gen; 8],
        start: usize,
        v_left: u32,
        g_left: u32,
        word: &mut Vec<Gen>,
        out: &mut Vec<Word>,
    ) {
        out.push(word.clone());
        for (i, &g) in seq.iter().enumerate().skip(start) {
            let ok = if g.is_v() { v_left > 0 } else { g_left > 0 };
            if !ok {
                continue;
            }
            word.push(g);
            let (v, gl) = if g.is_v() {
                (v_left - 1, g_left)
            } else {
                (v_left, g_left - 1)
            };
            rec(seq, i, v, gl, word, out);
            word.pop();
        }
    }
    let mut words = Vec::new();
    rec(&seq, 0, v_bound, g_bound, &mut word, &mut words);
    for w in words {
        out.push(NcPoly::word(order, &w));
    }
    out
}

/// All normal words of length at most `total`.
pub fn monomials_up_to<K: Coeff>(table: &RelationTable<K>, total: u32) -> Vec<NcPoly<K>> {
    monomial_box(table, total, total)
        .into_iter()
        .filter(|m| m.degree().unwrap_or(0) <= total as usize)
        .collect()
}

/// Restrict a monomial list to biweight `(0, 0)` words.
pub fn weight_zero<K: Coeff>(monomials: Vec<NcPoly<K>>) -> Vec<NcPoly<K>> {
    monomials
        .into_iter()
        .filter(|m| m.terms().all(|(w, _)| word_biweight(w) == (0, 0)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Gl2Cherednik;
    use crate::field::Rational;
    use crate::generator::GenOrder;

    const O: GenOrder = GenOrder::Default;

    #[test]
    fn trivial_spaces() {
        let h = Gl2Cherednik::<Rational>::undeformed().unwrap();
        let one = NcPoly::one(O);
        assert_eq!(
            solve_centrality(h.table(), std::slice::from_ref(&one)).unwrap(),
            vec![one]
        );
        assert!(solve_centrality(h.table(), &[NcPoly::gen(O, Gen::X)])
            .unwrap()
            .is_empty());
        assert!(solve_centrality(h.table(), &[]).unwrap().is_empty());
    }

    #[test]
    fn degree_two_center_is_one_and_b() {
        let h = Gl2Cherednik::<Rational>::undeformed().unwrap();
        let found = solve_centrality(h.table(), &monomials_up_to(h.table(), 2)).unwrap();
        let b = h.distinguished_elements().unwrap().b;
        let expected = echelonize(O, &[NcPoly::one(O), b]);
        assert_eq!(found, expected);
    }

    #[test]
    fn mixed_weights_are_separated() {
        let h = Gl2Cherednik::<Rational>::undeformed().unwrap();
        let b = h.distinguished_elements().unwrap().b;
        let x = NcPoly::gen(O, Gen::X);
        let found = solve_centrality(h.table(), &[b.clone() + x.clone(), x]).unwrap();
        assert_eq!(found, echelonize(O, &[b]));
    }
}
