//! Exact Gaussian elimination over a coefficient field.

use std::collections::BTreeMap;

use crate::field::Coeff;
use crate::generator::GenOrder;
use crate::ncpoly::{NcPoly, Word};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<K: Coeff>(rows: &mut Vec<Vec<K>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= factor.clone() * pv.clone();
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{v : A v = 0}`, one vector per free column, each with a 1 in
/// its free column.
pub fn nullspace<K: Coeff>(rows: &[Vec<K>], ncols: usize) -> Vec<Vec<K>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![K::zero(); ncols];
            v[fc] = K::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = -row[fc].clone();
            }
            v
        })
        .collect()
}

/// One solution of `A x = b`, with free variables set to zero.
pub fn solve<K: Coeff>(rows: &[Vec<K>], rhs: &[K], ncols: usize) -> Option<Vec<K>> {
    let mut m: Vec<Vec<K>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols + 1);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![K::zero(); ncols];
    for (row, &pc) in m.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// Sparse linear system whose rows are indexed by arbitrary keys, built
/// column by column.
pub struct ColumnSystem<R: Ord, K: Coeff> {
    rows: BTreeMap<R, Vec<(usize, K)>>,
    ncols: usize,
}

impl<R: Ord, K: Coeff> ColumnSystem<R, K> {
    pub fn new(ncols: usize) -> Self {
        ColumnSystem {
            rows: BTreeMap::new(),
            ncols,
        }
    }

    pub fn push(&mut self, row: R, col: usize, v: K) {
        if !v.is_zero() {
            self.rows.entry(row).or_default().push((col, v));
        }
    }

    pub fn dense_rows(&self) -> Vec<Vec<K>> {
        self.rows
            .values()
            .map(|entries| {
                let mut r = vec![K::zero(); self.ncols];
                for (c, v) in entries {
                    r[*c] += v.clone();
                }
                r
            })
            .collect()
    }

    pub fn nullspace(&self) -> Vec<Vec<K>> {
        nullspace(&self.dense_rows(), self.ncols)
    }

    /// Solve against a right-hand side given on the same row keys.
    pub fn solve(&self, rhs: &BTreeMap<R, K>) -> Option<Vec<K>> {
        // rows present only in rhs force inconsistency
        if rhs
            .iter()
            .any(|(k, v)| !v.is_zero() && !self.rows.contains_key(k))
        {
            return None;
        }
        let rows = self.dense_rows();
        let b: Vec<K> = self
            .rows
            .keys()
            .map(|k| rhs.get(k).cloned().unwrap_or_else(K::zero))
            .collect();
        solve(&rows, &b, self.ncols)
    }
}

/// Canonical basis of the span of `elems`: reduced echelon form over word
/// coordinates, pivots taken in printing order so leading terms are the
/// largest monomials.
pub fn echelonize<K: Coeff>(order: GenOrder, elems: &[NcPoly<K>]) -> Vec<NcPoly<K>> {
    let mut words: Vec<Word> = Vec::new();
    {
        let mut all = NcPoly::<K>::zero(order);
        for e in elems {
            for (w, _) in e.terms() {
                all.add_term(w.clone(), K::one());
            }
        }
        for (w, _) in all.sorted_terms() {
            words.push(w.clone());
        }
    }
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows: Vec<Vec<K>> = elems
        .iter()
        .map(|e| {
            let mut r = vec![K::zero(); words.len()];
            for (w, c) in e.terms() {
                r[index[w]] = c.clone();
            }
            r
        })
        .collect();
    rref(&mut rows, words.len());
    rows.into_iter()
        .map(|r| {
            NcPoly::from_terms(
                order,
                r.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (words[i].clone(), c)),
            )
        })
        .collect()
}

/// Dimension of the span.
pub fn rank<K: Coeff>(order: GenOrder, elems: &[NcPoly<K>]) -> usize {
    echelonize(order, elems).len()
}

/// Whether two families span the same subspace.
pub fn same_span<K: Coeff>(order: GenOrder, a: &[NcPoly<K>], b: &[NcPoly<K>]) -> bool {
    echelonize(order, a) == echelonize(order, b)
}
