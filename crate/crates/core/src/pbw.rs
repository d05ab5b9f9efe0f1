//! PBW certificate by Jacobi-triple residuals.
//!
//! For each triple of distinct generators the combination
//! `[[a,b],c] + [[b,c],a] + [[c,a],b]` is normalized, with the inner
//! brackets read from the table. All residuals vanishing is taken as the
//! PBW certificate: the table's brackets land in lower V-degree, so the
//! triples are the only overlaps that can obstruct confluence. This is
//! assumed, not proved, for deformations whose brackets are not quadratic.

use rayon::prelude::*;

use crate::error::Result;
use crate::field::Coeff;
use crate::generator::Gen;
use crate::ncpoly::NcPoly;
use crate::rewrite::Normalizer;
use crate::table::RelationTable;

pub const PBW_ASSUMPTION: &str =
    "Jacobi-triple residuals are treated as the complete obstruction set for this table";

#[derive(Clone, Debug)]
pub struct TripleFailure<K: Coeff> {
    pub triple: (Gen, Gen, Gen),
    pub residual: NcPoly<K>,
}

#[derive(Clone, Debug)]
pub struct PbwReport<K: Coeff> {
    pub triples_checked: usize,
    pub failures: Vec<TripleFailure<K>>,
    pub assumption: &'static str,
}

impl<K: Coeff> PbwReport<K> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, a: Gen, b: Gen, c: Gen) -> Option<&TripleFailure<K>> {
        self.failures.iter().find(|f| {
            let (x, y, z) = f.triple;
            let mut t = [x, y, z];
            let mut q = [a, b, c];
            t.sort();
            q.sort();
            t == q
        })
    }
}

/// `[[a,b],c] + [[b,c],a] + [[c,a],b]` in normal form.
pub fn jacobi_triple<K: Coeff>(
    n: &mut Normalizer<'_, K>,
    a: Gen,
    b: Gen,
    c: Gen,
) -> Result<NcPoly<K>> {
    let table = n.table();
    let order = table.order();
    let mut total = NcPoly::zero(order);
    for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
        let inner = table.bracket(p, q);
        if inner.is_zero() {
            continue;
        }
        total = total + n.commutator(inner, &NcPoly::gen(order, r))?;
    }
    Ok(total)
}

pub fn pbw_check<K: Coeff>(table: &RelationTable<K>) -> Result<PbwReport<K>> {
    let mut triples = Vec::new();
    for (i, a) in Gen::ALL.into_iter().enumerate() {
        for (j, b) in Gen::ALL.into_iter().enumerate().skip(i + 1) {
            for c in Gen::ALL.into_iter().skip(j + 1) {
                triples.push((a, b, c));
            }
        }
    }
    let results: Vec<Result<Option<TripleFailure<K>>>> = triples
        .par_iter()
        .map(|&(a, b, c)| {
            let mut n = Normalizer::new(table);
            let residual = jacobi_triple(&mut n, a, b, c)?;
            Ok((!residual.is_zero()).then_some(TripleFailure {
                triple: (a, b, c),
                residual,
            }))
        })
        .collect();
    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    Ok(PbwReport {
        triples_checked: triples.len(),
        failures,
        assumption: PBW_ASSUMPTION,
    })
}
