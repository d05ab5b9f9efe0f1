//! Normal ordering to PBW form.
//!
//! A normal word `w` is multiplied on the right by one generator `g` by
//! moving `g` leftwards: `(u·a)·g = (u·g)·a + u·[a, g]` whenever `a > g`.
//! Results of `w·g` are memoized per normalizer, so a batch of related
//! products shares the work.

use std::collections::HashMap;
use std::rc::Rc;

use crate::error::{EngineError, Result};
use crate::field::Coeff;
use crate::generator::Gen;
use crate::ncpoly::{NcPoly, Word};
use crate::table::RelationTable;

pub struct Normalizer<'t, K: Coeff> {
    table: &'t RelationTable<K>,
    memo: HashMap<(Word, Gen), Rc<NcPoly<K>>>,
    steps: u64,
}

impl<'t, K: Coeff> Normalizer<'t, K> {
    pub fn new(table: &'t RelationTable<K>) -> Self {
        Normalizer {
            table,
            memo: HashMap::new(),
            steps: 0,
        }
    }

    pub fn table(&self) -> &'t RelationTable<K> {
        self.table
    }

    /// Elementary swaps performed so far (memo hits excluded).
    pub fn steps(&self) -> u64 {
        self.steps
    }

    fn step(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.table.step_budget() {
            return Err(EngineError::StepBudgetExceeded {
                budget: self.table.step_budget(),
            });
        }
        Ok(())
    }

    /// Normal form of an arbitrary combination of words.
    pub fn normalize(&mut self, p: &NcPoly<K>) -> Result<NcPoly<K>> {
        let order = self.table.order();
        let mut out = NcPoly::zero(order);
        for (w, c) in p.terms() {
            if order.is_normal(w) {
                out.add_term(w.clone(), c.clone());
            } else {
                let n = self.word_times_word(&[], w)?;
                out.add_scaled(&n, c);
            }
        }
        Ok(out)
    }

    /// Normal form of `a * b`.
    pub fn mul(&mut self, a: &NcPoly<K>, b: &NcPoly<K>) -> Result<NcPoly<K>> {
        let order = self.table.order();
        let mut out = NcPoly::zero(order);
        for (wa, ca) in a.terms() {
            let left = if order.is_normal(wa) {
                NcPoly::word(order, wa)
            } else {
                self.word_times_word(&[], wa)?
            };
            for (wb, cb) in b.terms() {
                let prod = self.poly_times_word(&left, wb)?;
                out.add_scaled(&prod, &(ca.clone() * cb.clone()));
            }
        }
        Ok(out)
    }

    /// Normal form of `ab - ba`.
    pub fn commutator(&mut self, a: &NcPoly<K>, b: &NcPoly<K>) -> Result<NcPoly<K>> {
        Ok(self.mul(a, b)? - self.mul(b, a)?)
    }

    pub fn pow(&mut self, a: &NcPoly<K>, e: u32) -> Result<NcPoly<K>> {
        let mut acc = NcPoly::one(self.table.order());
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    fn poly_times_word(&mut self, p: &NcPoly<K>, u: &[Gen]) -> Result<NcPoly<K>> {
        let mut acc = p.clone();
        for &g in u {
            acc = self.poly_times_gen(&acc, g)?;
        }
        Ok(acc)
    }

    /// `w * u` with `w` normal and `u` arbitrary.
    fn word_times_word(&mut self, w: &[Gen], u: &[Gen]) -> Result<NcPoly<K>> {
        let start = NcPoly::word(self.table.order(), w);
        self.poly_times_word(&start, u)
    }

    fn poly_times_gen(&mut self, p: &NcPoly<K>, g: Gen) -> Result<NcPoly<K>> {
        let mut out = NcPoly::zero(self.table.order());
        for (w, c) in p.terms() {
            let prod = self.word_times_gen(w, g)?;
            out.add_scaled(&prod, c);
        }
        Ok(out)
    }

    /// `w * g` for a normal word `w`.
    fn word_times_gen(&mut self, w: &[Gen], g: Gen) -> Result<Rc<NcPoly<K>>> {
        let order = self.table.order();
        let Some((&a, prefix)) = w.split_last() else {
            return Ok(Rc::new(NcPoly::gen(order, g)));
        };
        if !order.inverted(a, g) {
            let mut nw = w.to_vec();
            nw.push(g);
            return Ok(Rc::new(NcPoly::word(order, &nw)));
        }
        let key = (w.to_vec(), g);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        self.step()?;
        // prefix·a·g = (prefix·g)·a + prefix·[a, g]
        let moved = self.word_times_gen(prefix, g)?;
        let mut out = self.poly_times_gen(&moved, a)?;
        let bracket = self.table.bracket(a, g);
        if !bracket.is_zero() {
            let bracket = bracket.clone();
            for (u, c) in bracket.terms() {
                let t = self.word_times_word(prefix, u)?;
                out.add_scaled(&t, c);
            }
        }
        let out = Rc::new(out);
        self.memo.insert(key, out.clone());
        Ok(out)
    }
}

/// Normal form of `p` under `table`.
pub fn normalize<K: Coeff>(p: &NcPoly<K>, table: &RelationTable<K>) -> Result<NcPoly<K>> {
    Normalizer::new(table).normalize(p)
}

/// Normal form of `ab - ba` under `table`.
pub fn commutator<K: Coeff>(
    a: &NcPoly<K>,
    b: &NcPoly<K>,
    table: &RelationTable<K>,
) -> Result<NcPoly<K>> {
    Normalizer::new(table).commutator(a, b)
}

/// Normal form of `ab` under `table`.
pub fn multiply<K: Coeff>(
    a: &NcPoly<K>,
    b: &NcPoly<K>,
    table: &RelationTable<K>,
) -> Result<NcPoly<K>> {
    Normalizer::new(table).mul(a, b)
}
