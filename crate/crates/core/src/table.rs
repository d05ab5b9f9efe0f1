//! Bracket tables `[a, b]` for the eight generators.

use std::fmt;

use crate::error::{EngineError, Result};
use crate::field::Coeff;
use crate::generator::{Gen, GenOrder};
use crate::ncpoly::{word_biweight, word_v_degree, NcPoly};
use crate::rewrite::Normalizer;

pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

/// Full antisymmetric bracket table. Values are stored normal for `order`.
///
/// Every value of `[a, b]` has smaller rewriting measure than the word `ab`:
/// lower V-degree, or equal V-degree and length at most one. This is what
/// makes rewriting terminate.
#[derive(Clone)]
pub struct RelationTable<K: Coeff> {
    order: GenOrder,
    brackets: Vec<NcPoly<K>>,
    step_budget: u64,
}

fn slot(a: Gen, b: Gen) -> usize {
    a.index() * 8 + b.index()
}

impl<K: Coeff> RelationTable<K> {
    /// Build from brackets `[a, b] = value`; pairs not listed commute.
    /// `[b, a]` is filled in by antisymmetry.
    pub fn new<I>(order: GenOrder, brackets: I, step_budget: u64) -> Result<Self>
    where
        I: IntoIterator<Item = (Gen, Gen, NcPoly<K>)>,
    {
        let mut table: Vec<Option<NcPoly<K>>> = vec![None; 64];
        for (a, b, v) in brackets {
            let v = v.with_order(order);
            if a == b {
                if !v.is_zero() {
                    return Err(EngineError::MalformedTable(format!(
                        "[{a}, {a}] must vanish"
                    )));
                }
                continue;
            }
            if table[slot(a, b)].is_some() {
                return Err(EngineError::MalformedTable(format!(
                    "[{a}, {b}] given twice"
                )));
            }
            Self::check_entry(a, b, &v)?;
            table[slot(b, a)] = Some(-v.clone());
            table[slot(a, b)] = Some(v);
        }
        let brackets: Vec<NcPoly<K>> = table
            .into_iter()
            .map(|v| v.unwrap_or_else(|| NcPoly::zero(order)))
            .collect();
        let raw = RelationTable {
            order,
            brackets,
            step_budget,
        };
        let mut normalized = Vec::with_capacity(64);
        {
            let mut n = Normalizer::new(&raw);
            for v in &raw.brackets {
                normalized.push(n.normalize(v)?);
            }
        }
        Ok(RelationTable {
            order,
            brackets: normalized,
            step_budget,
        })
    }

    fn check_entry(a: Gen, b: Gen, v: &NcPoly<K>) -> Result<()> {
        let pair = [a, b];
        let target = word_biweight(&pair);
        let vdeg = word_v_degree(&pair);
        for (w, _) in v.terms() {
            if word_biweight(w) != target {
                return Err(EngineError::MalformedTable(format!(
                    "[{a}, {b}] = {v} is not of biweight {target:?}"
                )));
            }
            let wd = word_v_degree(w);
            if !(wd < vdeg || (wd == vdeg && w.len() < 2)) {
                return Err(EngineError::MalformedTable(format!(
                    "[{a}, {b}] = {v} does not lower the rewriting measure"
                )));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> GenOrder {
        self.order
    }

    pub fn step_budget(&self) -> u64 {
        self.step_budget
    }

    pub fn with_step_budget(mut self, budget: u64) -> Self {
        self.step_budget = budget;
        self
    }

    /// `[a, b] = ab - ba`.
    pub fn bracket(&self, a: Gen, b: Gen) -> &NcPoly<K> {
        &self.brackets[slot(a, b)]
    }

    /// The same algebra presented in another generator order.
    pub fn reordered(&self, order: GenOrder) -> Result<Self> {
        let mut pairs = Vec::new();
        for (i, a) in Gen::ALL.into_iter().enumerate() {
            for b in Gen::ALL.into_iter().skip(i + 1) {
                pairs.push((a, b, self.bracket(a, b).clone()));
            }
        }
        RelationTable::new(order, pairs, self.step_budget)
    }

    /// Every bracket value is biweight-homogeneous of the right biweight.
    pub fn is_biweight_homogeneous(&self) -> bool {
        Gen::ALL.into_iter().all(|a| {
            Gen::ALL.into_iter().all(|b| {
                let v = self.bracket(a, b);
                v.is_zero() || v.biweight() == Some(word_biweight(&[a, b]))
            })
        })
    }
}

impl<K: Coeff> fmt::Display for RelationTable<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = self.order.sequence();
        for (i, a) in seq.iter().enumerate() {
            for b in seq.iter().skip(i + 1) {
                let v = self.bracket(*b, *a);
                if !v.is_zero() {
                    writeln!(f, "[{b}, {a}] = {v}")?;
                }
            }
        }
        Ok(())
    }
}

impl<K: Coeff> fmt::Debug for RelationTable<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelationTable({:?})\n{}", self.order, self)
    }
}
