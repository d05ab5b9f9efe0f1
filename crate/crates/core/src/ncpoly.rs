//! Linear combinations of words in the eight generators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::central::write_signed_term;
use crate::field::Coeff;
use crate::generator::{Gen, GenOrder};

pub type Word = Vec<Gen>;

pub fn word_v_degree(w: &[Gen]) -> u32 {
    w.iter().map(|g| g.v_degree()).sum()
}

/// `(h-weight, tau-weight)` of a word.
pub fn word_biweight(w: &[Gen]) -> (i32, i32) {
    w.iter()
        .fold((0, 0), |(a, b), g| (a + g.h_weight(), b + g.tau_weight()))
}

/// Number of inverted letter pairs; zero exactly on normal words.
pub fn word_inversions(w: &[Gen], order: GenOrder) -> usize {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if order.inverted(w[i], w[j]) {
                n += 1;
            }
        }
    }
    n
}

/// A finite linear combination of words.
///
/// Elements produced by the rewriting engine hold only words that are
/// normal for `order`; hand-built elements may hold arbitrary words until
/// they are normalized.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcPoly<K: Coeff> {
    order: GenOrder,
    terms: BTreeMap<Word, K>,
}

impl<K: Coeff> NcPoly<K> {
    pub fn zero(order: GenOrder) -> Self {
        NcPoly {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: GenOrder) -> Self {
        Self::term(order, Vec::new(), K::one())
    }

    pub fn constant(order: GenOrder, c: K) -> Self {
        Self::term(order, Vec::new(), c)
    }

    pub fn gen(order: GenOrder, g: Gen) -> Self {
        Self::term(order, vec![g], K::one())
    }

    pub fn word(order: GenOrder, w: &[Gen]) -> Self {
        Self::term(order, w.to_vec(), K::one())
    }

    pub fn term(order: GenOrder, w: Word, c: K) -> Self {
        let mut p = Self::zero(order);
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, K)>>(order: GenOrder, it: I) -> Self {
        let mut p = Self::zero(order);
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn order(&self) -> GenOrder {
        self.order
    }

    /// The same terms relabelled with another order; the caller is
    /// responsible for renormalizing.
    pub fn with_order(mut self, order: GenOrder) -> Self {
        self.order = order;
        self
    }

    pub fn add_term(&mut self, w: Word, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NcPoly<K>, c: &K) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w.clone(), v.clone() * c.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &K)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, K)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &[Gen]) -> K {
        self.terms.get(w).cloned().unwrap_or_else(K::zero)
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut p = Self::zero(self.order);
        p.add_scaled(self, c);
        p
    }

    /// Concatenation product without any rewriting.
    pub fn concat(&self, other: &NcPoly<K>) -> Self {
        let mut p = Self::zero(self.order);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                p.add_term(w, c1.clone() * c2.clone());
            }
        }
        p
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(|w| self.order.is_normal(w))
    }

    /// Highest V-degree among the words, `None` for zero.
    pub fn v_degree(&self) -> Option<u32> {
        self.terms.keys().map(|w| word_v_degree(w)).max()
    }

    /// Longest word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    /// Common biweight of all words; `None` if zero or not homogeneous.
    pub fn biweight(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|w| word_biweight(w));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn is_biweight_homogeneous(&self) -> bool {
        self.is_zero() || self.biweight().is_some()
    }

    /// Terms of exactly the given V-degree.
    pub fn v_component(&self, d: u32) -> Self {
        self.filter(|w| word_v_degree(w) == d)
    }

    /// The top V-degree part, the leading term for the V-filtration.
    pub fn leading_part(&self) -> Self {
        match self.v_degree() {
            Some(d) => self.v_component(d),
            None => self.clone(),
        }
    }

    pub fn filter(&self, keep: impl Fn(&[Gen]) -> bool) -> Self {
        NcPoly {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn contains_gen(&self, g: Gen) -> bool {
        self.terms.keys().any(|w| w.contains(&g))
    }

    pub fn map_words(&self, f: impl Fn(&[Gen]) -> (Word, K)) -> Self {
        let mut p = Self::zero(self.order);
        for (w, c) in &self.terms {
            let (nw, k) = f(w);
            p.add_term(nw, k * c.clone());
        }
        p
    }

    /// Words sorted for printing: descending length, then lexicographic in
    /// the active order's ranks.
    pub fn sorted_terms(&self) -> Vec<(&Word, &K)> {
        let order = self.order;
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            b.len().cmp(&a.len()).then_with(|| {
                let ra = a.iter().map(|g| order.rank(*g));
                let rb = b.iter().map(|g| order.rank(*g));
                ra.cmp(rb)
            })
        });
        v
    }
}

fn check_orders(a: GenOrder, b: GenOrder) {
    assert_eq!(a, b, "mixed generator orders in one expression");
}

impl<K: Coeff> Add for NcPoly<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        check_orders(self.order, rhs.order);
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<K: Coeff> Sub for NcPoly<K> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        check_orders(self.order, rhs.order);
        for (w, c) in rhs.terms {
            self.add_term(w, -c);
        }
        self
    }
}

impl<K: Coeff> Neg for NcPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        NcPoly {
            order: self.order,
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

pub(crate) fn write_word(f: &mut fmt::Formatter<'_>, w: &[Gen]) -> fmt::Result {
    let mut first = true;
    let mut i = 0;
    while i < w.len() {
        let g = w[i];
        let mut run = 1;
        while i + run < w.len() && w[i + run] == g {
            run += 1;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if run == 1 {
            write!(f, "{g}")?;
        } else {
            write!(f, "{g}^{run}")?;
        }
        i += run;
    }
    Ok(())
}

impl<K: Coeff> fmt::Display for NcPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            write_signed_term(f, i == 0, c, w.is_empty(), |f| write_word(f, w))?;
        }
        Ok(())
    }
}

impl<K: Coeff> fmt::Debug for NcPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
