//! Integer chains over an ordered basis.
//!
//! Both normalized chains on the bar construction and the surjection complex
//! are free abelian groups on explicit combinatorial bases, so a single
//! container serves both. Terms are kept in a `BTreeMap`, which fixes the
//! canonical ordering (lexicographic on flattened words) and merges or drops
//! coefficients automatically.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Error;
use crate::perm::{Permutation, Relabel};

/// A basis element of a graded module: knows its arity and degree.
pub trait BasisElement: Ord + Eq + Clone + fmt::Debug + fmt::Display {
    fn arity(&self) -> usize;
    fn degree(&self) -> usize;
}

/// A finite integer combination of basis elements sharing one arity and
/// degree. The zero chain carries no bidegree of its own.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chain<B: BasisElement> {
    terms: BTreeMap<B, i64>,
}

impl<B: BasisElement> Chain<B> {
    pub fn zero() -> Self {
        Chain {
            terms: BTreeMap::new(),
        }
    }

    /// The chain `1 * b`.
    pub fn generator(b: B) -> Self {
        let mut c = Chain::zero();
        c.add_term(b, 1);
        c
    }

    /// Adds `coefficient * b`, merging with an existing term and dropping
    /// the term if the total vanishes. All terms of a chain must share an
    /// arity and a degree.
    pub fn add_term(&mut self, b: B, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        if let Some((first, _)) = self.terms.iter().next() {
            debug_assert_eq!(first.arity(), b.arity(), "mixed arities in a chain");
            debug_assert_eq!(first.degree(), b.degree(), "mixed degrees in a chain");
        }
        let entry = self.terms.entry(b).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            let key = self
                .terms
                .iter()
                .find(|(_, &c)| c == 0)
                .map(|(b, _)| b.clone())
                .expect("zero entry present");
            self.terms.remove(&key);
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

    pub fn coefficient(&self, b: &B) -> i64 {
        self.terms.get(b).copied().unwrap_or(0)
    }

    /// Terms in canonical (ascending lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&B, i64)> {
        self.terms.iter().map(|(b, &c)| (b, c))
    }

    /// Common arity of the terms; `None` for the zero chain.
    pub fn arity(&self) -> Option<usize> {
        self.terms.keys().next().map(|b| b.arity())
    }

    /// Common degree of the terms; `None` for the zero chain.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|b| b.degree())
    }

    pub fn scaled(&self, factor: i64) -> Self {
        if factor == 0 {
            return Chain::zero();
        }
        Chain {
            terms: self
                .terms
                .iter()
                .map(|(b, &c)| (b.clone(), c * factor))
                .collect(),
        }
    }

    /// Extends a basis-level map linearly to chains.
    pub fn map_linear<C, F>(&self, f: F) -> Chain<C>
    where
        C: BasisElement,
        F: Fn(&B) -> Chain<C>,
    {
        let mut out = Chain::zero();
        for (b, coefficient) in self.iter() {
            for (c, inner) in f(b).iter() {
                out.add_term(c.clone(), coefficient * inner);
            }
        }
        out
    }
}

impl<B: BasisElement + Relabel> Chain<B> {
    /// Applies the relabeling action to every term; coefficients are kept.
    pub fn relabel(&self, w: &Permutation) -> Result<Self, Error> {
        let mut out = Chain::zero();
        for (b, coefficient) in self.iter() {
            out.add_term(b.relabel(w)?, coefficient);
        }
        Ok(out)
    }
}

impl<B: BasisElement> Default for Chain<B> {
    fn default() -> Self {
        Chain::zero()
    }
}

impl<B: BasisElement> Add for &Chain<B> {
    type Output = Chain<B>;

    fn add(self, rhs: &Chain<B>) -> Chain<B> {
        let mut out = self.clone();
        for (b, c) in rhs.iter() {
            out.add_term(b.clone(), c);
        }
        out
    }
}

impl<B: BasisElement> Sub for &Chain<B> {
    type Output = Chain<B>;

    fn sub(self, rhs: &Chain<B>) -> Chain<B> {
        let mut out = self.clone();
        for (b, c) in rhs.iter() {
            out.add_term(b.clone(), -c);
        }
        out
    }
}

impl<B: BasisElement> Neg for &Chain<B> {
    type Output = Chain<B>;

    fn neg(self) -> Chain<B> {
        self.scaled(-1)
    }
}

impl<B: BasisElement> fmt::Display for Chain<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}·({b})")?;
        }
        Ok(())
    }
}
