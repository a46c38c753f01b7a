use std::collections::BTreeSet;

use super::AlphaSequence;
use crate::error::Result;
use crate::natural::Natural;
use crate::repr::{self, check_base};

/// Uncarried terms of `(x^{alpha_0} + ... + x^{alpha_{p-1}})^2`, listed bracket
/// by bracket: `x^{2 alpha_0}`, then for each `i >= 1` the cross terms
/// `2 x^{alpha_i + alpha_j}` (`j = i-1 .. 0`) followed by `x^{2 alpha_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermMultiset {
    base: u32,
    terms: Vec<(u32, u32)>,
}

impl TermMultiset {
    pub fn base(&self) -> u32 {
        self.base
    }

    /// `(exponent, coefficient)` pairs in bracket order.
    pub fn terms(&self) -> &[(u32, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn distinct_exponents(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.0)
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Entries that share an exponent with an earlier entry.
    pub fn collisions(&self) -> usize {
        self.len() - self.distinct_exponents()
    }

    /// Binary rewrite: every `2 * 2^e` becomes `2^{e+1}`.
    pub fn fold_binary(&self) -> TermMultiset {
        let terms = self
            .terms
            .iter()
            .map(|&(e, c)| if c == 2 { (e + 1, 1) } else { (e, c) })
            .collect();
        TermMultiset { base: 2, terms }
    }

    pub fn evaluate<T: Natural>(&self) -> Result<T> {
        let terms: Vec<(u32, u64)> = self.terms.iter().map(|&(e, c)| (e, u64::from(c))).collect();
        repr::from_terms(&terms, self.base)
    }
}

pub fn square_expansion_terms(alphas: &AlphaSequence, base: u32) -> Result<TermMultiset> {
    check_base(base)?;
    let all: Vec<u32> = alphas.with_zero().collect();
    let mut terms = Vec::with_capacity(all.len() * (all.len() + 1) / 2);
    for (i, &ai) in all.iter().enumerate() {
        for &aj in all[..i].iter().rev() {
            terms.push((ai + aj, 2));
        }
        terms.push((2 * ai, 1));
    }
    Ok(TermMultiset { base, terms })
}
