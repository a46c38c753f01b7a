//! Exhaustive search for perfect powers with exactly `k` non-zero base-x
//! digits, all at exponents `<= M`.
//!
//! The oracle shares nothing with the family generators beyond the scalar
//! arithmetic, so it can be used to cross-check them. Work is ordered by
//! exponent tuple (lexicographic), then by coefficient tuple, and can be split
//! by the leading free exponent for parallel runs; results are merged by value
//! so the output never depends on the thread count.

mod enumerate;
mod residue;
mod search;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::repr::{check_base, PowerWitness, SparseForm};
use crate::Nat;

pub use enumerate::{enumerate_sparse, SparseEnumerator};
pub use residue::PowerTester;
pub use search::{find_sparse_powers, search, SearchOptions, SearchReport};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DegreeFilter {
    /// Any exponent `d >= 2`.
    Any,
    /// Values that are a perfect `d`-th power for at least one listed `d`.
    Only(BTreeSet<u32>),
}

impl DegreeFilter {
    pub fn only(degrees: impl IntoIterator<Item = u32>) -> Self {
        DegreeFilter::Only(degrees.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SearchSpec {
    pub base: u32,
    /// Number of non-zero digits `k`.
    pub digits: u32,
    /// Largest admissible exponent `M`.
    pub max_exponent: u32,
    pub degrees: DegreeFilter,
    /// Require a non-zero constant digit, i.e. a value not divisible by the
    /// base.
    pub coprime_only: bool,
}

impl SearchSpec {
    pub fn new(base: u32, digits: u32, max_exponent: u32) -> Self {
        Self {
            base,
            digits,
            max_exponent,
            degrees: DegreeFilter::Any,
            coprime_only: true,
        }
    }

    pub fn with_degrees(mut self, degrees: DegreeFilter) -> Self {
        self.degrees = degrees;
        self
    }

    pub fn with_coprime(mut self, coprime_only: bool) -> Self {
        self.coprime_only = coprime_only;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_base(self.base)?;
        if self.digits == 0 {
            return Err(Error::InvalidInput("digit count must be at least 1".into()));
        }
        if let DegreeFilter::Only(ds) = &self.degrees {
            if ds.is_empty() || ds.iter().any(|&d| d < 2) {
                return Err(Error::InvalidInput(
                    "degree filter needs degrees >= 2".into(),
                ));
            }
        }
        Ok(())
    }

    /// `k <= M + 1`: there are enough exponent slots for `k` digits.
    pub fn is_feasible(&self) -> bool {
        self.digits >= 1 && u64::from(self.digits) <= u64::from(self.max_exponent) + 1
    }

    /// Index of the first exponent that varies across tuples.
    pub(crate) fn lead_index(&self) -> usize {
        usize::from(self.coprime_only)
    }

    /// Exclusive upper bound on every candidate: `x^{M+1}`.
    pub fn value_bound(&self) -> BigUint {
        BigUint::from(self.base).pow(self.max_exponent + 1)
    }
}

/// Closed-form number of candidates: `C(M, k-1) (x-1)^k` with a forced
/// constant digit, `C(M+1, k) (x-1)^k` otherwise.
pub fn candidate_count(spec: &SearchSpec) -> Nat {
    if !spec.is_feasible() {
        return Nat::ZERO;
    }
    let k = u64::from(spec.digits);
    let m = u64::from(spec.max_exponent);
    let tuples = if spec.coprime_only {
        binomial(m, k - 1)
    } else {
        binomial(m + 1, k)
    };
    tuples * Nat::from(spec.base - 1).pow(spec.digits)
}

/// Exponent tuples in the search space.
pub fn tuple_count(spec: &SearchSpec) -> Nat {
    if !spec.is_feasible() {
        return Nat::ZERO;
    }
    let k = u64::from(spec.digits);
    let m = u64::from(spec.max_exponent);
    if spec.coprime_only {
        binomial(m, k - 1)
    } else {
        binomial(m + 1, k)
    }
}

fn binomial(n: u64, r: u64) -> Nat {
    if r > n {
        return Nat::ZERO;
    }
    let r = r.min(n - r);
    let mut acc = Nat::from(1u32);
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SearchHit {
    pub value: Nat,
    pub witness: PowerWitness<Nat>,
    pub sparse: SparseForm,
}

/// Resume point: the exponent tuple where work should continue.
///
/// Rendered as the decimal exponents joined by commas, e.g. `0,3,5,9`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Checkpoint(Vec<u32>);

impl Checkpoint {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Check that the tuple belongs to the search space of `spec`.
    pub fn validate(&self, spec: &SearchSpec) -> Result<()> {
        let e = &self.0;
        let bad = || Error::InvalidToken(self.to_string());
        if e.len() != spec.digits as usize {
            return Err(bad());
        }
        if e.windows(2).any(|w| w[0] >= w[1]) || e.iter().any(|&m| m > spec.max_exponent) {
            return Err(bad());
        }
        if spec.coprime_only && e.first() != Some(&0) {
            return Err(bad());
        }
        Ok(())
    }
}

impl fmt::Display for Checkpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for Checkpoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Checkpoint)
            .map_err(|_| Error::InvalidToken(s.to_string()))
    }
}
