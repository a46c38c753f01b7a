//! Constructive witness families.
//!
//! Each generator maps a family index `t >= 0` to a perfect power, coprime
//! with the base, whose base-x expansion has exactly `k` non-zero digits.
//! Members are always re-verified through [`crate::repr`] before they are
//! returned; a failed check is reported as [`Error::VerificationFailed`].

mod expansion;
mod generators;

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::repr::{self, SparseForm};
use crate::Nat;

pub use expansion::{square_expansion_terms, TermMultiset};
pub use generators::{
    gen_base3_special, gen_base45_special, gen_basex_generic, gen_basex_sigma, gen_binary_generic,
    gen_binary_special, gen_small_k, sigma,
};

/// Which construction produced a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    BinaryGeneric,
    BinarySpecial,
    BaseXGeneric,
    Base3Special,
    Base45Special,
    BaseXSigma,
    SmallKSquare,
    SmallKCube,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::BinaryGeneric,
        FamilyId::BinarySpecial,
        FamilyId::BaseXGeneric,
        FamilyId::Base3Special,
        FamilyId::Base45Special,
        FamilyId::BaseXSigma,
        FamilyId::SmallKSquare,
        FamilyId::SmallKCube,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::BinaryGeneric => "binary-generic",
            FamilyId::BinarySpecial => "binary-special",
            FamilyId::BaseXGeneric => "basex-generic",
            FamilyId::Base3Special => "base3-special",
            FamilyId::Base45Special => "base45-special",
            FamilyId::BaseXSigma => "basex-sigma",
            FamilyId::SmallKSquare => "small-k-square",
            FamilyId::SmallKCube => "small-k-cube",
        }
    }

    /// Exponent of the members this family produces.
    pub fn degree(self) -> u32 {
        match self {
            FamilyId::SmallKCube => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How `k` sits relative to the triangular numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecompositionForm {
    /// `k = C(p+1, 2) - beta` with `beta` in `[0, p-2]`.
    Generic { p: u32, beta: u32 },
    /// `k = C(p, 2) + 1`.
    Boundary { p: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DigitDecomposition {
    pub k: u32,
    pub form: DecompositionForm,
}

impl DigitDecomposition {
    pub fn p(&self) -> u32 {
        match self.form {
            DecompositionForm::Generic { p, .. } | DecompositionForm::Boundary { p } => p,
        }
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self.form, DecompositionForm::Boundary { .. })
    }

    /// Recompute `k` from the stored form.
    pub fn reconstruct(&self) -> u64 {
        match self.form {
            DecompositionForm::Generic { p, beta } => binom2(u64::from(p) + 1) - u64::from(beta),
            DecompositionForm::Boundary { p } => binom2(u64::from(p)) + 1,
        }
    }
}

pub(crate) fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Split `k >= 5` into its generic `(p, beta)` or boundary `p` form.
pub fn decompose_digit_count(k: u32) -> Result<DigitDecomposition> {
    if k < 5 {
        return Err(Error::OutOfRange {
            k,
            reason: "decomposition needs k >= 5",
        });
    }
    let k64 = u64::from(k);
    // Smallest p with C(p+1, 2) >= k; then C(p, 2) < k.
    let mut p = 1u64;
    while binom2(p + 1) < k64 {
        p += 1;
    }
    let form = if k64 == binom2(p) + 1 {
        DecompositionForm::Boundary { p: p as u32 }
    } else {
        DecompositionForm::Generic {
            p: p as u32,
            beta: (binom2(p + 1) - k64) as u32,
        }
    };
    Ok(DigitDecomposition { k, form })
}

/// `p` with `k = C(p, 2) + 1`, if `k` has that shape and `p >= 3`.
pub fn boundary_index(k: u32) -> Option<u32> {
    let k64 = u64::from(k);
    let mut p = 3u64;
    while binom2(p) + 1 < k64 {
        p += 1;
    }
    (binom2(p) + 1 == k64).then_some(p as u32)
}

/// Strictly increasing positive exponents `alpha_1 < ... < alpha_n`; the
/// implicit `alpha_0 = 0` is not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaSequence(Vec<u32>);

impl AlphaSequence {
    pub fn new(alphas: Vec<u32>) -> Result<Self> {
        if alphas.first() == Some(&0) {
            return Err(Error::InvalidAlphas("alpha_1 must be positive".into()));
        }
        if alphas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidAlphas(
                "alphas must be strictly increasing".into(),
            ));
        }
        Ok(Self(alphas))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `alpha_0 = 0` followed by the stored entries.
    pub fn with_zero(&self) -> impl Iterator<Item = u32> + '_ {
        std::iter::once(0).chain(self.0.iter().copied())
    }

    /// `alpha_i` for `i >= 0`.
    pub fn get(&self, i: usize) -> Option<u32> {
        if i == 0 {
            Some(0)
        } else {
            self.0.get(i - 1).copied()
        }
    }
}

/// Construction parameters recorded alongside a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    pub decomposition: Option<DigitDecomposition>,
    pub alphas: AlphaSequence,
    /// Factor the constructed root was divided by (2 for the base-4 family).
    pub normalization: u32,
    /// Coefficient of the top power in the constructed root.
    pub leading: u32,
}

/// One verified witness `value = root^degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub family: FamilyId,
    pub base: u32,
    pub target_k: u32,
    pub t: u32,
    pub root: Nat,
    pub degree: u32,
    pub value: Nat,
    pub sparse: SparseForm,
    pub params: FamilyParams,
}

impl FamilyMember {
    /// Build and verify a member; never returns an unchecked value.
    pub(crate) fn verified(
        family: FamilyId,
        base: u32,
        target_k: u32,
        t: u32,
        root: Nat,
        params: FamilyParams,
    ) -> Result<Self> {
        let degree = family.degree();
        let value = root.pow(degree);
        let sparse = repr::sparse_form(&value, base)?;
        let coprime = value.gcd(&Nat::from(base)) == Nat::from(1u32);
        if sparse.len() != target_k as usize || !coprime {
            return Err(Error::VerificationFailed {
                family,
                base,
                k: target_k,
                t,
                found: sparse.len(),
                coprime,
            });
        }
        Ok(Self {
            family,
            base,
            target_k,
            t,
            root,
            degree,
            value,
            sparse,
            params,
        })
    }
}
