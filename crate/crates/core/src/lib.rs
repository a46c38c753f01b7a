//! Perfect powers with a prescribed number of non-zero digits.
//!
//! For a base `x >= 2` and a digit count `k`, the crate builds infinite
//! families of perfect powers coprime with `x` whose base-`x` expansion has
//! exactly `k` non-zero digits, classifies every `(x, k)` pair, and provides
//! an exhaustive bounded search that serves as an independent oracle.
//!
//! The radix layer ([`repr`]) is generic over [`Natural`], implemented for
//! `u64`, `u128` and [`BigUint`]; family members always use [`Nat`].

pub mod classify;
pub mod error;
pub mod families;
pub mod natural;
pub mod oracle;
pub mod repr;

pub use num_bigint::BigUint;

pub use classify::{classify_case, generate_member, CaseStatus, Citation};
pub use error::{Error, Result};
pub use families::{
    decompose_digit_count, square_expansion_terms, AlphaSequence, DecompositionForm,
    DigitDecomposition, FamilyId, FamilyMember, TermMultiset,
};
pub use natural::Natural;
pub use oracle::{
    candidate_count, find_sparse_powers, search, Checkpoint, DegreeFilter, SearchHit,
    SearchOptions, SearchReport, SearchSpec,
};
pub use repr::{
    as_perfect_power, count_nonzero, from_terms, integer_nth_root, sparse_form, to_expansion,
    BaseExpansion, PowerWitness, SparseForm, SparseTerm,
};

/// Arbitrary-precision natural number used for family members and reports.
pub type Nat = BigUint;

/// Perfect-power witness over [`Nat`].
pub type Witness = PowerWitness<Nat>;

/// Word-sized witness, as produced by narrow oracle scans.
pub type WordWitness = PowerWitness<u64>;
