use thiserror::Error;

use crate::classify::CaseStatus;
use crate::families::FamilyId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid base {0}: a radix must be at least 2")]
    InvalidBase(u32),

    #[error("invalid degree 0: root degree must be at least 1")]
    InvalidDegree,

    #[error("degenerate input {0}: perfect-power witnesses need n >= 2")]
    Degenerate(String),

    /// A fixed-width scalar could not hold an intermediate value.
    #[error("arithmetic overflow in a fixed-width scalar")]
    Overflow,

    #[error("digit count {k} out of range: {reason}")]
    OutOfRange { k: u32, reason: &'static str },

    #[error("{family} does not apply to base {base} with {k} non-zero digits")]
    WrongForm { family: FamilyId, base: u32, k: u32 },

    /// A generator produced a value that failed its post-hoc digit check.
    #[error(
        "{family} member t={t} in base {base} has {found} non-zero digits \
         (wanted {k}, coprime={coprime})"
    )]
    VerificationFailed {
        family: FamilyId,
        base: u32,
        k: u32,
        t: u32,
        found: usize,
        coprime: bool,
    },

    /// The (base, k) pair has no generating family.
    #[error("no infinite family for this case: {0}")]
    Status(CaseStatus),

    #[error("invalid alpha sequence: {0}")]
    InvalidAlphas(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid checkpoint token {0:?}")]
    InvalidToken(String),
}
