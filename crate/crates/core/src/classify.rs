//! Case table for pairs `(x, k)`: which are known finite, which are open, and
//! which family proves infinitude.

use std::fmt;

use crate::error::{Error, Result};
use crate::families::{self, decompose_digit_count, DecompositionForm, FamilyId, FamilyMember};

/// Published finiteness results the table leans on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Citation {
    /// 9 is the only odd perfect power with two binary digits.
    Mihailescu,
    /// Finitely many odd perfect powers with four binary digits.
    CorvajaZannierFourDigits,
}

impl Citation {
    pub fn tag(self) -> &'static str {
        match self {
            Citation::Mihailescu => "mihailescu",
            Citation::CorvajaZannierFourDigits => "CZ-4digits",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseStatus {
    /// `k = 1`: a single digit below the base.
    FiniteTrivial,
    FiniteKnown(Citation),
    ConjecturedFinite,
    OpenQuestion,
    Infinite {
        family: FamilyId,
        degree: u32,
    },
}

impl CaseStatus {
    pub fn label(&self) -> &'static str {
        match self {
            CaseStatus::FiniteTrivial => "finite-trivial",
            CaseStatus::FiniteKnown(_) => "finite-known",
            CaseStatus::ConjecturedFinite => "conjectured-finite",
            CaseStatus::OpenQuestion => "open-question",
            CaseStatus::Infinite { .. } => "infinite",
        }
    }

    pub fn citation(&self) -> Option<Citation> {
        match self {
            CaseStatus::FiniteKnown(c) => Some(*c),
            _ => None,
        }
    }

    pub fn family(&self) -> Option<FamilyId> {
        match self {
            CaseStatus::Infinite { family, .. } => Some(*family),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, CaseStatus::Infinite { .. })
    }

    /// Short form used in the case table, e.g. `infinite: basex-sigma`.
    pub fn cell(&self) -> String {
        match self {
            CaseStatus::OpenQuestion => "open".to_string(),
            CaseStatus::Infinite { family, .. } => format!("infinite: {family}"),
            other => other.label().to_string(),
        }
    }
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseStatus::FiniteKnown(c) => write!(f, "finite-known ({})", c.tag()),
            CaseStatus::Infinite { family, degree } => {
                write!(f, "infinite ({family}, degree {degree})")
            }
            other => f.write_str(other.label()),
        }
    }
}

fn infinite(family: FamilyId) -> CaseStatus {
    CaseStatus::Infinite {
        family,
        degree: family.degree(),
    }
}

/// Boundary construction for `k = C(p,2)+1` in base `x >= 4`.
fn boundary_family(x: u32) -> FamilyId {
    if x <= 5 {
        FamilyId::Base45Special
    } else {
        FamilyId::BaseXSigma
    }
}

pub fn classify_case(x: u32, k: u32, square_only: bool) -> Result<CaseStatus> {
    if x < 2 {
        return Err(Error::InvalidBase(x));
    }
    if k < 1 {
        return Err(Error::InvalidInput("digit count must be at least 1".into()));
    }
    let status = match (x, k) {
        (_, 1) => CaseStatus::FiniteTrivial,
        (2, 2) => CaseStatus::FiniteKnown(Citation::Mihailescu),
        (_, 2) => CaseStatus::ConjecturedFinite,
        (_, 3) => infinite(FamilyId::SmallKSquare),
        (2, 4) => CaseStatus::FiniteKnown(Citation::CorvajaZannierFourDigits),
        (3, 4) if square_only => CaseStatus::OpenQuestion,
        (3, 4) => infinite(FamilyId::SmallKCube),
        (_, 4) => infinite(boundary_family(x)),
        _ => {
            let d = decompose_digit_count(k)?;
            let family = match (d.form, x) {
                (DecompositionForm::Generic { .. }, 2) => FamilyId::BinaryGeneric,
                (DecompositionForm::Generic { .. }, _) => FamilyId::BaseXGeneric,
                (DecompositionForm::Boundary { .. }, 2) => FamilyId::BinarySpecial,
                (DecompositionForm::Boundary { .. }, 3) => FamilyId::Base3Special,
                (DecompositionForm::Boundary { .. }, _) => boundary_family(x),
            };
            infinite(family)
        }
    };
    Ok(status)
}

/// The `t`-th member of the family that proves infinitude for `(x, k)`.
pub fn generate_member(x: u32, k: u32, t: u32, square_only: bool) -> Result<FamilyMember> {
    let status = classify_case(x, k, square_only)?;
    let CaseStatus::Infinite { family, .. } = status else {
        return Err(Error::Status(status));
    };
    match family {
        FamilyId::BinaryGeneric => families::gen_binary_generic(k, t),
        FamilyId::BinarySpecial => families::gen_binary_special(k, t),
        FamilyId::BaseXGeneric => families::gen_basex_generic(x, k, t),
        FamilyId::Base3Special => families::gen_base3_special(k, t),
        FamilyId::Base45Special => families::gen_base45_special(x, k, t),
        FamilyId::BaseXSigma => families::gen_basex_sigma(x, k, t),
        FamilyId::SmallKSquare | FamilyId::SmallKCube => families::gen_small_k(x, k, t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Nat;

    #[test]
    fn status_examples() {
        for sq in [false, true] {
            assert_eq!(
                classify_case(2, 4, sq).unwrap(),
                CaseStatus::FiniteKnown(Citation::CorvajaZannierFourDigits)
            );
        }
        assert_eq!(classify_case(3, 4, true).unwrap(), CaseStatus::OpenQuestion);
        assert_eq!(
            classify_case(3, 4, false).unwrap(),
            CaseStatus::Infinite {
                family: FamilyId::SmallKCube,
                degree: 3
            }
        );
        assert_eq!(
            classify_case(7, 11, false).unwrap(),
            CaseStatus::Infinite {
                family: FamilyId::BaseXSigma,
                degree: 2
            }
        );
    }

    #[test]
    fn small_k_rows() {
        assert_eq!(
            classify_case(9, 1, false).unwrap(),
            CaseStatus::FiniteTrivial
        );
        assert_eq!(
            classify_case(2, 2, false).unwrap(),
            CaseStatus::FiniteKnown(Citation::Mihailescu)
        );
        assert_eq!(
            classify_case(10, 2, true).unwrap(),
            CaseStatus::ConjecturedFinite
        );
        assert_eq!(
            classify_case(2, 3, true).unwrap().family(),
            Some(FamilyId::SmallKSquare)
        );
        assert_eq!(
            classify_case(5, 4, true).unwrap().family(),
            Some(FamilyId::Base45Special)
        );
        assert_eq!(
            classify_case(6, 4, true).unwrap().family(),
            Some(FamilyId::BaseXSigma)
        );
    }

    #[test]
    fn routing_for_larger_k() {
        let fam = |x, k| classify_case(x, k, true).unwrap().family().unwrap();
        assert_eq!(fam(2, 5), FamilyId::BinaryGeneric);
        assert_eq!(fam(2, 7), FamilyId::BinarySpecial);
        assert_eq!(fam(3, 5), FamilyId::BaseXGeneric);
        assert_eq!(fam(3, 7), FamilyId::Base3Special);
        assert_eq!(fam(4, 11), FamilyId::Base45Special);
        assert_eq!(fam(5, 16), FamilyId::Base45Special);
        assert_eq!(fam(12, 22), FamilyId::BaseXSigma);
        assert_eq!(fam(12, 23), FamilyId::BaseXGeneric);
    }

    #[test]
    fn invalid_inputs() {
        assert_eq!(classify_case(1, 3, false), Err(Error::InvalidBase(1)));
        assert!(matches!(
            classify_case(2, 0, false),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn generate_examples() {
        assert_eq!(
            generate_member(2, 7, 0, true).unwrap().root,
            Nat::from(113u32)
        );
        assert_eq!(
            generate_member(5, 4, 0, true).unwrap().root,
            Nat::from(52u32)
        );
        assert_eq!(
            generate_member(2, 4, 0, false),
            Err(Error::Status(CaseStatus::FiniteKnown(
                Citation::CorvajaZannierFourDigits
            )))
        );
        assert_eq!(
            generate_member(3, 4, 0, true),
            Err(Error::Status(CaseStatus::OpenQuestion))
        );
        assert_eq!(generate_member(3, 4, 0, false).unwrap().degree, 3);
    }

    #[test]
    fn totality_over_wide_range() {
        for x in [2u32, 3, 4, 5, 6, 7, 100, 65_536, 999_999, 1_000_000] {
            for k in 1..=10_000 {
                classify_case(x, k, false).unwrap();
                classify_case(x, k, true).unwrap();
            }
        }
    }

    #[test]
    fn square_only_implies_general() {
        for x in 2..=40 {
            for k in 1..=60 {
                let sq = classify_case(x, k, true).unwrap();
                let any = classify_case(x, k, false).unwrap();
                if let CaseStatus::Infinite { degree, .. } = sq {
                    assert_eq!(degree, 2);
                    assert_eq!(any, sq, "({x},{k})");
                }
            }
        }
    }

    #[test]
    fn cell_labels() {
        assert_eq!(
            classify_case(5, 7, false).unwrap().cell(),
            "infinite: base45-special"
        );
        assert_eq!(classify_case(3, 4, true).unwrap().cell(), "open");
        assert_eq!(classify_case(2, 4, true).unwrap().cell(), "finite-known");
    }
}
