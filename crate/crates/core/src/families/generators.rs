use num_integer::Roots;

use super::{
    boundary_index, decompose_digit_count, AlphaSequence, DecompositionForm, DigitDecomposition,
    FamilyId, FamilyMember, FamilyParams,
};
use crate::error::{Error, Result};
use crate::Nat;

// Smallest alpha_1 per construction; the family index t is added on top.
const BINARY_GENERIC_MIN: u32 = 3;
const BINARY_SPECIAL_MIN: u32 = 4;
const BASEX_GENERIC_MIN: u32 = 3;
const BASE3_SEVEN_MIN: u32 = 3;
const BASE3_SPECIAL_MIN: u32 = 4;
const BOUNDARY_MIN: u32 = 2;
const SMALL_K_MIN: u32 = 2;

fn offset(min: u32, t: u32) -> Result<u32> {
    min.checked_add(t).ok_or(Error::Overflow)
}

fn double(a: u32) -> Result<u32> {
    a.checked_mul(2).ok_or(Error::Overflow)
}

/// `sum coefficient * x^alpha` over `(alpha, coefficient)` pairs.
fn power_sum(base: u32, terms: impl IntoIterator<Item = (u32, u32)>) -> Nat {
    let x = Nat::from(base);
    terms.into_iter().map(|(e, c)| x.pow(e) * c).sum()
}

/// `1 + x^{alpha_1} + ... + x^{alpha_n}`.
fn unit_sum(base: u32, alphas: &AlphaSequence) -> Nat {
    power_sum(base, alphas.with_zero().map(|e| (e, 1)))
}

fn generic_form(family: FamilyId, base: u32, k: u32) -> Result<(DigitDecomposition, u32, u32)> {
    let wrong = Error::WrongForm { family, base, k };
    let d = decompose_digit_count(k).map_err(|_| wrong.clone())?;
    match d.form {
        DecompositionForm::Generic { p, beta } => Ok((d, p, beta)),
        DecompositionForm::Boundary { .. } => Err(wrong),
    }
}

/// Generic sequence: `alpha_i = collide(alpha_{i-1})` for `i = 2..=beta+1`,
/// `alpha_i = separate(alpha_{i-1})` afterwards, `p - 1` entries in total.
fn generic_alphas(
    first: u32,
    p: u32,
    beta: u32,
    collide: impl Fn(u32) -> Result<u32>,
    separate: impl Fn(u32) -> Result<u32>,
) -> Result<AlphaSequence> {
    let mut v = vec![first];
    for i in 2..p {
        let prev = *v.last().expect("non-empty");
        v.push(if i <= beta + 1 {
            collide(prev)?
        } else {
            separate(prev)?
        });
    }
    AlphaSequence::new(v)
}

/// Odd squares with `k` binary digits, `k >= 5` not of the form `C(p,2)+1`.
pub fn gen_binary_generic(k: u32, t: u32) -> Result<FamilyMember> {
    let family = FamilyId::BinaryGeneric;
    let (d, p, beta) = generic_form(family, 2, k)?;
    let alphas = generic_alphas(
        offset(BINARY_GENERIC_MIN, t)?,
        p,
        beta,
        |a| Ok(double(a)? - 1),
        double,
    )?;
    let root = unit_sum(2, &alphas);
    FamilyMember::verified(family, 2, k, t, root, params(Some(d), alphas))
}

/// Odd squares with `k = C(p,2)+1` binary digits, `k = 7` or `k >= 11`.
pub fn gen_binary_special(k: u32, t: u32) -> Result<FamilyMember> {
    let family = FamilyId::BinarySpecial;
    let wrong = Error::WrongForm { family, base: 2, k };
    let d = decompose_digit_count(k).map_err(|_| wrong.clone())?;
    let DecompositionForm::Boundary { p } = d.form else {
        return Err(wrong);
    };
    let a1 = offset(BINARY_SPECIAL_MIN, t)?;
    let mut v = vec![a1, a1 + 1, a1 + 2];
    if p >= 5 {
        v.push(double(a1)? + 4);
        while v.len() < (p - 1) as usize {
            let prev = *v.last().expect("non-empty");
            v.push(double(prev)? - 1);
        }
    }
    let alphas = AlphaSequence::new(v)?;
    let root = unit_sum(2, &alphas);
    FamilyMember::verified(family, 2, k, t, root, params(Some(d), alphas))
}

/// Squares with `k` base-x digits for `x >= 3`, `k >= 5` not of the form
/// `C(p,2)+1`.
pub fn gen_basex_generic(x: u32, k: u32, t: u32) -> Result<FamilyMember> {
    let family = FamilyId::BaseXGeneric;
    if x < 3 {
        return Err(Error::WrongForm { family, base: x, k });
    }
    let (d, p, beta) = generic_form(family, x, k)?;
    let alphas = generic_alphas(offset(BASEX_GENERIC_MIN, t)?, p, beta, double, |a| {
        Ok(double(a)? + 1)
    })?;
    let root = unit_sum(x, &alphas);
    FamilyMember::verified(family, x, k, t, root, params(Some(d), alphas))
}

/// Squares with `k = C(p,2)+1 >= 7` digits in base 3.
pub fn gen_base3_special(k: u32, t: u32) -> Result<FamilyMember> {
    let family = FamilyId::Base3Special;
    let wrong = Error::WrongForm { family, base: 3, k };
    let d = decompose_digit_count(k).map_err(|_| wrong.clone())?;
    let DecompositionForm::Boundary { p } = d.form else {
        return Err(wrong);
    };
    let v = if p == 4 {
        let a1 = offset(BASE3_SEVEN_MIN, t)?;
        vec![a1, a1 + 1, a1 + 2]
    } else {
        let a1 = offset(BASE3_SPECIAL_MIN, t)?;
        let mut v = vec![a1, a1 + 1, double(a1)?, double(a1)? + 1];
        while v.len() < (p - 1) as usize {
            let prev = *v.last().expect("non-empty");
            v.push(double(prev)?);
        }
        v
    };
    let alphas = AlphaSequence::new(v)?;
    let root = unit_sum(3, &alphas);
    FamilyMember::verified(family, 3, k, t, root, params(Some(d), alphas))
}

/// `alpha_1 = 2 + t`, `alpha_i = 2 alpha_{i-1} + 1`, `n` entries.
fn doubling_alphas(t: u32, n: u32) -> Result<AlphaSequence> {
    let mut v = vec![offset(BOUNDARY_MIN, t)?];
    while v.len() < n as usize {
        let prev = *v.last().expect("non-empty");
        v.push(double(prev)? + 1);
    }
    AlphaSequence::new(v)
}

fn boundary_form(family: FamilyId, base: u32, k: u32) -> Result<(Option<DigitDecomposition>, u32)> {
    let p = boundary_index(k).ok_or(Error::WrongForm { family, base, k })?;
    Ok((decompose_digit_count(k).ok(), p))
}

/// Squares with `k = C(p,2)+1 >= 4` digits in base 4 or 5.
///
/// In base 4 the constructed root `3*4^{a_{p-2}} + 2*sum 4^{a_i}` is even; the
/// member is its half, whose square carries the same non-zero digits one
/// place lower and is odd.
pub fn gen_base45_special(x: u32, k: u32, t: u32) -> Result<FamilyMember> {
    let family = FamilyId::Base45Special;
    if x != 4 && x != 5 {
        return Err(Error::WrongForm { family, base: x, k });
    }
    let (d, p) = boundary_form(family, x, k)?;
    let alphas = doubling_alphas(t, p - 2)?;
    let a = |i: u32| alphas.get(i as usize).expect("index within p-2");
    let (root, normalization, leading) = if x == 4 {
        let lower = (0..=p - 3).map(|i| (a(i), 2));
        let constructed = power_sum(4, lower.chain([(a(p - 2), 3)]));
        (constructed / 2u32, 2, 3)
    } else {
        let lower = (0..p.saturating_sub(3)).map(|i| (a(i), 1));
        let top = [(a(p - 3), 2), (a(p - 2), 2)];
        (power_sum(5, lower.chain(top)), 1, 2)
    };
    let params = FamilyParams {
        decomposition: d,
        alphas,
        normalization,
        leading,
    };
    FamilyMember::verified(family, x, k, t, root, params)
}

/// `ceil(sqrt(x + 1))`.
pub fn sigma(x: u32) -> u32 {
    let n = u64::from(x) + 1;
    let s = n.sqrt();
    (if s * s < n { s + 1 } else { s }) as u32
}

/// Squares with `k = C(p,2)+1 >= 4` digits in base `x >= 6`.
pub fn gen_basex_sigma(x: u32, k: u32, t: u32) -> Result<FamilyMember> {
    let family = FamilyId::BaseXSigma;
    if x < 6 {
        return Err(Error::WrongForm { family, base: x, k });
    }
    let (d, p) = boundary_form(family, x, k)?;
    let alphas = doubling_alphas(t, p - 2)?;
    let s = sigma(x);
    let a = |i: u32| alphas.get(i as usize).expect("index within p-2");
    let lower = (0..=p - 3).map(|i| (a(i), 1));
    let root = power_sum(x, lower.chain([(a(p - 2), s)]));
    let params = FamilyParams {
        decomposition: d,
        alphas,
        normalization: 1,
        leading: s,
    };
    FamilyMember::verified(family, x, k, t, root, params)
}

/// `(x^a + 1)^2` for `k = 3`, `(x^a + 1)^3` for `k = 4` (`x >= 3`).
pub fn gen_small_k(x: u32, k: u32, t: u32) -> Result<FamilyMember> {
    let family = match (x, k) {
        (2.., 3) => FamilyId::SmallKSquare,
        (3.., 4) => FamilyId::SmallKCube,
        _ => {
            let family = if k == 4 {
                FamilyId::SmallKCube
            } else {
                FamilyId::SmallKSquare
            };
            return Err(Error::WrongForm { family, base: x, k });
        }
    };
    let a = offset(SMALL_K_MIN, t)?;
    let alphas = AlphaSequence::new(vec![a])?;
    let root = unit_sum(x, &alphas);
    FamilyMember::verified(family, x, k, t, root, params(None, alphas))
}

fn params(decomposition: Option<DigitDecomposition>, alphas: AlphaSequence) -> FamilyParams {
    FamilyParams {
        decomposition,
        alphas,
        normalization: 1,
        leading: 1,
    }
}
