//! Radix arithmetic: base-x expansions, sparse forms, integer roots and
//! perfect-power detection.

use std::fmt;

use crate::error::{Error, Result};
use crate::natural::Natural;

/// Canonical base-`base` expansion of a natural number.
///
/// Digits are stored least significant first and never end in a zero, so
/// zero is the empty expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseExpansion {
    base: u32,
    digits: Vec<u32>,
}

impl BaseExpansion {
    pub fn new(base: u32, digits: Vec<u32>) -> Result<Self> {
        check_base(base)?;
        if digits.iter().any(|&d| d >= base) {
            return Err(Error::InvalidInput(format!(
                "digit out of range for base {base}"
            )));
        }
        if digits.last() == Some(&0) {
            return Err(Error::InvalidInput("most significant digit is zero".into()));
        }
        Ok(Self { base, digits })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn nonzero_count(&self) -> usize {
        self.digits.iter().filter(|&&d| d != 0).count()
    }

    pub fn to_sparse(&self) -> SparseForm {
        let terms = self
            .digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| SparseTerm {
                exponent: i as u32,
                coefficient: d,
            })
            .collect();
        SparseForm {
            base: self.base,
            terms,
        }
    }

    pub fn evaluate<T: Natural>(&self) -> Result<T> {
        let terms: Vec<(u32, u64)> = self
            .digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| (i as u32, u64::from(d)))
            .collect();
        from_terms(&terms, self.base)
    }
}

/// One non-zero digit: `coefficient * base^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseTerm {
    pub exponent: u32,
    pub coefficient: u32,
}

/// The non-zero digits of a number, `c_0 x^{m_0} + ... + c_{k-1} x^{m_{k-1}}`
/// with strictly increasing exponents and every `c_i` in `[1, base-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseForm {
    base: u32,
    terms: Vec<SparseTerm>,
}

impl SparseForm {
    pub fn new(base: u32, terms: Vec<SparseTerm>) -> Result<Self> {
        check_base(base)?;
        if terms.windows(2).any(|w| w[0].exponent >= w[1].exponent) {
            return Err(Error::InvalidInput(
                "sparse exponents must be strictly increasing".into(),
            ));
        }
        if terms
            .iter()
            .any(|t| t.coefficient == 0 || t.coefficient >= base)
        {
            return Err(Error::InvalidInput(format!(
                "sparse coefficients must lie in [1, {}]",
                base - 1
            )));
        }
        Ok(Self { base, terms })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn terms(&self) -> &[SparseTerm] {
        &self.terms
    }

    /// Number of non-zero digits.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn top_exponent(&self) -> Option<u32> {
        self.terms.last().map(|t| t.exponent)
    }

    /// Whether the constant digit is non-zero, i.e. the value is not divisible
    /// by the base.
    pub fn has_constant_term(&self) -> bool {
        self.terms.first().is_some_and(|t| t.exponent == 0)
    }

    pub fn evaluate<T: Natural>(&self) -> Result<T> {
        let terms: Vec<(u32, u64)> = self
            .terms
            .iter()
            .map(|t| (t.exponent, u64::from(t.coefficient)))
            .collect();
        from_terms(&terms, self.base)
    }
}

impl fmt::Display for SparseForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (t.coefficient, t.exponent) {
                (c, 0) => write!(f, "{c}")?,
                (1, e) => write!(f, "{}^{e}", self.base)?,
                (c, e) => write!(f, "{c}*{}^{e}", self.base)?,
            }
        }
        Ok(())
    }
}

/// `root^degree` with `root >= 2` and `degree >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerWitness<T> {
    pub root: T,
    pub degree: u32,
}

impl<T: fmt::Display> fmt::Display for PowerWitness<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.root, self.degree)
    }
}

impl<T: Natural> PowerWitness<T> {
    pub fn to_big(&self) -> PowerWitness<num_bigint::BigUint> {
        PowerWitness {
            root: self.root.to_biguint(),
            degree: self.degree,
        }
    }
}

pub(crate) fn check_base(base: u32) -> Result<()> {
    if base < 2 {
        Err(Error::InvalidBase(base))
    } else {
        Ok(())
    }
}

pub fn to_expansion<T: Natural>(n: &T, base: u32) -> Result<BaseExpansion> {
    check_base(base)?;
    Ok(BaseExpansion {
        base,
        digits: n.digits_le(base),
    })
}

/// Evaluate `sum coefficient * base^exponent`.
///
/// Exponents may repeat and coefficients may exceed the base; carrying falls
/// out of the arithmetic.
pub fn from_terms<T: Natural>(terms: &[(u32, u64)], base: u32) -> Result<T> {
    check_base(base)?;
    let mut sorted: Vec<(u32, u64)> = terms.to_vec();
    sorted.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
    let b = T::small(base);
    let mut acc = T::zero();
    let mut prev: Option<u32> = None;
    for (exp, coef) in sorted {
        if let Some(p) = prev {
            if p > exp {
                let shift = b.checked_pow(p - exp).ok_or(Error::Overflow)?;
                acc = acc.checked_mul(&shift).ok_or(Error::Overflow)?;
            }
        }
        let c = T::from_u64(coef).ok_or(Error::Overflow)?;
        acc = acc.checked_add(&c).ok_or(Error::Overflow)?;
        prev = Some(exp);
    }
    if let Some(p) = prev {
        if p > 0 {
            let shift = b.checked_pow(p).ok_or(Error::Overflow)?;
            acc = acc.checked_mul(&shift).ok_or(Error::Overflow)?;
        }
    }
    Ok(acc)
}

pub fn count_nonzero<T: Natural>(n: &T, base: u32) -> Result<usize> {
    Ok(to_expansion(n, base)?.nonzero_count())
}

pub fn sparse_form<T: Natural>(n: &T, base: u32) -> Result<SparseForm> {
    Ok(to_expansion(n, base)?.to_sparse())
}

/// Floor of the `d`-th root, and whether it is exact.
pub fn integer_nth_root<T: Natural>(n: &T, d: u32) -> Result<(T, bool)> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    let root = n.nth_root(d);
    let exact = root.checked_pow(d).as_ref() == Some(n);
    Ok((root, exact))
}

/// Primes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> Vec<u32> {
    let limit = limit as usize;
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// The maximal-degree representation `n = y^d`, if `n` is a perfect power.
///
/// Prime degrees up to `log2 n` are tried repeatedly and multiplied together,
/// so the returned root is never itself a perfect power.
pub fn as_perfect_power<T: Natural>(n: &T) -> Result<Option<PowerWitness<T>>> {
    if *n < T::small(2) {
        return Err(Error::Degenerate(n.to_string()));
    }
    Ok(max_degree_witness(n.clone(), &primes_up_to(n.bit_len())))
}

pub(crate) fn max_degree_witness<T: Natural>(n: T, primes: &[u32]) -> Option<PowerWitness<T>> {
    let mut root = n;
    let mut degree = 1u32;
    'outer: loop {
        // 2^p <= root needs p < bit_len.
        let bits = root.bit_len();
        for &p in primes.iter().take_while(|&&p| u64::from(p) < bits) {
            let r = root.nth_root(p);
            if r.checked_pow(p).as_ref() == Some(&root) {
                root = r;
                degree *= p;
                continue 'outer;
            }
        }
        break;
    }
    (degree > 1).then_some(PowerWitness { root, degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn expansion_examples() {
        assert!(to_expansion(&big(0), 7).unwrap().is_zero());
        assert_eq!(to_expansion(&big(9), 2).unwrap().digits(), &[1, 0, 0, 1]);
        assert_eq!(
            to_expansion(&2500u64, 4).unwrap().digits(),
            &[0, 1, 0, 3, 1, 2]
        );
        assert_eq!(
            2u64 * 4u64.pow(5) + 4u64.pow(4) + 3 * 4u64.pow(3) + 4,
            2500,
            "hand expansion of 2500 in base 4"
        );
    }

    #[test]
    fn invalid_base_is_rejected() {
        assert_eq!(to_expansion(&big(5), 1), Err(Error::InvalidBase(1)));
        assert_eq!(count_nonzero(&5u64, 0), Err(Error::InvalidBase(0)));
        assert_eq!(from_terms::<u64>(&[(0, 1)], 1), Err(Error::InvalidBase(1)));
    }

    #[test]
    fn from_terms_examples() {
        let v: BigUint = from_terms(&[(0, 1), (3, 26), (6, 169)], 3).unwrap();
        assert_eq!(v, big(123_904));
        assert_eq!(v, big((1 + 27 + 81 + 243u64).pow(2)));
        assert_eq!(from_terms::<u64>(&[], 10).unwrap(), 0);
        assert_eq!(from_terms::<u64>(&[(0, 2), (0, 3)], 5).unwrap(), 5);
    }

    #[test]
    fn from_terms_overflow_is_reported() {
        assert_eq!(from_terms::<u64>(&[(64, 1)], 2), Err(Error::Overflow));
        assert_eq!(from_terms::<u128>(&[(64, 1)], 2).unwrap(), 1u128 << 64);
    }

    #[test]
    fn count_nonzero_examples() {
        assert_eq!(count_nonzero(&big(9), 2).unwrap(), 2);
        assert_eq!(count_nonzero(&big(12_769), 2).unwrap(), 7);
        for base in 2..20u32 {
            for m in 0..30 {
                assert_eq!(count_nonzero(&BigUint::from(base).pow(m), base).unwrap(), 1);
            }
        }
    }

    #[test]
    fn nth_root_examples() {
        assert_eq!(integer_nth_root(&big(1681), 2).unwrap(), (big(41), true));
        assert_eq!(integer_nth_root(&10u64, 2).unwrap(), (3, false));
        for d in 1..70 {
            assert_eq!(integer_nth_root(&1u64, d).unwrap(), (1, true));
        }
        assert_eq!(integer_nth_root(&big(5), 0), Err(Error::InvalidDegree));
    }

    #[test]
    fn perfect_power_examples() {
        assert_eq!(
            as_perfect_power(&64u64).unwrap(),
            Some(PowerWitness { root: 2, degree: 6 })
        );
        assert_eq!(
            as_perfect_power(&big(12_769)).unwrap(),
            Some(PowerWitness {
                root: big(113),
                degree: 2
            })
        );
        assert_eq!(as_perfect_power(&12u64).unwrap(), None);
        assert!(matches!(as_perfect_power(&0u64), Err(Error::Degenerate(_))));
        assert!(matches!(as_perfect_power(&1u64), Err(Error::Degenerate(_))));
    }

    #[test]
    fn perfect_power_near_word_limit() {
        let n = 3u64.pow(40);
        assert_eq!(
            as_perfect_power(&n).unwrap(),
            Some(PowerWitness {
                root: 3,
                degree: 40
            })
        );
        let p = (1u128 << 61) - 1;
        assert_eq!(
            as_perfect_power(&(p * p)).unwrap(),
            Some(PowerWitness { root: p, degree: 2 })
        );
        assert_eq!(as_perfect_power(&u64::MAX).unwrap(), None);
    }

    #[test]
    fn sparse_form_rejects_bad_terms() {
        let t = |e, c| SparseTerm {
            exponent: e,
            coefficient: c,
        };
        assert!(SparseForm::new(3, vec![t(0, 1), t(0, 2)]).is_err());
        assert!(SparseForm::new(3, vec![t(0, 3)]).is_err());
        assert!(SparseForm::new(3, vec![t(0, 0)]).is_err());
        let f = SparseForm::new(3, vec![t(0, 1), t(2, 2)]).unwrap();
        assert_eq!(f.evaluate::<u64>().unwrap(), 19);
        assert_eq!(f.to_string(), "1 + 2*3^2");
    }
}
