//! Scalar abstraction for the radix routines.
//!
//! Everything in [`crate::repr`] is written against [`Natural`], so the same
//! code runs on machine words (`u64`, `u128`) when a search bound is known to
//! fit, and on [`BigUint`] otherwise. Fixed-width arithmetic is always checked;
//! an overflow surfaces as [`crate::Error::Overflow`], never as a wrapped value.

use std::fmt;

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, ToPrimitive, Unsigned};

pub trait Natural:
    Clone
    + Ord
    + fmt::Debug
    + fmt::Display
    + Integer
    + Unsigned
    + Roots
    + CheckedAdd
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Largest representable value, if the type is bounded.
    const MAX: Option<Self>;

    /// Number of significant bits; zero for zero.
    fn bit_len(&self) -> u64;

    /// `self mod m` for a small modulus.
    fn rem_small(&self, m: u32) -> u32;

    /// Base-`base` digits, least significant first, no trailing zeros.
    fn digits_le(&self, base: u32) -> Vec<u32>;

    fn small(v: u32) -> Self;

    fn to_biguint(&self) -> BigUint;

    /// Narrow a big value into this scalar, if it fits.
    fn from_biguint(n: &BigUint) -> Option<Self>;

    fn checked_pow(&self, exp: u32) -> Option<Self> {
        num_traits::checked_pow(self.clone(), exp as usize)
    }
}

macro_rules! impl_natural_word {
    ($t:ty) => {
        impl Natural for $t {
            const MAX: Option<Self> = Some(<$t>::MAX);

            fn bit_len(&self) -> u64 {
                (<$t>::BITS - self.leading_zeros()) as u64
            }

            fn rem_small(&self, m: u32) -> u32 {
                (*self % m as $t) as u32
            }

            fn digits_le(&self, base: u32) -> Vec<u32> {
                let b = base as $t;
                let mut n = *self;
                let mut out = Vec::new();
                while n != 0 {
                    out.push((n % b) as u32);
                    n /= b;
                }
                out
            }

            fn small(v: u32) -> Self {
                v as $t
            }

            fn to_biguint(&self) -> BigUint {
                BigUint::from(*self)
            }

            fn from_biguint(n: &BigUint) -> Option<Self> {
                <$t>::try_from(n).ok()
            }
        }
    };
}

impl_natural_word!(u64);
impl_natural_word!(u128);

impl Natural for BigUint {
    const MAX: Option<Self> = None;

    fn bit_len(&self) -> u64 {
        self.bits()
    }

    fn rem_small(&self, m: u32) -> u32 {
        (self % m).to_u32().expect("remainder below a u32 modulus")
    }

    fn digits_le(&self, base: u32) -> Vec<u32> {
        let mut out: Vec<u32> = if base <= 256 {
            self.to_radix_le(base).into_iter().map(u32::from).collect()
        } else {
            let mut n = self.clone();
            let mut v = Vec::new();
            while n != BigUint::ZERO {
                v.push((&n % base).to_u32().expect("digit below base"));
                n /= base;
            }
            v
        };
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    fn small(v: u32) -> Self {
        BigUint::from(v)
    }

    fn to_biguint(&self) -> BigUint {
        self.clone()
    }

    fn from_biguint(n: &BigUint) -> Option<Self> {
        Some(n.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_len_matches_across_scalars() {
        for v in [0u64, 1, 2, 3, 255, 256, u64::MAX] {
            assert_eq!(v.bit_len(), BigUint::from(v).bit_len());
            assert_eq!((v as u128).bit_len(), v.bit_len());
        }
    }

    #[test]
    fn digits_agree_for_large_bases() {
        let n = 123_456_789_012_345u64;
        for base in [2u32, 7, 10, 255, 256, 257, 1_000_003] {
            assert_eq!(
                n.digits_le(base),
                BigUint::from(n).digits_le(base),
                "base {base}"
            );
        }
        assert!(0u64.digits_le(10).is_empty());
        assert!(BigUint::ZERO.digits_le(10).is_empty());
    }

    #[test]
    fn narrow_respects_width() {
        let big = BigUint::from(u64::MAX) + 1u32;
        assert_eq!(u64::from_biguint(&big), None);
        assert_eq!(u128::from_biguint(&big), Some(u64::MAX as u128 + 1));
        assert_eq!(BigUint::from_biguint(&big), Some(big.clone()));
    }
}
