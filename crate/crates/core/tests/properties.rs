use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sparsepow::families::sigma;
use sparsepow::{
    as_perfect_power, classify_case, count_nonzero, find_sparse_powers, from_terms,
    generate_member, integer_nth_root, square_expansion_terms, to_expansion, AlphaSequence,
    SearchSpec,
};

/// Base-`x` digits of `n`, least significant first, by repeated division.
fn digits_by_division(n: &BigUint, x: u32) -> Vec<u32> {
    let x = BigUint::from(x);
    let mut n = n.clone();
    let mut out = Vec::new();
    while !n.is_zero() {
        let (q, r) = n.div_rem(&x);
        out.push(u32::try_from(&r).unwrap());
        n = q;
    }
    out
}

fn nonzero(n: &BigUint, x: u32) -> usize {
    digits_by_division(n, x).iter().filter(|&&d| d != 0).count()
}

/// Exponent multiplicities of the uncarried square of `1 + sum x^{a_i}`.
/// Binary cross terms `2*2^e` are counted at `e + 1`.
fn square_exponents(alphas: &[u32], binary: bool) -> BTreeMap<u32, usize> {
    let full: Vec<u32> = std::iter::once(0).chain(alphas.iter().copied()).collect();
    let mut seen = BTreeMap::new();
    for i in 0..full.len() {
        for j in 0..i {
            *seen
                .entry(full[i] + full[j] + u32::from(binary))
                .or_insert(0) += 1;
        }
        *seen.entry(2 * full[i]).or_insert(0) += 1;
    }
    seen
}

fn alphas_doubling(first: u32, gaps: &[u32]) -> Vec<u32> {
    let mut out = vec![first];
    for &g in gaps {
        let prev = *out.last().unwrap();
        out.push(2 * prev + g);
    }
    out
}

proptest! {
    #[test]
    fn expansion_round_trips(n: u128, base in 2u32..=16) {
        let e = to_expansion(&n, base).unwrap();
        let big = BigUint::from(n);
        prop_assert_eq!(e.digits(), &digits_by_division(&big, base)[..]);
        prop_assert!(e.digits().iter().all(|&d| d < base));
        let terms: Vec<(u32, u64)> = e
            .digits()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| (i as u32, u64::from(d)))
            .collect();
        prop_assert_eq!(from_terms::<u128>(&terms, base).unwrap(), n);
        prop_assert_eq!(e.evaluate::<BigUint>().unwrap(), big);
        if n > 0 {
            let len = e.digits().len() as u32;
            let b = BigUint::from(base);
            prop_assert!(Pow::pow(&b, len - 1) <= BigUint::from(n));
            prop_assert!(BigUint::from(n) < Pow::pow(&b, len));
        }
    }

    #[test]
    fn nth_root_brackets(n: u128, d in 1u32..=64) {
        let (r, exact) = integer_nth_root(&n, d).unwrap();
        let r = BigUint::from(r);
        let n = BigUint::from(n);
        prop_assert!(Pow::pow(&r, d) <= n);
        prop_assert!(n < Pow::pow(&(&r + 1u32), d));
        prop_assert_eq!(exact, Pow::pow(&r, d) == n);
    }

    #[test]
    fn exact_powers_are_recognised(y in 2u64..5000, d in 2u32..=5) {
        let n = BigUint::from(y).pow(d);
        let w = as_perfect_power(&n).unwrap().expect("a power");
        prop_assert_eq!(Pow::pow(&w.root, w.degree), n);
        prop_assert!(w.degree >= d && w.degree % d == 0);
        prop_assert!(as_perfect_power(&w.root).unwrap().is_none());
    }

    #[test]
    fn family_members_verify_independently(x in 2u32..=20, k in 3u32..=60, t in 0u32..6) {
        if classify_case(x, k, false).unwrap().is_infinite() {
            let m = generate_member(x, k, t, false).unwrap();
            let next = generate_member(x, k, t + 1, false).unwrap();
            prop_assert_eq!(&m.root.pow(m.degree), &m.value);
            prop_assert_eq!(nonzero(&m.value, x), k as usize);
            prop_assert!(m.value.gcd(&BigUint::from(x)).is_one());
            prop_assert_eq!(m.sparse.evaluate::<BigUint>().unwrap(), m.value.clone());
            prop_assert!(next.value > m.value);
        }
    }

    #[test]
    fn collision_law_for_wide_bases(
        x in 3u32..=36,
        first in 1u32..=8,
        gaps in prop::collection::vec(prop_oneof![Just(0u32), 1u32..=5], 0..7),
    ) {
        let alphas = alphas_doubling(first, &gaps);
        let law = gaps.iter().filter(|&&g| g == 0).count();
        let terms = square_expansion_terms(&AlphaSequence::new(alphas.clone()).unwrap(), x).unwrap();
        let recount: usize = square_exponents(&alphas, false).values().map(|c| c - 1).sum();
        prop_assert_eq!(terms.collisions(), law);
        prop_assert_eq!(recount, law);
        let p = alphas.len() + 1;
        prop_assert_eq!(terms.len(), p * (p + 1) / 2);
    }

    #[test]
    fn collision_law_for_binary_after_folding(
        first in 3u32..=8,
        gaps in prop::collection::vec(prop_oneof![Just(0u32), 1u32..=5], 0..7),
    ) {
        // a_i = 2 a_{i-1} - 1 + gap
        let mut alphas = vec![first];
        for &g in &gaps {
            let prev = *alphas.last().unwrap();
            alphas.push(2 * prev - 1 + g);
        }
        let law = gaps.iter().filter(|&&g| g == 0).count();
        let folded = square_expansion_terms(&AlphaSequence::new(alphas.clone()).unwrap(), 2)
            .unwrap()
            .fold_binary();
        let recount: usize = square_exponents(&alphas, true).values().map(|c| c - 1).sum();
        prop_assert_eq!(folded.collisions(), law);
        prop_assert_eq!(recount, law);
    }

    #[test]
    fn sigma_square_has_two_digits(x in 6u32..=1_000_000) {
        let s = sigma(x);
        let sq = u64::from(s) * u64::from(s);
        let x64 = u64::from(x);
        prop_assert!(2 * u64::from(s) <= x64);
        prop_assert!(x64 < sq && sq < 2 * x64);
        prop_assert!((u64::from(s) - 1).pow(2) < x64 + 1);
        prop_assert_eq!(count_nonzero(&sq, x).unwrap(), 2);
    }

    #[test]
    fn oracle_hits_grow_with_the_bound(base in 2u32..=5, k in 2u32..=4, m in 3u32..=9, extra in 1u32..=3) {
        let small = find_sparse_powers(&SearchSpec::new(base, k, m)).unwrap();
        let large = find_sparse_powers(&SearchSpec::new(base, k, m + extra)).unwrap();
        for h in &small {
            prop_assert!(large.contains(h));
        }
    }
}

#[test]
fn nonzero_count_matches_division_on_random_wide_values() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for _ in 0..1000 {
        let n = BigUint::from_bytes_le(&rng.gen::<[u8; 32]>());
        let base = rng.gen_range(2..=36u32);
        assert_eq!(
            count_nonzero(&n, base).unwrap(),
            nonzero(&n, base),
            "n={n} base={base}"
        );
    }
}

#[test]
fn perfect_powers_match_exhaustive_trial() {
    const LIMIT: u64 = 100_000;
    // Largest degree for each perfect power up to LIMIT.
    let mut best: BTreeMap<u64, (u64, u32)> = BTreeMap::new();
    for y in 2..=LIMIT {
        if y * y > LIMIT {
            break;
        }
        let mut v = y * y;
        let mut d = 2;
        while v <= LIMIT {
            let e = best.entry(v).or_insert((y, d));
            if d > e.1 {
                *e = (y, d);
            }
            v *= y;
            d += 1;
        }
    }
    for n in 2..=LIMIT {
        let got = as_perfect_power(&n).unwrap().map(|w| (w.root, w.degree));
        assert_eq!(got, best.get(&n).copied(), "n={n}");
    }
}
