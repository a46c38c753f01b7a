use super::DegreeFilter;
use crate::natural::Natural;
use crate::repr::{max_degree_witness, primes_up_to, PowerWitness};

/// Power-residue tables for one prime degree.
#[derive(Debug, Clone)]
struct ResidueFilter {
    degree: u32,
    /// `(modulus, is_residue[v mod modulus])`.
    tables: Vec<(u32, Vec<bool>)>,
}

impl ResidueFilter {
    fn new(degree: u32) -> Self {
        let moduli: Vec<u32> = if degree == 2 {
            vec![64, 63, 65, 11]
        } else {
            // Primes q = 1 mod d: only a 1/d share of the units are d-th powers.
            primes_up_to(20_000)
                .into_iter()
                .filter(|&q| q % degree == 1)
                .take(3)
                .collect()
        };
        let tables = moduli
            .into_iter()
            .map(|q| {
                let mut table = vec![false; q as usize];
                for a in 0..u64::from(q) {
                    let mut r = 1u64;
                    for _ in 0..degree {
                        r = r * a % u64::from(q);
                    }
                    table[r as usize] = true;
                }
                (q, table)
            })
            .collect();
        Self { degree, tables }
    }

    fn admits<T: Natural>(&self, v: &T) -> bool {
        self.tables
            .iter()
            .all(|(q, table)| table[v.rem_small(*q) as usize])
    }
}

/// Decides whether a candidate is a perfect power under a degree filter.
///
/// With pruning on, candidates are first screened by power residues modulo
/// small moduli; an integer root is only taken when every screen passes. The
/// screens never reject a true power, so pruning changes speed, not results.
#[derive(Debug, Clone)]
pub struct PowerTester {
    filter: DegreeFilter,
    primes: Vec<u32>,
    residues: Vec<ResidueFilter>,
    prune: bool,
}

impl PowerTester {
    /// `max_bits` bounds the bit length of every value that will be tested.
    pub fn new(filter: DegreeFilter, max_bits: u64, prune: bool) -> Self {
        let primes = primes_up_to(max_bits.max(2));
        let screened: Vec<u32> = match &filter {
            DegreeFilter::Any => primes.clone(),
            DegreeFilter::Only(ds) => {
                let mut v: Vec<u32> = ds
                    .iter()
                    .filter_map(|&d| smallest_prime_factor(d))
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            }
        };
        let residues = if prune {
            screened.into_iter().map(ResidueFilter::new).collect()
        } else {
            Vec::new()
        };
        Self {
            filter,
            primes,
            residues,
            prune,
        }
    }

    fn admits<T: Natural>(&self, v: &T, prime: u32) -> bool {
        if !self.prune {
            return true;
        }
        match self.residues.binary_search_by_key(&prime, |r| r.degree) {
            Ok(i) => self.residues[i].admits(v),
            Err(_) => true,
        }
    }

    fn is_power<T: Natural>(&self, v: &T, d: u32) -> bool {
        let r = v.nth_root(d);
        r.checked_pow(d).as_ref() == Some(v)
    }

    /// The maximal-degree witness for `v`, if `v` passes the degree filter.
    pub fn test<T: Natural>(&self, v: &T) -> Option<PowerWitness<T>> {
        if *v < T::small(2) {
            return None;
        }
        let bits = v.bit_len();
        let matched = match &self.filter {
            DegreeFilter::Any => self
                .primes
                .iter()
                .take_while(|&&p| u64::from(p) < bits)
                .any(|&p| self.admits(v, p) && self.is_power(v, p)),
            DegreeFilter::Only(ds) => ds.iter().any(|&d| {
                u64::from(d) < bits
                    && smallest_prime_factor(d).is_none_or(|p| self.admits(v, p))
                    && self.is_power(v, d)
            }),
        };
        if matched {
            max_degree_witness(v.clone(), &self.primes)
        } else {
            None
        }
    }
}

fn smallest_prime_factor(d: u32) -> Option<u32> {
    (2..=d).find(|&p| d.is_multiple_of(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::as_perfect_power;

    #[test]
    fn residue_tables_contain_all_powers() {
        for d in [2u32, 3, 5, 7, 11, 13] {
            let f = ResidueFilter::new(d);
            assert!(!f.tables.is_empty());
            for y in 0..2000u32 {
                let v = num_bigint::BigUint::from(y).pow(d);
                assert!(f.admits(&v), "d={d} y={y}");
            }
        }
    }

    #[test]
    fn pruned_and_unpruned_agree() {
        let filters = [
            DegreeFilter::Any,
            DegreeFilter::only([2]),
            DegreeFilter::only([3]),
            DegreeFilter::only([4, 6]),
        ];
        for filter in filters {
            let fast = PowerTester::new(filter.clone(), 64, true);
            let slow = PowerTester::new(filter.clone(), 64, false);
            for v in 0..200_000u64 {
                assert_eq!(fast.test(&v), slow.test(&v), "{filter:?} v={v}");
            }
        }
    }

    #[test]
    fn any_filter_matches_maximal_witness() {
        let t = PowerTester::new(DegreeFilter::Any, 64, true);
        for v in 2..50_000u64 {
            assert_eq!(t.test(&v), as_perfect_power(&v).unwrap(), "v={v}");
        }
    }

    #[test]
    fn composite_degree_filters() {
        let t = PowerTester::new(DegreeFilter::only([2]), 64, true);
        assert_eq!(t.test(&64u64), Some(PowerWitness { root: 2, degree: 6 }));
        assert_eq!(t.test(&8u64), None);
        let t = PowerTester::new(DegreeFilter::only([4]), 64, true);
        assert_eq!(t.test(&16u64).map(|w| w.degree), Some(4));
        assert_eq!(t.test(&36u64), None);
    }
}
