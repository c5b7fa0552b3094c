//! Sets of prime numbers selecting the localization `Z_(P)`.
//!
//! The convention throughout: primes *outside* the set are inverted, so
//! `P = {}` gives the rationals and `P = all primes dividing |G|` keeps the
//! integers (locally at |G|).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite set of primes; empty means the rational case.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PrimeSet {
    primes: BTreeSet<u64>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl PrimeSet {
    pub fn empty() -> Self {
        PrimeSet::default()
    }

    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let primes: BTreeSet<u64> = primes.into_iter().collect();
        for &p in &primes {
            if !is_prime(p) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("{p} is not prime"),
                });
            }
        }
        Ok(PrimeSet { primes })
    }

    /// All primes dividing `n`.
    pub fn dividing(n: u64) -> Self {
        PrimeSet {
            primes: factorize(n).into_iter().map(|(p, _)| p).collect(),
        }
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.contains(&p)
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet {
            primes: self.primes.union(&other.primes).copied().collect(),
        }
    }

    /// Splits `n` as `m * m'` where `m` collects the prime powers inside the
    /// set and `m'` those outside.
    pub fn split_order(&self, n: u64) -> (u64, u64) {
        let mut inside = 1;
        for (p, e) in factorize(n) {
            if self.contains(p) {
                inside *= p.pow(e);
            }
        }
        (inside, n / inside)
    }

    /// True iff every prime factor of `n` lies in the set.
    pub fn is_p_number(&self, n: u64) -> bool {
        factorize(n).into_iter().all(|(p, _)| self.contains(p))
    }

    /// True iff no prime factor of `n` lies in the set.
    pub fn is_p_prime_number(&self, n: u64) -> bool {
        factorize(n).into_iter().all(|(p, _)| !self.contains(p))
    }

    /// All subsets of `self`, ordered by size then lexicographically.
    pub fn subsets(&self) -> Vec<PrimeSet> {
        let primes: Vec<u64> = self.iter().collect();
        let mut out: Vec<PrimeSet> = (0..1u32 << primes.len())
            .map(|mask| PrimeSet {
                primes: primes
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect(),
            })
            .collect();
        out.sort_by_key(|s| (s.primes.len(), s.primes.iter().copied().collect::<Vec<_>>()));
        out
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .primes
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{{{body}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeSet::new([4]).is_err());
        assert!(PrimeSet::new([1]).is_err());
        assert!(PrimeSet::new([2, 3, 5]).is_ok());
    }

    #[test]
    fn split_order_examples() {
        let p = PrimeSet::new([2]).unwrap();
        assert_eq!(p.split_order(12), (4, 3));
        assert_eq!(PrimeSet::empty().split_order(12), (1, 12));
        let p23 = PrimeSet::new([2, 3]).unwrap();
        assert_eq!(p23.split_order(6), (6, 1));
    }

    #[test]
    fn subsets_of_two_primes() {
        let p = PrimeSet::new([2, 3]).unwrap();
        let subs = p.subsets();
        assert_eq!(subs.len(), 4);
        assert!(subs[0].is_empty());
        assert_eq!(subs[3], p);
    }

    #[test]
    fn dividing_collects_prime_support() {
        assert_eq!(PrimeSet::dividing(60), PrimeSet::new([2, 3, 5]).unwrap());
        assert!(PrimeSet::dividing(1).is_empty());
    }
}
