//! Exact rational helpers: P-locality tests, `num/den` strings, rank.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::primes::PrimeSet;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// True iff the reduced denominator has no prime factor in `primes`,
/// i.e. the rational lies in `Z_(P) = Z[p^-1 : p outside P]`.
pub fn is_p_local(x: &Rat, primes: &PrimeSet) -> bool {
    let den = x.denom().abs();
    if den.is_one() {
        return true;
    }
    for p in primes.iter() {
        let p = BigInt::from(p);
        if (&den % &p).is_zero() {
            return false;
        }
    }
    true
}

/// Canonical `num/den` form in lowest terms, denominator always present.
pub fn to_frac_string(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_frac(text: &str) -> Result<Rat> {
    let err = || Error::Parse {
        line: 0,
        message: format!("invalid rational `{text}`"),
    };
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = n.trim().parse().map_err(|_| err())?;
    let denom: BigInt = d.trim().parse().map_err(|_| err())?;
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(numer, denom))
}

pub fn as_integer(x: &Rat) -> Option<BigInt> {
    x.denom().is_one().then(|| x.numer().clone())
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for c in col..ncols {
            let v = &m[rank][c] * &inv;
            m[rank][c] = v;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..ncols {
                    let v = &m[r][c] - &factor * &m[rank][c];
                    m[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locality_inverts_primes_outside_the_set() {
        let p2 = PrimeSet::new([2]).unwrap();
        assert!(is_p_local(&rat_frac(1, 3), &p2));
        assert!(!is_p_local(&rat_frac(1, 2), &p2));
        assert!(!is_p_local(&rat_frac(1, 6), &p2));
        // empty set: everything is inverted
        assert!(is_p_local(&rat_frac(1, 6), &PrimeSet::empty()));
    }

    #[test]
    fn frac_strings_round_trip() {
        let x = rat_frac(-4, 6);
        assert_eq!(to_frac_string(&x), "-2/3");
        assert_eq!(parse_frac("-2/3").unwrap(), x);
        assert_eq!(parse_frac("5").unwrap(), rat(5));
        assert!(parse_frac("1/0").is_err());
    }

    #[test]
    fn rank_of_singular_matrix() {
        let rows = vec![
            vec![rat(1), rat(2)],
            vec![rat(2), rat(4)],
            vec![rat(0), rat(1)],
        ];
        assert_eq!(rank(&rows), 2);
    }
}
