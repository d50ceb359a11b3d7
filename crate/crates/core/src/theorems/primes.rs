//! Prime search in open intervals and Wilson-congruence residues.

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, mul_mod};
use crate::error::{Error, Result};

/// Smallest prime strictly between `lo` and `hi`.
pub fn find_prime_in_interval(lo: u64, hi: u64) -> Option<u64> {
    (lo.saturating_add(1)..hi).find(|&k| is_prime(k))
}

/// `(m − 1)! mod m`, reducing after every multiplication.
pub fn factorial_residue(m: u64) -> u64 {
    if m <= 1 {
        return 0;
    }
    let mut acc = 1u64;
    for k in 2..m {
        acc = mul_mod(acc, k, m);
        if acc == 0 {
            break;
        }
    }
    acc
}

/// `(p − 1)! mod p` for a prime `p`.
pub fn wilson_check(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    Ok(factorial_residue(p))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilsonSummary {
    pub max: u64,
    pub primes_checked: u64,
    pub composites_checked: u64,
    /// Primes whose residue is not `p − 1`.
    pub prime_failures: Vec<u64>,
    /// Composites whose residue is `c − 1`.
    pub composite_failures: Vec<u64>,
}

impl WilsonSummary {
    pub fn holds(&self) -> bool {
        self.prime_failures.is_empty() && self.composite_failures.is_empty()
    }
}

/// Confirms `(k − 1)! ≡ −1 (mod k)` exactly for the primes in `[2, max]`.
pub fn verify_wilson_range(max: u64) -> WilsonSummary {
    let mut summary = WilsonSummary {
        max,
        primes_checked: 0,
        composites_checked: 0,
        prime_failures: Vec::new(),
        composite_failures: Vec::new(),
    };
    for k in 2..=max {
        let congruent = factorial_residue(k) == k - 1;
        if is_prime(k) {
            summary.primes_checked += 1;
            if !congruent {
                summary.prime_failures.push(k);
            }
        } else {
            summary.composites_checked += 1;
            if congruent {
                summary.composite_failures.push(k);
            }
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_search() {
        assert_eq!(find_prime_in_interval(2, 4), Some(3));
        assert_eq!(find_prime_in_interval(25, 50), Some(29));
        assert_eq!(find_prime_in_interval(7, 8), None);
        assert_eq!(find_prime_in_interval(7, 7), None);
        assert_eq!(find_prime_in_interval(1, 3), Some(2));
    }

    #[test]
    fn wilson_values() {
        assert_eq!(wilson_check(5).unwrap(), 4);
        assert_eq!(wilson_check(3).unwrap(), 2);
        assert_eq!(wilson_check(2).unwrap(), 1);
        assert_eq!(wilson_check(101).unwrap(), 100);
        assert!(matches!(wilson_check(9), Err(Error::Domain(_))));
        assert!(wilson_check(1).is_err());
        assert_eq!(factorial_residue(4), 2);
        assert_eq!(factorial_residue(9), 0);
    }

    #[test]
    fn small_range_summary() {
        let s = verify_wilson_range(100);
        assert!(s.holds());
        assert_eq!(s.primes_checked, 25);
        assert_eq!(s.composites_checked, 74);
    }
}
