//! Exact integer helpers shared by the spectrum and verification code.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `n!` as an exact big integer.
pub fn factorial(n: u64) -> BigUint {
    range_product(2, n)
}

/// Product `lo · (lo+1) · … · hi`; the empty product (`lo > hi`) is 1.
pub fn range_product(lo: u64, hi: u64) -> BigUint {
    if lo > hi {
        return BigUint::one();
    }
    // Balanced splitting keeps the operands similar in size, which is much
    // faster than a left fold once the product has thousands of digits.
    if hi - lo < 16 {
        let mut acc = BigUint::one();
        for k in lo..=hi {
            acc *= k;
        }
        return acc;
    }
    let mid = lo + (hi - lo) / 2;
    range_product(lo, mid) * range_product(mid + 1, hi)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Least common multiple, `None` on overflow.
pub fn checked_lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut k = 5u64;
    while k.saturating_mul(k) <= n {
        if n.is_multiple_of(k) || n.is_multiple_of(k + 2) {
            return false;
        }
        k += 6;
    }
    true
}

/// Prime factorization by trial division, as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    let mut p = 3u64;
    while p.saturating_mul(p) <= n {
        push(p, &mut n);
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// `true` iff `d` divides `n` exactly.
pub fn divides(d: &BigUint, n: &BigUint) -> bool {
    !d.is_zero() && (n % d).is_zero()
}

/// `a · b mod m` without overflow.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Residue of a big integer modulo a machine word.
pub fn residue(value: &BigUint, m: u64) -> u64 {
    let r = value % m;
    r.iter_u64_digits().next().unwrap_or(0)
}
