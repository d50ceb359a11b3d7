//! Order spectra: how many elements of each order a group has.
//!
//! Two independent routes are provided. [`spectrum_bruteforce`] enumerates
//! the group and tallies [`element_order`]; [`spectrum_closed_form`] uses
//! per-family counting formulas, and for symmetric groups sums class sizes
//! over cycle types.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{checked_lcm, divisors, factorial, factorize};
use crate::error::{Error, Result};
use crate::groups::{element_order, enumerate_elements_with, group_order, GroupSpec, Limits};

/// Exact element counts keyed by element order, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpectrum {
    entries: BTreeMap<u64, BigUint>,
    total: BigUint,
}

impl OrderSpectrum {
    /// Builds a spectrum from raw counts, dropping zero entries.
    pub fn from_counts(counts: impl IntoIterator<Item = (u64, BigUint)>) -> Self {
        let mut entries: BTreeMap<u64, BigUint> = BTreeMap::new();
        for (order, count) in counts {
            *entries.entry(order).or_default() += count;
        }
        entries.retain(|_, c| !c.is_zero());
        let total = entries.values().sum();
        OrderSpectrum { entries, total }
    }

    pub fn count(&self, order: u64) -> Option<&BigUint> {
        self.entries.get(&order)
    }

    /// Count for `order`, zero if no element has that order.
    pub fn count_or_zero(&self, order: u64) -> BigUint {
        self.entries.get(&order).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigUint)> {
        self.entries.iter().map(|(&d, c)| (d, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry-wise sum, for combining spectra of disjoint index ranges.
    pub fn merge(&mut self, other: &OrderSpectrum) {
        for (d, c) in other.iter() {
            *self.entries.entry(d).or_default() += c;
        }
        self.total += &other.total;
    }

    /// Checks the structural invariants against the source group's order.
    pub fn check_invariants(&self, group_order: &BigUint) -> std::result::Result<(), String> {
        if &self.total != group_order {
            return Err(format!("total {} differs from group order {group_order}", self.total));
        }
        if self.count(1) != Some(&BigUint::one()) {
            return Err("identity must be the unique element of order 1".into());
        }
        for (d, c) in self.iter() {
            if c.is_zero() {
                return Err(format!("zero count stored for order {d}"));
            }
            if !(group_order % d).is_zero() {
                return Err(format!("order {d} does not divide {group_order}"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for OrderSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (d, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}:{c}")?;
        }
        f.write_str("}")
    }
}

/// A cycle type of a permutation on `n` letters, i.e. an integer partition of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    n: u32,
    multiplicities: BTreeMap<u32, u32>,
}

impl CycleType {
    /// From a list of positive part sizes in any order.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Domain(format!("{parts:?} is not a partition of a positive integer")));
        }
        let mut multiplicities = BTreeMap::new();
        for &k in parts {
            *multiplicities.entry(k).or_insert(0) += 1;
        }
        Ok(CycleType {
            n: parts.iter().sum(),
            multiplicities,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.multiplicities
    }

    /// Part sizes, largest first.
    pub fn parts(&self) -> Vec<u32> {
        self.multiplicities
            .iter()
            .rev()
            .flat_map(|(&k, &m)| std::iter::repeat_n(k, m as usize))
            .collect()
    }

    /// Order of any permutation of this type: the lcm of its part sizes.
    pub fn order(&self) -> u64 {
        self.multiplicities
            .keys()
            .try_fold(1u64, |acc, &k| checked_lcm(acc, k as u64))
            .expect("cycle type order overflows u64")
    }
}

/// Integer partitions of `n` in reverse-lexicographic order, starting at `(n)`
/// and ending at `(1, …, 1)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<u32>,
    started: bool,
}

impl Partitions {
    fn new(n: u32) -> Self {
        Partitions {
            parts: vec![n],
            started: false,
        }
    }

    /// Advances and returns the next partition as parts in non-increasing order.
    pub fn next_parts(&mut self) -> Option<&[u32]> {
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        let mut spare = 0u32;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            spare += 1;
        }
        let last = self.parts.last_mut()?;
        *last -= 1;
        let cap = *last;
        spare += 1;
        while spare > cap {
            self.parts.push(cap);
            spare -= cap;
        }
        if spare > 0 {
            self.parts.push(spare);
        }
        Some(&self.parts)
    }
}

impl Iterator for Partitions {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        self.next_parts().map(|p| CycleType::from_parts(p).expect("non-empty positive parts"))
    }
}

/// Every partition of `n` exactly once, bounded by the default partition bound.
pub fn partitions_of(n: u32) -> Result<Partitions> {
    partitions_of_with(n, &Limits::default())
}

pub fn partitions_of_with(n: u32, limits: &Limits) -> Result<Partitions> {
    if n < 1 {
        return Err(Error::Domain("partitions are enumerated for n ≥ 1".into()));
    }
    if n > limits.partition_bound {
        return Err(Error::PartitionBoundExceeded {
            n,
            bound: limits.partition_bound,
        });
    }
    Ok(Partitions::new(n))
}

/// Number of permutations of `ct.n()` letters with cycle type `ct`:
/// `n! / Π (k^m_k · m_k!)`.
pub fn cycle_type_count(ct: &CycleType) -> BigUint {
    let denominator: BigUint = ct
        .multiplicities
        .iter()
        .map(|(&k, &m)| BigUint::from(k).pow(m) * factorial(m as u64))
        .product();
    exact_div(factorial(ct.n as u64), &denominator)
}

fn exact_div(numerator: BigUint, denominator: &BigUint) -> BigUint {
    let (q, r) = numerator.div_rem(denominator);
    assert!(r.is_zero(), "inexact division {numerator} / {denominator}");
    q
}

/// Number of permutations of `n` letters that are products of exactly `j`
/// disjoint `p`-cycles (all other letters fixed):
/// `n! / (p^j · j! · (n − j·p)!)`.
pub fn count_p_products(n: u64, p: u64, j: u64) -> Result<BigUint> {
    if p < 2 || j < 1 {
        return Err(Error::Domain(format!("need p ≥ 2 and j ≥ 1, got p = {p}, j = {j}")));
    }
    let used = j
        .checked_mul(p)
        .filter(|&used| used <= n)
        .ok_or_else(|| Error::Domain(format!("{j} disjoint {p}-cycles need more than {n} letters")))?;
    let denominator = BigUint::from(p).pow(j as u32) * factorial(j) * factorial(n - used);
    Ok(exact_div(factorial(n), &denominator))
}

/// Euler's totient via trial-division factorization; `φ(1) = 1`.
pub fn euler_phi(m: u64) -> u64 {
    if m == 0 {
        return 0;
    }
    factorize(m)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Spectrum from the family's counting formula, with default limits.
pub fn spectrum_closed_form(spec: &GroupSpec) -> Result<OrderSpectrum> {
    spectrum_closed_form_with(spec, &Limits::default())
}

pub fn spectrum_closed_form_with(spec: &GroupSpec, limits: &Limits) -> Result<OrderSpectrum> {
    spec.validate()?;
    let phi_counts = |modulus: u64| {
        divisors(modulus)
            .into_iter()
            .map(|d| (d, BigUint::from(euler_phi(d))))
            .collect::<Vec<_>>()
    };
    let spectrum = match *spec {
        GroupSpec::Cyclic { m } => OrderSpectrum::from_counts(phi_counts(m)),
        GroupSpec::CyclicPower2Product { alpha, t } => {
            let t = t as u64;
            let mut counts = vec![(1u64, BigUint::one())];
            for k in 1..=alpha as u64 {
                let below: BigUint = BigUint::one() << ((k - 1) * t);
                let upto: BigUint = BigUint::one() << (k * t);
                counts.push((1u64 << k, upto - below));
            }
            OrderSpectrum::from_counts(counts)
        }
        GroupSpec::Dihedral { n } => {
            let mut counts = phi_counts(n);
            counts.push((2, BigUint::from(n)));
            OrderSpectrum::from_counts(counts)
        }
        GroupSpec::GeneralizedQuaternion { n } => {
            let half = 1u64 << (n - 1);
            let mut counts = phi_counts(half);
            counts.push((4, BigUint::from(half)));
            OrderSpectrum::from_counts(counts)
        }
        GroupSpec::Symmetric { n } => symmetric_spectrum(n, limits)?,
    };
    Ok(spectrum)
}

fn symmetric_spectrum(n: u32, limits: &Limits) -> Result<OrderSpectrum> {
    let mut partitions = partitions_of_with(n, limits)?;
    let fact: Vec<BigUint> = (0..=n as u64).map(factorial).collect();
    let n_fact = &fact[n as usize];
    let mut by_order: BTreeMap<u64, BigUint> = BTreeMap::new();
    // Parts arrive in non-increasing order, so equal parts are adjacent.
    while let Some(parts) = partitions.next_parts() {
        let mut order = 1u64;
        let mut denominator = BigUint::one();
        let mut i = 0;
        while i < parts.len() {
            let k = parts[i];
            let run = parts[i..].iter().take_while(|&&x| x == k).count();
            order = checked_lcm(order, k as u64).expect("cycle type order overflows u64");
            denominator *= BigUint::from(k).pow(run as u32) * &fact[run];
            i += run;
        }
        *by_order.entry(order).or_default() += exact_div(n_fact.clone(), &denominator);
    }
    Ok(OrderSpectrum::from_counts(by_order))
}

/// Spectrum by enumerating every element, with default limits.
pub fn spectrum_bruteforce(spec: &GroupSpec) -> Result<OrderSpectrum> {
    spectrum_bruteforce_with(spec, &Limits::default())
}

pub fn spectrum_bruteforce_with(spec: &GroupSpec, limits: &Limits) -> Result<OrderSpectrum> {
    let elements = enumerate_elements_with(spec, limits)?;
    let mut tally: BTreeMap<u64, u64> = BTreeMap::new();
    for x in elements {
        *tally.entry(element_order(&x)).or_insert(0) += 1;
    }
    let spectrum = OrderSpectrum::from_counts(tally.into_iter().map(|(d, c)| (d, BigUint::from(c))));
    debug_assert_eq!(spectrum.total(), &group_order(spec)?);
    Ok(spectrum)
}
