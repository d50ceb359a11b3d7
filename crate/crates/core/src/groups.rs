//! Supported group families, their elements in normal form, and exact
//! element orders.
//!
//! Permutations compose right to left: `(f·g)(k) = f(g(k))`.
//!
//! Dihedral and generalized quaternion elements are stored as
//! `a^rotation · b^flip`. Rotations and flips of both families obey
//! `b a b⁻¹ = a⁻¹`; in the quaternion group additionally `b² = a^(2^(n−2))`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{checked_lcm, factorial, gcd};
use crate::error::{Error, Result};

/// Largest exponent for which `2^alpha` residues still fit a machine word.
pub const MAX_Z2_ALPHA: u32 = 63;
/// Largest quaternion parameter for which rotation indices fit a machine word.
pub const MAX_QUATERNION_N: u32 = 64;

/// Resource ceilings for enumeration and partition-based spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements any enumeration may produce.
    pub enumeration_budget: u64,
    /// Largest `n` for which partitions of `n` are enumerated.
    pub partition_bound: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_budget: 10_000_000,
            partition_bound: 90,
        }
    }
}

/// One finite group from a supported family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupSpec {
    /// The symmetric group on `n` letters.
    Symmetric { n: u32 },
    /// The cyclic group of order `m`.
    Cyclic { m: u64 },
    /// `(Z_{2^alpha})^t`.
    CyclicPower2Product { alpha: u32, t: u32 },
    /// The dihedral group of order `2n`.
    Dihedral { n: u64 },
    /// The generalized quaternion group of order `2^n`.
    GeneralizedQuaternion { n: u32 },
}

impl GroupSpec {
    pub fn symmetric(n: u32) -> Result<Self> {
        GroupSpec::Symmetric { n }.validated()
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        GroupSpec::Cyclic { m }.validated()
    }

    pub fn z2_power(alpha: u32, t: u32) -> Result<Self> {
        GroupSpec::CyclicPower2Product { alpha, t }.validated()
    }

    pub fn dihedral(n: u64) -> Result<Self> {
        GroupSpec::Dihedral { n }.validated()
    }

    pub fn quaternion(n: u32) -> Result<Self> {
        GroupSpec::GeneralizedQuaternion { n }.validated()
    }

    fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    /// Checks the family's parameter domain.
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| {
            Err(Error::InvalidParameter {
                family: self.family_name(),
                reason,
            })
        };
        match *self {
            GroupSpec::Symmetric { n } if n < 1 => bad("n must be at least 1".into()),
            GroupSpec::Cyclic { m } if m < 1 => bad("m must be at least 1".into()),
            GroupSpec::CyclicPower2Product { alpha, t } => {
                if !(1..=MAX_Z2_ALPHA).contains(&alpha) {
                    bad(format!("alpha must lie in [1, {MAX_Z2_ALPHA}], got {alpha}"))
                } else if t < 1 {
                    bad("t must be at least 1".into())
                } else {
                    Ok(())
                }
            }
            GroupSpec::Dihedral { n } if n < 2 => bad(format!("n must be at least 2, got {n}")),
            GroupSpec::GeneralizedQuaternion { n } if !(3..=MAX_QUATERNION_N).contains(&n) => {
                bad(format!("n must lie in [3, {MAX_QUATERNION_N}], got {n}"))
            }
            _ => Ok(()),
        }
    }

    /// Lower-case family name used on the command line.
    pub fn family_name(&self) -> &'static str {
        match self {
            GroupSpec::Symmetric { .. } => "symmetric",
            GroupSpec::Cyclic { .. } => "cyclic",
            GroupSpec::CyclicPower2Product { .. } => "z2power",
            GroupSpec::Dihedral { .. } => "dihedral",
            GroupSpec::GeneralizedQuaternion { .. } => "quaternion",
        }
    }

    /// Named parameters in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, u64)> {
        match *self {
            GroupSpec::Symmetric { n } => vec![("n", n as u64)],
            GroupSpec::Cyclic { m } => vec![("m", m)],
            GroupSpec::CyclicPower2Product { alpha, t } => {
                vec![("alpha", alpha as u64), ("t", t as u64)]
            }
            GroupSpec::Dihedral { n } => vec![("n", n)],
            GroupSpec::GeneralizedQuaternion { n } => vec![("n", n as u64)],
        }
    }

    /// Order of the rotation subgroup `⟨a⟩` for the two-generator families.
    fn rotation_modulus(&self) -> Option<u64> {
        match *self {
            GroupSpec::Dihedral { n } => Some(n),
            GroupSpec::GeneralizedQuaternion { n } => Some(1u64 << (n - 1)),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::Symmetric { n } => write!(f, "Symmetric({n})"),
            GroupSpec::Cyclic { m } => write!(f, "Cyclic({m})"),
            GroupSpec::CyclicPower2Product { alpha, t } => {
                write!(f, "CyclicPower2Product({alpha}, {t})")
            }
            GroupSpec::Dihedral { n } => write!(f, "Dihedral({n})"),
            GroupSpec::GeneralizedQuaternion { n } => write!(f, "GeneralizedQuaternion({n})"),
        }
    }
}

/// Exact order of the group: `n!`, `m`, `2^(alpha·t)`, `2n` or `2^n`.
pub fn group_order(spec: &GroupSpec) -> Result<BigUint> {
    spec.validate()?;
    Ok(match *spec {
        GroupSpec::Symmetric { n } => factorial(n as u64),
        GroupSpec::Cyclic { m } => BigUint::from(m),
        GroupSpec::CyclicPower2Product { alpha, t } => BigUint::from(1u32) << (alpha as u64 * t as u64),
        GroupSpec::Dihedral { n } => BigUint::from(n) * 2u32,
        GroupSpec::GeneralizedQuaternion { n } => BigUint::from(1u32) << n,
    })
}

/// A permutation of `{0, …, n−1}` stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &k in &images {
            if k >= images.len() || std::mem::replace(&mut seen[k], true) {
                return Err(Error::MalformedElement(format!(
                    "{images:?} is not a permutation of 0..{}",
                    images.len()
                )));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Builds a permutation of `n` letters from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (i, &k) in cycle.iter().enumerate() {
                if k >= n || std::mem::replace(&mut used[k], true) {
                    return Err(Error::MalformedElement(format!(
                        "cycles {cycles:?} are not disjoint cycles on 0..{n}"
                    )));
                }
                images[k] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k]
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&k| self.0[k]).collect())
    }

    /// Cycle lengths, including fixed points, in order of smallest moved letter.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut lengths = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.0[k];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// Lexicographic successor in place; `false` once the last permutation is reached.
    fn advance(images: &mut [usize]) -> bool {
        let n = images.len();
        if n < 2 {
            return false;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| images[i] < images[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
        true
    }

    /// The permutation of lexicographic rank `index` among all permutations of `n` letters.
    fn unrank(n: usize, mut index: u64) -> Permutation {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        for remaining in (1..=n).rev() {
            // (remaining - 1)! fits a u64 whenever n! does.
            let block: u64 = (1..remaining as u64).product();
            let pick = (index / block) as usize;
            index %= block;
            images.push(pool.remove(pick));
        }
        Permutation(images)
    }
}

/// A group element in its family's canonical normal form.
///
/// Each element carries its group's parameters so that products of elements
/// from different groups are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Permutation(Permutation),
    Cyclic { m: u64, residue: u64 },
    CyclicPower2Product { alpha: u32, residues: Vec<u64> },
    Dihedral { n: u64, rotation: u64, flip: bool },
    GeneralizedQuaternion { n: u32, rotation: u64, flip: bool },
}

impl GroupElement {
    pub fn identity(spec: &GroupSpec) -> Result<Self> {
        spec.validate()?;
        Ok(match *spec {
            GroupSpec::Symmetric { n } => GroupElement::Permutation(Permutation::identity(n as usize)),
            GroupSpec::Cyclic { m } => GroupElement::Cyclic { m, residue: 0 },
            GroupSpec::CyclicPower2Product { alpha, t } => GroupElement::CyclicPower2Product {
                alpha,
                residues: vec![0; t as usize],
            },
            GroupSpec::Dihedral { n } => GroupElement::Dihedral {
                n,
                rotation: 0,
                flip: false,
            },
            GroupSpec::GeneralizedQuaternion { n } => GroupElement::GeneralizedQuaternion {
                n,
                rotation: 0,
                flip: false,
            },
        })
    }

    /// `a^rotation · b^flip` in `Dihedral(n)`.
    pub fn dihedral(n: u64, rotation: u64, flip: bool) -> Result<Self> {
        GroupSpec::dihedral(n)?;
        if rotation >= n {
            return Err(Error::MalformedElement(format!("rotation {rotation} not below {n}")));
        }
        Ok(GroupElement::Dihedral { n, rotation, flip })
    }

    /// `a^rotation · b^flip` in `GeneralizedQuaternion(n)`.
    pub fn quaternion(n: u32, rotation: u64, flip: bool) -> Result<Self> {
        GroupSpec::quaternion(n)?;
        let modulus = 1u64 << (n - 1);
        if rotation >= modulus {
            return Err(Error::MalformedElement(format!("rotation {rotation} not below {modulus}")));
        }
        Ok(GroupElement::GeneralizedQuaternion { n, rotation, flip })
    }

    pub fn cyclic(m: u64, residue: u64) -> Result<Self> {
        GroupSpec::cyclic(m)?;
        if residue >= m {
            return Err(Error::MalformedElement(format!("residue {residue} not below {m}")));
        }
        Ok(GroupElement::Cyclic { m, residue })
    }

    pub fn z2_power(alpha: u32, residues: Vec<u64>) -> Result<Self> {
        let t = u32::try_from(residues.len()).unwrap_or(u32::MAX);
        GroupSpec::z2_power(alpha, t)?;
        let modulus = 1u64 << alpha;
        if let Some(bad) = residues.iter().find(|&&x| x >= modulus) {
            return Err(Error::MalformedElement(format!("residue {bad} not below {modulus}")));
        }
        Ok(GroupElement::CyclicPower2Product { alpha, residues })
    }

    pub fn permutation(images: Vec<usize>) -> Result<Self> {
        let perm = Permutation::new(images)?;
        if perm.degree() == 0 {
            return Err(Error::MalformedElement("permutation of zero letters".into()));
        }
        Ok(GroupElement::Permutation(perm))
    }

    /// The group this element belongs to.
    pub fn spec(&self) -> GroupSpec {
        match *self {
            GroupElement::Permutation(ref p) => GroupSpec::Symmetric { n: p.degree() as u32 },
            GroupElement::Cyclic { m, .. } => GroupSpec::Cyclic { m },
            GroupElement::CyclicPower2Product { alpha, ref residues } => GroupSpec::CyclicPower2Product {
                alpha,
                t: residues.len() as u32,
            },
            GroupElement::Dihedral { n, .. } => GroupSpec::Dihedral { n },
            GroupElement::GeneralizedQuaternion { n, .. } => GroupSpec::GeneralizedQuaternion { n },
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Permutation(p) => p.images().iter().enumerate().all(|(i, &k)| i == k),
            GroupElement::Cyclic { residue, .. } => *residue == 0,
            GroupElement::CyclicPower2Product { residues, .. } => residues.iter().all(|&x| x == 0),
            GroupElement::Dihedral { rotation, flip, .. }
            | GroupElement::GeneralizedQuaternion { rotation, flip, .. } => *rotation == 0 && !*flip,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Permutation(p) => write!(f, "{:?}", p.images()),
            GroupElement::Cyclic { residue, .. } => write!(f, "{residue}"),
            GroupElement::CyclicPower2Product { residues, .. } => write!(f, "{residues:?}"),
            GroupElement::Dihedral { rotation, flip, .. }
            | GroupElement::GeneralizedQuaternion { rotation, flip, .. } => {
                write!(f, "({rotation},{})", u8::from(*flip))
            }
        }
    }
}

/// Group product `x · y` in normal form.
pub fn multiply(x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
    use GroupElement as E;
    let mismatch = || Error::IncompatibleElements {
        left: x.spec().to_string(),
        right: y.spec().to_string(),
    };
    match (x, y) {
        (E::Permutation(f), E::Permutation(g)) if f.degree() == g.degree() => {
            Ok(E::Permutation(f.compose(g)))
        }
        (E::Cyclic { m, residue: a }, E::Cyclic { m: m2, residue: b }) if m == m2 => Ok(E::Cyclic {
            m: *m,
            residue: ((*a as u128 + *b as u128) % *m as u128) as u64,
        }),
        (
            E::CyclicPower2Product { alpha, residues: a },
            E::CyclicPower2Product { alpha: alpha2, residues: b },
        ) if alpha == alpha2 && a.len() == b.len() => {
            let mask = (1u64 << alpha) - 1;
            Ok(E::CyclicPower2Product {
                alpha: *alpha,
                residues: a.iter().zip(b).map(|(u, v)| u.wrapping_add(*v) & mask).collect(),
            })
        }
        (
            E::Dihedral { n, rotation: i, flip: e },
            E::Dihedral { n: n2, rotation: j, flip: d },
        ) if n == n2 => {
            let (rotation, flip) = two_generator_product(*n, *i, *e, *j, *d, 0);
            Ok(E::Dihedral { n: *n, rotation, flip })
        }
        (
            E::GeneralizedQuaternion { n, rotation: i, flip: e },
            E::GeneralizedQuaternion { n: n2, rotation: j, flip: d },
        ) if n == n2 => {
            let modulus = 1u64 << (n - 1);
            let (rotation, flip) = two_generator_product(modulus, *i, *e, *j, *d, modulus / 2);
            Ok(E::GeneralizedQuaternion { n: *n, rotation, flip })
        }
        _ => Err(mismatch()),
    }
}

/// `a^i b^e · a^j b^d` under `b a b⁻¹ = a⁻¹` and `b² = a^b_squared`.
fn two_generator_product(modulus: u64, i: u64, e: bool, j: u64, d: bool, b_squared: u64) -> (u64, bool) {
    let m = modulus as u128;
    let (i, j, b2) = (i as u128, j as u128, b_squared as u128);
    match (e, d) {
        (false, _) => (((i + j) % m) as u64, d),
        (true, false) => (((i + m - j) % m) as u64, true),
        (true, true) => (((i + m - j + b2) % m) as u64, false),
    }
}

/// `x^k` by square-and-multiply.
pub fn pow(x: &GroupElement, mut k: u64) -> Result<GroupElement> {
    let mut result = GroupElement::identity(&x.spec())?;
    let mut base = x.clone();
    while k > 0 {
        if k & 1 == 1 {
            result = multiply(&result, &base)?;
        }
        k >>= 1;
        if k > 0 {
            base = multiply(&base, &base)?;
        }
    }
    Ok(result)
}

/// Least `k ≥ 1` with `x^k` the identity.
///
/// # Panics
///
/// If a permutation's order does not fit in a `u64` (degree well above 400).
pub fn element_order(x: &GroupElement) -> u64 {
    match x {
        GroupElement::Permutation(p) => p
            .cycle_lengths()
            .into_iter()
            .try_fold(1u64, |acc, len| checked_lcm(acc, len as u64))
            .expect("permutation order overflows u64"),
        GroupElement::Cyclic { m, residue } => cyclic_order(*m, *residue),
        GroupElement::CyclicPower2Product { alpha, residues } => residues
            .iter()
            .map(|&x| cyclic_order(1u64 << alpha, x))
            .max()
            .unwrap_or(1),
        GroupElement::Dihedral { rotation, flip, .. }
        | GroupElement::GeneralizedQuaternion { rotation, flip, .. } => {
            let modulus = x.spec().rotation_modulus().unwrap();
            if *flip {
                // x ∉ ⟨a⟩ but x² ∈ ⟨a⟩, so o(x) is even and o(x) = 2·o(x²).
                let square = multiply(x, x).expect("same group");
                2 * element_order(&square)
            } else {
                cyclic_order(modulus, *rotation)
            }
        }
    }
}

fn cyclic_order(modulus: u64, residue: u64) -> u64 {
    modulus / gcd(modulus, residue)
}

/// Every element of the group, in a deterministic order, subject to the default budget.
pub fn enumerate_elements(spec: &GroupSpec) -> Result<Elements> {
    enumerate_elements_with(spec, &Limits::default())
}

pub fn enumerate_elements_with(spec: &GroupSpec, limits: &Limits) -> Result<Elements> {
    let order = group_order(spec)?;
    let len = order
        .to_u64()
        .filter(|&len| len <= limits.enumeration_budget)
        .ok_or_else(|| Error::BudgetExceeded {
            order: order.to_string(),
            budget: limits.enumeration_budget,
        })?;
    Ok(Elements {
        spec: *spec,
        next: 0,
        end: len,
        perm: None,
    })
}

/// Restartable indexed sequence over a group's elements.
///
/// Index ranges can be carved out with [`Elements::slice`] and processed
/// independently; [`Elements::element_at`] agrees with iteration order.
#[derive(Debug, Clone)]
pub struct Elements {
    spec: GroupSpec,
    next: u64,
    end: u64,
    perm: Option<Vec<usize>>,
}

impl Elements {
    /// Total number of elements in the group.
    pub fn group_len(&self) -> u64 {
        group_order(&self.spec).unwrap().to_u64().unwrap()
    }

    /// Elements with indices in `start..end`, clamped to the group.
    pub fn slice(&self, start: u64, end: u64) -> Elements {
        let total = self.group_len();
        let end = end.min(total);
        Elements {
            spec: self.spec,
            next: start.min(end),
            end,
            perm: None,
        }
    }

    /// The element at position `index` of the enumeration order.
    pub fn element_at(&self, index: u64) -> Option<GroupElement> {
        if index >= self.group_len() {
            return None;
        }
        Some(match self.spec {
            GroupSpec::Symmetric { n } => GroupElement::Permutation(Permutation::unrank(n as usize, index)),
            GroupSpec::Cyclic { m } => GroupElement::Cyclic { m, residue: index },
            GroupSpec::CyclicPower2Product { alpha, t } => {
                let mask = (1u64 << alpha) - 1;
                let mut residues = vec![0u64; t as usize];
                let mut rest = index;
                for slot in residues.iter_mut().rev() {
                    *slot = rest & mask;
                    rest >>= alpha;
                }
                GroupElement::CyclicPower2Product { alpha, residues }
            }
            GroupSpec::Dihedral { n } => GroupElement::Dihedral {
                n,
                rotation: index % n,
                flip: index >= n,
            },
            GroupSpec::GeneralizedQuaternion { n } => {
                let half = 1u64 << (n - 1);
                GroupElement::GeneralizedQuaternion {
                    n,
                    rotation: index % half,
                    flip: index >= half,
                }
            }
        })
    }
}

impl Iterator for Elements {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        if self.next >= self.end {
            return None;
        }
        let index = self.next;
        self.next += 1;
        if let GroupSpec::Symmetric { .. } = self.spec {
            // Step permutations in place instead of unranking each index.
            if let Some(images) = self.perm.as_mut() {
                Permutation::advance(images);
            } else {
                let GroupElement::Permutation(p) = self.element_at(index)? else {
                    unreachable!()
                };
                self.perm = Some(p.0);
            }
            return Some(GroupElement::Permutation(Permutation(
                self.perm.clone().unwrap(),
            )));
        }
        self.element_at(index)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Elements {}
