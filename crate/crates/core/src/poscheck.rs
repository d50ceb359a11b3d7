//! Perfect-order-subset decisions.
//!
//! A group is POS when every order subset, i.e. the set of elements sharing
//! one element order, has a size dividing the group order.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::divides;
use crate::error::{Error, Result};
use crate::groups::{group_order, GroupSpec, Limits};
use crate::spectrum::{spectrum_bruteforce_with, spectrum_closed_form_with, OrderSpectrum};

/// An order subset whose size does not divide the group order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub order: u64,
    #[serde(with = "crate::decimal")]
    pub count: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosVerdict {
    pub is_pos: bool,
    /// Ascending by order.
    pub violations: Vec<Violation>,
    #[serde(with = "crate::decimal")]
    pub group_order: BigUint,
}

impl PosVerdict {
    pub fn from_spectrum(spectrum: &OrderSpectrum, group_order: &BigUint) -> Self {
        let violations: Vec<Violation> = spectrum
            .iter()
            .filter(|(_, c)| !divides(c, group_order))
            .map(|(order, count)| Violation {
                order,
                count: count.clone(),
            })
            .collect();
        PosVerdict {
            is_pos: violations.is_empty(),
            violations,
            group_order: group_order.clone(),
        }
    }

    pub fn violation(&self, order: u64) -> Option<&Violation> {
        self.violations.iter().find(|v| v.order == order)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub limits: Limits,
    /// Also enumerate the group and require both spectra to agree.
    pub cross_check: bool,
}

pub fn check_pos(spec: &GroupSpec) -> Result<PosVerdict> {
    check_pos_with(spec, &CheckOptions::default())
}

/// Decides POS from the closed-form spectrum, falling back to enumeration
/// only when the closed form is unavailable.
pub fn check_pos_with(spec: &GroupSpec, options: &CheckOptions) -> Result<PosVerdict> {
    let spectrum = resolve_spectrum(spec, options)?;
    Ok(PosVerdict::from_spectrum(&spectrum, &group_order(spec)?))
}

/// The spectrum [`check_pos_with`] decides from.
pub fn resolve_spectrum(spec: &GroupSpec, options: &CheckOptions) -> Result<OrderSpectrum> {
    match spectrum_closed_form_with(spec, &options.limits) {
        Ok(closed) => {
            if options.cross_check {
                let brute = spectrum_bruteforce_with(spec, &options.limits)?;
                if brute != closed {
                    return Err(Error::OracleMismatch(spec.to_string()));
                }
            }
            Ok(closed)
        }
        Err(Error::PartitionBoundExceeded { .. }) => spectrum_bruteforce_with(spec, &options.limits),
        Err(e) => Err(e),
    }
}

/// POS verdict for `Dihedral(n)` alongside the power-of-three prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralClassification {
    pub n: u64,
    pub verdict: PosVerdict,
    /// `n = 3^α` for some `α ≥ 1`.
    pub predicted_pos: bool,
}

impl DihedralClassification {
    pub fn agrees(&self) -> bool {
        self.verdict.is_pos == self.predicted_pos
    }
}

pub fn classify_dihedral(n: u64) -> Result<DihedralClassification> {
    let spec = GroupSpec::dihedral(n)?;
    Ok(DihedralClassification {
        n,
        verdict: check_pos(&spec)?,
        predicted_pos: is_power_of_three(n),
    })
}

/// `n = 3^α` with `α ≥ 1`.
pub fn is_power_of_three(mut n: u64) -> bool {
    if n < 3 {
        return false;
    }
    while n.is_multiple_of(3) {
        n /= 3;
    }
    n == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_verdicts() {
        assert!(check_pos(&GroupSpec::symmetric(3).unwrap()).unwrap().is_pos);
        let s4 = check_pos(&GroupSpec::symmetric(4).unwrap()).unwrap();
        assert!(!s4.is_pos);
        assert_eq!(s4.violation(2).unwrap().count, BigUint::from(9u32));
        let c2 = check_pos(&GroupSpec::cyclic(2).unwrap()).unwrap();
        assert!(c2.is_pos && c2.violations.is_empty());
    }

    #[test]
    fn violations_are_ascending_and_genuine() {
        let v = check_pos(&GroupSpec::symmetric(7).unwrap()).unwrap();
        assert!(v.violations.windows(2).all(|w| w[0].order < w[1].order));
        for x in &v.violations {
            assert!(!divides(&x.count, &v.group_order));
        }
    }

    #[test]
    fn dihedral_examples() {
        assert!(classify_dihedral(27).unwrap().verdict.is_pos);
        assert!(!classify_dihedral(6).unwrap().verdict.is_pos);
        let d15 = classify_dihedral(15).unwrap();
        assert!(!d15.verdict.is_pos);
        assert_eq!(d15.verdict.violation(15).unwrap().count, BigUint::from(8u32));
        assert!(classify_dihedral(1).is_err());
    }

    #[test]
    fn cross_check_option() {
        let options = CheckOptions {
            cross_check: true,
            ..CheckOptions::default()
        };
        for spec in [GroupSpec::symmetric(6).unwrap(), GroupSpec::quaternion(6).unwrap()] {
            assert_eq!(check_pos_with(&spec, &options).unwrap(), check_pos(&spec).unwrap());
        }
    }

    #[test]
    fn powers_of_three() {
        let found: Vec<u64> = (0..300).filter(|&n| is_power_of_three(n)).collect();
        assert_eq!(found, vec![3, 9, 27, 81, 243]);
    }
}
