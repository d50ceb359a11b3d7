//! Non-POS and POS claims for the `(Z_{2^α})^t`, dihedral and generalized
//! quaternion families.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::divides;
use crate::error::{Error, Result};
use crate::groups::{group_order, GroupSpec};
use crate::poscheck::{check_pos, classify_dihedral, PosVerdict};
use crate::spectrum::{spectrum_bruteforce, spectrum_closed_form};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Z2PowerReport {
    pub alpha: u32,
    pub t: u32,
    /// Elements of maximal order `2^alpha`.
    #[serde(with = "crate::decimal")]
    pub count: BigUint,
    /// `2^((α−1)t) · (2^t − 1)`.
    #[serde(with = "crate::decimal")]
    pub predicted: BigUint,
    #[serde(with = "crate::decimal")]
    pub group_order: BigUint,
    pub count_divides_order: bool,
    pub is_pos: bool,
    /// `None` when the enumeration was not requested.
    pub brute_force_agrees: Option<bool>,
}

impl Z2PowerReport {
    pub fn holds(&self) -> bool {
        self.count == self.predicted
            && !self.count_divides_order
            && !self.is_pos
            && self.brute_force_agrees != Some(false)
    }
}

/// `(Z_{2^α})^t` with `t ≥ 2` has `2^((α−1)t)(2^t − 1)` elements of order
/// `2^α`, a count that cannot divide `2^(αt)`.
pub fn verify_z2_power(alpha: u32, t: u32, cross_check: bool) -> Result<Z2PowerReport> {
    if t < 2 {
        return Err(Error::Domain(format!("t must be at least 2, got {t}")));
    }
    let spec = GroupSpec::z2_power(alpha, t)?;
    let spectrum = spectrum_closed_form(&spec)?;
    let order = group_order(&spec)?;
    let count = spectrum.count_or_zero(1u64 << alpha);
    let predicted = (BigUint::one() << ((alpha as u64 - 1) * t as u64)) * ((BigUint::one() << t) - 1u32);
    let brute_force_agrees = if cross_check {
        Some(spectrum_bruteforce(&spec)? == spectrum)
    } else {
        None
    };
    Ok(Z2PowerReport {
        alpha,
        t,
        count_divides_order: divides(&count, &order),
        is_pos: PosVerdict::from_spectrum(&spectrum, &order).is_pos,
        count,
        predicted,
        group_order: order,
        brute_force_agrees,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralSummary {
    pub n_max: u64,
    /// Values of `n` in `[2, n_max]` with `Dihedral(n)` POS.
    pub pos_values: Vec<u64>,
    /// Values where the verdict and the power-of-three rule disagree.
    pub counterexamples: Vec<u64>,
}

impl DihedralSummary {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// `Dihedral(n)` is POS exactly when `n = 3^α`, `α ≥ 1`, checked over `[2, n_max]`.
pub fn verify_dihedral_range(n_max: u64) -> Result<DihedralSummary> {
    if n_max < 2 {
        return Err(Error::Domain(format!("n_max must be at least 2, got {n_max}")));
    }
    let mut summary = DihedralSummary {
        n_max,
        pos_values: Vec::new(),
        counterexamples: Vec::new(),
    };
    for n in 2..=n_max {
        let c = classify_dihedral(n)?;
        if c.verdict.is_pos {
            summary.pos_values.push(n);
        }
        if !c.agrees() {
            summary.counterexamples.push(n);
        }
    }
    Ok(summary)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuaternionReport {
    pub n: u32,
    #[serde(with = "crate::decimal")]
    pub order4_count: BigUint,
    /// `2^(n−1) + 2`.
    #[serde(with = "crate::decimal")]
    pub expected: BigUint,
    pub is_pos: bool,
    pub brute_force_agrees: Option<bool>,
}

impl QuaternionReport {
    pub fn holds(&self) -> bool {
        self.order4_count == self.expected && !self.is_pos && self.brute_force_agrees != Some(false)
    }
}

/// Order-4 counts and non-POS verdicts of `GeneralizedQuaternion(n)` for `n` in `[n_lo, n_hi]`.
pub fn verify_quaternion_range(n_lo: u32, n_hi: u32, cross_check: bool) -> Result<Vec<QuaternionReport>> {
    if n_lo < 3 || n_lo > n_hi {
        return Err(Error::Domain(format!("need 3 ≤ n_lo ≤ n_hi, got [{n_lo}, {n_hi}]")));
    }
    (n_lo..=n_hi)
        .map(|n| {
            let spec = GroupSpec::quaternion(n)?;
            let spectrum = spectrum_closed_form(&spec)?;
            let brute_force_agrees = if cross_check {
                Some(spectrum_bruteforce(&spec)? == spectrum)
            } else {
                None
            };
            Ok(QuaternionReport {
                n,
                order4_count: spectrum.count_or_zero(4),
                expected: (BigUint::one() << (n - 1)) + 2u32,
                is_pos: check_pos(&spec)?.is_pos,
                brute_force_agrees,
            })
        })
        .collect()
}
