//! `S_n` is not POS for `n ≥ 4`.
//!
//! Small `n` are settled by the order-2 count of the full spectrum. From
//! `n = 8` on, a prime `p` with `⌊n/4⌋ < p < 2⌊n/4⌋` places `n` in exactly one
//! of the shapes `4p`, `3p + r` or `2p + r` with `0 ≤ r < p`, and the matching
//! counting argument shows the order-`p` count does not divide `n!`.

use serde::{Deserialize, Serialize};

use super::lemmas::{verify_lemma, verify_two_blocks, LemmaId, LemmaReport, Outcome};
use super::primes::find_prime_in_interval;
use crate::error::{Error, Result};
use crate::groups::{group_order, GroupSpec};
use crate::poscheck::{PosVerdict, Violation};
use crate::spectrum::spectrum_closed_form;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseAssignment {
    pub n: u64,
    /// `⌊n/4⌋`.
    pub m: u64,
    pub p: u64,
    pub lemma: LemmaId,
    pub r: u64,
}

impl CaseAssignment {
    /// `m < p < 2m`, `0 ≤ r < p`, and `n` recomposes from `(lemma, p, r)`.
    pub fn is_valid(&self) -> bool {
        let recomposed = self.lemma.blocks() * self.p + self.r;
        self.m < self.p
            && self.p < 2 * self.m
            && self.r < self.p
            && recomposed == self.n
            && (self.lemma != LemmaId::FourBlocks || self.r == 0)
    }
}

/// Places `n ≥ 8` into one of the three shapes using the smallest prime in
/// `(⌊n/4⌋, 2⌊n/4⌋)`.
pub fn assign_case(n: u64) -> Result<CaseAssignment> {
    if n < 8 {
        return Err(Error::Domain(format!("case assignment needs n ≥ 8, got {n}")));
    }
    let m = n / 4;
    let p = find_prime_in_interval(m, 2 * m).ok_or(Error::NoPrimeInInterval { lo: m, hi: 2 * m })?;
    let (lemma, r) = if 4 * p <= n {
        // p > ⌊n/4⌋ and p ≤ n/4 force n = 4p.
        (LemmaId::FourBlocks, n - 4 * p)
    } else if 3 * p <= n {
        (LemmaId::ThreeBlocks, n - 3 * p)
    } else {
        (LemmaId::TwoBlocks, n - 2 * p)
    };
    let case = CaseAssignment { n, m, p, lemma, r };
    assert!(case.is_valid(), "invalid case assignment {case:?}");
    Ok(case)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Order-2 count from the full spectrum.
    Spectrum,
    /// The counting argument alone.
    Lemma,
    /// The counting argument is inconclusive; the spectrum supplies the witness.
    LemmaWithSpectrumFallback,
}

/// Evidence that `S_n` is (or, if anything failed, is not shown to be) non-POS.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricVerdict {
    pub n: u64,
    pub route: Route,
    /// `true` when the evidence establishes that `S_n` is not POS.
    pub non_pos_established: bool,
    /// An order subset whose size does not divide `n!`.
    pub witness: Option<Violation>,
    pub case: Option<CaseAssignment>,
    pub report: Option<LemmaReport>,
}

fn spectrum_witness(n: u64, order: u64) -> Result<Option<Violation>> {
    let spec = GroupSpec::symmetric(n as u32)?;
    let spectrum = spectrum_closed_form(&spec)?;
    let verdict = PosVerdict::from_spectrum(&spectrum, &group_order(&spec)?);
    Ok(verdict.violation(order).cloned())
}

fn lemma_witness(report: &LemmaReport) -> Option<Violation> {
    (report.outcome() == Outcome::Confirmed).then(|| Violation {
        order: report.p,
        count: report.d.clone(),
    })
}

/// Assembles the evidence chain showing `S_n` is not POS.
pub fn verify_symmetric_non_pos(n: u64) -> Result<SymmetricVerdict> {
    let verdict = match n {
        0..=3 => return Err(Error::Domain(format!("S_n is POS-checked by this route only for n ≥ 4, got {n}"))),
        4 | 5 => {
            let witness = spectrum_witness(n, 2)?;
            SymmetricVerdict {
                n,
                route: Route::Spectrum,
                non_pos_established: witness.is_some(),
                witness,
                case: None,
                report: None,
            }
        }
        6 | 7 => {
            let report = verify_two_blocks(3, n - 6)?;
            match report.outcome() {
                Outcome::KnownAnomaly => {
                    let witness = spectrum_witness(n, 2)?;
                    SymmetricVerdict {
                        n,
                        route: Route::LemmaWithSpectrumFallback,
                        non_pos_established: witness.is_some(),
                        witness,
                        case: None,
                        report: Some(report),
                    }
                }
                _ => {
                    let witness = lemma_witness(&report);
                    SymmetricVerdict {
                        n,
                        route: Route::Lemma,
                        non_pos_established: witness.is_some(),
                        witness,
                        case: None,
                        report: Some(report),
                    }
                }
            }
        }
        _ => {
            let case = assign_case(n)?;
            let report = verify_lemma(case.lemma, case.p, case.r)?;
            let witness = lemma_witness(&report);
            SymmetricVerdict {
                n,
                route: Route::Lemma,
                non_pos_established: witness.is_some(),
                witness,
                case: Some(case),
                report: Some(report),
            }
        }
    };
    Ok(verdict)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageSummary {
    pub n_lo: u64,
    pub n_hi: u64,
    pub checked: u64,
    pub two_blocks: u64,
    pub three_blocks: u64,
    pub four_blocks: u64,
    /// `n` with no prime in the interval or an invalid assignment.
    pub failures: Vec<u64>,
}

impl CoverageSummary {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.checked == self.n_hi - self.n_lo + 1
    }
}

/// Runs [`assign_case`] over every `n` in `[n_lo, n_hi]`.
pub fn verify_coverage(n_lo: u64, n_hi: u64) -> Result<CoverageSummary> {
    if n_lo < 8 || n_lo > n_hi {
        return Err(Error::Domain(format!("need 8 ≤ n_lo ≤ n_hi, got [{n_lo}, {n_hi}]")));
    }
    let mut summary = CoverageSummary {
        n_lo,
        n_hi,
        checked: 0,
        two_blocks: 0,
        three_blocks: 0,
        four_blocks: 0,
        failures: Vec::new(),
    };
    for n in n_lo..=n_hi {
        summary.checked += 1;
        match assign_case(n) {
            Ok(case) if case.is_valid() => match case.lemma {
                LemmaId::TwoBlocks => summary.two_blocks += 1,
                LemmaId::ThreeBlocks => summary.three_blocks += 1,
                LemmaId::FourBlocks => summary.four_blocks += 1,
            },
            _ => summary.failures.push(n),
        }
    }
    Ok(summary)
}
