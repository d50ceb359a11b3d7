//! Machine checks of the non-POS arguments: family claims, the three
//! order-`p` counting arguments for `S_n`, prime-interval case coverage and
//! Wilson congruences.

pub mod families;
pub mod lemmas;
pub mod primes;
pub mod symmetric;

pub use families::{
    verify_dihedral_range, verify_quaternion_range, verify_z2_power, DihedralSummary, QuaternionReport,
    Z2PowerReport,
};
pub use lemmas::{
    verify_four_blocks, verify_lemma, verify_three_blocks, verify_two_blocks, Fraction, LemmaId,
    LemmaReport, LowerBound, Outcome, ResidueCheck,
};
pub use primes::{factorial_residue, find_prime_in_interval, verify_wilson_range, wilson_check, WilsonSummary};
pub use symmetric::{
    assign_case, verify_coverage, verify_symmetric_non_pos, CaseAssignment, CoverageSummary, Route,
    SymmetricVerdict,
};
