//! Exact order spectra of symmetric, cyclic, `(Z_{2^α})^t`, dihedral and
//! generalized quaternion groups, perfect-order-subset (POS) decisions, and
//! machine checks of the counting arguments showing `S_n` is not POS for
//! `n ≥ 4`.

pub mod arith;
pub mod decimal;
pub mod error;
pub mod groups;
pub mod poscheck;
pub mod spectrum;
pub mod theorems;

pub use error::{Error, Result};
pub use groups::{
    element_order, enumerate_elements, enumerate_elements_with, group_order, multiply, GroupElement,
    GroupSpec, Limits, Permutation,
};
pub use poscheck::{check_pos, check_pos_with, classify_dihedral, CheckOptions, PosVerdict, Violation};
pub use spectrum::{
    count_p_products, cycle_type_count, euler_phi, partitions_of, spectrum_bruteforce,
    spectrum_closed_form, CycleType, OrderSpectrum,
};
pub use theorems::{LemmaId, LemmaReport};
