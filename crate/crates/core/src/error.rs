use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },

    #[error("group of order {order} exceeds the enumeration budget of {budget} elements")]
    BudgetExceeded { order: String, budget: u64 },

    #[error("n = {n} exceeds the partition bound {bound}")]
    PartitionBoundExceeded { n: u32, bound: u32 },

    #[error("elements belong to different groups: {left} vs {right}")]
    IncompatibleElements { left: String, right: String },

    #[error("malformed element: {0}")]
    MalformedElement(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("closed-form and brute-force spectra disagree for {0}")]
    OracleMismatch(String),

    #[error("no prime in the open interval ({lo}, {hi})")]
    NoPrimeInInterval { lo: u64, hi: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
