use thiserror::Error;

/// Errors raised by the exact and floating pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("gcd({h}, {k}) = {gcd}, expected coprime arguments")]
    NotCoprime { h: i64, k: i64, gcd: i64 },

    #[error("enumeration of n = {n} exceeds the configured cap of {cap}; use the series path")]
    EnumerationCap { n: u32, cap: u32 },

    #[error("{what} did not converge: {detail}")]
    NonConvergence { what: &'static str, detail: String },

    /// The multiplier ratio landed on the negative real axis. This cannot
    /// happen for odd k and therefore indicates a bug in the phase arithmetic.
    #[error("multiplier ratio for (h, k) = ({h}, {k}) lies on the branch cut")]
    BranchCut { h: i64, k: i64 },

    #[error("Rademacher sum for p({n}) with {terms} terms has rounding residual {residual}")]
    RademacherResidual { n: u64, terms: u64, residual: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
