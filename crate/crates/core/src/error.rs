use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division leaves a remainder")]
    NotDivisible,

    #[error("constant term {0} is not a unit in the coefficient ring")]
    NotInvertible(String),

    #[error("polynomial is not symmetric under l1 <-> l2")]
    NotSymmetric,

    #[error("degree d = {0} is even; only odd d is supported")]
    EvenDegree(u32),

    #[error("index out of range: {0}")]
    IndexError(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("coefficient {0} is not an integer")]
    NonIntegral(String),

    #[error("identity violated for d = {d}: {what}")]
    IdentityViolated { d: u32, what: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Rejects even `d`.
pub fn require_odd(d: u32) -> Result<()> {
    if d.is_multiple_of(2) {
        Err(Error::EvenDegree(d))
    } else {
        Ok(())
    }
}
