use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller passed arguments outside an operation's domain.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("valuation of zero is +infinity")]
    ZeroValuation,

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A scalar with a denominator divisible by `p` was required in F_p.
    #[error("{what} = {value} is undefined modulo {prime}")]
    DegenerateParams {
        what: String,
        value: String,
        prime: u64,
    },

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}
