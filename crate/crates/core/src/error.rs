use std::fmt;

/// Errors produced by any module of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A parameter that must be nonzero (`a`, `q`, `h`, or one of the
    /// factors of `L`) was zero. Carries the parameter name.
    ZeroParameter(&'static str),
    /// The order `k` must be a nonzero integer.
    ZeroOrder,
    /// The factor list `L` was empty.
    EmptyFactorList,
    /// A denominator `a + m + i` vanished while the order is positive, or
    /// the prefactor denominator `a + m` vanished while the order is
    /// negative. `index` is the offset `i` at which `a + m + i = 0`.
    Pole { index: i64 },
    /// The requested evaluation is outside the supported parameter range.
    UnsupportedParameter(String),
    /// Series quotient with numerator valuation below the denominator's,
    /// or an identically zero denominator prefix.
    DivisionValuation,
    /// `exp` of a truncated series whose constant term is nonzero.
    NonzeroConstant,
    /// A polynomial-family generating function was requested without an
    /// evaluation point.
    MissingEvaluationPoint,
    /// A rational literal could not be parsed.
    InvalidRational(String),
    /// `verify` was asked for an identity id it does not know.
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroParameter(name) => write!(f, "parameter `{name}` must be nonzero"),
            Error::ZeroOrder => write!(f, "order k must be a nonzero integer"),
            Error::EmptyFactorList => write!(f, "factor list L must be nonempty"),
            Error::Pole { index } => {
                write!(f, "pole: a + m + i vanishes at offset i = {index}")
            }
            Error::UnsupportedParameter(msg) => write!(f, "unsupported parameter: {msg}"),
            Error::DivisionValuation => {
                write!(f, "series quotient needs numerator valuation >= denominator valuation")
            }
            Error::NonzeroConstant => {
                write!(f, "series exponential needs a zero constant term")
            }
            Error::MissingEvaluationPoint => {
                write!(f, "polynomial generating function needs an evaluation point x0")
            }
            Error::InvalidRational(s) => write!(f, "invalid rational literal `{s}`"),
            Error::UnknownIdentity(id) => write!(f, "unknown identity id `{id}`"),
        }
    }
}

impl std::error::Error for Error {}
