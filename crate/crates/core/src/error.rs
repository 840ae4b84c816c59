use thiserror::Error;

use crate::Rational;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("inversion of a series with no known nonzero term")]
    InversionOfZero,
    #[error("valuation unknown: every known term cancels below truncation order {0}")]
    ValuationUnknown(Rational),
    #[error("series has a negative leading coefficient, no real square root")]
    NegativeLeading,
    #[error("nested square roots are not supported (radicands {0} and {1})")]
    NestedRadical(Rational, Rational),
    #[error("polynomial is not quadratic in variable {0}")]
    NotQuadratic(usize),
    #[error("size {size} exceeds enumeration bound {bound}")]
    SizeLimit { size: usize, bound: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("tropical rank {0} is larger than 2")]
    RankTooHigh(usize),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("matrix does not have Barvinok rank at most 2")]
    NotBarvinok2,
    #[error("symbic tree is not a caterpillar")]
    NotCaterpillar,
    #[error("matrix does not have (symmetric) tropical rank at most 2")]
    NotRank2,
    #[error("no tie between monomials of opposite sign")]
    SameSigns,
    #[error("tropical determinant minimum is attained only once")]
    NoTie,
    #[error("generic lift degenerated after {0} attempts")]
    DegenerateGeneric(usize),
    #[error("minima of the adjacent principal minors have opposite signs")]
    MinorSignsOpposed,
    #[error("minimizing monomials do not contain a qualifying Newton polytope edge")]
    NotOnEdge,
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
