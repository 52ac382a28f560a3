use thiserror::Error;

/// Errors surfaced by the library. Most operations are total on their
/// documented domain; these variants mark the documented boundary.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("gcd of two zero polynomials is undefined")]
    GcdBothZero,

    #[error("closed form in radicals does not apply: {0}")]
    BinetInapplicable(String),

    #[error("exponents must satisfy n > m > k >= 1, got ({0}, {1}, {2})")]
    InvalidExponents(u32, u32, u32),

    #[error("polynomial is constant in the elimination variable")]
    ConstantInEliminationVar,

    #[error("coefficient polynomial is not quadratic in q")]
    NotQuadraticInQ,

    #[error("exponent triple is not handled by this routine: {0}")]
    UnsupportedCase(String),

    #[error("power substitution model needs n > 2m and m >= 1")]
    TModelConstraint,

    #[error("construction needs an even total degree")]
    OddExponent,

    #[error("point does not satisfy the curve equation")]
    OffCurve,

    #[error("curve is singular (discriminant vanishes)")]
    SingularCurve,

    #[error("map is undefined at this argument: {0}")]
    MapUndefined(String),

    #[error("elimination degenerated: resultant vanishes identically and the divisor sweep found no factor candidates")]
    DegenerateElimination,

    #[error("factorization oracle out of range: {0}")]
    OracleOutOfRange(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("table data error: {0}")]
    TableData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
