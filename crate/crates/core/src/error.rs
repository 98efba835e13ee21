use thiserror::Error;

/// Errors raised by the library. Every variant names the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial coefficient with negative top argument p = {0}")]
    NegativeBinomialTop(i64),

    #[error("parse error in `{field}`: {message}")]
    Parse { field: String, message: String },

    #[error("invalid `{field}`: {message}")]
    Validation { field: String, message: String },

    #[error("bundle is not flat: euler class is ({m}, {n})")]
    NotFlat { m: String, n: String },

    #[error("modulus n must be nonzero")]
    ZeroModulus,

    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(i64),

    #[error(
        "closed form is not available for n even and m odd (m = {m}, n = {n}); use the coset sum"
    )]
    UnsupportedParity { m: i64, n: i64 },

    #[error("monodromy does not satisfy the surface relation [A1,B1]...[Ag,Bg] = I")]
    NotARepresentation,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
