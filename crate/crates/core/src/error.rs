use thiserror::Error;

/// Largest multiplicity accepted when building an Apéry table.
pub const MAX_MULTIPLICITY: i64 = 1_000_000;

/// Largest genus the genus tree will descend to.
pub const MAX_ENUMERATION_GENUS: usize = 30;

/// Largest genus accepted by the brute-force enumerator.
pub const MAX_BRUTE_FORCE_GENUS: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generator {0} is not a positive integer")]
    NonPositive(i64),
    #[error("generators have gcd {0}; a numerical semigroup needs gcd 1")]
    NotCoprime(i64),
    #[error("{what} = {value} exceeds the limit {limit}")]
    ResourceLimit {
        what: &'static str,
        value: i64,
        limit: i64,
    },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("operation undefined for the full semigroup N")]
    TrivialSemigroup,
    #[error("ideals live over different semigroups")]
    AmbientMismatch,
    #[error("semigroup {0} is symmetric; Teter theory assumes a non-Gorenstein ring")]
    SymmetricInput(String),
    #[error("parameter violation: {0}")]
    ParameterViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
