use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid grid Gr({k},{n}): need 1 <= k < n")]
    InvalidGrid { k: usize, n: usize },

    #[error("invalid Young diagram {rows:?} in a {k}x{cols} grid: {reason}")]
    InvalidDiagram {
        rows: Vec<usize>,
        k: usize,
        cols: usize,
        reason: &'static str,
    },

    #[error("cannot combine elements of Z[zeta_{left}] and Z[zeta_{right}]")]
    OrderMismatch { left: u32, right: u32 },

    #[error("invalid root set: {0}")]
    InvalidRootSet(String),

    #[error("partition {partition:?} has more than {vars} nonzero rows")]
    TooManyRows { partition: Vec<usize>, vars: usize },

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("root set has sign {actual}, expected {expected}")]
    WrongSign { expected: i8, actual: i8 },

    #[error("Laurent polynomials live over different variable registries")]
    RegistryMismatch,

    #[error("variable `{0}` has no image under the substitution")]
    UnmappedVariable(String),

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("object undefined: critical point {0} lies outside the rectangular chart")]
    NotInChart(String),

    #[error("spectral invariant violated: {0}")]
    SpectralInvariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
