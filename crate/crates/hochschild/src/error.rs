use thiserror::Error;

/// Crate-wide error type. Variants are grouped by the layer that raises them.
#[derive(Debug, Error)]
pub enum Error {
    // ---- fields / linear algebra ----------------------------------------
    #[error("characteristic {0} is neither 0 nor a prime")]
    BadField(u64),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("subspace is not contained in the ambient space")]
    SubspaceNotContained,
    #[error("vector does not lie in the expected subspace")]
    NotInSubspace,

    // ---- algebra / bimodule construction ---------------------------------
    #[error("structure constants are not associative: ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("the designated unit is not a two-sided unit (basis index {0})")]
    NoUnit(usize),
    #[error("bad algebra definition: {0}")]
    BadDefinition(String),

    // ---- complexes --------------------------------------------------------
    #[error("space of {entries} entries exceeds the size guard ({guard}); set HH_SIZE_GUARD to raise it")]
    SizeGuardExceeded { entries: usize, guard: usize },
    #[error("bar resolution exactness violated at degree {0} (internal bug)")]
    ExactnessViolation(usize),
    #[error("not a cocycle / cycle where one was required")]
    NotACocycle,

    // ---- chain-level operations -------------------------------------------
    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { index: i64, what: &'static str },
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    // ---- singular cohomology ----------------------------------------------
    #[error("direct system did not stabilize within p_max = {0}")]
    NotStabilized(usize),
    #[error("requested stage {0} not available in the computed direct system")]
    StageOverflow(usize),

    // ---- symmetric forms / BV ----------------------------------------------
    #[error("bilinear form is not symmetric")]
    NotSymmetric,
    #[error("bilinear form is not associative: ({i}, {j}, {k})")]
    FormNotAssociative { i: usize, j: usize, k: usize },
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("cross-check mismatch: {0}")]
    MismatchReport(String),

    // ---- cli ---------------------------------------------------------------
    #[error("unknown identity {0:?}; run `verify --list` for the catalog")]
    UnknownIdentity(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
