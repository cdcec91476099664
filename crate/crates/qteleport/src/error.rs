use thiserror::Error;

/// Errors raised by the linear-algebra engine and the teleportation pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("shape mismatch in {op}: {lhs_rows}x{lhs_cols} vs {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("{what}: expected length {expected}, got {len}")]
    LengthMismatch {
        what: &'static str,
        len: usize,
        expected: usize,
    },

    #[error("{what} contains a non-finite entry")]
    NonFinite { what: &'static str },

    #[error("singular matrix: pivot magnitude {pivot:.3e} below threshold {threshold:.3e}")]
    Singular { pivot: f64, threshold: f64 },

    #[error("eigenvalue iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("{what} is not normalized (norm measure {value})")]
    NotNormalized { what: &'static str, value: f64 },

    #[error("degenerate channel: composed map is zero")]
    DegenerateChannel,

    #[error("unrecoverable outcome: composed map is singular (smallest pivot {pivot:.3e})")]
    UnrecoverableOutcome { pivot: f64 },

    #[error("oracle supports dimensions up to {max}, got {dim}")]
    OracleDimension { dim: usize, max: usize },

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
