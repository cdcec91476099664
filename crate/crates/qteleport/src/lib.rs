//! Simulator for qudit teleportation over generally entangled channels in
//! matrix notation.
//!
//! The channel shared by sender and receiver is a coefficient matrix `A`;
//! the sender's joint measurement outcome is a coefficient matrix `B`. Their
//! composition `M = conj(B) * A` fully determines the protocol: its transpose
//! maps input amplitudes to the receiver's post-measurement amplitudes,
//! its largest singular value is the outcome's probability amplitude scale,
//! and the receiver's correction is the inverse transpose of the unit-scale
//! part. Teleportation is deterministic ("faithful") exactly when all
//! singular values of `M` coincide.
//!
//! Modules:
//! - [`matrix`]: dense complex linear algebra sized for dimension <= 16.
//! - [`kernel`]: the closed-form pipeline (compose, decompose, correct).
//! - [`oracle`]: brute-force three-party state-vector ground truth.
//! - [`extensions`]: Bell table, rotation family, GHZ channels, filtering,
//!   and dimension-mismatch embedding.
//! - [`random`]: seeded ChaCha8 sampling of states and operators.
//! - [`sweep`]: batch randomized validation runs (rayon-parallel by default,
//!   sequential without the `parallel` feature).

pub mod error;
pub mod extensions;
pub mod kernel;
pub mod matrix;
pub mod oracle;
pub mod random;
pub mod sweep;

pub use error::{Error, Result};
pub use kernel::{
    apply_correction, compose, correction_operator, decompose, fidelity, is_faithful,
    outcome_probability, project_coefficients, teleport, teleport_with_tolerance,
    ChannelDecomposition, ChannelMatrix, ComposedMap, MeasurementOperator, QuditState,
    TeleportOutcome, DEFAULT_TOLERANCE,
};
pub use matrix::{ComplexMatrix, ComplexVector};
