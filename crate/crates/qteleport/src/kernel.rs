//! Closed-form teleportation pipeline.
//!
//! A channel with coefficient matrix `A` and a joint measurement with
//! coefficient matrix `B` compose into the map `M = conj(B) * A`. Its
//! transpose carries the input amplitudes to the receiver's unnormalized
//! post-measurement amplitudes. Extracting the largest singular value
//! `rho` leaves `X = M / rho`; teleportation is faithful exactly when `X`
//! is unitary, and the receiver's correction is `U = (X^t)^{-1}`.
//!
//! The entrywise conjugation of `B` realizes the measurement bra. For real
//! measurement matrices it coincides with the plain product `B * A`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ComplexVector};

/// Default tolerance for predicates (faithfulness, unitarity).
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Tolerance for exact algebraic identities (normalization checks).
pub const NORM_TOLERANCE: f64 = 1e-12;

/// A pure state: unit-norm complex amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct QuditState {
    amplitudes: ComplexVector,
}

impl QuditState {
    /// Accepts a vector that is already unit-norm within [`NORM_TOLERANCE`].
    pub fn new(amplitudes: ComplexVector) -> Result<Self> {
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized {
                what: "state amplitudes",
                value: norm,
            });
        }
        Ok(Self { amplitudes })
    }

    /// Normalizes an arbitrary nonzero vector into a state.
    pub fn normalized(amplitudes: ComplexVector) -> Result<Self> {
        Ok(Self {
            amplitudes: amplitudes.normalized()?,
        })
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::new(ComplexVector::new(amplitudes)?)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.dim()
    }

    pub fn amplitudes(&self) -> &ComplexVector {
        &self.amplitudes
    }

    pub fn get(&self, i: usize) -> Complex64 {
        self.amplitudes.get(i)
    }
}

/// Coefficient matrix of the shared entangled channel.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelMatrix {
    matrix: ComplexMatrix,
    normalized: bool,
}

/// Coefficient matrix of the joint measurement outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementOperator {
    matrix: ComplexMatrix,
    normalized: bool,
}

macro_rules! coefficient_matrix_impl {
    ($ty:ident, $what:literal) => {
        impl $ty {
            /// Wraps a raw coefficient matrix without rescaling it.
            pub fn raw(matrix: ComplexMatrix) -> Result<Self> {
                Self::checked(matrix, false)
            }

            /// Rescales to unit Hilbert-Schmidt norm and records the fact.
            pub fn hs_normalized(matrix: ComplexMatrix) -> Result<Self> {
                let norm = matrix.frobenius_norm();
                if norm <= 0.0 {
                    return Err(Error::DegenerateChannel);
                }
                Self::checked(matrix.scale(Complex64::new(1.0 / norm, 0.0)), true)
            }

            /// Accepts a matrix that is already HS-normalized within
            /// [`NORM_TOLERANCE`].
            pub fn checked_normalized(matrix: ComplexMatrix) -> Result<Self> {
                let norm = matrix.frobenius_norm();
                if (norm - 1.0).abs() > NORM_TOLERANCE {
                    return Err(Error::NotNormalized {
                        what: $what,
                        value: norm,
                    });
                }
                Self::checked(matrix, true)
            }

            fn checked(matrix: ComplexMatrix, normalized: bool) -> Result<Self> {
                if !matrix.is_square() {
                    return Err(Error::NotSquare {
                        rows: matrix.rows(),
                        cols: matrix.cols(),
                    });
                }
                Ok(Self { matrix, normalized })
            }

            pub fn matrix(&self) -> &ComplexMatrix {
                &self.matrix
            }

            pub fn dim(&self) -> usize {
                self.matrix.rows()
            }

            pub fn is_normalized(&self) -> bool {
                self.normalized
            }
        }
    };
}

coefficient_matrix_impl!(ChannelMatrix, "channel matrix");
coefficient_matrix_impl!(MeasurementOperator, "measurement operator");

/// The composed map `M = conj(B) * A`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComposedMap {
    matrix: ComplexMatrix,
    normalized_inputs: bool,
}

impl ComposedMap {
    /// Wraps an explicit matrix as a composed map. Probability computations
    /// require maps built by [`compose`] from normalized inputs.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(Self {
            matrix,
            normalized_inputs: false,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn from_normalized_inputs(&self) -> bool {
        self.normalized_inputs
    }
}

/// Scalar/unit-scale split of a composed map: `rho * x = M` with `rho` the
/// largest singular value and `x` of unit spectral norm.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelDecomposition {
    pub rho: f64,
    pub x: ComplexMatrix,
}

/// Result of a full teleportation run for one measurement outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct TeleportOutcome {
    /// Receiver's state after the correction (after a successful filter in
    /// the probabilistic case).
    pub corrected_state: QuditState,
    /// Born probability of this measurement outcome.
    pub outcome_probability: f64,
    /// Joint probability that this outcome occurs and the correction
    /// succeeds. Equals `outcome_probability` when faithful, and the
    /// input-independent filter value `sigma_min(M)^2` otherwise.
    pub success_probability: f64,
    /// Overlap of the corrected state with the input, `|<in|out>|^2`.
    pub fidelity: f64,
    pub faithful: bool,
}

/// Composes measurement and channel into `M = conj(B) * A`.
pub fn compose(b: &MeasurementOperator, a: &ChannelMatrix) -> Result<ComposedMap> {
    if b.dim() != a.dim() {
        return Err(Error::ShapeMismatch {
            op: "compose",
            lhs_rows: b.dim(),
            lhs_cols: b.dim(),
            rhs_rows: a.dim(),
            rhs_cols: a.dim(),
        });
    }
    Ok(ComposedMap {
        matrix: b.matrix().conjugate().mul(a.matrix())?,
        normalized_inputs: a.is_normalized() && b.is_normalized(),
    })
}

/// Receiver's unnormalized post-measurement amplitudes, `v = M^t * alpha`.
pub fn project_coefficients(m: &ComposedMap, alpha: &QuditState) -> Result<ComplexVector> {
    m.matrix().transpose().matvec(alpha.amplitudes())
}

/// Splits `M` into `rho = sigma_max(M)` and `x = M / rho`.
pub fn decompose(m: &ComposedMap) -> Result<ChannelDecomposition> {
    if m.matrix().max_abs() == 0.0 {
        return Err(Error::DegenerateChannel);
    }
    let rho = m.matrix().singular_values()?[0];
    if rho <= 0.0 {
        return Err(Error::DegenerateChannel);
    }
    Ok(ChannelDecomposition {
        rho,
        x: m.matrix().scale(Complex64::new(1.0 / rho, 0.0)),
    })
}

/// True iff `M† M` is proportional to the identity within `tol`,
/// equivalently iff all singular values agree within `tol` relative spread
/// and are nonzero. This is exactly the condition that `X` is unitary.
pub fn is_faithful(m: &ComposedMap, tol: f64) -> bool {
    match m.matrix().singular_values() {
        Ok(sv) => {
            let max = sv[0];
            let min = sv[sv.len() - 1];
            max > 0.0 && (max - min) <= tol * max
        }
        Err(_) => false,
    }
}

/// Receiver's correction `U = rho * (M^t)^{-1} = (X^t)^{-1}`.
///
/// When the map is faithful, `U` is unitary and coincides with `(X^t)†`.
pub fn correction_operator(m: &ComposedMap) -> Result<ComplexMatrix> {
    let decomposition = decompose(m)?;
    let inverse = m.matrix().transpose().inverse().map_err(|e| match e {
        Error::Singular { pivot, .. } => Error::UnrecoverableOutcome { pivot },
        other => other,
    })?;
    Ok(inverse.scale(Complex64::new(decomposition.rho, 0.0)))
}

/// Applies a correction operator to an amplitude vector.
pub fn apply_correction(u: &ComplexMatrix, v: &ComplexVector) -> Result<ComplexVector> {
    u.matvec(v)
}

/// Squared overlap `|<p|q>|^2`; invariant under a global phase of either
/// argument.
pub fn fidelity(p: &QuditState, q: &QuditState) -> Result<f64> {
    Ok(p.amplitudes().inner(q.amplitudes())?.norm_sqr())
}

/// Born probability of the measurement outcome behind `m`: `‖M^t alpha‖^2`.
///
/// Requires `m` to come from HS-normalized channel and measurement, since
/// only then do the squared norms over a complete outcome family sum to one.
pub fn outcome_probability(m: &ComposedMap, alpha: &QuditState) -> Result<f64> {
    if !m.from_normalized_inputs() {
        return Err(Error::NotNormalized {
            what: "composed map inputs (channel and measurement must be HS-normalized)",
            value: f64::NAN,
        });
    }
    Ok(project_coefficients(m, alpha)?.norm_sqr())
}

/// Runs the full pipeline with the default predicate tolerance.
pub fn teleport(
    alpha: &QuditState,
    a: &ChannelMatrix,
    b: &MeasurementOperator,
) -> Result<TeleportOutcome> {
    teleport_with_tolerance(alpha, a, b, DEFAULT_TOLERANCE)
}

/// Runs compose -> decompose -> correction -> application for one outcome.
///
/// Inputs must be normalized. The corrected state is exact for every
/// invertible map; `faithful` records whether the run was deterministic,
/// and `success_probability` applies the probabilistic filter rule when it
/// was not.
pub fn teleport_with_tolerance(
    alpha: &QuditState,
    a: &ChannelMatrix,
    b: &MeasurementOperator,
    tol: f64,
) -> Result<TeleportOutcome> {
    if !a.is_normalized() {
        return Err(Error::NotNormalized {
            what: "channel matrix (HS normalization required for teleport)",
            value: a.matrix().frobenius_norm(),
        });
    }
    if !b.is_normalized() {
        return Err(Error::NotNormalized {
            what: "measurement operator (HS normalization required for teleport)",
            value: b.matrix().frobenius_norm(),
        });
    }
    if alpha.dim() != a.dim() {
        return Err(Error::ShapeMismatch {
            op: "teleport",
            lhs_rows: alpha.dim(),
            lhs_cols: 1,
            rhs_rows: a.dim(),
            rhs_cols: a.dim(),
        });
    }

    let m = compose(b, a)?;
    let v = project_coefficients(&m, alpha)?;
    let outcome_probability = v.norm_sqr();

    let u = correction_operator(&m)?;
    let corrected = apply_correction(&u, &v)?;
    let corrected_state = QuditState::normalized(corrected)?;
    let fidelity = fidelity(&corrected_state, alpha)?;

    let singular = m.matrix().singular_values()?;
    let sigma_max = singular[0];
    let sigma_min = singular[singular.len() - 1];
    let faithful = sigma_max > 0.0 && (sigma_max - sigma_min) <= tol * sigma_max;
    let success_probability = if faithful {
        outcome_probability
    } else {
        sigma_min * sigma_min
    };

    Ok(TeleportOutcome {
        corrected_state,
        outcome_probability,
        success_probability,
        fidelity,
        faithful,
    })
}
