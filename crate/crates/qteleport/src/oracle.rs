//! Brute-force ground truth for the closed-form kernel.
//!
//! Builds the literal three-party joint state (N^3 amplitudes), performs the
//! partial inner product with the measurement state over the first two
//! parties, and corrects the remaining amplitudes. Never the fast path: capped
//! at `N <= 8` and used only to validate the kernel.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::{ChannelMatrix, MeasurementOperator, QuditState};
use crate::matrix::{ComplexMatrix, ComplexVector};

/// Largest per-party dimension the oracle accepts (N^3 <= 512 amplitudes).
pub const MAX_ORACLE_DIM: usize = 8;

/// Full joint state of parties (1, 2, 3), party 3 fastest:
/// index `(i, j, k) -> (i * N + j) * N + k`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointState {
    dim_per_party: usize,
    amplitudes: ComplexVector,
}

impl JointState {
    /// Wraps raw amplitudes (length N^3) without normalization.
    pub fn from_amplitudes(dim_per_party: usize, amplitudes: ComplexVector) -> Result<Self> {
        check_oracle_dim(dim_per_party)?;
        if amplitudes.dim() != dim_per_party.pow(3) {
            return Err(Error::LengthMismatch {
                what: "joint state amplitudes",
                len: amplitudes.dim(),
                expected: dim_per_party.pow(3),
            });
        }
        Ok(Self {
            dim_per_party,
            amplitudes,
        })
    }

    pub fn dim_per_party(&self) -> usize {
        self.dim_per_party
    }

    pub fn amplitudes(&self) -> &ComplexVector {
        &self.amplitudes
    }

    pub fn amplitude(&self, i: usize, j: usize, k: usize) -> Complex64 {
        let n = self.dim_per_party;
        self.amplitudes.get((i * n + j) * n + k)
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }
}

/// Two-party measurement state over parties (1, 2): index `(m, n) -> m * N + n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementState {
    dim_per_party: usize,
    amplitudes: ComplexVector,
}

impl MeasurementState {
    /// Wraps raw amplitudes (length N^2) without normalization.
    pub fn from_amplitudes(dim_per_party: usize, amplitudes: ComplexVector) -> Result<Self> {
        check_oracle_dim(dim_per_party)?;
        if amplitudes.dim() != dim_per_party * dim_per_party {
            return Err(Error::LengthMismatch {
                what: "measurement state amplitudes",
                len: amplitudes.dim(),
                expected: dim_per_party * dim_per_party,
            });
        }
        Ok(Self {
            dim_per_party,
            amplitudes,
        })
    }

    pub fn dim_per_party(&self) -> usize {
        self.dim_per_party
    }

    pub fn amplitudes(&self) -> &ComplexVector {
        &self.amplitudes
    }

    pub fn amplitude(&self, m: usize, n: usize) -> Complex64 {
        self.amplitudes.get(m * self.dim_per_party + n)
    }
}

fn check_oracle_dim(dim: usize) -> Result<()> {
    if dim > MAX_ORACLE_DIM {
        return Err(Error::OracleDimension {
            dim,
            max: MAX_ORACLE_DIM,
        });
    }
    Ok(())
}

/// Joint state of input (party 1) and channel (parties 2, 3):
/// amplitude at `(i, j, k)` is `alpha_i * a_jk`.
pub fn build_joint(alpha: &QuditState, a: &ChannelMatrix) -> Result<JointState> {
    let n = alpha.dim();
    if a.dim() != n {
        return Err(Error::ShapeMismatch {
            op: "build_joint",
            lhs_rows: n,
            lhs_cols: 1,
            rhs_rows: a.dim(),
            rhs_cols: a.dim(),
        });
    }
    check_oracle_dim(n)?;
    let mut data = Vec::with_capacity(n * n * n);
    for i in 0..n {
        let ai = alpha.get(i);
        for j in 0..n {
            for k in 0..n {
                data.push(ai * a.matrix().get(j, k));
            }
        }
    }
    Ok(JointState {
        dim_per_party: n,
        amplitudes: ComplexVector::new(data)?,
    })
}

/// Measurement state over parties (1, 2): amplitude at `(m, n)` is `b_mn`.
pub fn build_measurement_state(b: &MeasurementOperator) -> Result<MeasurementState> {
    let n = b.dim();
    check_oracle_dim(n)?;
    let mut data = Vec::with_capacity(n * n);
    for m in 0..n {
        for j in 0..n {
            data.push(b.matrix().get(m, j));
        }
    }
    Ok(MeasurementState {
        dim_per_party: n,
        amplitudes: ComplexVector::new(data)?,
    })
}

/// Partial inner product `<phi|Psi>` over parties (1, 2): the receiver's
/// unnormalized vector with components
/// `v_k = sum_{i,j} conj(phi(i, j)) * Psi(i, j, k)`.
pub fn project(psi: &JointState, phi: &MeasurementState) -> Result<ComplexVector> {
    let n = psi.dim_per_party;
    if phi.dim_per_party != n {
        return Err(Error::ShapeMismatch {
            op: "oracle projection",
            lhs_rows: n,
            lhs_cols: n,
            rhs_rows: phi.dim_per_party,
            rhs_cols: phi.dim_per_party,
        });
    }
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for i in 0..n {
        for j in 0..n {
            let weight = phi.amplitude(i, j).conj();
            if weight.norm_sqr() == 0.0 {
                continue;
            }
            // Party-3 index is fastest, so this inner loop is contiguous.
            for (k, out_k) in out.iter_mut().enumerate() {
                *out_k += weight * psi.amplitude(i, j, k);
            }
        }
    }
    ComplexVector::new(out)
}

/// Literal end-to-end run: project the joint state, record the outcome
/// probability, apply `u`, and normalize.
pub fn oracle_teleport(
    alpha: &QuditState,
    a: &ChannelMatrix,
    b: &MeasurementOperator,
    u: &ComplexMatrix,
) -> Result<(QuditState, f64)> {
    let joint = build_joint(alpha, a)?;
    let measurement = build_measurement_state(b)?;
    let v = project(&joint, &measurement)?;
    let probability = v.norm_sqr();
    let corrected = u.matvec(&v)?;
    if corrected.norm() <= 1e-12 {
        return Err(Error::UnrecoverableOutcome {
            pivot: corrected.norm(),
        });
    }
    Ok((QuditState::normalized(corrected)?, probability))
}
