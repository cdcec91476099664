//! Seeded random sampling of states, channels, and measurement families.
//!
//! All randomness flows through an explicitly seeded ChaCha8 stream cipher
//! generator, so every suite built on this module is reproducible from its
//! seed. Random unitaries come from orthonormalizing Gaussian matrices.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::kernel::{ChannelMatrix, MeasurementOperator, QuditState};
use crate::matrix::{ComplexMatrix, ComplexVector};

/// Deterministic generator for a given seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent substream of a base seed, used for order-free parallel trials.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn gaussian_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Square matrix with iid standard complex Gaussian entries.
pub fn random_matrix(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let data = (0..dim * dim).map(|_| gaussian_complex(rng)).collect();
    ComplexMatrix::new(dim, dim, data).expect("gaussian entries are finite")
}

/// Haar-like random unitary: Gram-Schmidt applied to a Gaussian matrix.
pub fn random_unitary(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    loop {
        // Rank deficiency has probability zero; retry on numerical bad luck.
        if let Ok(q) = random_matrix(rng, dim).orthonormalized_columns() {
            return q;
        }
    }
}

/// Random unit-norm state.
pub fn random_state(rng: &mut impl Rng, dim: usize) -> QuditState {
    loop {
        let v = ComplexVector::new((0..dim).map(|_| gaussian_complex(rng)).collect())
            .expect("gaussian entries are finite");
        if let Ok(state) = QuditState::normalized(v) {
            return state;
        }
    }
}

/// Random HS-normalized channel with Gaussian coefficients.
pub fn random_channel(rng: &mut impl Rng, dim: usize) -> ChannelMatrix {
    loop {
        if let Ok(a) = ChannelMatrix::hs_normalized(random_matrix(rng, dim)) {
            return a;
        }
    }
}

/// Random HS-normalized measurement operator with Gaussian coefficients.
pub fn random_measurement(rng: &mut impl Rng, dim: usize) -> MeasurementOperator {
    loop {
        if let Ok(b) = MeasurementOperator::hs_normalized(random_matrix(rng, dim)) {
            return b;
        }
    }
}

/// Random faithful pair: unitary coefficient matrices scaled to unit HS norm.
/// Their composition has all singular values equal, so the map is faithful.
pub fn random_faithful_pair(
    rng: &mut impl Rng,
    dim: usize,
) -> (ChannelMatrix, MeasurementOperator) {
    let scale = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
    let a = ChannelMatrix::checked_normalized(random_unitary(rng, dim).scale(scale))
        .expect("scaled unitary has unit HS norm");
    let b = MeasurementOperator::checked_normalized(random_unitary(rng, dim).scale(scale))
        .expect("scaled unitary has unit HS norm");
    (a, b)
}

/// Complete HS-orthonormal measurement family: the dim^2 columns of a random
/// dim^2 x dim^2 unitary, reshaped row-major into dim x dim operators.
pub fn random_orthonormal_family(rng: &mut impl Rng, dim: usize) -> Vec<MeasurementOperator> {
    let big = random_unitary(rng, dim * dim);
    (0..dim * dim)
        .map(|col| {
            let data: Vec<Complex64> = (0..dim * dim).map(|row| big.get(row, col)).collect();
            let matrix = ComplexMatrix::new(dim, dim, data).expect("column has dim^2 entries");
            MeasurementOperator::checked_normalized(matrix)
                .expect("unitary columns have unit norm")
        })
        .collect()
}
