//! Scenario files: JSON with complex numbers as `[re, im]` pairs and
//! matrices as flat row-major pair lists.

use num_complex::Complex64;
use serde::Deserialize;

use qteleport::matrix::{ComplexMatrix, ComplexVector};

/// Largest dimension the engine is sized for.
pub const MAX_DIM: usize = 16;

/// Default predicate tolerance when neither flag nor scenario sets one.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone)]
pub enum MeasurementSpec {
    /// A single measurement outcome matrix.
    Matrix(ComplexMatrix),
    /// The four-operator Bell family (dimension 2 only).
    Bell,
}

/// A validated scenario.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub dim: usize,
    pub state: Option<ComplexVector>,
    pub channel: ComplexMatrix,
    pub measurement: MeasurementSpec,
    pub normalize: bool,
    pub tolerance: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    dim: usize,
    #[serde(default)]
    state: Option<Vec<[f64; 2]>>,
    channel: Vec<[f64; 2]>,
    measurement: RawMeasurement,
    #[serde(default)]
    options: Option<RawOptions>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawMeasurement {
    Keyword(String),
    Matrix(Vec<[f64; 2]>),
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    #[serde(default)]
    normalize: Option<bool>,
    #[serde(default)]
    tolerance: Option<f64>,
}

fn pairs_to_complex(field: &str, pairs: &[[f64; 2]]) -> Result<Vec<Complex64>, String> {
    for (i, [re, im]) in pairs.iter().enumerate() {
        if !re.is_finite() || !im.is_finite() {
            return Err(format!("field '{field}': non-finite number at entry {i}"));
        }
    }
    Ok(pairs.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
}

fn pairs_to_matrix(field: &str, dim: usize, pairs: &[[f64; 2]]) -> Result<ComplexMatrix, String> {
    if pairs.len() != dim * dim {
        return Err(format!(
            "field '{field}': expected {} row-major entries for dim {dim}, got {}",
            dim * dim,
            pairs.len()
        ));
    }
    ComplexMatrix::new(dim, dim, pairs_to_complex(field, pairs)?).map_err(|e| e.to_string())
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<Scenario, String> {
    let raw: RawScenario =
        serde_json::from_str(text).map_err(|e| format!("scenario parse error: {e}"))?;

    if raw.dim == 0 || raw.dim > MAX_DIM {
        return Err(format!(
            "field 'dim': must be between 1 and {MAX_DIM}, got {}",
            raw.dim
        ));
    }

    let channel = pairs_to_matrix("channel", raw.dim, &raw.channel)?;

    let measurement = match raw.measurement {
        RawMeasurement::Keyword(ref word) if word == "bell" => {
            if raw.dim != 2 {
                return Err(format!(
                    "field 'measurement': the bell family needs dim 2, got {}",
                    raw.dim
                ));
            }
            MeasurementSpec::Bell
        }
        RawMeasurement::Keyword(word) => {
            return Err(format!(
                "field 'measurement': unknown keyword '{word}' (expected \"bell\" or a matrix)"
            ));
        }
        RawMeasurement::Matrix(pairs) => {
            MeasurementSpec::Matrix(pairs_to_matrix("measurement", raw.dim, &pairs)?)
        }
    };

    let state = match raw.state {
        None => None,
        Some(pairs) => {
            if pairs.len() != raw.dim {
                return Err(format!(
                    "field 'state': expected {} amplitudes, got {}",
                    raw.dim,
                    pairs.len()
                ));
            }
            Some(
                ComplexVector::new(pairs_to_complex("state", &pairs)?)
                    .map_err(|e| e.to_string())?,
            )
        }
    };

    let options = raw.options.unwrap_or_default();
    let tolerance = options.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(format!(
            "field 'options.tolerance': must be a positive finite number, got {tolerance}"
        ));
    }

    Ok(Scenario {
        dim: raw.dim,
        state,
        channel,
        measurement,
        normalize: options.normalize.unwrap_or(true),
        tolerance,
    })
}
