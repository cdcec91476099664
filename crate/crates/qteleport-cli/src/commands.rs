//! Subcommand drivers. Each returns a fully populated report plus the exit
//! code: 0 faithful, 2 probabilistic-but-recoverable, 3 unrecoverable.
//! Usage and contract violations surface as `Err(message)` and exit 64.

use qteleport::error::Error;
use qteleport::extensions::{bell_family, generate_bell_table};
use qteleport::kernel::{
    compose, correction_operator, decompose, is_faithful, project_coefficients,
    teleport_with_tolerance, ChannelMatrix, MeasurementOperator, QuditState,
};
use qteleport::oracle::{build_joint, build_measurement_state, project, MAX_ORACLE_DIM};
use qteleport::sweep::{run_sweep, SweepConfig};

use crate::report::{
    matrix_pairs, to_json, vector_pairs, AnalyzeOutcome, AnalyzeReport, SweepReportJson,
    TableReport, TableRowReport, TeleportOutcomeReport, TeleportReport,
};
use crate::scenario::{MeasurementSpec, Scenario};

pub const EXIT_FAITHFUL: i32 = 0;
pub const EXIT_PROBABILISTIC: i32 = 2;
pub const EXIT_UNRECOVERABLE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OutcomeClass {
    Faithful,
    Probabilistic,
    Unrecoverable,
    Degenerate,
}

impl OutcomeClass {
    fn status(self) -> &'static str {
        match self {
            OutcomeClass::Faithful | OutcomeClass::Probabilistic => "ok",
            OutcomeClass::Unrecoverable => "unrecoverable",
            OutcomeClass::Degenerate => "degenerate",
        }
    }
}

fn classify(classes: &[OutcomeClass]) -> (String, i32) {
    if classes
        .iter()
        .any(|c| matches!(c, OutcomeClass::Unrecoverable | OutcomeClass::Degenerate))
    {
        ("unrecoverable".into(), EXIT_UNRECOVERABLE)
    } else if classes.iter().all(|c| matches!(c, OutcomeClass::Faithful)) {
        ("faithful".into(), EXIT_FAITHFUL)
    } else {
        ("probabilistic".into(), EXIT_PROBABILISTIC)
    }
}

/// Labeled measurement operators for the scenario: the single matrix, or the
/// four Bell operators.
fn measurements(scenario: &Scenario) -> Result<Vec<(String, MeasurementOperator)>, String> {
    match &scenario.measurement {
        MeasurementSpec::Matrix(m) => {
            let op = if scenario.normalize {
                MeasurementOperator::hs_normalized(m.clone())
            } else {
                MeasurementOperator::raw(m.clone())
            }
            .map_err(|e| format!("measurement: {e}"))?;
            Ok(vec![("measurement".into(), op)])
        }
        MeasurementSpec::Bell => Ok(bell_family(scenario.normalize)
            .operators()
            .iter()
            .enumerate()
            .map(|(i, op)| (format!("B{}", i + 1), op.clone()))
            .collect()),
    }
}

fn channel(scenario: &Scenario) -> Result<ChannelMatrix, String> {
    if scenario.normalize {
        ChannelMatrix::hs_normalized(scenario.channel.clone())
    } else {
        ChannelMatrix::raw(scenario.channel.clone())
    }
    .map_err(|e| format!("channel: {e}"))
}

pub fn run_analyze(scenario: &Scenario) -> Result<(String, i32), String> {
    if scenario.channel.max_abs() == 0.0 {
        return Err("channel: all coefficients are zero".into());
    }
    let a = channel(scenario)?;
    let mut outcomes = Vec::new();
    let mut classes = Vec::new();

    for (label, b) in measurements(scenario)? {
        let m = compose(&b, &a).map_err(|e| e.to_string())?;
        let singular_values = m.matrix().singular_values().unwrap_or_default();
        let (outcome, class) = match decompose(&m) {
            Err(_) => (
                AnalyzeOutcome {
                    label,
                    status: OutcomeClass::Degenerate.status().into(),
                    error: Some(Error::DegenerateChannel.to_string()),
                    rho: None,
                    singular_values,
                    faithful: None,
                    x: None,
                    correction: None,
                },
                OutcomeClass::Degenerate,
            ),
            Ok(d) => {
                let faithful = is_faithful(&m, scenario.tolerance);
                match correction_operator(&m) {
                    Ok(u) => (
                        AnalyzeOutcome {
                            label,
                            status: "ok".into(),
                            error: None,
                            rho: Some(d.rho),
                            singular_values,
                            faithful: Some(faithful),
                            x: Some(matrix_pairs(&d.x)),
                            correction: Some(matrix_pairs(&u)),
                        },
                        if faithful {
                            OutcomeClass::Faithful
                        } else {
                            OutcomeClass::Probabilistic
                        },
                    ),
                    Err(e) => (
                        AnalyzeOutcome {
                            label,
                            status: OutcomeClass::Unrecoverable.status().into(),
                            error: Some(e.to_string()),
                            rho: Some(d.rho),
                            singular_values,
                            faithful: Some(faithful),
                            x: Some(matrix_pairs(&d.x)),
                            correction: None,
                        },
                        OutcomeClass::Unrecoverable,
                    ),
                }
            }
        };
        outcomes.push(outcome);
        classes.push(class);
    }

    let (classification, exit_code) = classify(&classes);
    let report = AnalyzeReport {
        command: "analyze",
        dim: scenario.dim,
        tolerance: scenario.tolerance,
        normalized: scenario.normalize,
        classification,
        exit_code,
        outcomes,
    };
    Ok((to_json(&report), exit_code))
}

pub fn run_teleport(scenario: &Scenario) -> Result<(String, i32), String> {
    let state = scenario
        .state
        .as_ref()
        .ok_or("teleport needs a 'state' field in the scenario")?;
    if !scenario.normalize {
        return Err(
            "teleport requires normalization; drop --raw and options.normalize=false".into(),
        );
    }
    if scenario.channel.max_abs() == 0.0 {
        return Err("channel: all coefficients are zero".into());
    }
    let alpha = QuditState::normalized(state.clone()).map_err(|e| format!("state: {e}"))?;
    let a = channel(scenario)?;

    let mut outcomes = Vec::new();
    let mut classes = Vec::new();
    for (label, b) in measurements(scenario)? {
        let m = compose(&b, &a).map_err(|e| e.to_string())?;
        let rho = decompose(&m).ok().map(|d| d.rho);
        let oracle_residual = if scenario.dim <= MAX_ORACLE_DIM {
            let kernel_v = project_coefficients(&m, &alpha).map_err(|e| e.to_string())?;
            let oracle_v = project(
                &build_joint(&alpha, &a).map_err(|e| e.to_string())?,
                &build_measurement_state(&b).map_err(|e| e.to_string())?,
            )
            .map_err(|e| e.to_string())?;
            Some(kernel_v.max_abs_diff(&oracle_v))
        } else {
            None
        };

        let (outcome, class) = match teleport_with_tolerance(&alpha, &a, &b, scenario.tolerance) {
            Ok(result) => {
                let class = if result.faithful {
                    OutcomeClass::Faithful
                } else {
                    OutcomeClass::Probabilistic
                };
                (
                    TeleportOutcomeReport {
                        label,
                        status: "ok".into(),
                        error: None,
                        rho,
                        faithful: Some(result.faithful),
                        outcome_probability: Some(result.outcome_probability),
                        success_probability: Some(result.success_probability),
                        fidelity: Some(result.fidelity),
                        corrected_state: Some(vector_pairs(result.corrected_state.amplitudes())),
                        oracle_residual,
                    },
                    class,
                )
            }
            Err(e @ Error::DegenerateChannel) => (
                TeleportOutcomeReport {
                    label,
                    status: OutcomeClass::Degenerate.status().into(),
                    error: Some(e.to_string()),
                    rho,
                    faithful: None,
                    outcome_probability: None,
                    success_probability: None,
                    fidelity: None,
                    corrected_state: None,
                    oracle_residual,
                },
                OutcomeClass::Degenerate,
            ),
            Err(e @ Error::UnrecoverableOutcome { .. }) => (
                TeleportOutcomeReport {
                    label,
                    status: OutcomeClass::Unrecoverable.status().into(),
                    error: Some(e.to_string()),
                    rho,
                    faithful: None,
                    outcome_probability: None,
                    success_probability: None,
                    fidelity: None,
                    corrected_state: None,
                    oracle_residual,
                },
                OutcomeClass::Unrecoverable,
            ),
            Err(e) => return Err(e.to_string()),
        };
        outcomes.push(outcome);
        classes.push(class);
    }

    let (classification, exit_code) = classify(&classes);
    let report = TeleportReport {
        command: "teleport",
        dim: scenario.dim,
        tolerance: scenario.tolerance,
        normalized: scenario.normalize,
        classification,
        exit_code,
        outcomes,
    };
    Ok((to_json(&report), exit_code))
}

pub fn run_table1() -> (String, i32) {
    let rows: Vec<TableRowReport> = generate_bell_table()
        .into_iter()
        .map(|row| TableRowReport {
            a_index: row.a_index,
            b_index: row.b_index,
            a: matrix_pairs(&row.a),
            b: matrix_pairs(&row.b),
            ba: matrix_pairs(&row.ba),
            ba_t: matrix_pairs(&row.ba_t),
            u: matrix_pairs(&row.u),
            sign_matches_reference: row.sign_matches_reference,
        })
        .collect();
    let sign_deviations = rows.iter().filter(|r| !r.sign_matches_reference).count();
    let report = TableReport {
        command: "table1",
        rows,
        sign_deviations,
    };
    (to_json(&report), EXIT_FAITHFUL)
}

pub fn run_sweep_command(
    seed: u64,
    trials: usize,
    dims: &[usize],
    tolerance: f64,
) -> Result<(String, i32), String> {
    if trials == 0 {
        return Err("sweep needs at least one trial".into());
    }
    if dims.is_empty() {
        return Err("sweep needs at least one dimension".into());
    }
    if let Some(bad) = dims.iter().find(|&&d| !(2..=MAX_ORACLE_DIM).contains(&d)) {
        return Err(format!(
            "sweep dimensions must lie in 2..={MAX_ORACLE_DIM} for oracle cross-checks, got {bad}"
        ));
    }
    let config = SweepConfig {
        seed,
        trials,
        dims: dims.to_vec(),
        tolerance,
    };
    let report = SweepReportJson {
        command: "sweep",
        report: run_sweep(&config),
    };
    Ok((to_json(&report), EXIT_FAITHFUL))
}
