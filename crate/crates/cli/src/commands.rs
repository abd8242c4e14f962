use std::time::Instant;

use serde_json::{json, Value};

use auslab_core::invariants::{
    dihedral_invariant_dim, invariant_basis, verify_free_module, verify_presentation, verify_shift_summand,
    vertex_reflection_matrix_dim, PresentedGroup,
};
use auslab_core::preproj::hilbert_with_cap;
use auslab_core::smash::{auslander_verdict, default_auslander_degree};
use auslab_core::{parse_group, FiniteGroup, QuiverA};

use crate::cli::Command;
use crate::report::{auslander_json, group_json};
use crate::{ring_default_degree, scan, usage, verify, CliError, Outcome, RunReport, GROUP_CAP, ORACLE_MAX_DEGREE};

pub fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut outcome = match cmd {
        Command::Hilbert { n, degree, matrix, .. } => hilbert(*n, *degree, *matrix)?,
        Command::Invariants {
            n,
            group,
            degree,
            check_presentation,
            check_free_module,
            ..
        } => invariants(*n, group, *degree, *check_presentation, *check_free_module)?,
        Command::Auslander { n, group, degree, .. } => auslander(*n, group, *degree)?,
        Command::Scan { n_list, degree, .. } => scan::run(n_list, *degree)?,
        Command::Verify { suite, n, degree, .. } => verify::run(*suite, *n, *degree)?,
    };
    outcome.report.elapsed = start.elapsed();
    Ok(outcome)
}

pub(crate) fn quiver(n: usize) -> Result<QuiverA, CliError> {
    QuiverA::new(n).map_err(|e| usage(e.to_string()))
}

pub(crate) fn group(text: &str, n: usize) -> Result<FiniteGroup, CliError> {
    quiver(n)?;
    parse_group(text, n, GROUP_CAP).map_err(|e| usage(format!("--group: {e}")))
}

pub(crate) fn report(command: &str, inputs: Value, payload: Value, verified: bool) -> Outcome {
    Outcome {
        report: RunReport {
            command: command.into(),
            inputs,
            payload,
            verified,
            elapsed: Default::default(),
        },
        csv: None,
    }
}

fn hilbert(n: usize, degree: Option<usize>, matrix: bool) -> Result<Outcome, CliError> {
    let q = quiver(n)?;
    let d = match degree {
        Some(d) => d,
        None => ring_default_degree(n)?,
    };
    let rep = hilbert_with_cap(&q, d, ORACLE_MAX_DEGREE);
    let expected: Vec<usize> = (0..=d).map(|k| n * (k + 1)).collect();
    let totals_ok = rep.total == expected;
    let recurrence = rep.recurrence_failure(&q);
    let discrepancy = rep.inverse_square_discrepancy(&q);
    let mut payload = json!({
        "totals": rep.total,
        "totals_match_n_times_d_plus_1": totals_ok,
        "oracle_max_degree": ORACLE_MAX_DEGREE.min(d),
        "recurrence": {
            "relation": "C_d = M C_{d-1} - C_{d-2}",
            "holds": recurrence.is_none(),
            "first_failure": recurrence,
        },
        "inverse_square_series": {
            "agrees": discrepancy.is_none(),
            "first_disagreement_degree": discrepancy,
            "note": "the series (1 - M t)^{-2} is reported for comparison only",
        },
    });
    if matrix {
        payload["matrix"] = json!(rep.matrix);
    }
    let inputs = json!({ "n": n, "degree": d, "matrix": matrix });
    Ok(report("hilbert", inputs, payload, totals_ok && recurrence.is_none()))
}

fn invariants(
    n: usize,
    spec: &str,
    degree: Option<usize>,
    check_presentation: bool,
    check_free_module: bool,
) -> Result<Outcome, CliError> {
    let g = group(spec, n)?;
    let d = match degree {
        Some(d) => d,
        None => ring_default_degree(n)?,
    };
    let presented = PresentedGroup::recognise(&g);
    if (check_presentation || check_free_module) && presented.is_none() {
        return Err(usage("presentation and free-module checks need D_n or W_n (n even)"));
    }
    let basis = invariant_basis(&g, d);
    let dims = basis.dims();
    let mut verified = true;
    let mut payload = json!({ "group": group_json(&g), "dims": dims });

    match presented {
        Some(PresentedGroup::Dihedral) => {
            let expected: Vec<usize> = (0..=d).map(dihedral_invariant_dim).collect();
            let ok = dims == expected;
            verified &= ok;
            payload["closed_form"] = json!({ "series": "1/((1-t)(1-t^2))", "matches": ok });
        }
        Some(PresentedGroup::VertexReflections) => {
            let blocks: Vec<[[usize; 2]; 2]> = (0..=d).map(|k| basis.parity_block_dims(k)).collect();
            let expected: Vec<[[usize; 2]; 2]> = (0..=d).map(vertex_reflection_matrix_dim).collect();
            let totals_ok = dims
                .iter()
                .enumerate()
                .all(|(k, &x)| x == 2 * dihedral_invariant_dim(k));
            let ok = blocks == expected && totals_ok;
            verified &= ok;
            payload["parity_blocks"] = json!(blocks);
            payload["closed_form"] = json!({ "series": "(I - S t)^{-1} (1 - t^2)^{-1}", "matches": ok });
        }
        None => {}
    }
    if n % 2 == 0 && presented != Some(PresentedGroup::VertexReflections) {
        let blocks: Vec<[[usize; 2]; 2]> = (0..=d).map(|k| basis.parity_block_dims(k)).collect();
        payload["parity_blocks"] = json!(blocks);
    }

    if let Some(which) = presented {
        if check_presentation {
            let rep = verify_presentation(n, which, d).map_err(|e| usage(e.to_string()))?;
            let ok = rep.passes(d);
            verified &= ok;
            payload["presentation"] = json!({
                "target": format!("{:?}", rep.target),
                "well_defined": rep.well_defined,
                "bijective_through": rep.degreewise_bijective_through,
                "presentation_dims": rep.presentation_dims,
                "failures": rep.failures.iter().map(|f| json!({"degree": f.degree, "detail": f.detail})).collect::<Vec<_>>(),
                "passes": ok,
            });
        }
        if check_free_module {
            let free = verify_free_module(n, which, d).map_err(|e| usage(e.to_string()))?;
            let shift = verify_shift_summand(n, which, d).map_err(|e| usage(e.to_string()))?;
            let (free_ok, shift_ok) = (free.passes(d), shift.passes(d));
            verified &= free_ok && shift_ok;
            payload["free_module"] = json!({ "passes_through": free.passes_through, "passes": free_ok });
            payload["shift_summand"] = json!({ "passes_through": shift.passes_through, "passes": shift_ok });
        }
    }
    let inputs = json!({
        "n": n,
        "group": spec,
        "degree": d,
        "check_presentation": check_presentation,
        "check_free_module": check_free_module,
    });
    Ok(report("invariants", inputs, payload, verified))
}

fn auslander(n: usize, spec: &str, degree: Option<usize>) -> Result<Outcome, CliError> {
    let g = group(spec, n)?;
    let d = match degree {
        Some(d) => d,
        None => crate::default_degree(default_auslander_degree(&g))?,
    };
    let rep = auslander_verdict(&g, d).map_err(|e| usage(format!("--degree {d}: {e}")))?;
    // A verdict that contradicts the classifier is a verification failure.
    let verified = rep.agree != Some(false);
    let mut payload = auslander_json(&rep);
    payload["group"] = group_json(&g);
    let inputs = json!({ "n": n, "group": spec, "degree": d });
    Ok(report("auslander", inputs, payload, verified))
}
