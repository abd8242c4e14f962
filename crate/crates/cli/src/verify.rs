//! `verify --suite ...`: self-checks that compare the closed forms with
//! independent computations.

use serde_json::{json, Value};

use auslab_core::invariants::{
    check_orbit_sum_relations, dihedral_invariant_dim, invariant_basis, orbit_block, orbit_of, reynolds,
    vertex_reflection_matrix_dim, Parity, PresentedGroup,
};
use auslab_core::preproj::{check_products_against_oracle, hilbert_from_oracle};
use auslab_core::scalars::Scalar;
use auslab_core::smash::{auslander_verdict, check_certificates, cycle_difference_certificate};
use auslab_core::symmetry::enumerate_subgroups;
use auslab_core::{AlgebraElement, FiniteGroup, NFMonomial, RelationIdealTruncation};

use crate::cli::Suite;
use crate::commands::{quiver, report};
use crate::report::auslander_json;
use crate::{default_degree, ring_default_degree, usage, CliError, Outcome, ORACLE_MAX_DEGREE};

/// Total degree bound for the monomial product comparison.
pub const PRODUCT_CHECK_DEGREE: usize = 8;

pub fn run(suite: Suite, n: usize, degree: Option<usize>) -> Result<Outcome, CliError> {
    quiver(n)?;
    let d = match (degree, suite) {
        (Some(d), _) => d,
        (None, Suite::Smash) => default_degree(4 * n + 4)?,
        (None, _) => ring_default_degree(n)?,
    };
    let (payload, ok) = match suite {
        Suite::Structure => structure(n, d)?,
        Suite::Orbits => orbits(n, d),
        Suite::Relations => relations(n, d),
        Suite::Smash => smash(n, d)?,
    };
    let inputs = json!({ "suite": suite.name(), "n": n, "degree": d });
    Ok(report("verify", inputs, payload, ok))
}

fn structure(n: usize, d: usize) -> Result<(Value, bool), CliError> {
    let q = quiver(n)?;
    let top = d.min(ORACLE_MAX_DEGREE);
    let oracle = RelationIdealTruncation::build(q.clone(), top);
    let dims: Vec<usize> = (0..=top).map(|k| oracle.quotient_dim(k)).collect();
    let dims_ok = dims.iter().enumerate().all(|(k, &x)| x == n * (k + 1));
    let basis_failures: Vec<usize> = (0..=top).filter(|&k| !oracle.normal_forms_form_basis(k)).collect();
    let products = check_products_against_oracle(&oracle, top.min(PRODUCT_CHECK_DEGREE));
    let hilb = hilbert_from_oracle(&oracle);
    let recurrence = hilb.recurrence_failure(&q);
    let discrepancy = hilb.inverse_square_discrepancy(&q);
    let ok = dims_ok && basis_failures.is_empty() && products.is_ok() && recurrence.is_none();
    let payload = json!({
        "oracle_degree": top,
        "dims": dims,
        "dims_match_n_times_d_plus_1": dims_ok,
        "normal_form_basis_failures": basis_failures,
        "products": match &products {
            Ok(pairs) => json!({ "pairs_checked": pairs, "max_total_degree": top.min(PRODUCT_CHECK_DEGREE), "mismatch": null }),
            Err((a, b)) => json!({ "mismatch": [a.to_string(), b.to_string()] }),
        },
        "recurrence": { "holds": recurrence.is_none(), "first_failure": recurrence },
        "inverse_square_series": { "agrees": discrepancy.is_none(), "first_disagreement_degree": discrepancy },
    });
    Ok((payload, ok))
}

/// For one group: orbits match the predicted blocks, averaging a monomial
/// gives its orbit sum over the orbit size, and invariant dims match the
/// closed forms.
fn orbit_checks(g: &FiniteGroup, which: PresentedGroup, d: usize) -> (Value, bool) {
    let n = g.n();
    let ctx = g.context();
    let mut orbit_failures = Vec::new();
    let mut reynolds_failures = Vec::new();
    let mut orbits_seen = 0;
    for k in 0..=d {
        let mut covered = std::collections::BTreeSet::new();
        for m in NFMonomial::of_degree(n, k) {
            let orbit = orbit_of(g, &m).expect("dihedral groups act by permutations");
            let parity = match which {
                PresentedGroup::Dihedral => Parity::All,
                PresentedGroup::VertexReflections if m.source % 2 == 0 => Parity::Even,
                PresentedGroup::VertexReflections => Parity::Odd,
            };
            if orbit != orbit_block(n, m.nonstars, m.stars, parity) {
                orbit_failures.push(m.to_string());
            }
            let avg = reynolds(g, &AlgebraElement::monomial(n, m, Scalar::one(ctx)));
            let expect = AlgebraElement::from_terms(
                n,
                orbit
                    .iter()
                    .map(|o| (*o, Scalar::from_ratio(ctx, 1, orbit.len() as i64))),
            );
            if avg != expect {
                reynolds_failures.push(m.to_string());
            }
            if covered.insert(*orbit.iter().next().expect("orbits are nonempty")) {
                orbits_seen += 1;
            }
        }
    }
    let basis = invariant_basis(g, d);
    let dims = basis.dims();
    let dims_ok = match which {
        PresentedGroup::Dihedral => dims.iter().enumerate().all(|(k, &x)| x == dihedral_invariant_dim(k)),
        PresentedGroup::VertexReflections => (0..=d).all(|k| {
            dims[k] == 2 * dihedral_invariant_dim(k) && basis.parity_block_dims(k) == vertex_reflection_matrix_dim(k)
        }),
    };
    let ok = orbit_failures.is_empty() && reynolds_failures.is_empty() && dims_ok;
    let v = json!({
        "group": which.to_string(),
        "orbits": orbits_seen,
        "orbit_block_failures": orbit_failures,
        "reynolds_failures": reynolds_failures,
        "invariant_dims": dims,
        "closed_form_matches": dims_ok,
    });
    (v, ok)
}

fn orbits(n: usize, d: usize) -> (Value, bool) {
    let mut groups = vec![PresentedGroup::Dihedral];
    if n % 2 == 0 {
        groups.push(PresentedGroup::VertexReflections);
    }
    let mut ok = true;
    let checks: Vec<Value> = groups
        .into_iter()
        .map(|which| {
            let (v, pass) = orbit_checks(&which.group(n), which, d);
            ok &= pass;
            v
        })
        .collect();
    (json!({ "groups": checks }), ok)
}

fn relations(n: usize, d: usize) -> (Value, bool) {
    let rep = check_orbit_sum_relations(n, d);
    let failures: Vec<Value> = rep
        .failures()
        .iter()
        .map(|r| json!({ "name": r.name, "lhs": r.lhs, "rhs": r.rhs }))
        .collect();
    let literal: Vec<Value> = rep
        .literal_discrepancies
        .iter()
        .map(|r| json!({ "name": r.name, "actual": r.lhs, "literal": r.rhs }))
        .collect();
    let payload = json!({
        "checked": rep.checked(),
        "failures": failures,
        "literal_form_discrepancies": literal,
        "all_hold": rep.all_hold(),
    });
    (payload, rep.all_hold())
}

fn smash(n: usize, d: usize) -> Result<(Value, bool), CliError> {
    let subgroups = enumerate_subgroups(n).map_err(|e| usage(e.to_string()))?;
    let mut ok = true;
    let mut rows = Vec::new();
    for (_, g) in &subgroups {
        let rep = auslander_verdict(g, d).map_err(|e| usage(format!("--degree {d}: {e}")))?;
        ok &= rep.agree == Some(true);
        rows.push(auslander_json(&rep));
    }
    let mut presented = vec![PresentedGroup::Dihedral];
    if n % 2 == 0 {
        presented.push(PresentedGroup::VertexReflections);
    }
    let mut special = Vec::new();
    for which in presented {
        let g = which.group(n);
        let rep = auslander_verdict(&g, d).map_err(|e| usage(format!("--degree {d}: {e}")))?;
        let certs = check_certificates(&g, &[cycle_difference_certificate(&g)]).map_err(|e| usage(e.to_string()))?;
        let cert_ok = certs.iter().all(|(_, holds)| *holds);
        let pert_ok = rep.pertinency == Some(1);
        ok &= cert_ok && pert_ok;
        special.push(json!({
            "group": which.to_string(),
            "pertinency": rep.pertinency,
            "pertinency_is_one": pert_ok,
            "certificates": certs.iter().map(|(name, holds)| json!({ "name": name, "in_ideal": holds })).collect::<Vec<_>>(),
        }));
    }
    Ok((json!({ "subgroups": rows, "pertinency_checks": special }), ok))
}
