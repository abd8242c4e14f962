//! Verdicts over every subgroup of `D_n` for a list of `n`.

use rayon::prelude::*;
use serde_json::{json, Value};

use auslab_core::smash::{auslander_verdict, AuslanderReport};
use auslab_core::symmetry::enumerate_subgroups;

use crate::commands::{quiver, report};
use crate::report::auslander_json;
use crate::{default_degree, usage, CliError, Outcome};

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "subgroup_descriptor",
    "order",
    "contains_all_vertex_fixing_reflections",
    "first_zero_degree",
    "growth_kind",
    "pertinency",
    "verdict_empirical",
    "verdict_classifier",
    "agree",
];

pub fn run(n_list: &[usize], degree: Option<usize>) -> Result<Outcome, CliError> {
    if n_list.is_empty() {
        return Err(usage("--n-list is empty"));
    }
    let mut jobs = Vec::new();
    for &n in n_list {
        quiver(n)?;
        let d = match degree {
            Some(d) => d,
            None => default_degree(4 * n + 4)?,
        };
        for (_, g) in enumerate_subgroups(n).map_err(|e| usage(e.to_string()))? {
            jobs.push((n, d, g));
        }
    }
    let rows: Vec<AuslanderReport> = jobs
        .par_iter()
        .map(|(_, d, g)| auslander_verdict(g, *d))
        .collect::<Result<_, _>>()
        .map_err(|e| usage(format!("--degree: {e}")))?;

    let verified = rows.iter().all(|r| r.agree == Some(true));
    let per_n: Vec<Value> = n_list
        .iter()
        .map(|&n| {
            let of_n: Vec<&AuslanderReport> = rows.iter().filter(|r| r.n == n).collect();
            json!({
                "n": n,
                "subgroups": of_n.len(),
                "not_iso": of_n.iter().filter(|r| r.verdict.to_string() == "NotIso").count(),
            })
        })
        .collect();
    let payload = json!({
        "rows": rows.iter().map(auslander_json).collect::<Vec<_>>(),
        "summary": per_n,
        "all_agree": verified,
    });
    let inputs = json!({ "n_list": n_list, "degree": degree, "all_dihedral_subgroups": true });
    let mut out = report("scan", inputs, payload, verified);
    out.csv = Some(csv_table(&rows)?);
    Ok(out)
}

pub fn csv_row(r: &AuslanderReport) -> [String; 10] {
    [
        r.n.to_string(),
        r.descriptor.kind.to_string(),
        r.group_order.to_string(),
        r.descriptor.contains_all_vertex_fixing_reflections.to_string(),
        r.growth.first_zero_degree.map_or("-1".to_string(), |d| d.to_string()),
        r.growth.kind.to_string(),
        r.pertinency.map_or(String::new(), |p| p.to_string()),
        r.verdict.to_string(),
        r.classifier.map_or(String::new(), |c| c.to_string()),
        r.agree.map_or(String::new(), |a| a.to_string()),
    ]
}

fn csv_table(rows: &[AuslanderReport]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record(csv_row(r))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
