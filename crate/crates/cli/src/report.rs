//! Run reports: a deterministic payload plus a separate metadata block.

use std::time::Duration;

use serde_json::{json, Map, Value};

use auslab_core::smash::{AuslanderReport, GrowthVerdict};
use auslab_core::symmetry::FiniteGroup;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub payload: Value,
    /// Every check in the payload passed.
    pub verified: bool,
    pub elapsed: Duration,
}

impl RunReport {
    /// Everything except timing; identical inputs give identical bytes.
    pub fn deterministic_value(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "engine": { "auslab": env!("CARGO_PKG_VERSION") },
            "command": self.command,
            "inputs": self.inputs,
            "payload": self.payload,
            "status": if self.verified { "ok" } else { "verification_failure" },
        })
    }

    pub fn payload_json(&self) -> String {
        serde_json::to_string_pretty(&self.deterministic_value()).expect("json values serialize")
    }

    /// Full report: the deterministic part plus `metadata.elapsed_ms`.
    pub fn to_json(&self) -> String {
        let mut v = self.deterministic_value();
        if let Value::Object(map) = &mut v {
            map.insert(
                "metadata".into(),
                json!({ "elapsed_ms": self.elapsed.as_millis() as u64 }),
            );
        }
        serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
    }
}

pub fn group_json(group: &FiniteGroup) -> Value {
    let desc = group.describe();
    json!({
        "order": group.order(),
        "descriptor": desc.kind.to_string(),
        "contains_all_vertex_fixing_reflections": desc.contains_all_vertex_fixing_reflections,
        "conductor": group.context().conductor(),
        "elements": group.elements().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn growth_json(g: &GrowthVerdict) -> Value {
    json!({
        "kind": g.kind.to_string(),
        "window": g.window,
        "first_zero_degree": g.first_zero_degree,
        "tail_max": g.tail_max,
        "previous_max": g.previous_max,
        "tail_increment": g.tail_increment,
    })
}

pub fn auslander_json(r: &AuslanderReport) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), json!(r.n));
    m.insert("group_order".into(), json!(r.group_order));
    m.insert("descriptor".into(), json!(r.descriptor.kind.to_string()));
    m.insert(
        "contains_all_vertex_fixing_reflections".into(),
        json!(r.descriptor.contains_all_vertex_fixing_reflections),
    );
    m.insert("max_degree".into(), json!(r.max_degree));
    m.insert("identity_component_dims".into(), json!(r.dims));
    m.insert("growth".into(), growth_json(&r.growth));
    m.insert("pertinency".into(), json!(r.pertinency));
    m.insert("verdict_empirical".into(), json!(r.verdict.to_string()));
    m.insert("verdict_classifier".into(), json!(r.classifier.map(|c| c.to_string())));
    m.insert("agree".into(), json!(r.agree));
    if r.pertinency.is_none() {
        m.insert(
            "advice".into(),
            json!("growth is inconclusive at this cutoff; rerun with a larger --degree"),
        );
    }
    Value::Object(m)
}
