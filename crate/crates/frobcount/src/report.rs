//! Deterministic report documents: stable JSON schema (keys "verdicts",
//! "counts", "bounds", "witnesses", "warnings") and a human-readable text
//! rendering. The canonical digest excludes the wall-time field, so
//! identical inputs produce byte-identical canonical reports.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub input_digest: String,
    pub verdicts: BTreeMap<String, String>,
    pub counts: BTreeMap<String, u64>,
    #[serde(default)]
    pub bounds: serde_json::Value,
    pub witnesses: BTreeMap<String, String>,
    pub warnings: Vec<String>,
    pub wall_time_ms: u64,
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    format!("{:x}", h.finalize())
}

impl ReportDocument {
    pub fn new(command: &str, input: &[u8]) -> Self {
        ReportDocument {
            command: command.to_string(),
            input_digest: digest_bytes(input),
            bounds: serde_json::Value::Null,
            ..Default::default()
        }
    }

    pub fn verdict(&mut self, key: &str, value: impl std::fmt::Display) {
        self.verdicts.insert(key.to_string(), value.to_string());
    }

    pub fn witness(&mut self, key: &str, value: impl std::fmt::Display) {
        self.witnesses.insert(key.to_string(), value.to_string());
    }

    pub fn set_bounds<T: Serialize>(&mut self, bounds: &T) {
        self.bounds = serde_json::to_value(bounds).expect("bounds serialize");
    }

    /// SHA-256 of the canonical serialization (wall time zeroed).
    pub fn canonical_digest(&self) -> String {
        let mut canon = self.clone();
        canon.wall_time_ms = 0;
        digest_bytes(serde_json::to_string(&canon).expect("report serialize").as_bytes())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("command: {}", self.command));
        line(format!("input-digest: {}", self.input_digest));
        if !self.verdicts.is_empty() {
            line("verdicts:".into());
            for (k, v) in &self.verdicts {
                line(format!("  {k}: {v}"));
            }
        }
        if !self.counts.is_empty() {
            line("counts by dimension:".into());
            for (k, v) in &self.counts {
                line(format!("  d={k}: {v}"));
            }
        }
        match &self.bounds {
            serde_json::Value::Null => {}
            b => {
                line("bounds:".into());
                for l in render_value(b, 1) {
                    line(l);
                }
            }
        }
        if !self.witnesses.is_empty() {
            line("witnesses:".into());
            for (k, v) in &self.witnesses {
                line(format!("  {k}: {v}"));
            }
        }
        if !self.warnings.is_empty() {
            line("warnings:".into());
            for w in &self.warnings {
                line(format!("  {w}"));
            }
        }
        line(format!("wall-time-ms: {}", self.wall_time_ms));
        out
    }

    pub fn emit(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}

fn render_value(v: &serde_json::Value, indent: usize) -> Vec<String> {
    let pad = "  ".repeat(indent);
    match v {
        serde_json::Value::Object(map) => {
            let mut keys: Vec<_> = map.keys().collect();
            keys.sort();
            keys.into_iter()
                .flat_map(|k| {
                    let val = &map[k];
                    if val.is_object() || val.is_array() {
                        let mut lines = vec![format!("{pad}{k}:")];
                        lines.extend(render_value(val, indent + 1));
                        lines
                    } else {
                        vec![format!("{pad}{k}: {val}")]
                    }
                })
                .collect()
        }
        serde_json::Value::Array(items) => items
            .iter()
            .flat_map(|item| {
                if item.is_object() || item.is_array() {
                    let mut lines = vec![format!("{pad}-")];
                    lines.extend(render_value(item, indent + 1));
                    lines
                } else {
                    vec![format!("{pad}- {item}")]
                }
            })
            .collect(),
        other => vec![format!("{pad}{other}")],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReportDocument {
        let mut r = ReportDocument::new("check-system", b"input bytes");
        r.verdict("pseudo_prime", "true");
        r.verdict("intersection_compatible", "false");
        r.witness("offending_sum", "<x + y, y^2>");
        r.counts.insert("0".into(), 1);
        r.counts.insert("1".into(), 2);
        r.counts.insert("2".into(), 1);
        r.wall_time_ms = 17;
        r
    }

    #[test]
    fn digest_ignores_wall_time() {
        let a = sample();
        let mut b = sample();
        b.wall_time_ms = 99_999;
        assert_eq!(a.canonical_digest(), b.canonical_digest());
        let mut c = sample();
        c.verdict("extra", "true");
        assert_ne!(a.canonical_digest(), c.canonical_digest());
    }

    #[test]
    fn json_round_trip() {
        let a = sample();
        let b: ReportDocument = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(a.canonical_digest(), b.canonical_digest());
        assert_eq!(b.witnesses["offending_sum"], "<x + y, y^2>");
    }

    #[test]
    fn json_has_documented_keys() {
        let v: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        for key in ["verdicts", "counts", "bounds", "witnesses", "warnings"] {
            assert!(v.get(key).is_some(), "missing key {key}");
        }
    }

    #[test]
    fn deterministic_emission() {
        assert_eq!(sample().to_json(), sample().to_json());
        assert_eq!(sample().to_text(), sample().to_text());
    }

    #[test]
    fn text_contains_tables() {
        let mut r = sample();
        r.set_bounds(&serde_json::json!({"rows": [{"d": 0, "count": 1, "bound": 1}]}));
        let t = r.to_text();
        assert!(t.contains("counts by dimension:"));
        assert!(t.contains("d=1: 2"));
        assert!(t.contains("bounds:"));
        assert!(t.contains("offending_sum: <x + y, y^2>"));
    }
}
