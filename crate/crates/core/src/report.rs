//! Versioned output records and their table, JSON and CSV renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::ClassificationResult;
use crate::extremal::ExtremalAnswer;
use crate::oracle::{CrossCheckReport, OrbitReport};
use crate::signature::QuotientType;
use crate::surface::{ActionSense, SurfaceTopology};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// One line of `enumerate`: a quotient realizing a surface, with its class count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EnumerationRow {
    pub quotient: QuotientType,
    pub surface: SurfaceTopology,
    pub action: ActionSense,
    pub classes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalComparison {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<ExtremalAnswer>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<ExtremalAnswer>,
    /// Set only when both answers were computed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum Payload {
    Classification(ClassificationResult),
    Enumeration(Vec<EnumerationRow>),
    Orbits(OrbitReport),
    Extremal(ExtremalComparison),
    Verification(CrossCheckReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub result: Payload,
    pub version: String,
}

impl OutputRecord {
    pub fn new(command: &str, parameters: BTreeMap<String, serde_json::Value>, result: Payload) -> Self {
        OutputRecord {
            command: command.to_string(),
            parameters,
            result,
            version: SCHEMA_VERSION.to_string(),
        }
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        // serde_json's Value map is a BTreeMap, so going through it sorts the keys
        let v = serde_json::to_value(self).expect("output records serialize");
        serde_json::to_string_pretty(&v).expect("values serialize")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json() + "\n",
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
        }
    }

    fn rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let surface_cols = |s: &SurfaceTopology, a: &ActionSense| {
            vec![
                s.algebraic_genus.to_string(),
                s.orientable.to_string(),
                s.genus.to_string(),
                s.boundary_count.to_string(),
                s.to_string(),
                a.to_string(),
            ]
        };
        match &self.result {
            Payload::Classification(r) => {
                let header = vec!["quotient", "N", "p", "orientable", "g", "k", "surface", "action", "classes"];
                let rows = r
                    .by_surface()
                    .iter()
                    .map(|((s, a), c)| {
                        let mut row = vec![r.quotient.to_string(), r.order.to_string()];
                        row.extend(surface_cols(s, a));
                        row.push(c.to_string());
                        row
                    })
                    .collect();
                (header, rows)
            }
            Payload::Enumeration(rows) => {
                let header = vec!["quotient", "p", "orientable", "g", "k", "surface", "action", "classes"];
                let rows = rows
                    .iter()
                    .map(|r| {
                        let mut row = vec![r.quotient.to_string()];
                        row.extend(surface_cols(&r.surface, &r.action));
                        row.push(r.classes.to_string());
                        row
                    })
                    .collect();
                (header, rows)
            }
            Payload::Orbits(o) => {
                let header = vec!["representative", "size", "p", "orientable", "g", "k", "surface", "action", "connector orders"];
                let rows = o
                    .orbits
                    .iter()
                    .map(|orb| {
                        let images: Vec<String> = orb
                            .representative
                            .named_images()
                            .iter()
                            .map(|(k, v)| format!("{k}={v}"))
                            .collect();
                        let mut row = vec![images.join(" "), orb.size.to_string()];
                        row.extend(surface_cols(&orb.invariants.surface, &orb.invariants.action));
                        let orders: Vec<String> = orb.invariants.connector_orders.iter().map(u64::to_string).collect();
                        row.push(orders.join(" "));
                        row
                    })
                    .collect();
                (header, rows)
            }
            Payload::Extremal(cmp) => {
                let header = vec!["method", "value", "quotient", "N", "p", "orientable", "g", "k", "surface", "action", "classes"];
                let mut rows = Vec::new();
                for (method, ans) in [("closed", &cmp.closed), ("search", &cmp.search)] {
                    let Some(ans) = ans else { continue };
                    for r in &ans.realizers {
                        let mut row = vec![
                            method.to_string(),
                            ans.value.to_string(),
                            r.quotient.to_string(),
                            r.order.to_string(),
                        ];
                        row.extend(surface_cols(&r.surface, &r.action));
                        row.push(r.classes.to_string());
                        rows.push(row);
                    }
                }
                (header, rows)
            }
            Payload::Verification(v) => {
                let header = vec!["quotient", "N", "oracle", "closed form", "agrees", "counterexample"];
                let rows = v
                    .points
                    .iter()
                    .map(|p| {
                        vec![
                            p.quotient.to_string(),
                            p.order.to_string(),
                            p.oracle_count.to_string(),
                            p.closed_count.to_string(),
                            p.agrees.to_string(),
                            p.counterexample.clone().unwrap_or_default(),
                        ]
                    })
                    .collect();
                (header, rows)
            }
        }
    }

    /// One row per realized surface (or per orbit, realizer, check point).
    pub fn to_csv(&self) -> String {
        let (header, rows) = self.rows();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&header).expect("in-memory csv");
        for r in rows {
            w.write_record(&r).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.summary());
        let (header, mut rows) = self.rows();
        if let Payload::Verification(_) = self.result {
            // a full sweep has thousands of points; show only the failures
            rows.retain(|r| r[4] == "false");
        }
        if rows.is_empty() {
            return out;
        }
        let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let _ = writeln!(out, "{}", line(header.clone()));
        for r in &rows {
            let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
        }
        out
    }

    fn summary(&self) -> String {
        match &self.result {
            Payload::Classification(r) => format!(
                "{} at N = {}: exists = {}, {} class(es)",
                r.quotient, r.order, r.exists, r.class_count
            ),
            Payload::Enumeration(rows) => {
                let total: u64 = rows.iter().map(|r| r.classes).sum();
                format!("{} row(s), {total} class(es)", rows.len())
            }
            Payload::Orbits(o) => format!(
                "{} at N = {}: {} smooth map(s), {} orbit(s)",
                o.quotient, o.order, o.map_count, o.orbit_count
            ),
            Payload::Extremal(cmp) => {
                let mut parts = Vec::new();
                if let Some(a) = &cmp.closed {
                    parts.push(format!("closed form {}", a.value));
                }
                if let Some(a) = &cmp.search {
                    parts.push(format!("search {}", a.value));
                }
                if let Some(agree) = cmp.agree {
                    parts.push(if agree { "match".to_string() } else { "MISMATCH".to_string() });
                }
                parts.join(", ")
            }
            Payload::Verification(v) => {
                let bad = v.mismatches().count();
                format!(
                    "{} point(s) up to N = {}: {}",
                    v.points.len(),
                    v.n_max,
                    if bad == 0 { "pass".to_string() } else { format!("FAIL ({bad} mismatch(es))") }
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;

    fn record() -> OutputRecord {
        let r = classify(QuotientType::Ann2, 6).unwrap();
        let mut params = BTreeMap::new();
        params.insert("N".to_string(), serde_json::json!(6));
        OutputRecord::new("classify", params, Payload::Classification(r))
    }

    #[test]
    fn json_roundtrip() {
        let rec = record();
        let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        assert_eq!(rec.to_json(), record().to_json());
    }

    #[test]
    fn csv_has_one_row_per_surface() {
        let csv = record().to_csv();
        assert_eq!(csv.lines().count(), 1 + 4);
        assert!(csv.starts_with("quotient,N,p,"));
    }
}
