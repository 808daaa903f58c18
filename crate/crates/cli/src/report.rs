use anyhow::Result;
use serde::Serialize;

use crate::config::RunConfig;

pub const STATUS_PASS: &str = "pass";
pub const STATUS_FAIL: &str = "fail";

/// Residual recorded when a suite errors out instead of producing a number
/// (for example an under-resolved quadrature rule). JSON cannot carry
/// infinities, so the sentinel is the largest round decimal double.
pub const ERROR_RESIDUAL: f64 = 1.0e308;

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub name: String,
    pub anchor: String,
    pub residual: f64,
    pub tolerance: f64,
    pub status: &'static str,
    pub runtime_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(text)
    }

    pub fn render_csv(&self) -> Result<String> {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        wtr.write_record(["name", "anchor", "residual", "tolerance", "status", "runtime_ms"])?;
        for e in &self.entries {
            wtr.write_record([
                e.name.as_str(),
                e.anchor.as_str(),
                &format!("{:e}", e.residual),
                &format!("{:e}", e.tolerance),
                e.status,
                &format!("{:.3}", e.runtime_ms),
            ])?;
        }
        Ok(String::from_utf8(wtr.into_inner()?)?)
    }

    pub fn render_human(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        out.push_str("quaternionic Segal-Bargmann verification\n");
        out.push_str(&format!(
            "config: nu={} trunc={} gh_nodes={} radial_nodes={} angular={} seed={}\n",
            c.nu, c.truncation, c.gh_nodes, c.radial_nodes, c.angular_count, c.seed
        ));
        if !c.tolerance_overrides.is_empty() {
            let pairs: Vec<String> = c
                .tolerance_overrides
                .iter()
                .map(|(k, v)| format!("{k}={v:e}"))
                .collect();
            out.push_str(&format!("tolerance overrides: {}\n", pairs.join(" ")));
        }
        out.push('\n');

        let name_w = self
            .entries
            .iter()
            .map(|e| e.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        for e in &self.entries {
            out.push_str(&format!(
                "{} {:name_w$}  residual {:>9.3e}  tol {:>7.1e}  {:>8.1} ms  {}\n",
                if e.status == STATUS_PASS { "PASS" } else { "FAIL" },
                e.name,
                e.residual,
                e.tolerance,
                e.runtime_ms,
                e.anchor,
            ));
            if let Some(detail) = &e.detail {
                out.push_str(&format!("     {:name_w$}  {detail}\n", ""));
            }
        }
        let total_ms: f64 = self.entries.iter().map(|e| e.runtime_ms).sum();
        out.push_str(&format!(
            "\n{} passed, {} failed ({:.1} ms total)\n",
            self.summary.passed, self.summary.failed, total_ms
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn sample() -> Report {
        Report {
            config: RunConfig {
                nu: 1.0,
                truncation: 32,
                gh_nodes: 128,
                radial_nodes: 96,
                angular_count: 256,
                seed: 7,
                tolerance_overrides: BTreeMap::new(),
            },
            entries: vec![
                Entry {
                    name: "demo-pass".into(),
                    anchor: "a = b".into(),
                    residual: 1e-15,
                    tolerance: 1e-12,
                    status: STATUS_PASS,
                    runtime_ms: 1.25,
                    detail: None,
                },
                Entry {
                    name: "demo-fail".into(),
                    anchor: "c = d".into(),
                    residual: ERROR_RESIDUAL,
                    tolerance: 1e-9,
                    status: STATUS_FAIL,
                    runtime_ms: 0.5,
                    detail: Some("quadrature under-resolved".into()),
                },
            ],
            summary: Summary {
                passed: 1,
                failed: 1,
            },
        }
    }

    #[test]
    fn json_has_the_contract_fields() {
        let text = sample().render_json().unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(v["config"]["nu"].is_number());
        assert_eq!(v["entries"][0]["name"], "demo-pass");
        assert_eq!(v["entries"][0]["status"], "pass");
        assert!(v["entries"][0]["residual"].is_number());
        assert!(v["entries"][0].get("detail").is_none());
        assert_eq!(v["entries"][1]["detail"], "quadrature under-resolved");
        assert_eq!(v["summary"]["passed"], 1);
        assert_eq!(v["summary"]["failed"], 1);
    }

    #[test]
    fn csv_covers_every_entry() {
        let text = sample().render_csv().unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "name,anchor,residual,tolerance,status,runtime_ms"
        );
        assert_eq!(lines.count(), 2);
    }

    #[test]
    fn human_report_shows_failures() {
        let text = sample().render_human();
        assert!(text.contains("PASS demo-pass"));
        assert!(text.contains("FAIL demo-fail"));
        assert!(text.contains("quadrature under-resolved"));
        assert!(text.contains("1 passed, 1 failed"));
    }
}
