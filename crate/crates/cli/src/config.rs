use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use serde::Serialize;

/// Shared numeric configuration, echoed verbatim into every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub nu: f64,
    pub truncation: usize,
    pub gh_nodes: usize,
    pub radial_nodes: usize,
    pub angular_count: usize,
    pub seed: u64,
    pub tolerance_overrides: BTreeMap<String, f64>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.nu > 0.0 && self.nu.is_finite()) {
            bail!("--nu must be a positive finite number, got {}", self.nu);
        }
        if self.truncation == 0 {
            bail!("--trunc must be at least 1");
        }
        if self.gh_nodes == 0 || self.gh_nodes > qsb_core::MAX_NODES {
            bail!(
                "--gh-nodes must be between 1 and {}, got {}",
                qsb_core::MAX_NODES,
                self.gh_nodes
            );
        }
        if self.radial_nodes == 0 || self.radial_nodes > qsb_core::MAX_NODES {
            bail!(
                "--radial-nodes must be between 1 and {}, got {}",
                qsb_core::MAX_NODES,
                self.radial_nodes
            );
        }
        if self.angular_count < 2 {
            bail!("--angular must be at least 2, got {}", self.angular_count);
        }
        for (name, tol) in &self.tolerance_overrides {
            if !(tol > &0.0 && tol.is_finite()) {
                bail!("tolerance override for {name} must be positive and finite");
            }
        }
        Ok(())
    }
}

/// Parses repeatable `--tol suite=value` pairs.
pub fn parse_tolerance_overrides(raw: &[String]) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for item in raw {
        let (name, value) = item
            .split_once('=')
            .with_context(|| format!("--tol takes SUITE=VALUE, got {item:?}"))?;
        let value: f64 = value
            .trim()
            .parse()
            .with_context(|| format!("--tol {item:?}: value is not a number"))?;
        out.insert(name.trim().to_string(), value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> RunConfig {
        RunConfig {
            nu: 1.0,
            truncation: 32,
            gh_nodes: 128,
            radial_nodes: 96,
            angular_count: 256,
            seed: 0,
            tolerance_overrides: BTreeMap::new(),
        }
    }

    #[test]
    fn default_shape_validates() {
        assert!(base().validate().is_ok());
    }

    #[test]
    fn rejects_bad_nu() {
        let mut c = base();
        c.nu = 0.0;
        assert!(c.validate().is_err());
        c.nu = f64::NAN;
        assert!(c.validate().is_err());
    }

    #[test]
    fn parses_overrides() {
        let raw = vec!["hermite-norms=1e-6".to_string(), "action-lemma=0.5".to_string()];
        let parsed = parse_tolerance_overrides(&raw).unwrap();
        assert_eq!(parsed["hermite-norms"], 1e-6);
        assert_eq!(parsed["action-lemma"], 0.5);
        assert!(parse_tolerance_overrides(&["oops".to_string()]).is_err());
        assert!(parse_tolerance_overrides(&["a=b".to_string()]).is_err());
    }
}
