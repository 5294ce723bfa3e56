//! Parameter grids for `sweep`: `key=range` flags and config files.
//!
//! A range is `lo..hi` (inclusive), optionally `lo..hi:step`, a single
//! value, or a comma list. Config files hold one `key = value` per line;
//! `#` starts a comment. The keys `identity` and `method` are taken as
//! settings, everything else as a grid axis.

use std::collections::BTreeMap;

use crate::CliError;

pub type Params = BTreeMap<String, usize>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepSpec {
    pub identity: Option<String>,
    pub method: Option<String>,
    pub axes: BTreeMap<String, Vec<usize>>,
}

impl SweepSpec {
    pub fn parse_config(text: &str) -> Result<Self, CliError> {
        let mut spec = SweepSpec::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("config line {}: expected key = value", lineno + 1)))?;
            spec.set(key.trim(), value.trim())?;
        }
        Ok(spec)
    }

    /// Applies one `key=value` assignment; later assignments win.
    pub fn assign(&mut self, assignment: &str) -> Result<(), CliError> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("expected key=range, got {assignment:?}")))?;
        self.set(key.trim(), value.trim())
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "identity" => self.identity = Some(value.to_string()),
            "method" => self.method = Some(value.to_string()),
            _ => {
                self.axes.insert(key.to_string(), parse_range(value)?);
            }
        }
        Ok(())
    }

    /// Every point of the grid, in lexicographic order of the values taken
    /// along the alphabetically sorted axes.
    pub fn tuples(&self) -> Vec<Params> {
        let mut out = vec![Params::new()];
        for (key, values) in &self.axes {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    values.iter().map(move |&v| {
                        let mut p = prefix.clone();
                        p.insert(key.clone(), v);
                        p
                    })
                })
                .collect();
        }
        out
    }
}

pub fn parse_range(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::usage(format!("bad range {text:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if let Some((range, step)) = text.split_once(':') {
        let step = num(step)?;
        if step == 0 {
            return Err(bad());
        }
        let mut values = parse_range(range)?;
        let first = *values.first().ok_or_else(bad)?;
        values.retain(|v| (v - first) % step == 0);
        return Ok(values);
    }
    if let Some((lo, hi)) = text.split_once("..") {
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    text.split(',').map(num).collect()
}
