use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub eps: f64,
    pub oversample: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { eps: 1e-14, oversample: 16, format: Format::Csv, out: None, jobs: 1 }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1e-15..=1e-6).contains(&self.eps) {
            bail!("--eps must lie in [1e-15, 1e-6], got {:e}", self.eps);
        }
        if self.oversample == 0 {
            bail!("--oversample must be positive");
        }
        if self.jobs == 0 {
            bail!("--jobs must be positive");
        }
        Ok(())
    }

    pub fn scan_config(&self) -> cuspzeros::zeros::ScanConfig {
        cuspzeros::zeros::ScanConfig { oversample: self.oversample, eps: self.eps, ..Default::default() }
    }

    /// Runs `f` on a pool with `jobs` threads.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build()?;
        Ok(pool.install(f))
    }
}

/// An inclusive range of even weights, written `a..b` or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRange {
    pub lo: u32,
    pub hi: u32,
}

impl WeightRange {
    pub fn iter(&self) -> impl Iterator<Item = u32> {
        let lo = self.lo + self.lo % 2;
        (lo..=self.hi).step_by(2)
    }
}

impl FromStr for WeightRange {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a.parse::<u32>()?, b.trim_start_matches('=').parse::<u32>()?),
            None => {
                let v = s.parse::<u32>()?;
                (v, v)
            }
        };
        if lo > hi {
            bail!("empty range {s}");
        }
        Ok(WeightRange { lo, hi })
    }
}

impl fmt::Display for WeightRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Parses `i`, `rho`, `x+yi`, `x-yi`, `yi`, and `x+i`.
pub fn parse_point(s: &str) -> Result<(f64, f64)> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    match t.as_str() {
        "i" => return Ok((0.0, 1.0)),
        "rho" => return Ok((0.5, 3f64.sqrt() / 2.0)),
        _ => {}
    }
    let body = t.strip_suffix('i').ok_or_else(|| anyhow!("point {s} must end in i"))?;
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&p| matches!(bytes[p], b'+' | b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(p) => (&body[..p], &body[p..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        v => v.parse::<f64>()?,
    };
    Ok((re.parse::<f64>()?, im))
}
