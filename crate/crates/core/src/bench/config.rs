//! Key-value config files for [`BenchConfig`].
//!
//! ```text
//! # lines starting with '#' are comments
//! family = scale-free-dense        # hypercube | scale-free-sparse | scale-free-dense
//! sizes = 64, 256, 1024
//! algorithms = pst, bfs            # default: pst, bfs
//! repetitions = 3                  # default: 1
//! seed = 7                         # default: 0
//! verify = true                    # default: false
//! ```

use std::fs;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use super::{Algorithm, BenchConfig, Family};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing required key {0:?}")]
    Missing(&'static str),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn list<T: FromStr>(value: &str) -> Result<Vec<T>, String>
where
    T::Err: ToString,
{
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<T>()
                .map_err(|e| format!("{s:?}: {}", e.to_string()))
        })
        .collect()
}

impl BenchConfig {
    pub fn parse_kv(text: &str) -> Result<BenchConfig, ConfigError> {
        let mut family = None;
        let mut sizes = None;
        let mut cfg = BenchConfig::new(Family::Hypercube, Vec::new());
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| ConfigError::Parse { line: line_no, msg };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err("expected key = value".into()))?;
            let value = value.trim();
            match key.trim() {
                "family" => family = Some(value.parse::<Family>().map_err(err)?),
                "sizes" => sizes = Some(list::<usize>(value).map_err(err)?),
                "algorithms" => cfg.algorithms = list::<Algorithm>(value).map_err(err)?,
                "repetitions" => {
                    cfg.repetitions = value
                        .parse()
                        .map_err(|e| err(format!("repetitions: {e}")))?
                }
                "seed" => cfg.seed = value.parse().map_err(|e| err(format!("seed: {e}")))?,
                "verify" => cfg.verify = value.parse().map_err(|e| err(format!("verify: {e}")))?,
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        cfg.family = family.ok_or(ConfigError::Missing("family"))?;
        cfg.sizes = sizes.ok_or(ConfigError::Missing("sizes"))?;
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<BenchConfig, ConfigError> {
        BenchConfig::parse_kv(&fs::read_to_string(path)?)
    }
}
