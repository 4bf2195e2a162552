use std::path::Path;

use anyhow::{bail, Context, Result};
use rankmetric::gf::DEFAULT_TABLE_CAP;

use crate::args::{Format, Global};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub cap: u64,
    pub workers: usize,
    pub format: Format,
    pub seed: u64,
    pub early_exit: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cap: DEFAULT_TABLE_CAP,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            format: Format::Text,
            seed: 0,
            early_exit: None,
        }
    }
}

impl RunConfig {
    /// Defaults, then the config file, then flags.
    pub fn resolve(g: &Global) -> Result<Self> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &g.config {
            cfg.apply_file(path)?;
        }
        if let Some(v) = g.cap {
            cfg.cap = v;
        }
        if let Some(v) = g.workers {
            cfg.workers = v;
        }
        if let Some(v) = g.format {
            cfg.format = v;
        }
        if let Some(v) = g.seed {
            cfg.seed = v;
        }
        if g.early_exit.is_some() {
            cfg.early_exit = g.early_exit;
        }
        if cfg.workers == 0 {
            bail!("workers must be at least 1");
        }
        Ok(cfg)
    }

    fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        self.apply_str(&text)
            .with_context(|| format!("in config {}", path.display()))
    }

    pub fn apply_str(&mut self, text: &str) -> Result<()> {
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .with_context(|| format!("line {}: expected key=value", no + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || format!("line {}: bad value {value:?} for {key}", no + 1);
            match key {
                "cap" => self.cap = value.parse().with_context(bad)?,
                "workers" => self.workers = value.parse().with_context(bad)?,
                "seed" => self.seed = value.parse().with_context(bad)?,
                "early_exit" => self.early_exit = Some(value.parse().with_context(bad)?),
                "format" => {
                    self.format = match value {
                        "json" => Format::Json,
                        "text" => Format::Text,
                        _ => bail!(bad()),
                    }
                }
                _ => bail!("line {}: unknown key {key:?}", no + 1),
            }
        }
        Ok(())
    }
}
