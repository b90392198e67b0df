use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::args::{Format, NormArg};

/// Defaults read from a TOML `key = value` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub group: Option<String>,
    pub format: Option<Format>,
    pub normalization: Option<NormArg>,
    pub jobs: Option<usize>,
    pub output_dir: Option<PathBuf>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }
}
