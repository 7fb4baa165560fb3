//! Plain key-value configuration files (`key = value`, `#` comments).
//! Command-line flags always override file values.

use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;

use anyhow::{Context, Result};

/// A parsed configuration file.
#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    values: HashMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("cannot parse config {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = HashMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .with_context(|| format!("line {}: expected key = value", idx + 1))?;
            values.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(ConfigFile { values })
    }

    /// Typed lookup; `None` when the key is absent.
    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        match self.values.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|e| anyhow::anyhow!("config key {key}: {e}")),
        }
    }

    pub fn get_raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

/// Flag-over-file precedence helper.
pub fn merge<T>(flag: Option<T>, file: Option<T>) -> Option<T> {
    flag.or(file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::selector::DatasetSelector;

    #[test]
    fn parses_keys_comments_and_blanks() {
        let cfg = ConfigFile::parse(
            "# benchmark defaults\n\ndataset = moon\nseed=42\nreps = 10\nholdout = 0.25\n",
        )
        .unwrap();
        assert_eq!(
            cfg.get::<DatasetSelector>("dataset").unwrap(),
            Some(DatasetSelector::Moon)
        );
        assert_eq!(cfg.get::<u64>("seed").unwrap(), Some(42));
        assert_eq!(cfg.get::<usize>("reps").unwrap(), Some(10));
        assert_eq!(cfg.get::<f64>("holdout").unwrap(), Some(0.25));
        assert_eq!(cfg.get::<u64>("missing").unwrap(), None);
    }

    #[test]
    fn rejects_malformed_lines_and_values() {
        assert!(ConfigFile::parse("just a line\n").is_err());
        let cfg = ConfigFile::parse("seed = notanumber\n").unwrap();
        assert!(cfg.get::<u64>("seed").is_err());
    }

    #[test]
    fn flags_override_file_values() {
        assert_eq!(merge(Some(1u64), Some(2u64)), Some(1));
        assert_eq!(merge(None, Some(2u64)), Some(2));
        assert_eq!(merge::<u64>(None, None), None);
    }
}
