//! `key=value` config files mirroring the command-line flags.

use std::collections::BTreeMap;
use std::path::Path;

pub const KEYS: [&str; 5] = ["case", "k", "max-degree", "format", "weight-pick"];

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Config {
    values: BTreeMap<String, Vec<String>>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Config::parse(&text)
    }

    /// Blank lines and `#` comments are skipped; `weight-pick` may repeat.
    pub fn parse(text: &str) -> Result<Config, String> {
        let mut values: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| format!("config line {}: expected key=value", n + 1))?;
            let k = k.trim().replace('_', "-");
            if !KEYS.contains(&k.as_str()) {
                return Err(format!("config line {}: unknown key `{k}`", n + 1));
            }
            let entry = values.entry(k.clone()).or_default();
            if !entry.is_empty() && k != "weight-pick" {
                return Err(format!("config line {}: `{k}` given twice", n + 1));
            }
            entry.push(v.trim().to_string());
        }
        Ok(Config { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).and_then(|v| v.first()).map(String::as_str)
    }

    pub fn all(&self, key: &str) -> &[String] {
        self.values.get(key).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn parsed<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, String> {
        self.get(key).map(|v| v.parse::<T>().map_err(|_| format!("config: bad value `{v}` for {key}"))).transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let c = Config::parse("# run\ncase = Ak\nk=3\nmax_degree = 9\nweight-pick=d=2\nweight-pick = e=5\n").unwrap();
        assert_eq!(c.get("case"), Some("Ak"));
        assert_eq!(c.parsed::<u32>("k").unwrap(), Some(3));
        assert_eq!(c.parsed::<i64>("max-degree").unwrap(), Some(9));
        assert_eq!(c.all("weight-pick"), ["d=2", "e=5"]);
        assert_eq!(c.get("format"), None);
    }

    #[test]
    fn parse_errors() {
        assert!(Config::parse("case").is_err());
        assert!(Config::parse("colour=red").is_err());
        assert!(Config::parse("k=1\nk=2").is_err());
        assert!(Config::parse("k=x").unwrap().parsed::<u32>("k").is_err());
    }
}
