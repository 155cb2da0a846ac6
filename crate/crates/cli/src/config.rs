//! Optional `key = value` job files. Keys mirror the long flag names;
//! anything given on the command line wins.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};

pub const KEYS: &[&str] = &[
    "torus", "family", "pairs", "labels", "framing", "reversed", "p", "k", "D", "K", "jobs", "out", "cache",
];

pub fn load(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            bail!("line {}: expected key = value", i + 1);
        };
        let k = k.trim();
        if !KEYS.contains(&k) {
            bail!("line {}: unknown key {k:?}", i + 1);
        }
        out.insert(k.to_string(), v.trim().to_string());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_and_comments() {
        let m = parse("# job\ntorus = 2 3 1\npairs = [[[1],[1]]]  # trefoil\n\nD=2\n").unwrap();
        assert_eq!(m["torus"], "2 3 1");
        assert_eq!(m["pairs"], "[[[1],[1]]]");
        assert_eq!(m["D"], "2");
        assert!(parse("bogus = 1").is_err());
        assert!(parse("torus").is_err());
    }
}
