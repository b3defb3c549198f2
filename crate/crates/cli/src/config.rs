use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use theta_lift::combinatorics::DualPair;
use theta_lift::{Error, Result};

/// key = value settings read from a file; command-line flags take precedence.
#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config line {}: expected key=value", i + 1)))?;
            values.insert(k.trim().replace('-', "_"), v.trim().trim_matches('"').to_string());
        }
        Ok(ConfigFile { values })
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::Parse(format!("config value {key} = {v:?} is not valid"))),
        }
    }

    /// Flag value if given, else the config value, else `default`.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str, default: T) -> Result<T> {
        match flag {
            Some(v) => Ok(v),
            None => Ok(self.get(key)?.unwrap_or(default)),
        }
    }

    pub fn pick_opt<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.get(key),
        }
    }
}

/// Builds a pair from its kind name and parameters, validating the stable range.
pub fn make_pair(kind: &str, p: Option<usize>, q: Option<usize>, m: Option<usize>, n: Option<usize>) -> Result<DualPair> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Error::InvalidInput(format!("missing --{name}")));
    match kind.to_ascii_lowercase().as_str() {
        "osp" => DualPair::osp(need(p, "p")?, need(q, "q")?, need(n, "n")?),
        "uu" => DualPair::uu(need(p, "p")?, need(q, "q")?, need(m, "m")?, need(n, "n")?),
        "spostar" | "sp-ostar" | "sp_ostar" => DualPair::sp_ostar(need(p, "p")?, need(q, "q")?, need(n, "n")?),
        other => Err(Error::InvalidInput(format!("unknown pair kind {other:?} (osp, uu, spostar)"))),
    }
}

/// Parses "osp:3,3,1", "uu:2,2,1,1" or "spostar:2,2,1".
pub fn parse_pair_spec(spec: &str) -> Result<DualPair> {
    let (kind, params) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("pair spec {spec:?} needs the form kind:p,q[,m],n")))?;
    let nums: Vec<usize> = params
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad number in {spec:?}"))))
        .collect::<Result<_>>()?;
    match (kind.to_ascii_lowercase().as_str(), nums.as_slice()) {
        ("uu", &[p, q, m, n]) => make_pair(kind, Some(p), Some(q), Some(m), Some(n)),
        ("uu", _) => Err(Error::Parse(format!("{spec:?}: uu takes p,q,m,n"))),
        (_, &[p, q, n]) => make_pair(kind, Some(p), Some(q), None, Some(n)),
        _ => Err(Error::Parse(format!("{spec:?}: expected p,q,n"))),
    }
}
