//! Expected-failure registry: the `n` values at which a check is known to
//! fail under exact arithmetic. A failing report is *unexpected* unless its
//! `n` is listed for its check. Only `n ≤ covered_up_to` can be listed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use ordsum_core::bounds::{BoundReport, CheckId, Verdict};
use serde::Deserialize;

const BUILTIN: &str = include_str!("../data/expected_failures.json");

#[derive(Deserialize)]
struct RawRegistry {
    covered_up_to: u64,
    failures: BTreeMap<String, Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Registry {
    covered_up_to: u64,
    failures: BTreeMap<CheckId, BTreeSet<u64>>,
}

#[derive(Debug)]
pub enum RegistryError {
    Io(std::io::Error),
    Json(serde_json::Error),
    UnknownCheck(String),
    Uncovered { check: CheckId, n: u64 },
}

impl std::fmt::Display for RegistryError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegistryError::Io(e) => write!(f, "reading registry: {e}"),
            RegistryError::Json(e) => write!(f, "parsing registry: {e}"),
            RegistryError::UnknownCheck(s) => write!(f, "registry names unknown check `{s}`"),
            RegistryError::Uncovered { check, n } => {
                write!(f, "registry lists {check} at n = {n}, beyond covered_up_to")
            }
        }
    }
}

impl std::error::Error for RegistryError {}

impl Registry {
    /// The registry shipped with the crate.
    pub fn builtin() -> Registry {
        Registry::from_json(BUILTIN).expect("built-in registry is valid")
    }

    pub fn from_json(text: &str) -> Result<Registry, RegistryError> {
        let raw: RawRegistry = serde_json::from_str(text).map_err(RegistryError::Json)?;
        let mut failures = BTreeMap::new();
        for (name, ns) in raw.failures {
            let check: CheckId = name.parse().map_err(|_| RegistryError::UnknownCheck(name.clone()))?;
            if let Some(&n) = ns.iter().find(|&&n| n > raw.covered_up_to) {
                return Err(RegistryError::Uncovered { check, n });
            }
            failures.insert(check, ns.into_iter().collect());
        }
        Ok(Registry { covered_up_to: raw.covered_up_to, failures })
    }

    pub fn load(path: &Path) -> Result<Registry, RegistryError> {
        let text = std::fs::read_to_string(path).map_err(RegistryError::Io)?;
        Registry::from_json(&text)
    }

    /// Registry listing exactly the failures in `reports`.
    pub fn from_reports(reports: &[BoundReport], covered_up_to: u64) -> Registry {
        let mut failures: BTreeMap<CheckId, BTreeSet<u64>> = BTreeMap::new();
        for r in reports.iter().filter(|r| r.verdict == Verdict::Fails && r.n <= covered_up_to) {
            failures.entry(r.check).or_default().insert(r.n);
        }
        Registry { covered_up_to, failures }
    }

    pub fn covered_up_to(&self) -> u64 {
        self.covered_up_to
    }

    /// Registered failures for `check` (empty if none).
    pub fn failures(&self, check: CheckId) -> BTreeSet<u64> {
        self.failures.get(&check).cloned().unwrap_or_default()
    }

    pub fn is_expected(&self, check: CheckId, n: u64) -> bool {
        self.failures.get(&check).is_some_and(|ns| ns.contains(&n))
    }

    /// Failing reports that the registry does not list.
    pub fn unexpected<'a>(&self, reports: &'a [BoundReport]) -> Vec<&'a BoundReport> {
        reports
            .iter()
            .filter(|r| r.verdict == Verdict::Fails && !self.is_expected(r.check, r.n))
            .collect()
    }

    /// Same layout as the shipped data file.
    pub fn to_json(&self) -> String {
        let mut s = format!("{{\n  \"covered_up_to\": {},\n  \"failures\": {{\n", self.covered_up_to);
        let entries: Vec<_> = self.failures.iter().filter(|(_, ns)| !ns.is_empty()).collect();
        for (i, (check, ns)) in entries.iter().enumerate() {
            let list: Vec<String> = ns.iter().map(u64::to_string).collect();
            let comma = if i + 1 < entries.len() { "," } else { "" };
            let _ = writeln!(s, "    \"{check}\": [{}]{comma}", list.join(", "));
        }
        s.push_str("  }\n}\n");
        s
    }
}
