use std::sync::OnceLock;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::oracles::Oracle;

use super::{make_ps, Pattern, PatternSet, PsSubset};

const FIXTURE: &str = include_str!("../../data/named_patterns.json");

#[derive(Debug, Clone)]
pub struct NamedClassEntry {
    pub name: String,
    pub pattern_set: PatternSet,
    /// Independent brute-force test for the same class, when one exists.
    pub oracle: Option<Oracle>,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    #[serde(default)]
    oracle: Option<Oracle>,
    patterns: Vec<Pattern>,
}

/// Every named class: the fixture entries followed by `C_S` for all 16
/// subsets `S`.
pub fn named_catalog() -> &'static [NamedClassEntry] {
    static CATALOG: OnceLock<Vec<NamedClassEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let raw: Vec<RawEntry> = serde_json::from_str(FIXTURE).expect("pattern fixture parses");
        let mut out: Vec<NamedClassEntry> = raw
            .into_iter()
            .map(|e| NamedClassEntry {
                pattern_set: PatternSet::new(Some(e.name.clone()), e.patterns).expect("fixture entries are nonempty"),
                name: e.name,
                oracle: e.oracle,
            })
            .collect();
        out.extend(PsSubset::all().map(|s| NamedClassEntry {
            name: s.class_name(),
            pattern_set: PatternSet::single(make_ps(s)).named(s.class_name()),
            oracle: None,
        }));
        out
    })
}

/// Exact name first, then a case-insensitive match.
pub fn lookup_class(name: &str) -> Result<&'static NamedClassEntry> {
    let cat = named_catalog();
    cat.iter()
        .find(|e| e.name == name)
        .or_else(|| cat.iter().find(|e| e.name.eq_ignore_ascii_case(name)))
        .ok_or_else(|| Error::UnknownClass(name.to_string()))
}
