//! Ordered trigraph patterns and their occurrences in ordered graphs.

mod catalog;
mod matcher;
mod ps;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::ordering::Ordering;

pub use catalog::{lookup_class, named_catalog, NamedClassEntry};
pub use matcher::RankAdjacency;
pub use ps::{make_ps, PsSubset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Edge,
    NonEdge,
    Undecided,
}

/// An ordered trigraph on positions `1..=k`.
///
/// Row `j` of `edge` (0-based) holds a bit for every earlier position `i`
/// with `(i+1, j+1)` labelled Edge; likewise for `nonedge`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    k: usize,
    edge: Vec<u64>,
    nonedge: Vec<u64>,
}

impl Pattern {
    /// Builds a pattern from 1-based position pairs. Pairs may be given in
    /// either order; unlisted pairs are Undecided.
    pub fn new(
        k: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        nonedges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if !(2..=MAX_ORDER).contains(&k) {
            return Err(Error::InvalidPattern(format!("k={k} outside 2..={MAX_ORDER}")));
        }
        let mut p = Self { k, edge: vec![0; k], nonedge: vec![0; k] };
        for (label, pairs) in
            [(Label::Edge, edges.into_iter().collect::<Vec<_>>()), (Label::NonEdge, nonedges.into_iter().collect())]
        {
            for (a, b) in pairs {
                let (i, j) = (a.min(b), a.max(b));
                if i == j || i == 0 || j > k {
                    return Err(Error::InvalidPattern(format!(
                        "pair ({a},{b}) is not a pair of distinct positions in 1..={k}"
                    )));
                }
                if p.label(i, j) != Label::Undecided {
                    return Err(Error::InvalidPattern(format!("pair ({i},{j}) labelled twice")));
                }
                let row = match label {
                    Label::Edge => &mut p.edge,
                    _ => &mut p.nonedge,
                };
                row[j - 1] |= 1 << (i - 1);
            }
        }
        Ok(p)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Label of the 1-based position pair `(i, j)`.
    pub fn label(&self, i: usize, j: usize) -> Label {
        let (i, j) = (i.min(j), i.max(j));
        assert!(i >= 1 && i < j && j <= self.k, "pair ({i},{j}) out of range");
        if self.edge[j - 1] >> (i - 1) & 1 == 1 {
            Label::Edge
        } else if self.nonedge[j - 1] >> (i - 1) & 1 == 1 {
            Label::NonEdge
        } else {
            Label::Undecided
        }
    }

    fn pairs_with(&self, label: Label) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.k {
            for j in i + 1..=self.k {
                if self.label(i, j) == label {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Edge pairs, 1-based, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.pairs_with(Label::Edge)
    }

    /// NonEdge pairs, 1-based, sorted.
    pub fn nonedges(&self) -> Vec<(usize, usize)> {
        self.pairs_with(Label::NonEdge)
    }

    pub(crate) fn edge_rows(&self) -> &[u64] {
        &self.edge
    }

    pub(crate) fn nonedge_rows(&self) -> &[u64] {
        &self.nonedge
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PatternJson::from(self)).expect("pattern serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PatternJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pattern")
            .field("k", &self.k)
            .field("edge", &self.edges())
            .field("nonedge", &self.nonedges())
            .finish()
    }
}

/// Position `i` becomes `k + 1 - i`.
pub fn mirror(p: &Pattern) -> Pattern {
    let k = p.k;
    let flip =
        |pairs: Vec<(usize, usize)>| pairs.into_iter().map(move |(i, j)| (k + 1 - j, k + 1 - i)).collect::<Vec<_>>();
    Pattern::new(k, flip(p.edges()), flip(p.nonedges())).expect("mirror of a valid pattern")
}

/// Whether `p` is included in `q`: same size, and every Edge and NonEdge
/// pair of `p` carries the same label in `q`. Inclusion of patterns gives
/// the same inclusion of classes.
pub fn pattern_included(p: &Pattern, q: &Pattern) -> bool {
    p.k == q.k
        && p.edge.iter().zip(&q.edge).all(|(a, b)| a & !b == 0)
        && p.nonedge.iter().zip(&q.nonedge).all(|(a, b)| a & !b == 0)
}

/// Lexicographically least increasing tuple of 1-based ranks at which `p`
/// is realized in `g` under `ordering`, if any.
pub fn occurs(g: &Graph, ordering: &Ordering, p: &Pattern) -> Result<Option<Vec<usize>>> {
    ordering.check_for(g)?;
    let ranks = RankAdjacency::new(g, ordering.as_slice());
    Ok(ranks.find(p, None).map(|t| t.into_iter().map(|r| r + 1).collect()))
}

/// `{"k": int, "edge": [[i, j], ...], "nonedge": [[i, j], ...]}` with
/// 1-based positions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PatternJson {
    pub k: usize,
    #[serde(default)]
    pub edge: Vec<[usize; 2]>,
    #[serde(default)]
    pub nonedge: Vec<[usize; 2]>,
}

impl From<&Pattern> for PatternJson {
    fn from(p: &Pattern) -> Self {
        let arr = |v: Vec<(usize, usize)>| v.into_iter().map(|(i, j)| [i, j]).collect();
        Self { k: p.k, edge: arr(p.edges()), nonedge: arr(p.nonedges()) }
    }
}

impl TryFrom<PatternJson> for Pattern {
    type Error = Error;

    fn try_from(raw: PatternJson) -> Result<Self> {
        let tup = |v: Vec<[usize; 2]>| v.into_iter().map(|[i, j]| (i, j)).collect::<Vec<_>>();
        Pattern::new(raw.k, tup(raw.edge), tup(raw.nonedge))
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PatternJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PatternJson::deserialize(d)?.try_into().map_err(serde::de::Error::custom)
    }
}

/// A nonempty family `F` of patterns; its class is every graph with an
/// ordering avoiding all of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternSet {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    patterns: Vec<Pattern>,
}

impl PatternSet {
    pub fn new(name: Option<String>, patterns: Vec<Pattern>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidPattern("a pattern set needs at least one pattern".into()));
        }
        Ok(Self { name, patterns })
    }

    pub fn single(p: Pattern) -> Self {
        Self { name: None, patterns: vec![p] }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn mirror(&self) -> Self {
        Self { name: None, patterns: self.patterns.iter().map(mirror).collect() }
    }

    /// Resolves a class selector: a P_S letter string (`"ab"`, `"empty"`),
    /// or a catalog name.
    pub fn parse(selector: &str) -> Result<Self> {
        if let Ok(s) = selector.parse::<PsSubset>() {
            return Ok(Self::single(make_ps(s)).named(s.class_name()));
        }
        lookup_class(selector).map(|e| e.pattern_set.clone())
    }
}
