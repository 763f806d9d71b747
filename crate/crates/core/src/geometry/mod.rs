//! Exact planar geometry: rationals, segments, the four grounded shape
//! kinds, intersection graphs and representation checks.

mod primitives;
mod rational;
mod shapes;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::Ordering;
use crate::pattern::{lookup_class, make_ps, mirror, PatternSet, PsSubset};
use crate::solver::avoids_all;

pub use primitives::{seg_intersect, Intersection, Point, Segment};
pub use rational::Rational;
pub use shapes::{DiagonalRectangle, FilamentPolyline, LShape, StairPolyline, UvBox};
pub use verify::{verify_representation, Report, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepKind {
    TouchingLshapes,
    TouchingRectangles,
    IntervalFilaments,
    GroundedStairs,
}

impl RepKind {
    pub const ALL: [RepKind; 4] =
        [Self::TouchingLshapes, Self::TouchingRectangles, Self::IntervalFilaments, Self::GroundedStairs];

    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            Self::TouchingLshapes => "lshapes",
            Self::TouchingRectangles => "rectangles",
            Self::IntervalFilaments => "filaments",
            Self::GroundedStairs => "stairs",
        }
    }

    pub fn is_touching(self) -> bool {
        matches!(self, Self::TouchingLshapes | Self::TouchingRectangles)
    }

    /// Patterns the grounding order of every valid representation of this
    /// kind avoids. For L-shapes the order runs from children to parents,
    /// so each vertex has at most one later neighbour.
    pub fn grounding_patterns(self) -> PatternSet {
        match self {
            Self::TouchingLshapes => {
                let forest = &lookup_class("forest").expect("forest is catalogued").pattern_set;
                forest.mirror().named("forest (mirrored)")
            }
            Self::TouchingRectangles => ps(PsSubset::EMPTY),
            Self::IntervalFilaments => ps("ab".parse().expect("valid subset")),
            Self::GroundedStairs => ps("abc".parse().expect("valid subset")),
        }
    }
}

fn ps(s: PsSubset) -> PatternSet {
    PatternSet::single(make_ps(s)).named(s.class_name())
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| {
                k.short_name() == s
                    || serde_json::to_value(k).ok().and_then(|v| v.as_str().map(|t| t == s)) == Some(true)
            })
            .ok_or_else(|| Error::UnknownClass(format!("representation kind `{s}`")))
    }
}

/// Shapes indexed by vertex id, all of one kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "shapes", rename_all = "kebab-case")]
pub enum Representation {
    TouchingLshapes(Vec<LShape>),
    TouchingRectangles(Vec<DiagonalRectangle>),
    IntervalFilaments(Vec<FilamentPolyline>),
    GroundedStairs(Vec<StairPolyline>),
}

impl Representation {
    pub fn kind(&self) -> RepKind {
        match self {
            Self::TouchingLshapes(_) => RepKind::TouchingLshapes,
            Self::TouchingRectangles(_) => RepKind::TouchingRectangles,
            Self::IntervalFilaments(_) => RepKind::IntervalFilaments,
            Self::GroundedStairs(_) => RepKind::GroundedStairs,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Self::TouchingLshapes(s) => s.len(),
            Self::TouchingRectangles(s) => s.len(),
            Self::IntervalFilaments(s) => s.len(),
            Self::GroundedStairs(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The curve of shape `v`, for the three curve kinds.
    pub fn curve(&self, v: usize) -> Option<Vec<Point>> {
        match self {
            Self::TouchingLshapes(s) => Some(s[v].points()),
            Self::TouchingRectangles(_) => None,
            Self::IntervalFilaments(s) => Some(s[v].vertices.clone()),
            Self::GroundedStairs(s) => Some(s[v].vertices.clone()),
        }
    }

    /// Every point where shape `v` touches the grounding line.
    pub fn grounding_points(&self, v: usize) -> Vec<Point> {
        match self {
            Self::TouchingLshapes(s) => vec![Point::on_ground(s[v].x.clone())],
            Self::TouchingRectangles(s) => vec![s[v].ground.clone()],
            Self::IntervalFilaments(s) => vec![s[v].left().clone(), s[v].right().clone()],
            Self::GroundedStairs(s) => vec![s[v].ground().clone()],
        }
    }

    pub fn validate_shape(&self, v: usize) -> std::result::Result<(), String> {
        match self {
            Self::TouchingLshapes(s) => s[v].validate(),
            Self::TouchingRectangles(s) => s[v].validate(),
            Self::IntervalFilaments(s) => s[v].validate(),
            Self::GroundedStairs(s) => s[v].validate(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("representation serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("representation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Vertices `u`, `v` are adjacent when their closed shapes share a point.
pub fn intersection_graph(rep: &Representation) -> Graph {
    let n = rep.len();
    let mut g = Graph::empty(n).expect("representation order fits a graph");
    match rep {
        Representation::TouchingRectangles(rects) => {
            let boxes: Vec<UvBox> = rects.iter().map(DiagonalRectangle::uv_box).collect();
            for v in 1..n {
                for u in 0..v {
                    if boxes[u].meets(&boxes[v]) {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        _ => {
            let segs: Vec<Vec<Segment>> = (0..n)
                .map(|v| {
                    let pts = rep.curve(v).expect("curve kind");
                    shapes::segments_of(&pts).into_iter().filter(|s| !s.is_degenerate()).collect()
                })
                .collect();
            for v in 1..n {
                for u in 0..v {
                    if curves_meet(&segs[u], &segs[v]) {
                        g.add_edge(u, v);
                    }
                }
            }
        }
    }
    g
}

fn curves_meet(a: &[Segment], b: &[Segment]) -> bool {
    a.iter().any(|s| b.iter().any(|t| !seg_intersect(s, t).expect("nondegenerate").is_disjoint()))
}

/// Vertices sorted by the abscissa of their leftmost grounding point.
pub fn grounding_order(rep: &Representation) -> Ordering {
    let mut keyed: Vec<(Rational, usize)> = (0..rep.len())
        .map(|v| {
            let x = rep.grounding_points(v).into_iter().map(|p| p.x).min().expect("grounded");
            (x, v)
        })
        .collect();
    keyed.sort();
    Ordering::new(keyed.into_iter().map(|(_, v)| v).collect()).expect("sorted ids are a permutation")
}

/// Verifies `rep` against `g`, then checks that its grounding order avoids
/// the kind's patterns and `P_abcd`.
pub fn check_grounding_theorem(rep: &Representation, g: &Graph) -> Result<bool> {
    let report = verify_representation(rep, g)?;
    if !report.is_valid() {
        return Err(Error::VerificationFailed(report));
    }
    let sigma = grounding_order(rep);
    Ok(avoids_all(g, &sigma, &rep.kind().grounding_patterns())? && avoids_all(g, &sigma, &ps(PsSubset::FULL))?)
}

/// The mirrored forest pattern used for L-shape grounding orders.
pub fn lshape_grounding_pattern() -> crate::pattern::Pattern {
    mirror(&lookup_class("forest").expect("forest is catalogued").pattern_set.patterns()[0])
}
