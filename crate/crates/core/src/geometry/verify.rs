use std::cmp::Ordering as CmpOrdering;
use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::primitives::{angle_cmp, direction, seg_intersect, Intersection, Point, Segment};
use super::shapes::segments_of;
use super::{intersection_graph, Rational, RepKind, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Violation {
    ShapeInvariant { vertex: usize, message: String },
    SharedGroundingPoint { vertices: Vec<usize>, point: Point },
    MissingEdge { u: usize, v: usize },
    ExtraEdge { u: usize, v: usize },
    NotTouching { u: usize, v: usize, message: String },
    TriplePoint { vertices: Vec<usize>, point: Point },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ShapeInvariant { vertex, message } => write!(f, "shape {vertex}: {message}"),
            Self::SharedGroundingPoint { vertices, point } => {
                write!(f, "shapes {vertices:?} share the grounding point {point:?}")
            }
            Self::MissingEdge { u, v } => write!(f, "edge ({u},{v}) is not realized"),
            Self::ExtraEdge { u, v } => write!(f, "shapes {u} and {v} meet but ({u},{v}) is no edge"),
            Self::NotTouching { u, v, message } => write!(f, "shapes {u} and {v}: {message}"),
            Self::TriplePoint { vertices, point } => {
                write!(f, "shapes {vertices:?} all contain {point:?}")
            }
        }
    }
}

/// Result of [`verify_representation`]; valid iff there are no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            write!(f, "; {v}")?;
        }
        Ok(())
    }
}

/// Checks shape invariants, distinct grounding points, that the
/// intersection graph is `g`, contacts for the touching kinds, and that no
/// point lies on three curves.
pub fn verify_representation(rep: &Representation, g: &Graph) -> Result<Report> {
    let n = rep.len();
    if n != g.n() {
        return Err(Error::ShapeCountMismatch { shapes: n, vertices: g.n() });
    }
    let mut violations = Vec::new();
    for v in 0..n {
        if let Err(message) = rep.validate_shape(v) {
            violations.push(Violation::ShapeInvariant { vertex: v, message });
        }
    }
    if !violations.is_empty() {
        return Ok(Report { violations });
    }

    let mut grounds: Vec<(Point, usize)> =
        (0..n).flat_map(|v| rep.grounding_points(v).into_iter().map(move |p| (p, v))).collect();
    grounds.sort();
    for run in grounds.chunk_by(|a, b| a.0 == b.0) {
        let vertices: BTreeSet<usize> = run.iter().map(|(_, v)| *v).collect();
        if vertices.len() > 1 {
            violations.push(Violation::SharedGroundingPoint {
                vertices: vertices.into_iter().collect(),
                point: run[0].0.clone(),
            });
        }
    }

    let h = intersection_graph(rep);
    for v in 1..n {
        for u in 0..v {
            match (g.has_edge(u, v), h.has_edge(u, v)) {
                (true, false) => violations.push(Violation::MissingEdge { u, v }),
                (false, true) => violations.push(Violation::ExtraEdge { u, v }),
                _ => {}
            }
        }
    }

    match rep {
        Representation::TouchingRectangles(rects) => {
            let boxes: Vec<_> = rects.iter().map(|r| r.uv_box()).collect();
            for v in 1..n {
                for u in 0..v {
                    if boxes[u].interiors_meet(&boxes[v]) {
                        violations.push(Violation::NotTouching { u, v, message: "interiors overlap".into() });
                    }
                }
            }
        }
        _ => {
            let curves: Vec<Vec<Point>> = (0..n).map(|v| rep.curve(v).expect("curve")).collect();
            let segs: Vec<Vec<Segment>> = curves.iter().map(|c| segments_of(c)).collect();
            if rep.kind() == RepKind::TouchingLshapes {
                for v in 1..n {
                    for u in 0..v {
                        if let Some(message) = crossing(&segs[u], &segs[v]) {
                            violations.push(Violation::NotTouching { u, v, message });
                        }
                    }
                }
            }
            violations.extend(triple_points(&segs));
        }
    }
    Ok(Report { violations })
}

type Dir = (Rational, Rational);

/// Directions in which the curve leaves `p`.
fn rays(segs: &[Segment], p: &Point) -> Vec<Dir> {
    let mut out: Vec<Dir> = Vec::new();
    for s in segs.iter().filter(|s| s.contains(p)) {
        for end in [&s.a, &s.b] {
            if end != p {
                let d = direction(p, end);
                if !out.iter().any(|e| angle_cmp(e, &d) == CmpOrdering::Equal) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// First contact between two curves that is not a touching, if any. A
/// contact touches when one curve ends there, or when the two curves do
/// not alternate around the point.
fn crossing(sa: &[Segment], sb: &[Segment]) -> Option<String> {
    let mut points = BTreeSet::new();
    for s in sa {
        for t in sb {
            match seg_intersect(s, t).expect("nondegenerate") {
                Intersection::Disjoint => {}
                Intersection::Point(p) => {
                    points.insert(p);
                }
                Intersection::Overlap(o) => {
                    return Some(format!("curves overlap along {o:?}"));
                }
            }
        }
    }
    for p in points {
        let ra = rays(sa, &p);
        let rb = rays(sb, &p);
        if ra.len() < 2 || rb.len() < 2 {
            continue;
        }
        let mut all: Vec<(Dir, bool)> =
            ra.into_iter().map(|d| (d, true)).chain(rb.into_iter().map(|d| (d, false))).collect();
        all.sort_by(|x, y| angle_cmp(&x.0, &y.0));
        if all.windows(2).any(|w| angle_cmp(&w[0].0, &w[1].0) == CmpOrdering::Equal) {
            return Some(format!("curves share a direction at {p:?}"));
        }
        let alternating = all.len() == 4 && all[0].1 == all[2].1 && all[1].1 == all[3].1;
        if alternating {
            return Some(format!("curves cross at {p:?}"));
        }
    }
    None
}

/// Points lying on three or more curves.
fn triple_points(segs: &[Vec<Segment>]) -> Vec<Violation> {
    let n = segs.len();
    let mut candidates = BTreeSet::new();
    for v in 1..n {
        for u in 0..v {
            for s in &segs[u] {
                for t in &segs[v] {
                    match seg_intersect(s, t).expect("nondegenerate") {
                        Intersection::Disjoint => {}
                        Intersection::Point(p) => {
                            candidates.insert(p);
                        }
                        Intersection::Overlap(o) => {
                            candidates.insert(o.a);
                            candidates.insert(o.b);
                        }
                    }
                }
            }
        }
    }
    candidates
        .into_iter()
        .filter_map(|p| {
            let on: Vec<usize> = (0..n).filter(|&v| segs[v].iter().any(|s| s.contains(&p))).collect();
            (on.len() >= 3).then_some(Violation::TriplePoint { vertices: on, point: p })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{DiagonalRectangle, FilamentPolyline, LShape};

    fn r(n: i64) -> Rational {
        Rational::int(n)
    }

    #[test]
    fn crossing_lshapes_are_rejected() {
        // The second L's horizontal part passes through the first's vertical.
        let rep = Representation::TouchingLshapes(vec![LShape::new(r(2), r(3), r(2)), LShape::new(r(1), r(3), r(1))]);
        let g = Graph::complete(2).unwrap();
        let report = verify_representation(&rep, &g).unwrap();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::NotTouching { .. })));
    }

    #[test]
    fn endpoint_contact_is_touching() {
        let rep = Representation::TouchingLshapes(vec![LShape::new(r(2), r(2), r(2)), LShape::new(r(1), r(2), r(1))]);
        let g = Graph::complete(2).unwrap();
        assert!(verify_representation(&rep, &g).unwrap().is_valid());
    }

    #[test]
    fn wrong_graph_and_count() {
        let rep = Representation::TouchingLshapes(vec![LShape::new(r(2), r(2), r(2)), LShape::new(r(1), r(2), r(1))]);
        let report = verify_representation(&rep, &Graph::empty(2).unwrap()).unwrap();
        assert_eq!(report.violations, vec![Violation::ExtraEdge { u: 0, v: 1 }]);
        assert!(matches!(
            verify_representation(&rep, &Graph::empty(3).unwrap()),
            Err(Error::ShapeCountMismatch { shapes: 2, vertices: 3 })
        ));
    }

    #[test]
    fn shared_ground() {
        let rep = Representation::TouchingLshapes(vec![LShape::new(r(1), r(1), r(2)), LShape::new(r(1), r(1), r(1))]);
        let report = verify_representation(&rep, &Graph::complete(2).unwrap()).unwrap();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::SharedGroundingPoint { .. })));
    }

    #[test]
    fn rectangle_overlap() {
        let a = DiagonalRectangle::from_uv(&r(2), &r(0), &r(4));
        let b = DiagonalRectangle::from_uv(&r(3), &r(1), &r(5));
        let rep = Representation::TouchingRectangles(vec![a, b]);
        let report = verify_representation(&rep, &Graph::complete(2).unwrap()).unwrap();
        assert!(matches!(report.violations[..], [Violation::NotTouching { .. }]));
    }

    #[test]
    fn degenerate_rectangle_is_isolated() {
        let a = DiagonalRectangle::from_uv(&r(1), &r(1), &r(1));
        let b = DiagonalRectangle::from_uv(&r(2), &r(2), &r(3));
        let rep = Representation::TouchingRectangles(vec![a, b]);
        assert!(verify_representation(&rep, &Graph::empty(2).unwrap()).unwrap().is_valid());
    }

    #[test]
    fn three_curves_through_a_point() {
        let p = |x: i64, y: i64| Point::new(x, y);
        let f = |pts: Vec<Point>| FilamentPolyline { vertices: pts };
        let rep = Representation::IntervalFilaments(vec![
            f(vec![p(0, 0), p(2, 2), p(4, 0)]),
            f(vec![p(1, 0), p(2, 2), p(5, 0)]),
            f(vec![p(2, 0), p(2, 2), p(6, 0)]),
        ]);
        let report = verify_representation(&rep, &Graph::complete(3).unwrap()).unwrap();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::TriplePoint { .. })));
    }
}
