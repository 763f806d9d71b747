use std::cmp::Ordering as CmpOrdering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Rational;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        Self { x: x.into(), y: y.into() }
    }

    pub fn on_ground(x: Rational) -> Self {
        Self { x, y: Rational::zero() }
    }

    fn minus(&self, o: &Point) -> (Rational, Rational) {
        (&self.x - &o.x, &self.y - &o.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn cross(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn dot(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    &a.0 * &b.0 + &a.1 * &b.1
}

/// Closed segment between two points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Self { a, b }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    /// Whether `p` lies on the closed segment.
    pub fn contains(&self, p: &Point) -> bool {
        let d = self.b.minus(&self.a);
        let w = p.minus(&self.a);
        if !cross(&d, &w).is_zero() {
            return false;
        }
        let t = dot(&d, &w);
        !t.is_negative() && t <= dot(&d, &d)
    }

    fn at(&self, t: &Rational) -> Point {
        Point { x: &self.a.x + t * (&self.b.x - &self.a.x), y: &self.a.y + t * (&self.b.y - &self.a.y) }
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}-{:?}", self.a, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection {
    Disjoint,
    Point(Point),
    Overlap(Segment),
}

impl Intersection {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, Self::Disjoint)
    }
}

/// Exact intersection of two closed segments.
pub fn seg_intersect(s1: &Segment, s2: &Segment) -> Result<Intersection> {
    if s1.is_degenerate() || s2.is_degenerate() {
        return Err(Error::DegenerateSegment);
    }
    let d1 = s1.b.minus(&s1.a);
    let d2 = s2.b.minus(&s2.a);
    let w = s2.a.minus(&s1.a);
    let denom = cross(&d1, &d2);
    let zero = Rational::zero();
    let one = Rational::one();

    if !denom.is_zero() {
        let t = cross(&w, &d2) / &denom;
        let s = cross(&w, &d1) / &denom;
        let inside = |r: &Rational| r >= &zero && r <= &one;
        return Ok(if inside(&t) && inside(&s) { Intersection::Point(s1.at(&t)) } else { Intersection::Disjoint });
    }
    if !cross(&w, &d1).is_zero() {
        return Ok(Intersection::Disjoint);
    }
    // Collinear: compare parameters along s1.
    let len = dot(&d1, &d1);
    let ta = dot(&w, &d1) / &len;
    let tb = dot(&s2.b.minus(&s1.a), &d1) / &len;
    let (lo, hi) = if ta <= tb { (ta, tb) } else { (tb, ta) };
    let lo = lo.max(zero);
    let hi = hi.min(one);
    Ok(match lo.cmp(&hi) {
        CmpOrdering::Greater => Intersection::Disjoint,
        CmpOrdering::Equal => Intersection::Point(s1.at(&lo)),
        CmpOrdering::Less => Intersection::Overlap(Segment::new(s1.at(&lo), s1.at(&hi))),
    })
}

/// Direction from `from` towards `to`.
pub(crate) fn direction(from: &Point, to: &Point) -> (Rational, Rational) {
    to.minus(from)
}

/// Total order on nonzero directions by angle in `[0, 2pi)`.
pub(crate) fn angle_cmp(a: &(Rational, Rational), b: &(Rational, Rational)) -> CmpOrdering {
    // Upper half: y > 0, or y == 0 and x > 0.
    let half = |d: &(Rational, Rational)| {
        if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross(a, b);
        if c.is_positive() {
            CmpOrdering::Less
        } else if c.is_negative() {
            CmpOrdering::Greater
        } else {
            CmpOrdering::Equal
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::new(Point::new(a.0, a.1), Point::new(b.0, b.1))
    }

    #[test]
    fn crossing() {
        let r = seg_intersect(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0))).unwrap();
        assert_eq!(r, Intersection::Point(Point::new(1, 1)));
    }

    #[test]
    fn collinear_cases() {
        let r = seg_intersect(&seg((0, 0), (1, 0)), &seg((2, 0), (3, 0))).unwrap();
        assert_eq!(r, Intersection::Disjoint);
        let r = seg_intersect(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))).unwrap();
        assert_eq!(r, Intersection::Overlap(seg((1, 0), (2, 0))));
        let r = seg_intersect(&seg((0, 0), (2, 0)), &seg((3, 0), (2, 0))).unwrap();
        assert_eq!(r, Intersection::Point(Point::new(2, 0)));
        let r = seg_intersect(&seg((0, 0), (2, 0)), &seg((0, 1), (2, 1))).unwrap();
        assert_eq!(r, Intersection::Disjoint);
    }

    #[test]
    fn touching_endpoints() {
        let r = seg_intersect(&seg((1, 0), (1, 1)), &seg((0, 1), (1, 1))).unwrap();
        assert_eq!(r, Intersection::Point(Point::new(1, 1)));
        let r = seg_intersect(&seg((0, 0), (1, 1)), &seg((2, 0), (3, 5))).unwrap();
        assert_eq!(r, Intersection::Disjoint);
    }

    #[test]
    fn degenerate() {
        assert!(matches!(seg_intersect(&seg((0, 0), (0, 0)), &seg((0, 0), (1, 1))), Err(Error::DegenerateSegment)));
    }

    #[test]
    fn contains_and_angles() {
        let s = seg((0, 0), (2, 2));
        assert!(s.contains(&Point::new(1, 1)));
        assert!(!s.contains(&Point::new(3, 3)));
        let dirs = [(1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)];
        for w in dirs.windows(2) {
            let a = (Rational::int(w[0].0), Rational::int(w[0].1));
            let b = (Rational::int(w[1].0), Rational::int(w[1].1));
            assert_eq!(angle_cmp(&a, &b), CmpOrdering::Less);
        }
    }
}
