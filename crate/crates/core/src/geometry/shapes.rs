use serde::{Deserialize, Serialize};

use super::primitives::{seg_intersect, Intersection, Point, Segment};
use super::Rational;

/// Vertical segment from `(x, 0)` to `(x, y)`, continued rightwards to
/// `(x_right, y)`. `x_right == x` leaves the bare vertical segment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LShape {
    pub x: Rational,
    pub x_right: Rational,
    pub y: Rational,
}

impl LShape {
    pub fn new(x: Rational, x_right: Rational, y: Rational) -> Self {
        Self { x, x_right, y }
    }

    pub fn validate(&self) -> Result<(), String> {
        if !self.y.is_positive() {
            return Err(format!("height {} is not positive", self.y));
        }
        if self.x_right < self.x {
            return Err(format!("x_right {} lies left of x {}", self.x_right, self.x));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<Point> {
        let mut pts = vec![Point::on_ground(self.x.clone()), Point::new(self.x.clone(), self.y.clone())];
        if self.x_right > self.x {
            pts.push(Point::new(self.x_right.clone(), self.y.clone()));
        }
        pts
    }
}

/// Rectangle with sides of slope +1 and -1 standing on its bottom corner.
///
/// In the rotated coordinates `u = x - y`, `v = x + y` it is the box
/// `[u0, u1] x [v0, v1]`; the ground corner is `(u1, v0)`, the left corner
/// `(u0, v0)`, the right corner `(u1, v1)` and the top corner `(u0, v1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalRectangle {
    pub ground: Point,
    pub left_corner: Point,
    pub right_corner: Point,
    pub top_corner: Point,
}

/// Closed box in rotated coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UvBox {
    pub u0: Rational,
    pub u1: Rational,
    pub v0: Rational,
    pub v1: Rational,
}

fn to_uv(p: &Point) -> (Rational, Rational) {
    (&p.x - &p.y, &p.x + &p.y)
}

fn from_uv(u: &Rational, v: &Rational) -> Point {
    let two = Rational::int(2);
    Point::new((u + v) / &two, (v - u) / &two)
}

impl DiagonalRectangle {
    /// The rectangle grounded at `(t, 0)` spanning `u in [u0, t]` and
    /// `v in [t, v1]`.
    pub fn from_uv(t: &Rational, u0: &Rational, v1: &Rational) -> Self {
        Self {
            ground: from_uv(t, t),
            left_corner: from_uv(u0, t),
            right_corner: from_uv(t, v1),
            top_corner: from_uv(u0, v1),
        }
    }

    pub fn uv_box(&self) -> UvBox {
        let (u1, v0) = to_uv(&self.ground);
        let (u0, _) = to_uv(&self.left_corner);
        let (_, v1) = to_uv(&self.right_corner);
        UvBox { u0, u1, v0, v1 }
    }

    pub fn validate(&self) -> Result<(), String> {
        if !self.ground.y.is_zero() {
            return Err(format!("ground corner {:?} is off the grounding line", self.ground));
        }
        let b = self.uv_box();
        let (lu, lv) = to_uv(&self.left_corner);
        let (ru, rv) = to_uv(&self.right_corner);
        let (tu, tv) = to_uv(&self.top_corner);
        if lv != b.v0 || ru != b.u1 || tu != lu || tv != rv {
            return Err("corners do not form a diagonal rectangle".into());
        }
        if b.u0 > b.u1 || b.v1 < b.v0 {
            return Err("corners are listed in the wrong order".into());
        }
        Ok(())
    }

    pub fn outline(&self) -> [Point; 4] {
        [self.ground.clone(), self.right_corner.clone(), self.top_corner.clone(), self.left_corner.clone()]
    }
}

impl UvBox {
    pub fn meets(&self, o: &UvBox) -> bool {
        self.u0 <= o.u1 && o.u0 <= self.u1 && self.v0 <= o.v1 && o.v0 <= self.v1
    }

    /// Whether the open interiors overlap; degenerate boxes have none.
    pub fn interiors_meet(&self, o: &UvBox) -> bool {
        self.u0 < o.u1 && o.u0 < self.u1 && self.v0 < o.v1 && o.v0 < self.v1
    }
}

/// Rectilinear staircase rising to the right from its grounding point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StairPolyline {
    pub vertices: Vec<Point>,
}

impl StairPolyline {
    pub fn ground(&self) -> &Point {
        &self.vertices[0]
    }

    pub fn validate(&self) -> Result<(), String> {
        let v = &self.vertices;
        if v.len() < 2 {
            return Err("a staircase needs at least two points".into());
        }
        if !v[0].y.is_zero() {
            return Err(format!("first point {:?} is off the grounding line", v[0]));
        }
        let mut last_vertical = None;
        for (i, w) in v.windows(2).enumerate() {
            let (a, b) = (&w[0], &w[1]);
            let vertical = match (a.x == b.x, a.y == b.y) {
                (true, false) => true,
                (false, true) => false,
                (true, true) => return Err(format!("repeated point {a:?}")),
                (false, false) => return Err(format!("segment {i} is not axis-parallel")),
            };
            if i == 0 && !vertical {
                return Err("a staircase starts with a vertical segment".into());
            }
            if last_vertical == Some(vertical) {
                return Err(format!("segments {} and {i} do not alternate", i - 1));
            }
            last_vertical = Some(vertical);
            if b.x < a.x || b.y < a.y {
                return Err(format!("segment {i} goes left or down"));
            }
        }
        Ok(())
    }
}

/// Curve that leaves the grounding line at its first point and comes back
/// at its last, staying strictly above in between.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilamentPolyline {
    pub vertices: Vec<Point>,
}

impl FilamentPolyline {
    pub fn left(&self) -> &Point {
        &self.vertices[0]
    }

    pub fn right(&self) -> &Point {
        self.vertices.last().expect("validated filaments are nonempty")
    }

    pub fn validate(&self) -> Result<(), String> {
        let v = &self.vertices;
        if v.len() < 3 {
            return Err("a filament needs at least three points".into());
        }
        let (first, last) = (&v[0], &v[v.len() - 1]);
        if !first.y.is_zero() || !last.y.is_zero() {
            return Err("endpoints must lie on the grounding line".into());
        }
        if first.x >= last.x {
            return Err("left grounding point is not left of the right one".into());
        }
        for p in &v[1..v.len() - 1] {
            if !p.y.is_positive() {
                return Err(format!("inner point {p:?} is not above the grounding line"));
            }
        }
        if v.iter().any(|p| p.x < first.x || p.x > last.x) {
            return Err("grounding points are not extremal in abscissa".into());
        }
        check_simple(v)
    }
}

/// Consecutive points distinct, adjacent segments meet only at their joint,
/// other segment pairs are disjoint.
fn check_simple(v: &[Point]) -> Result<(), String> {
    let segs: Vec<Segment> = v.windows(2).map(|w| Segment::new(w[0].clone(), w[1].clone())).collect();
    if segs.iter().any(Segment::is_degenerate) {
        return Err("repeated consecutive point".into());
    }
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let hit = seg_intersect(&segs[i], &segs[j]).expect("nondegenerate");
            let ok = match (&hit, j == i + 1) {
                (Intersection::Disjoint, _) => true,
                (Intersection::Point(p), true) => *p == segs[i].b,
                _ => false,
            };
            if !ok {
                return Err(format!("curve touches itself between segments {i} and {j}"));
            }
        }
    }
    Ok(())
}

pub(crate) fn segments_of(points: &[Point]) -> Vec<Segment> {
    points.windows(2).map(|w| Segment::new(w[0].clone(), w[1].clone())).collect()
}
