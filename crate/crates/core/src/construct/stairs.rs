use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{Point, Rational, Representation, StairPolyline};
use crate::graph::Graph;
use crate::ordering::Ordering;
use crate::pattern::PsSubset;

use super::{require_avoiding, self_verify};

/// Grounded stairs from an ordering avoiding `P_ab`.
///
/// Stairs are added left to right; rank `j` is grounded at `j + j/(n+1)`.
/// When rank `i` arrives it gets an unbounded vertical ray, and each earlier
/// neighbour, rightmost first, is extended from its end to the ray: move
/// right until the next vertical piece of a non-neighbour, climb just left
/// of it to just above that piece, and repeat. The ray is then cut just
/// above its highest crossing, or at height 1 when nothing crosses it.
///
/// New coordinates are always fresh, halfway between existing ones, so no
/// contact is collinear and no point is shared by three stairs.
/// Denominators can double with every new coordinate.
pub fn build_grounded_stairs(g: &Graph, sigma: &Ordering) -> Result<Representation> {
    sigma.check_for(g)?;
    require_avoiding(g, sigma, "ab".parse::<PsSubset>().expect("valid subset"))?;
    let n = g.n();
    let order = sigma.as_slice();
    let adj = |a: usize, b: usize| g.has_edge(order[a], order[b]);
    let n1 = Rational::int(n as i64 + 1);

    let mut b = Builder { stairs: Vec::with_capacity(n), xs: BTreeSet::new(), ys: BTreeSet::new() };
    b.ys.insert(Rational::zero());

    for i in 0..n {
        let rank = Rational::int(i as i64 + 1);
        let ground = &rank + &rank / &n1;
        b.xs.insert(ground.clone());
        let mut crossings = Vec::new();
        for j in (0..i).rev().filter(|&j| adj(i, j)) {
            let y = b.extend(j, &ground, |k| k == j || adj(j, k))?;
            crossings.push(y);
        }
        let top = match crossings.iter().max() {
            Some(m) => b.fresh_y_above(m),
            None => Rational::one(),
        };
        b.ys.insert(top.clone());
        b.stairs.push(vec![Point::on_ground(ground.clone()), Point::new(ground, top)]);
    }

    let mut shapes: Vec<Option<StairPolyline>> = vec![None; n];
    for (a, pts) in b.stairs.into_iter().enumerate() {
        shapes[order[a]] = Some(StairPolyline { vertices: pts });
    }
    let shapes = shapes.into_iter().map(|s| s.expect("one staircase per rank")).collect();
    self_verify(Representation::GroundedStairs(shapes), g)
}

struct Builder {
    stairs: Vec<Vec<Point>>,
    xs: BTreeSet<Rational>,
    ys: BTreeSet<Rational>,
}

impl Builder {
    fn fresh_y_above(&self, y: &Rational) -> Rational {
        match self.ys.range(y.clone()..).find(|&z| z > y) {
            Some(next) => y.mid(next),
            None => y + Rational::one(),
        }
    }

    /// Fresh abscissa in `(max(floor, largest x below limit), limit)`.
    fn fresh_x_below(&self, floor: &Rational, limit: &Rational) -> Rational {
        let below = self.xs.range(..limit.clone()).next_back();
        let lo = match below {
            Some(x) if x > floor => x,
            _ => floor,
        };
        lo.mid(limit)
    }

    /// Leftmost vertical piece of a stair not accepted by `ok` that crosses
    /// height `y` strictly between `from` and `to`: its abscissa and top.
    fn blocker(
        &self,
        y: &Rational,
        from: &Rational,
        to: &Rational,
        ok: &impl Fn(usize) -> bool,
    ) -> Option<(Rational, Rational)> {
        let mut best: Option<(Rational, Rational)> = None;
        for (k, pts) in self.stairs.iter().enumerate() {
            if ok(k) {
                continue;
            }
            for w in pts.windows(2) {
                let (a, b) = (&w[0], &w[1]);
                if a.x == b.x
                    && &a.x > from
                    && &a.x < to
                    && &a.y <= y
                    && y <= &b.y
                    && best.as_ref().is_none_or(|(bx, _)| &a.x < bx)
                {
                    best = Some((a.x.clone(), b.y.clone()));
                }
            }
        }
        best
    }

    /// A stair not accepted by `ok` with a horizontal piece over `x`
    /// strictly between heights `lo` and `hi`.
    fn capped(&self, x: &Rational, lo: &Rational, hi: &Rational, ok: &impl Fn(usize) -> bool) -> Option<usize> {
        (0..self.stairs.len()).filter(|&k| !ok(k)).find(|&k| {
            self.stairs[k].windows(2).any(|w| {
                let (a, b) = (&w[0], &w[1]);
                a.y == b.y && &a.x <= x && x <= &b.x && &a.y >= lo && &a.y <= hi
            })
        })
    }

    fn push_horizontal(&mut self, j: usize, x: Rational) {
        let pts = &mut self.stairs[j];
        let last = pts.len() - 1;
        if last >= 1 && pts[last - 1].y == pts[last].y {
            pts[last].x = x;
        } else {
            let y = pts[last].y.clone();
            pts.push(Point::new(x, y));
        }
    }

    /// Extends stair `j` to abscissa `target`; `ok(k)` tells whether stair
    /// `k` may be crossed. Returns the height at which `j` arrives.
    fn extend(&mut self, j: usize, target: &Rational, ok: impl Fn(usize) -> bool) -> Result<Rational> {
        loop {
            let end = self.stairs[j].last().expect("stairs are nonempty").clone();
            let Some((bx, btop)) = self.blocker(&end.y, &end.x, target, &ok) else {
                self.push_horizontal(j, target.clone());
                return Ok(end.y);
            };
            let xc = self.fresh_x_below(&end.x, &bx);
            let ynew = self.fresh_y_above(&btop);
            if let Some(k) = self.capped(&xc, &end.y, &ynew, &ok) {
                return Err(Error::InternalContradiction(format!(
                    "climb of rank {} at {xc} is capped by rank {}",
                    j + 1,
                    k + 1
                )));
            }
            self.push_horizontal(j, xc.clone());
            self.stairs[j].push(Point::new(xc.clone(), ynew.clone()));
            self.xs.insert(xc);
            self.ys.insert(ynew);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_segments() {
        let g = Graph::empty(3).unwrap();
        let rep = build_grounded_stairs(&g, &Ordering::identity(3)).unwrap();
        let Representation::GroundedStairs(s) = rep else { panic!("wrong kind") };
        for (v, st) in s.iter().enumerate() {
            let x = Rational::int(v as i64 + 1) * Rational::new(5, 4);
            assert_eq!(st.vertices, vec![Point::on_ground(x.clone()), Point::new(x, Rational::one())]);
        }
    }

    #[test]
    fn path_round_trip() {
        let g = Graph::path(3).unwrap();
        assert!(build_grounded_stairs(&g, &Ordering::identity(3)).is_ok());
    }

    #[test]
    fn eight_cycle_with_chords() {
        let g = Graph::new(8, (0..7).map(|i| (i, i + 1)).chain([(0, 7), (0, 4), (2, 6)])).unwrap();
        let sigma = Ordering::new(vec![0, 1, 3, 4, 5, 6, 2, 7]).unwrap();
        assert!(build_grounded_stairs(&g, &sigma).is_ok());
    }

    #[test]
    fn rejects_pab() {
        let g = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        assert!(matches!(build_grounded_stairs(&g, &Ordering::identity(4)), Err(Error::OrderingNotAvoiding { .. })));
    }
}
