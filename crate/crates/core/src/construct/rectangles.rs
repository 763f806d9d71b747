use crate::error::Result;
use crate::geometry::{DiagonalRectangle, Rational, Representation};
use crate::graph::Graph;
use crate::ordering::Ordering;
use crate::pattern::PsSubset;

use super::{require_avoiding, self_verify};

/// Touching diagonal rectangles from an ordering avoiding `P_empty`.
///
/// The vertex of rank `t` is grounded at `(t, 0)`. With `t_l` and `t_r`
/// the ranks of its leftmost and rightmost neighbours (`t` itself when
/// there are none), its corners are `((t+t_l)/2, (t-t_l)/2)`,
/// `((t+t_r)/2, (t_r-t)/2)` and `((t_l+t_r)/2, (t_r-t_l)/2)`.
pub fn build_touching_rectangles(g: &Graph, sigma: &Ordering) -> Result<Representation> {
    sigma.check_for(g)?;
    require_avoiding(g, sigma, PsSubset::EMPTY)?;
    let pos = sigma.positions();
    let shapes = (0..g.n())
        .map(|v| {
            let t = pos[v] as i64 + 1;
            let ranks: Vec<i64> = g.neighbors(v).map(|w| pos[w] as i64 + 1).collect();
            let tl = ranks.iter().copied().min().unwrap_or(t).min(t);
            let tr = ranks.iter().copied().max().unwrap_or(t).max(t);
            DiagonalRectangle::from_uv(&Rational::int(t), &Rational::int(tl), &Rational::int(tr))
        })
        .collect();
    self_verify(Representation::TouchingRectangles(shapes), g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::geometry::Point;

    #[test]
    fn k2_touches_at_one_point() {
        let g = Graph::complete(2).unwrap();
        let Representation::TouchingRectangles(s) = build_touching_rectangles(&g, &Ordering::identity(2)).unwrap()
        else {
            panic!("wrong kind");
        };
        let meet = Point::new(Rational::new(3, 2), Rational::new(1, 2));
        assert_eq!(s[0].right_corner, meet);
        assert_eq!(s[0].top_corner, meet);
        assert_eq!(s[1].left_corner, meet);
    }

    #[test]
    fn isolated_vertex_is_a_point() {
        let g = Graph::empty(1).unwrap();
        let Representation::TouchingRectangles(s) = build_touching_rectangles(&g, &Ordering::identity(1)).unwrap()
        else {
            panic!("wrong kind");
        };
        assert_eq!(s[0].top_corner, Point::new(1, 0));
    }

    #[test]
    fn c4_and_rejection() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(build_touching_rectangles(&c4, &Ordering::identity(4)).is_ok());
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(
            build_touching_rectangles(&k4, &Ordering::identity(4)),
            Err(Error::OrderingNotAvoiding { .. })
        ));
    }
}
