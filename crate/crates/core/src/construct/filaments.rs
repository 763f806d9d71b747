use crate::error::{Error, Result};
use crate::geometry::{intersection_graph, FilamentPolyline, Point, Rational, Representation};
use crate::graph::Graph;
use crate::ordering::Ordering;

use super::{require_avoiding, self_verify};

/// A filament under construction; positions are ranks.
struct Filament {
    left: Rational,
    plateau: Rational,
    right: Rational,
    spike: Option<Rational>,
    descent: Rational,
    /// (center, eps, top) of each chimney cut into the plateau.
    chimneys: Vec<(Rational, Rational, Rational)>,
}

impl Filament {
    fn points(&self) -> Vec<Point> {
        let mut pts = vec![Point::on_ground(self.left.clone())];
        match &self.spike {
            Some(top) => {
                pts.push(Point::new(self.left.clone(), top.clone()));
                pts.push(Point::new(&self.left + &self.descent, self.plateau.clone()));
            }
            None => pts.push(Point::new(self.left.clone(), self.plateau.clone())),
        }
        let mut chimneys = self.chimneys.clone();
        chimneys.sort();
        for (c, eps, top) in chimneys {
            let roof = &top + &eps;
            pts.push(Point::new(&c - &eps, self.plateau.clone()));
            pts.push(Point::new(&c - &eps, roof.clone()));
            pts.push(Point::new(&c + &eps, roof));
            pts.push(Point::new(&c + &eps, self.plateau.clone()));
        }
        pts.push(Point::new(self.right.clone(), self.plateau.clone()));
        pts.push(Point::on_ground(self.right.clone()));
        pts
    }

    /// Whether the plateau passes over abscissa `x`.
    fn spans(&self, x: &Rational) -> bool {
        &self.left < x && x < &self.right
    }
}

/// Interval filaments from an ordering avoiding `P_a`.
///
/// R1: rank `u` draws the square from `(u, 0)` up to `h_u = r_u - u + e_u`,
/// right to `r_u + e_u` and down, where `r_u` is its rightmost neighbour
/// rank and `e_u = (n - u + 1) / (n + 1)`. R2: `v` raises a spike to the
/// plateau of the highest earlier neighbour it does not meet yet. R3: at
/// each spike, from the highest crossing plateau down, plateaus of
/// non-neighbours detour over the spike through chimneys of shrinking width.
///
/// Chimneys start at `min(1/4, gap above the spike, 1/(n+1)) / 2` and halve,
/// so they stay clear of every other vertical. The spike descent is
/// narrower than the narrowest chimney around it. Denominators stay within
/// `(n+1)^2 2^(n+2)` times small constants.
pub fn build_interval_filaments(g: &Graph, sigma: &Ordering) -> Result<Representation> {
    sigma.check_for(g)?;
    require_avoiding(g, sigma, "a".parse().expect("valid subset"))?;
    let n = g.n();
    let order = sigma.as_slice();
    let pos = sigma.positions();
    let n1 = Rational::int(n as i64 + 1);
    // Rank-indexed adjacency, ranks 1..=n at indices 0..n.
    let adj = |a: usize, b: usize| g.has_edge(order[a], order[b]);

    let mut fils: Vec<Filament> = (0..n)
        .map(|a| {
            let u = a as i64 + 1;
            let r = g.neighbors(order[a]).map(|w| pos[w] as i64 + 1).max().unwrap_or(u).max(u);
            let eps = Rational::int(n as i64 - u + 1) / &n1;
            Filament {
                left: Rational::int(u),
                plateau: Rational::int(r - u) + &eps,
                right: Rational::int(r) + &eps,
                spike: None,
                descent: Rational::zero(),
                chimneys: Vec::new(),
            }
        })
        .collect();

    // R2
    let r1 = intersection_graph(&Representation::IntervalFilaments(
        fils.iter().map(|f| FilamentPolyline { vertices: f.points() }).collect(),
    ));
    for b in 0..n {
        let w =
            (0..b).filter(|&a| adj(a, b) && !r1.has_edge(a, b)).max_by(|&x, &y| fils[x].plateau.cmp(&fils[y].plateau));
        if let Some(a) = w {
            fils[b].spike = Some(fils[a].plateau.clone());
        }
    }

    // R3
    let base_width = Rational::new(1, 2) / &n1;
    for u in 0..n {
        let Some(top) = fils[u].spike.clone() else {
            fils[u].descent = base_width.clone();
            continue;
        };
        let x = fils[u].left.clone();
        let low = fils[u].plateau.clone();
        let mut crossing: Vec<usize> = (0..n)
            .filter(|&v| v != u && fils[v].spans(&x) && fils[v].plateau > low && fils[v].plateau <= top)
            .collect();
        crossing.sort_by(|&a, &b| fils[b].plateau.cmp(&fils[a].plateau));

        let mut eps = Rational::new(1, 4).min(Rational::one() / &n1);
        if let Some(gap) =
            (0..n).filter(|&z| fils[z].spans(&x) && fils[z].plateau > top).map(|z| &fils[z].plateau - &top).min()
        {
            eps = eps.min(gap);
        }
        eps = eps / Rational::int(2);

        let mut narrowest: Option<Rational> = None;
        let mut kept: Vec<usize> = Vec::new();
        for v in crossing {
            if adj(u, v) {
                kept.push(v);
                continue;
            }
            if let Some(&w) = kept.iter().find(|&&w| !adj(v, w)) {
                return Err(Error::InternalContradiction(format!(
                    "ranks {} and {} both cross the spike of rank {} but are not adjacent",
                    w + 1,
                    v + 1,
                    u + 1
                )));
            }
            fils[v].chimneys.push((x.clone(), eps.clone(), top.clone()));
            narrowest = Some(eps.clone());
            eps = eps / Rational::int(2);
        }
        fils[u].descent = match narrowest {
            Some(e) => (e / Rational::int(2)).min(base_width.clone()),
            None => base_width.clone(),
        };
    }

    let mut shapes: Vec<Option<FilamentPolyline>> = vec![None; n];
    for (a, f) in fils.iter().enumerate() {
        shapes[order[a]] = Some(FilamentPolyline { vertices: f.points() });
    }
    let shapes = shapes.into_iter().map(|s| s.expect("one filament per rank")).collect();
    self_verify(Representation::IntervalFilaments(shapes), g)
}
