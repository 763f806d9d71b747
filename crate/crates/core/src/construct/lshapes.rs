use crate::error::{Error, Result};
use crate::geometry::{LShape, Rational, Representation};
use crate::graph::Graph;
use crate::oracles::is_acyclic;

use super::self_verify;

/// Touching grounded L-shapes for a forest.
///
/// Component `c` (by smallest vertex) lives in the square `[c, c+1] x [0, 1]`
/// and is rooted at its smallest vertex, whose shape is the vertical segment
/// at `x = c + 1`. Top-down, a shape `v` with free box `(x*(v), x(v)) x [0, y*(v)]`
/// places its children `v_1..v_k` (ascending id) at
/// `x(v_i) = x*(v) + i (x(v) - x*(v)) / (k+1)`, `y(v_i) = (k-i+1) y*(v) / (k+1)`,
/// all ending on `v` at `x'(v_i) = x(v)`. Child `v_i` gets the box
/// `(x(v_{i-1}), x(v_i)) x [0, y(v_i)]`, with `x(v_0) = x*(v)`.
pub fn build_touching_lshapes(g: &Graph) -> Result<Representation> {
    if !is_acyclic(g) {
        return Err(Error::NotAForest);
    }
    let n = g.n();
    let mut shapes: Vec<Option<LShape>> = vec![None; n];

    for (c, comp) in g.components().iter().enumerate() {
        let root = comp[0];
        let x = Rational::int(c as i64 + 1);
        shapes[root] = Some(LShape::new(x.clone(), x.clone(), Rational::one()));
        // (vertex, parent, x*, y*)
        let mut stack = vec![(root, usize::MAX, Rational::int(c as i64), Rational::one())];
        while let Some((v, parent, x_star, y_star)) = stack.pop() {
            let xv = shapes[v].as_ref().expect("placed before its children").x.clone();
            let children: Vec<usize> = g.neighbors(v).filter(|&w| w != parent).collect();
            let k1 = Rational::int(children.len() as i64 + 1);
            let mut prev_x = x_star.clone();
            for (i, &child) in children.iter().enumerate() {
                let i = i as i64 + 1;
                let cx = &x_star + Rational::int(i) * (&xv - &x_star) / &k1;
                let cy = Rational::int(children.len() as i64 - i + 1) * &y_star / &k1;
                shapes[child] = Some(LShape::new(cx.clone(), xv.clone(), cy.clone()));
                stack.push((child, v, prev_x, cy));
                prev_x = cx;
            }
        }
    }
    let shapes = shapes.into_iter().map(|s| s.expect("every vertex is in a component")).collect();
    self_verify(Representation::TouchingLshapes(shapes), g)
}
