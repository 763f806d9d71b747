use std::fmt::Write as _;

use patternforge::geometry::{grounding_order, Point, Rational, Representation};

const PALETTE: &[&str] = &["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"];
const MARGIN: f64 = 0.75;

/// Six decimals, trailing zeros dropped.
fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn outline(rep: &Representation, v: usize) -> (Vec<Point>, bool) {
    match rep {
        Representation::TouchingRectangles(s) => (s[v].outline().to_vec(), true),
        _ => (rep.curve(v).expect("curve kind"), false),
    }
}

/// SVG drawing: the grounding line, one polyline or polygon per shape and
/// rank labels under grounding points. `scale` is pixels per unit.
pub fn render_svg(rep: &Representation, scale: &Rational) -> String {
    let scale = scale.to_f64();
    let shapes: Vec<(Vec<(f64, f64)>, bool)> = (0..rep.len())
        .map(|v| {
            let (pts, closed) = outline(rep, v);
            (pts.iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect(), closed)
        })
        .collect();

    let all = shapes.iter().flat_map(|(pts, _)| pts.iter().copied());
    let (mut x0, mut x1, mut y1) = (0.0f64, 1.0f64, 1.0f64);
    for (i, (x, y)) in all.enumerate() {
        if i == 0 {
            (x0, x1) = (x, x);
        }
        x0 = x0.min(x);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let (left, right) = (x0 - MARGIN, x1 + MARGIN);
    let (top, bottom) = (y1 + MARGIN, -MARGIN);
    // SVG y grows downward.
    let px = |x: f64| num((x - left) * scale);
    let py = |y: f64| num((top - y) * scale);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        px(right),
        py(bottom),
        px(right),
        py(bottom)
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="2"/>"#,
        px(left),
        py(0.0),
        px(right),
        py(0.0)
    );
    for (v, (pts, closed)) in shapes.iter().enumerate() {
        let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
        let color = PALETTE[v % PALETTE.len()];
        let (tag, fill) = if *closed { ("polygon", color) } else { ("polyline", "none") };
        let opacity = if *closed { r#" fill-opacity="0.25""# } else { "" };
        let _ = writeln!(
            out,
            r#"  <{tag} points="{}" fill="{fill}"{opacity} stroke="{color}" stroke-width="2"/>"#,
            coords.join(" ")
        );
    }
    if !rep.is_empty() {
        let sigma = grounding_order(rep);
        for (rank, &v) in sigma.as_slice().iter().enumerate() {
            let x = rep.grounding_points(v).iter().map(|p| p.x.to_f64()).fold(f64::INFINITY, f64::min);
            let _ = writeln!(
                out,
                r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
                px(x),
                py(-MARGIN / 2.0),
                rank + 1
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
