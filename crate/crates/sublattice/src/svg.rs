//! Plain SVG outline of a polygon over its integer points.

use std::fmt::Write;

use sublattice_core::{Polygon, Sublattice};

const UNIT: i64 = 40;

/// Grey dots for `ℤ²`, filled black dots for the sublattice, and the outline.
pub fn polygon_svg(p: &Polygon, lattice: Option<&Sublattice>) -> String {
    let (x0, x1) = p.x1_range();
    let (y0, y1) = p.x2_range();
    let (x0, x1, y0, y1) = (x0 - 1, x1 + 1, y0 - 1, y1 + 1);
    let sx = |x: i64| (x - x0) * UNIT;
    let sy = |y: i64| (y1 - y) * UNIT;
    let mut s = String::new();
    let (w, h) = ((x1 - x0) * UNIT, (y1 - y0) * UNIT);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    for x in x0..=x1 {
        for y in y0..=y1 {
            let on = lattice.is_some_and(|l| l.contains((x, y).into()));
            let (r, fill) = if on { (5, "black") } else { (2, "grey") };
            let _ = writeln!(
                s,
                r#"  <circle cx="{}" cy="{}" r="{r}" fill="{fill}"/>"#,
                sx(x),
                sy(y)
            );
        }
    }
    let pts: Vec<String> = p
        .vertices()
        .iter()
        .map(|v| format!("{},{}", sx(v.x1), sy(v.x2)))
        .collect();
    let _ = writeln!(
        s,
        r#"  <polygon points="{}" fill="none" stroke="blue" stroke-width="2"/>"#,
        pts.join(" ")
    );
    s.push_str("</svg>\n");
    s
}
