//! Deterministic SVG rendering of a polygon and its elementary
//! triangulation: fixed 32 px per lattice unit, one unit of margin,
//! y axis flipped so the figure reads like graph paper. Styling is
//! constant so emitted files are byte-comparable.

use latticepick::triangulation::ElementaryTriangle;
use latticepick::{LatticePoint, Polygon};
use std::collections::BTreeSet;
use std::fmt::Write;

const UNIT: i64 = 32;

pub fn render_triangulation_svg(polygon: &Polygon, triangles: &[ElementaryTriangle]) -> String {
    let (lo, hi) = polygon.bounding_box();
    let tx = |x: i64| (x - lo.x + 1) * UNIT;
    let ty = |y: i64| (hi.y - y + 1) * UNIT;
    let width = (hi.x - lo.x + 2) * UNIT;
    let height = (hi.y - lo.y + 2) * UNIT;

    let mut edges: BTreeSet<(LatticePoint, LatticePoint)> = BTreeSet::new();
    for t in triangles {
        edges.extend(t.edge_keys());
    }

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        svg,
        "<rect width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>"
    );

    let _ = writeln!(svg, "<g stroke=\"#9aa7b0\" stroke-width=\"2\">");
    for (a, b) in &edges {
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            tx(a.x),
            ty(a.y),
            tx(b.x),
            ty(b.y)
        );
    }
    svg.push_str("</g>\n");

    let outline: Vec<String> = polygon
        .vertices()
        .iter()
        .map(|v| format!("{},{}", tx(v.x), ty(v.y)))
        .collect();
    let _ = writeln!(
        svg,
        "<polygon points=\"{}\" fill=\"none\" stroke=\"#1f3552\" stroke-width=\"4\"/>",
        outline.join(" ")
    );

    // lattice dots: boundary points in walk order, then interior points in
    // row order; one circle per lattice point of the polygon
    let _ = writeln!(svg, "<g stroke=\"none\">");
    for p in polygon.boundary_points() {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"#c0392b\"/>",
            tx(p.x),
            ty(p.y)
        );
    }
    for p in polygon.interior_points() {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"#2b6cb0\"/>",
            tx(p.x),
            ty(p.y)
        );
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}
