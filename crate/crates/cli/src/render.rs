//! Deterministic SVG drawings of triangulations.

use std::fmt::Write;

use foldsig_core::{segment_type, Foldability, LatticePoint, SegmentType, TriangleColor, Triangulation};

/// Pixels per lattice unit.
pub const UNIT: i64 = 40;

pub const BLACK_FILL: &str = "#808080";
pub const WHITE_FILL: &str = "#ffffff";

/// Distance of an edge label from its edge, in lattice units.
const LABEL_OFFSET: f64 = 0.35;

#[derive(Debug, Clone, Copy, Default)]
pub struct RenderOptions {
    pub labels: bool,
}

/// Renders `t`. Foldable triangulations are shaded by their 2-coloring,
/// others get a uniform white fill.
pub fn render_svg(t: &Triangulation, opts: RenderOptions) -> Result<String, String> {
    let diag = t.validate();
    if !diag.is_valid {
        return Err(diag.messages().join("; "));
    }
    let hull = t.hull().map_err(|e| e.to_string())?;
    let (lo, hi) = hull.bounding_box();
    let width = (hi.x - lo.x + 2) * UNIT;
    let height = (hi.y - lo.y + 2) * UNIT;
    let screen = |p: LatticePoint| ((p.x - lo.x + 1) * UNIT, (hi.y - p.y + 1) * UNIT);
    let screen_f = |x: f64, y: f64| ((x - lo.x as f64 + 1.0) * UNIT as f64, (hi.y as f64 - y + 1.0) * UNIT as f64);

    let colors = match t.is_foldable().map_err(|e| e.to_string())? {
        Foldability::Foldable(c) => Some(c),
        Foldability::OddCycle(_) => None,
    };

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#)
        .unwrap();
    writeln!(s, r##"<g stroke="#000000" stroke-width="1.5" stroke-linejoin="round">"##).unwrap();
    for (k, tri) in t.triangles().iter().enumerate() {
        let fill = match colors.as_ref().map(|c| c.color(k)) {
            Some(TriangleColor::Black) => BLACK_FILL,
            _ => WHITE_FILL,
        };
        let pts: Vec<String> = tri
            .iter()
            .map(|&i| {
                let (x, y) = screen(t.points()[i]);
                format!("{x},{y}")
            })
            .collect();
        writeln!(s, r#"<polygon points="{}" fill="{fill}"/>"#, pts.join(" ")).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(s, r##"<g fill="#000000">"##).unwrap();
    for p in hull.lattice_census().all_points() {
        let (x, y) = screen(p);
        writeln!(s, r#"<circle cx="{x}" cy="{y}" r="3"/>"#).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    if opts.labels {
        writeln!(s, r##"<g font-family="serif" font-size="14" text-anchor="middle" dominant-baseline="middle" fill="#000000">"##)
            .unwrap();
        let mut edges = t.boundary_edges();
        edges.sort();
        for ((a, b), _) in edges {
            let (pa, pb) = (t.points()[a], t.points()[b]);
            let ty = segment_type(pa, pb).map_err(|e| e.to_string())?;
            if ty == SegmentType::Even {
                continue;
            }
            // interior lies to the left of a -> b, so outward is to the right
            let (dx, dy) = ((pb.x - pa.x) as f64, (pb.y - pa.y) as f64);
            let len = dx.hypot(dy);
            let mx = (pa.x + pb.x) as f64 / 2.0 + dy / len * LABEL_OFFSET;
            let my = (pa.y + pb.y) as f64 / 2.0 - dx / len * LABEL_OFFSET;
            let (x, y) = screen_f(mx, my);
            writeln!(s, r#"<text x="{x:.2}" y="{y:.2}">{}</text>"#, ty.label()).unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use foldsig_core::{hexagon_fig1, staircase};

    #[test]
    fn staircase_two_layout() {
        let svg = render_svg(&staircase(2).unwrap(), RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 4);
        assert_eq!(svg.matches("<circle").count(), 6);
        assert_eq!(svg.matches(BLACK_FILL).count(), 3);
        assert!(svg.contains(r#"viewBox="0 0 160 160""#));
        assert!(!svg.contains("<text"));
    }

    #[test]
    fn hexagon_labels() {
        let svg = render_svg(&hexagon_fig1(), RenderOptions { labels: true }).unwrap();
        assert_eq!(svg.matches("<text").count(), 13);
        assert_eq!(svg.matches(">XY<").count(), 3);
        assert_eq!(svg.matches(BLACK_FILL).count(), 17);
        assert_eq!(svg, render_svg(&hexagon_fig1(), RenderOptions { labels: true }).unwrap());
    }

    #[test]
    fn invalid_input_is_rejected() {
        let pts = [(0, 0), (1, 0), (0, 1), (1, 1)].map(LatticePoint::from).to_vec();
        // overlapping triangles
        let t = Triangulation::new(pts, vec![[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(render_svg(&t, RenderOptions::default()).is_err());
    }
}
