//! Deterministic SVG rendering of drawings.
//!
//! Tree edges are solid, leader edges dashed, ordinary edges light; the grid
//! y-axis points up, so screen coordinates are flipped.

use crate::graph::{EmbeddedGraph, VertexId};
use crate::layout::GridDrawing;
use crate::leaders::{leader_edges, LeaderError};
use crate::tree::RootedOrderedTree;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SvgError {
    #[error("scale must be at least 1")]
    BadScale,
    #[error("vertex {0} has no coordinates")]
    MissingCoordinates(VertexId),
    #[error(transparent)]
    Leaders(#[from] LeaderError),
}

/// Visual parameters; all lengths in pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderStyle {
    /// Pixels per grid unit.
    pub scale: u32,
    pub vertex_radius: u32,
    pub margin: u32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle { scale: 40, vertex_radius: 9, margin: 30 }
    }
}

pub fn render_svg(
    g: &EmbeddedGraph,
    t: &RootedOrderedTree,
    d: &GridDrawing,
    style: &RenderStyle,
) -> Result<String, SvgError> {
    if style.scale < 1 {
        return Err(SvgError::BadScale);
    }
    for v in g.vertices() {
        if d.get(v).is_none() {
            return Err(SvgError::MissingCoordinates(v));
        }
    }

    let tree_edges = t.edge_set();
    let leaders: BTreeSet<(VertexId, VertexId)> =
        leader_edges(g, t)?.into_iter().map(|r| r.edge).collect();

    let (w, h) = d.extent();
    let scale = style.scale as i64;
    let margin = style.margin as i64;
    let width = w * scale + 2 * margin;
    let height = h * scale + 2 * margin;
    let px = |x: i64| x * scale + margin;
    let py = |y: i64| (h - y) * scale + margin;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(
        "  <style>\n\
         .tree { stroke: #1a1a1a; stroke-width: 2.5; }\n\
         .leader { stroke: #c0392b; stroke-width: 2; stroke-dasharray: 7 5; }\n\
         .ordinary { stroke: #9aa7b1; stroke-width: 1.5; }\n\
         .vertex { fill: #ffffff; stroke: #1a1a1a; stroke-width: 1.5; }\n\
         text { font: 11px monospace; text-anchor: middle; dominant-baseline: central; }\n\
         </style>\n",
    );

    for (a, b) in g.edges() {
        let class = if tree_edges.contains(&(a, b)) {
            "tree"
        } else if leaders.contains(&(a, b)) {
            "leader"
        } else {
            "ordinary"
        };
        let pa = d.point(a);
        let pb = d.point(b);
        out.push_str(&format!(
            "  <line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            px(pa.x),
            py(pa.y),
            px(pb.x),
            py(pb.y)
        ));
    }
    for (v, p) in d.iter() {
        out.push_str(&format!(
            "  <circle class=\"vertex\" cx=\"{0}\" cy=\"{1}\" r=\"{2}\"/>\n  <text x=\"{0}\" y=\"{1}\">{3}</text>\n",
            px(p.x),
            py(p.y),
            style.vertex_radius,
            v
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assemble::{draw_monotone, LambdaMode};
    use crate::graph::testutil::instance_b;

    #[test]
    fn k4_edge_classes() {
        let g = instance_b();
        let (d, t, _) = draw_monotone(&g, LambdaMode::Strict, 100_000).unwrap();
        let svg = render_svg(&g, &t, &d, &RenderStyle::default()).unwrap();
        assert_eq!(svg.matches("class=\"tree\"").count(), 3);
        assert_eq!(svg.matches("class=\"leader\"").count(), 1);
        assert_eq!(svg.matches("class=\"ordinary\"").count(), 2);
        // deterministic output
        let again = render_svg(&g, &t, &d, &RenderStyle::default()).unwrap();
        assert_eq!(svg, again);
    }

    #[test]
    fn single_vertex_renders_one_circle() {
        let g = crate::graph::parse_embedded_graph("n 1\nv 1:\nouter: 1\nroot: 1\n").unwrap();
        let (d, t, _) = draw_monotone(&g, LambdaMode::Strict, 10).unwrap();
        let svg = render_svg(&g, &t, &d, &RenderStyle::default()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<line").count(), 0);
    }

    #[test]
    fn zero_scale_is_an_error() {
        let g = instance_b();
        let (d, t, _) = draw_monotone(&g, LambdaMode::Strict, 100_000).unwrap();
        let style = RenderStyle { scale: 0, ..RenderStyle::default() };
        assert_eq!(render_svg(&g, &t, &d, &style), Err(SvgError::BadScale));
    }
}
