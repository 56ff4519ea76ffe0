//! Independent certification of drawing properties, in exact integer
//! arithmetic only.
//!
//! Every check re-derives what it needs from coordinates and reports a
//! counterexample that re-checks as violating. Intermediate products of two
//! coordinates fit `i128`; the lone angle-gap comparison that does not goes
//! through big integers in [`crate::geom`].

use crate::geom::{
    cmp_angle, cmp_angle_gap, cw_sweep_convex, in_relative_interior, on_hull_boundary,
    segments_intersect, convex_hull, IVec, Point,
};
use crate::graph::{EmbeddedGraph, VertexId};
use crate::layout::{GridDrawing, RangeWitness};
use crate::leaders::{covered_leaves, leader_edges, LeaderRecord};
use crate::tree::RootedOrderedTree;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("vertex {0} has no coordinates")]
    MissingCoordinates(VertexId),
    #[error("witness has no range for vertex {0}")]
    MissingWitness(VertexId),
}

/// Payload that re-checks as violating the failed property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    VertexPair(VertexId, VertexId),
    EdgePair((VertexId, VertexId), (VertexId, VertexId)),
    /// Vertex with the two neighbor endpoints spanning a bad angle.
    AngleTriple(VertexId, VertexId, VertexId),
    VertexOnEdge(VertexId, (VertexId, VertexId)),
    /// Witness range or margin broken at a vertex (direction pair attached).
    WitnessRange(VertexId, IVec, IVec),
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::VertexPair(a, b) => write!(f, "vertices {a} {b}"),
            Counterexample::EdgePair(e1, e2) => {
                write!(f, "edges {}-{} {}-{}", e1.0, e1.1, e2.0, e2.1)
            }
            Counterexample::AngleTriple(v, a, b) => write!(f, "angle {a}-{v}-{b}"),
            Counterexample::VertexOnEdge(v, e) => {
                write!(f, "vertex {v} on edge {}-{}", e.0, e.1)
            }
            Counterexample::WitnessRange(v, lo, hi) => {
                write!(f, "witness at {v}: ({},{})..({},{})", lo.x, lo.y, hi.x, hi.y)
            }
        }
    }
}

/// Pass/fail with an optional witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckVerdict {
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl CheckVerdict {
    pub fn pass() -> Self {
        CheckVerdict { pass: true, counterexample: None }
    }

    pub fn fail(cx: Counterexample) -> Self {
        CheckVerdict { pass: false, counterexample: Some(cx) }
    }

    pub fn is_pass(&self) -> bool {
        self.pass
    }

    pub fn render(&self, name: &str) -> String {
        match (&self.pass, &self.counterexample) {
            (true, _) => format!("CHECK {name} pass"),
            (false, Some(cx)) => format!("CHECK {name} fail [{cx}]"),
            (false, None) => format!("CHECK {name} fail"),
        }
    }
}

fn require_coords(g: &EmbeddedGraph, d: &GridDrawing) -> Result<(), VerifyError> {
    for v in g.vertices() {
        if d.get(v).is_none() {
            return Err(VerifyError::MissingCoordinates(v));
        }
    }
    Ok(())
}

/// No two edge segments intersect except at shared endpoints, and no vertex
/// lies in the relative interior of a non-incident edge.
pub fn check_planar_drawing(g: &EmbeddedGraph, d: &GridDrawing) -> CheckVerdict {
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let vertices: Vec<VertexId> = g.vertices().collect();
    check_planar_segments(d, &edges, &vertices)
}

/// Planarity over an explicit edge subset (intermediate pipeline stages).
pub fn check_planar_segments(
    d: &GridDrawing,
    edges: &[(VertexId, VertexId)],
    vertices: &[VertexId],
) -> CheckVerdict {
    // distinct vertices at distinct points
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if d.point(a) == d.point(b) {
                return CheckVerdict::fail(Counterexample::VertexPair(a, b));
            }
        }
    }
    // no vertex inside a non-incident edge
    for &v in vertices {
        for &(a, b) in edges {
            if v == a || v == b {
                continue;
            }
            if in_relative_interior(d.point(v), d.point(a), d.point(b)) {
                return CheckVerdict::fail(Counterexample::VertexOnEdge(v, (a, b)));
            }
        }
    }
    // segment pairs without shared endpoints must be fully disjoint
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, e) in &edges[i + 1..] {
            if a == c || a == e || b == c || b == e {
                continue;
            }
            if segments_intersect(d.point(a), d.point(b), d.point(c), d.point(e)) {
                return CheckVerdict::fail(Counterexample::EdgePair((a, b), (c, e)));
            }
        }
    }
    CheckVerdict::pass()
}

/// Tree-path monotonicity for every vertex pair: the path's direction vectors
/// must fit an open half-plane, i.e. some circular gap exceeds pi.
pub fn check_monotone(g: &EmbeddedGraph, t: &RootedOrderedTree, d: &GridDrawing) -> CheckVerdict {
    let vertices: Vec<VertexId> = g.vertices().collect();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if !path_is_monotone(t, d, a, b) {
                return CheckVerdict::fail(Counterexample::VertexPair(a, b));
            }
        }
    }
    CheckVerdict::pass()
}

fn path_is_monotone(t: &RootedOrderedTree, d: &GridDrawing, a: VertexId, b: VertexId) -> bool {
    let path = t.tree_path(a, b);
    let mut dirs: Vec<IVec> = path
        .windows(2)
        .map(|w| d.point(w[0]).to(d.point(w[1])).primitive())
        .collect();
    dirs.sort_by(|&x, &y| cmp_angle(x, y));
    dirs.dedup();
    match dirs.len() {
        0 | 1 => true,
        _ => (0..dirs.len()).any(|i| {
            let a = dirs[i];
            let b = dirs[(i + 1) % dirs.len()];
            // the counter-clockwise gap from a to b exceeds pi
            a.cross(b) < 0
        }),
    }
}

/// Validates a slope-disjointness witness against the drawing:
/// every subtree/entering edge inside the vertex range, child ranges nested
/// in parent ranges, sibling ranges strictly disjoint, and the recorded
/// margin pair no wider than any realized angular gap.
pub fn check_slope_disjoint(
    t: &RootedOrderedTree,
    d: &GridDrawing,
    w: &RangeWitness,
) -> Result<CheckVerdict, VerifyError> {
    for &v in t.preorder() {
        if !w.contains_vertex(v) {
            return Err(VerifyError::MissingWitness(v));
        }
    }
    let dir_of = |child: VertexId| {
        let p = t.parent(child).expect("edge child");
        d.point(p).to(d.point(child)).primitive()
    };
    let in_range = |dir: IVec, lo: IVec, hi: IVec| {
        lo.cross(dir) >= 0 && dir.cross(hi) >= 0
    };

    // condition 1: each edge lies in the range of the subtree roots above it
    for &c in t.preorder() {
        if t.parent(c).is_none() {
            continue;
        }
        let dir = dir_of(c);
        let mut holder = c;
        loop {
            let (lo, hi) = w.range(holder).unwrap();
            if !in_range(dir, lo, hi) {
                return Ok(CheckVerdict::fail(Counterexample::WitnessRange(holder, lo, hi)));
            }
            match t.parent(holder) {
                Some(p) => holder = p,
                None => break,
            }
        }
    }
    // condition 2: child ranges nest inside parent ranges
    for &p in t.preorder() {
        let (plo, phi) = w.range(p).unwrap();
        for &c in t.children(p) {
            let (clo, chi) = w.range(c).unwrap();
            if plo.cross(clo) < 0 || chi.cross(phi) < 0 || clo.cross(chi) < 0 {
                return Ok(CheckVerdict::fail(Counterexample::WitnessRange(c, clo, chi)));
            }
        }
    }
    // condition 3: sibling ranges strictly disjoint
    for &p in t.preorder() {
        let kids = t.children(p);
        for (i, &a) in kids.iter().enumerate() {
            for &b in &kids[i + 1..] {
                let (alo, ahi) = w.range(a).unwrap();
                let (blo, bhi) = w.range(b).unwrap();
                let a_below_b = ahi.cross(blo) > 0;
                let b_below_a = bhi.cross(alo) > 0;
                if !(a_below_b || b_below_a) {
                    return Ok(CheckVerdict::fail(Counterexample::WitnessRange(b, blo, bhi)));
                }
            }
        }
    }
    // margin: the recorded minimum-gap pair under-bounds every realized gap
    if let Some((glo, ghi)) = w.min_gap() {
        let known: BTreeSet<IVec> = w.directions().iter().copied().collect();
        for &c in t.preorder() {
            if t.parent(c).is_none() {
                continue;
            }
            let dir = dir_of(c);
            if !known.contains(&dir) {
                return Ok(CheckVerdict::fail(Counterexample::WitnessRange(c, dir, dir)));
            }
        }
        for pair in w.directions().windows(2) {
            if cmp_angle_gap(pair[0], pair[1], glo, ghi) == Ordering::Less {
                return Ok(CheckVerdict::fail(Counterexample::WitnessRange(
                    t.root(),
                    pair[0],
                    pair[1],
                )));
            }
        }
    }
    Ok(CheckVerdict::pass())
}

/// Consecutive incident edges must span angles in `(0, pi]`. At the root the
/// fan of children is read linearly (its outer wedge is no pair), and one
/// reflex fan pair is tolerated there; everywhere else the full cycle of
/// parent plus children must be convex.
pub fn check_near_convex(t: &RootedOrderedTree, d: &GridDrawing) -> CheckVerdict {
    match near_convex_scan(t, d) {
        Ok(_) => CheckVerdict::pass(),
        Err(cx) => CheckVerdict::fail(cx),
    }
}

/// Number of tolerated reflex fan pairs the drawing actually uses at the root.
pub fn root_exception_count(t: &RootedOrderedTree, d: &GridDrawing) -> usize {
    near_convex_scan(t, d).unwrap_or(usize::MAX)
}

fn near_convex_scan(t: &RootedOrderedTree, d: &GridDrawing) -> Result<usize, Counterexample> {
    let mut root_exceptions = 0usize;
    for &v in t.preorder() {
        let origin = d.point(v);
        let mut fan: Vec<(VertexId, IVec)> = Vec::new();
        if let Some(p) = t.parent(v) {
            fan.push((p, origin.to(d.point(p))));
        }
        for &c in t.children(v) {
            fan.push((c, origin.to(d.point(c))));
        }
        if fan.len() < 2 {
            continue;
        }
        let cyclic = t.parent(v).is_some();
        let pairs = if cyclic { fan.len() } else { fan.len() - 1 };
        for i in 0..pairs {
            let (na, da) = fan[i];
            let (nb, db) = fan[(i + 1) % fan.len()];
            if cw_sweep_convex(da, db) {
                continue;
            }
            if !cyclic && root_exceptions == 0 {
                root_exceptions += 1;
                continue;
            }
            return Err(Counterexample::AngleTriple(v, na, nb));
        }
    }
    Ok(root_exceptions)
}

/// Hull property of a leader edge: every vertex of `N(e)` lies on the convex
/// hull boundary of `N(e)`, and every ordinary edge sharing the leader's
/// covered set has one endpoint on each descent path.
pub fn check_hull_property(
    g: &EmbeddedGraph,
    t: &RootedOrderedTree,
    d: &GridDrawing,
    rec: &LeaderRecord,
) -> CheckVerdict {
    let boundary: Vec<VertexId> = rec.boundary_set().into_iter().collect();
    let points: Vec<Point> = boundary.iter().map(|&v| d.point(v)).collect();
    let hull = convex_hull(&points);
    for (&v, &p) in boundary.iter().zip(&points) {
        if !on_hull_boundary(p, &hull) {
            return CheckVerdict::fail(Counterexample::VertexOnEdge(v, rec.edge));
        }
    }

    let tree_edges = t.edge_set();
    let leaders: BTreeSet<(VertexId, VertexId)> = match leader_edges(g, t) {
        Ok(list) => list.into_iter().map(|r| r.edge).collect(),
        Err(_) => return CheckVerdict::fail(Counterexample::EdgePair(rec.edge, rec.edge)),
    };
    let set_u: BTreeSet<VertexId> = rec.path_u.iter().copied().collect();
    let set_v: BTreeSet<VertexId> = rec.path_v.iter().copied().collect();
    for e in g.edges() {
        if tree_edges.contains(&e) || leaders.contains(&e) {
            continue;
        }
        let covered = match covered_leaves(g, t, e) {
            Ok(c) => c,
            Err(_) => continue,
        };
        if covered != rec.covered {
            continue;
        }
        let split = (set_u.contains(&e.0) && set_v.contains(&e.1))
            || (set_u.contains(&e.1) && set_v.contains(&e.0));
        if !split {
            return CheckVerdict::fail(Counterexample::EdgePair(rec.edge, e));
        }
    }
    CheckVerdict::pass()
}

/// Grid-size summary of a finished drawing against its bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridReport {
    pub width: i64,
    pub height: i64,
    /// `S + L (S + 1)`: tree side plus one tree-side-plus-one per leader.
    pub ledger_bound: i64,
    /// `2 (k + 1) n`.
    pub paper_bound: i64,
    pub fits_ledger: bool,
    pub fits_paper: bool,
    pub fits_n_by_n: bool,
}

pub fn grid_report(d: &GridDrawing, n: usize, k: usize, tree_side: i64, leaders: usize) -> GridReport {
    let (width, height) = d.extent();
    let side = width.max(height);
    let ledger_bound = tree_side + leaders as i64 * (tree_side + 1);
    let paper_bound = 2 * (k as i64 + 1) * n as i64;
    GridReport {
        width,
        height,
        ledger_bound,
        paper_bound,
        fits_ledger: side <= ledger_bound,
        fits_paper: side <= paper_bound,
        fits_n_by_n: side <= n as i64,
    }
}

/// Missing-coordinate guard shared by the CLI.
pub fn ensure_drawing_covers(g: &EmbeddedGraph, d: &GridDrawing) -> Result<(), VerifyError> {
    require_coords(g, d)
}
