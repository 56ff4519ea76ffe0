//! Monotone tree drawings on the integer grid.
//!
//! The drawer numbers the leaves of the ordered tree 1..L in child order and
//! maps the leaf interval `[i, j]` of each vertex to the direction vector
//! `primitive(i - 1, L - j + 1)`. The leaf slope `(L - t + 1) / (t - 1)` is
//! strictly decreasing in `t`, so children of a vertex, read clockwise, get
//! strictly decreasing slopes; every edge direction of a subtree stays inside
//! the angular range spanned by the subtree's own leaves. That yields a
//! monotone, non-strictly slope-disjoint, near-convex drawing in the first
//! quadrant. A unit shear `(x, y) -> (x, x + y)` then moves it into the
//! second octant without disturbing any cross-product comparison.

use crate::geom::{cmp_angle_gap, cmp_slope, IVec, Point};
use crate::graph::VertexId;
use crate::tree::RootedOrderedTree;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LayoutError {
    #[error("drawing leaves the first quadrant at {0}: ({1}, {2})")]
    NotFirstQuadrant(VertexId, i64, i64),
}

/// Pipeline stage a drawing belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Tree,
    AfterLeaders,
    Final,
}

/// A straight-line grid drawing: vertex -> nonnegative integer point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDrawing {
    coords: BTreeMap<VertexId, Point>,
    stage: Stage,
}

impl GridDrawing {
    pub fn new(coords: BTreeMap<VertexId, Point>, stage: Stage) -> Self {
        debug_assert!(coords.values().all(|p| p.x >= 0 && p.y >= 0));
        GridDrawing { coords, stage }
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn set_stage(&mut self, stage: Stage) {
        self.stage = stage;
    }

    pub fn get(&self, v: VertexId) -> Option<Point> {
        self.coords.get(&v).copied()
    }

    pub fn point(&self, v: VertexId) -> Point {
        self.coords[&v]
    }

    pub fn set_point(&mut self, v: VertexId, p: Point) {
        self.coords.insert(v, p);
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Point)> + '_ {
        self.coords.iter().map(|(&v, &p)| (v, p))
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Grid extent (max x, max y); drawings are anchored at the origin.
    pub fn extent(&self) -> (i64, i64) {
        let w = self.coords.values().map(|p| p.x).max().unwrap_or(0);
        let h = self.coords.values().map(|p| p.y).max().unwrap_or(0);
        (w, h)
    }

    /// The larger of the two grid dimensions.
    pub fn side(&self) -> i64 {
        let (w, h) = self.extent();
        w.max(h)
    }

    /// `p <id> <x> <y>` lines, one per vertex.
    pub fn dump_coords(&self) -> String {
        let mut out = String::new();
        for (v, p) in self.iter() {
            out.push_str(&format!("p {} {} {}\n", v, p.x, p.y));
        }
        out
    }
}

/// 1-based leaf intervals `[first, last]` per vertex, by child-order leaf
/// numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalTable {
    first: BTreeMap<VertexId, u32>,
    last: BTreeMap<VertexId, u32>,
    leaf_total: u32,
}

impl IntervalTable {
    pub fn interval(&self, v: VertexId) -> (u32, u32) {
        (self.first[&v], self.last[&v])
    }

    pub fn leaf_total(&self) -> u32 {
        self.leaf_total
    }
}

pub fn leaf_intervals(t: &RootedOrderedTree) -> IntervalTable {
    let mut first = BTreeMap::new();
    let mut last = BTreeMap::new();
    let mut counter = 0u32;
    // preorder guarantees children are numbered after their parent started,
    // so a reverse sweep fills internal vertices from their children
    for &v in t.preorder() {
        if t.is_leaf(v) {
            counter += 1;
            first.insert(v, counter);
            last.insert(v, counter);
        }
    }
    for &v in t.preorder().iter().rev() {
        if !t.is_leaf(v) {
            let kids = t.children(v);
            first.insert(v, first[&kids[0]]);
            last.insert(v, last[kids.last().unwrap()]);
        }
    }
    IntervalTable { first, last, leaf_total: counter }
}

/// Per-vertex inclusive direction interval `[lo, hi]` (by slope angle)
/// certifying non-strict slope disjointness.
///
/// The certified ranges are the degenerate intervals inflated by an implicit
/// margin `delta`, a third of the smallest positive angular gap between any
/// two realized directions (`min_gap` stores the pair attaining that gap).
/// Since every realized direction is at least `3 * delta` away from any other,
/// the inflated-range conditions reduce to exact comparisons on `lo`/`hi`:
/// containment is non-strict, sibling disjointness strict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeWitness {
    ranges: BTreeMap<VertexId, (IVec, IVec)>,
    /// All distinct realized edge/boundary directions, sorted by slope.
    directions: Vec<IVec>,
    /// Consecutive pair realizing the minimum positive angular gap.
    min_gap: Option<(IVec, IVec)>,
}

impl RangeWitness {
    pub fn range(&self, v: VertexId) -> Option<(IVec, IVec)> {
        self.ranges.get(&v).copied()
    }

    pub fn ranges(&self) -> impl Iterator<Item = (VertexId, (IVec, IVec))> + '_ {
        self.ranges.iter().map(|(&v, &r)| (v, r))
    }

    pub fn directions(&self) -> &[IVec] {
        &self.directions
    }

    pub fn min_gap(&self) -> Option<(IVec, IVec)> {
        self.min_gap
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.ranges.contains_key(&v)
    }

    /// `w <id> <lox> <loy> <hix> <hiy>` lines.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (v, (lo, hi)) in self.ranges() {
            out.push_str(&format!("w {} {} {} {} {}\n", v, lo.x, lo.y, hi.x, hi.y));
        }
        out
    }

    fn from_parts(ranges: BTreeMap<VertexId, (IVec, IVec)>, raw_directions: Vec<IVec>) -> Self {
        let mut directions: Vec<IVec> = raw_directions.into_iter().map(IVec::primitive).collect();
        directions.sort_by(|&a, &b| cmp_slope(a, b));
        directions.dedup();
        let min_gap = directions
            .windows(2)
            .map(|w| (w[0], w[1]))
            .min_by(|&(a, b), &(c, d)| cmp_angle_gap(a, b, c, d));
        RangeWitness { ranges, directions, min_gap }
    }

    #[cfg(test)]
    pub(crate) fn corrupt_swap(&mut self, a: VertexId, b: VertexId) {
        let ra = self.ranges[&a];
        let rb = self.ranges[&b];
        self.ranges.insert(a, rb);
        self.ranges.insert(b, ra);
    }
}

/// Frozen parent-to-vertex vectors of the tree-stage drawing. Later pipeline
/// stages rescale edges but never alter these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefVectorTable {
    vectors: BTreeMap<VertexId, IVec>,
}

impl RefVectorTable {
    pub fn get(&self, v: VertexId) -> Option<IVec> {
        self.vectors.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, IVec)> + '_ {
        self.vectors.iter().map(|(&v, &d)| (v, d))
    }

    /// Reads the parent-to-vertex vectors off a drawing of the tree.
    pub fn from_drawing(t: &RootedOrderedTree, d: &GridDrawing) -> Self {
        let vectors = t
            .preorder()
            .iter()
            .filter_map(|&v| {
                t.parent(v).map(|p| (v, d.point(p).to(d.point(v))))
            })
            .collect();
        RefVectorTable { vectors }
    }
}

fn leaf_vector(t: u32, leaf_total: u32) -> IVec {
    IVec::new(t as i64 - 1, (leaf_total - t + 1) as i64)
}

/// Draws the tree in the first quadrant with the root at the origin.
pub fn layout_first_quadrant(t: &RootedOrderedTree) -> (GridDrawing, RangeWitness) {
    let intervals = leaf_intervals(t);
    let total = intervals.leaf_total();

    let mut coords = BTreeMap::new();
    coords.insert(t.root(), Point::new(0, 0));
    let mut ranges = BTreeMap::new();
    let mut raw_directions = Vec::new();

    for &v in t.preorder() {
        let (i, j) = intervals.interval(v);
        let lo = leaf_vector(j, total).primitive();
        let hi = leaf_vector(i, total).primitive();
        ranges.insert(v, (lo, hi));
        raw_directions.push(lo);
        raw_directions.push(hi);
        if let Some(p) = t.parent(v) {
            let dir = IVec::new(i as i64 - 1, (total - j + 1) as i64).primitive();
            raw_directions.push(dir);
            let pos = coords[&p].translate(dir, 1);
            coords.insert(v, pos);
        }
    }

    let drawing = GridDrawing::new(coords, Stage::Tree);
    let witness = RangeWitness::from_parts(ranges, raw_directions);
    (drawing, witness)
}

/// Applies the unit shear `(x, y) -> (x, x + y)`, carrying the drawing from
/// the first quadrant into the second octant. The map has determinant one,
/// so every orientation and ordering predicate is preserved verbatim.
pub fn shear_second_octant(
    d: &GridDrawing,
    w: &RangeWitness,
) -> Result<(GridDrawing, RangeWitness), LayoutError> {
    for (v, p) in d.iter() {
        if p.x < 0 || p.y < 0 {
            return Err(LayoutError::NotFirstQuadrant(v, p.x, p.y));
        }
    }
    let shear_point = |p: Point| Point::new(p.x, p.x + p.y);
    let shear_vec = |v: IVec| IVec::new(v.x, v.x + v.y);

    let coords = d.iter().map(|(v, p)| (v, shear_point(p))).collect();
    let ranges = w
        .ranges()
        .map(|(v, (lo, hi))| (v, (shear_vec(lo), shear_vec(hi))))
        .collect();
    let raw_directions = w.directions().iter().map(|&v| shear_vec(v)).collect();
    Ok((
        GridDrawing::new(coords, Stage::Tree),
        RangeWitness::from_parts(ranges, raw_directions),
    ))
}

/// First-quadrant layout followed by the octant shear; reference vectors are
/// recorded from the sheared drawing and stay fixed from here on.
pub fn layout_tree(t: &RootedOrderedTree) -> (GridDrawing, RangeWitness, RefVectorTable) {
    let (quadrant, witness) = layout_first_quadrant(t);
    let (octant, witness) =
        shear_second_octant(&quadrant, &witness).expect("quadrant layout is nonnegative");
    let refs = RefVectorTable::from_drawing(t, &octant);
    (octant, witness, refs)
}

/// Compare two directions by slope angle; helper shared with the verifier.
pub fn slope_cmp(a: IVec, b: IVec) -> Ordering {
    cmp_slope(a, b)
}
