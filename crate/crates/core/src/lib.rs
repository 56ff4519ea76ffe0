//! Planar monotone grid drawings of k-inner plane graphs.
//!
//! An embedded plane graph whose drawing keeps at most `k` vertices off the
//! outer face admits a planar monotone drawing on a small integer grid. This
//! crate implements the whole pipeline — good spanning tree selection,
//! a monotone near-convex tree layout in the second octant, leader-edge
//! insertion by dependency order with integer elongations, and insertion of
//! the remaining edges — together with exact-arithmetic verifiers for every
//! property the pipeline promises: planarity, tree-path monotonicity,
//! slope-disjointness witnesses, near-convexity, hull structure around
//! leader edges, and grid bounds.
//!
//! Entry points:
//!
//! * [`graph::parse_embedded_graph`] reads the plain-text rotation-system
//!   format; [`generate::generate_k_inner`] produces seeded instances.
//! * [`assemble::draw_monotone`] runs the pipeline end to end.
//! * [`verify`] re-checks any drawing independently of how it was produced.

pub mod assemble;
pub mod generate;
pub mod geom;
pub mod graph;
pub mod layout;
pub mod leaders;
pub mod svg;
pub mod tree;
pub mod verify;

pub use assemble::{draw_monotone, DrawReport, LambdaMode, PipelineState, DEFAULT_FIND_BUDGET};
pub use geom::{IVec, Point};
pub use graph::{parse_embedded_graph, EmbeddedGraph, FaceSet, GraphError, VertexId};
pub use layout::{
    layout_first_quadrant, layout_tree, leaf_intervals, shear_second_octant, GridDrawing,
    IntervalTable, RangeWitness, RefVectorTable, Stage,
};
pub use leaders::{covered_leaves, dependency_order, leader_edges, LeaderRecord, Side};
pub use svg::{render_svg, RenderStyle};
pub use tree::{
    boundary_path, find_good_tree, verify_good_tree, BoundarySide, GoodTreeCondition,
    GoodTreeVerdict, RootedOrderedTree, TreeError,
};
pub use verify::{
    check_hull_property, check_monotone, check_near_convex, check_planar_drawing,
    check_slope_disjoint, grid_report, CheckVerdict, Counterexample, GridReport,
};
