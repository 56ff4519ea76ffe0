//! The drawing pipeline: tree layout, leader insertion with elongations,
//! then the remaining edges.
//!
//! Inserting a leader edge `(u, v)` lifts `u` and `v` above the highest leaf
//! `w` it covers by elongating the parent edges of `u` and `v`: subtree
//! `T_u` is translated along the frozen reference vector of `u` by an integer
//! factor. In the default strict mode the factor is
//! `floor((w_y - u_y) / ref_y) + 1` whenever `u` is not already above `w`,
//! which lands `u` strictly above `w`. Paper mode uses
//! `max(0, ceil((w_y - u_y) / ref_y))` instead, which can place `u` exactly
//! at the height of `w`; it is kept behind a flag for comparison.

use crate::graph::{edge_key, EmbeddedGraph, VertexId};
use crate::layout::{
    layout_first_quadrant, layout_tree, GridDrawing, RangeWitness, RefVectorTable, Stage,
};
use crate::leaders::{dependency_order, leader_edges, order_line, LeaderError, LeaderRecord};
use crate::tree::{
    find_good_tree, find_good_tree_where, verify_good_tree, GoodTreeVerdict, RootedOrderedTree,
    TreeError,
};
use crate::verify::{check_monotone, check_planar_drawing};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Default node budget for the good-tree search.
pub const DEFAULT_FIND_BUDGET: u64 = 2_000_000;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Leaders(#[from] LeaderError),
    #[error("supplied spanning tree is not good: {0}")]
    BadTreeHint(GoodTreeVerdict),
    #[error("cannot elongate the root")]
    ElongateRoot,
    #[error("negative elongation factor {0}")]
    NegativeFactor(i64),
    #[error("dependency violation at leader {0}-{1}: {2}")]
    DependencyViolation(VertexId, VertexId, String),
}

/// Elongation factor selection for leader insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LambdaMode {
    /// Land endpoints strictly above the covered leaf.
    #[default]
    Strict,
    /// The ceiling formula; endpoints may tie with the covered leaf.
    Paper,
}

/// One elongation performed by the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Elongation {
    /// Child endpoint of the elongated tree edge.
    pub vertex: VertexId,
    pub lambda: i64,
}

/// Mutable pipeline state; transitions consume and return it.
#[derive(Debug, Clone)]
pub struct PipelineState {
    graph: EmbeddedGraph,
    tree: RootedOrderedTree,
    drawing: GridDrawing,
    refs: RefVectorTable,
    witness: RangeWitness,
    /// Child endpoints of tree edges elongated so far (positive factors only).
    elongated: BTreeSet<VertexId>,
    elongation_log: Vec<Elongation>,
    repeat_elongations: usize,
    inserted_leaders: Vec<LeaderRecord>,
    drawn_edges: BTreeSet<(VertexId, VertexId)>,
    mode: LambdaMode,
}

impl PipelineState {
    pub fn new(
        graph: EmbeddedGraph,
        tree: RootedOrderedTree,
        drawing: GridDrawing,
        witness: RangeWitness,
        refs: RefVectorTable,
        mode: LambdaMode,
    ) -> Self {
        let drawn_edges = tree.edge_set();
        PipelineState {
            graph,
            tree,
            drawing,
            refs,
            witness,
            elongated: BTreeSet::new(),
            elongation_log: Vec::new(),
            repeat_elongations: 0,
            inserted_leaders: Vec::new(),
            drawn_edges,
            mode,
        }
    }

    pub fn drawing(&self) -> &GridDrawing {
        &self.drawing
    }

    pub fn tree(&self) -> &RootedOrderedTree {
        &self.tree
    }

    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    pub fn witness(&self) -> &RangeWitness {
        &self.witness
    }

    pub fn refs(&self) -> &RefVectorTable {
        &self.refs
    }

    pub fn elongation_log(&self) -> &[Elongation] {
        &self.elongation_log
    }

    pub fn drawn_edges(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.drawn_edges
    }

    /// Translates `T_u` by `lambda` reference vectors of `u`. A zero factor
    /// is a no-op and is not recorded as an elongation.
    pub fn elongate(mut self, u: VertexId, lambda: i64) -> Result<Self, PipelineError> {
        if u == self.tree.root() {
            return Err(PipelineError::ElongateRoot);
        }
        if lambda < 0 {
            return Err(PipelineError::NegativeFactor(lambda));
        }
        if lambda == 0 {
            self.elongation_log.push(Elongation { vertex: u, lambda: 0 });
            return Ok(self);
        }
        let dir = self.refs.get(u).expect("non-root vertex has a reference vector");
        for &w in self.tree.preorder() {
            if self.tree.is_ancestor_or_self(u, w) {
                let p = self.drawing.point(w);
                self.drawing.set_point(w, p.translate(dir, lambda));
            }
        }
        if !self.elongated.insert(u) {
            self.repeat_elongations += 1;
        }
        self.elongation_log.push(Elongation { vertex: u, lambda });
        Ok(self)
    }

    /// Entry edges moved again for a later leader sharing their endpoint.
    pub fn repeat_elongations(&self) -> usize {
        self.repeat_elongations
    }

    /// Inserts the next leader edge in dependency order.
    ///
    /// Both endpoint entry edges are elongated against the same snapshot of
    /// the highest covered leaf. An entry edge may be elongated again by a
    /// later leader sharing the endpoint (the factor is recomputed from the
    /// current drawing), but an edge strictly inside `T_u` or `T_v` moving
    /// before the entry edge means the dependency order is broken.
    pub fn insert_leader(mut self, rec: &LeaderRecord) -> Result<Self, PipelineError> {
        let (u, v) = rec.edge;
        let fail = |msg: String| PipelineError::DependencyViolation(u, v, msg);

        for endpoint in [u, v] {
            if let Some(&w) = self
                .elongated
                .iter()
                .find(|&&w| self.tree.is_proper_ancestor(endpoint, w))
            {
                return Err(fail(format!(
                    "edge into {w} inside the subtree of {endpoint} already elongated"
                )));
            }
        }

        // highest covered leaf in the current drawing; ties to the lowest id
        let w = *rec
            .covered
            .iter()
            .max_by_key(|&&leaf| (self.drawing.point(leaf).y, std::cmp::Reverse(leaf)))
            .expect("leaders cover at least one leaf");
        let w_y = self.drawing.point(w).y;

        // both factors are taken against the same snapshot of w
        let lambda_u = self.lambda_for(u, w_y);
        let lambda_v = self.lambda_for(v, w_y);
        self = self.elongate(u, lambda_u)?;
        self = self.elongate(v, lambda_v)?;
        self.drawn_edges.insert(edge_key(u, v));
        self.inserted_leaders.push(rec.clone());
        self.drawing.set_stage(Stage::AfterLeaders);
        Ok(self)
    }

    fn lambda_for(&self, endpoint: VertexId, w_y: i64) -> i64 {
        let y = self.drawing.point(endpoint).y;
        let ref_y = self
            .refs
            .get(endpoint)
            .expect("leader endpoints are never the root")
            .y;
        debug_assert!(ref_y >= 1);
        match self.mode {
            LambdaMode::Strict => {
                if y > w_y {
                    0
                } else {
                    (w_y - y).div_euclid(ref_y) + 1
                }
            }
            LambdaMode::Paper => {
                if y >= w_y {
                    0
                } else {
                    // ceiling division of the positive difference
                    (w_y - y + ref_y - 1).div_euclid(ref_y)
                }
            }
        }
    }

    /// Adds every remaining non-tree edge as a straight segment.
    pub fn insert_ordinary(mut self) -> Self {
        for e in self.graph.edges() {
            self.drawn_edges.insert(e);
        }
        self.drawing.set_stage(Stage::Final);
        self
    }
}

/// Summary of a pipeline run, printable in report form.
#[derive(Debug, Clone)]
pub struct DrawReport {
    pub n: usize,
    pub k: usize,
    pub leader_count: usize,
    pub tree_side: i64,
    pub width: i64,
    pub height: i64,
    /// `S + L (S + 1)` for tree side `S` and `L` leaders.
    pub ledger_bound: i64,
    /// `2 (k + 1) n`.
    pub paper_bound: i64,
    pub mode: LambdaMode,
    pub outerplanar_path: bool,
    pub elongations: Vec<(LeaderRecord, i64, i64)>,
    /// Entry edges elongated more than once because leaders share endpoints.
    pub shared_endpoint_repeats: usize,
    pub leader_lines: Vec<String>,
    pub order_line: String,
    pub ok: bool,
}

impl DrawReport {
    pub fn side(&self) -> i64 {
        self.width.max(self.height)
    }

    pub fn fits_ledger(&self) -> bool {
        self.side() <= self.ledger_bound
    }

    pub fn fits_paper_bound(&self) -> bool {
        self.side() <= self.paper_bound
    }
}

impl fmt::Display for DrawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.leader_lines {
            writeln!(f, "{line}")?;
        }
        writeln!(f, "{}", self.order_line)?;
        for (rec, lu, lv) in &self.elongations {
            writeln!(
                f,
                "leader {}-{} lambda_u={} lambda_v={}",
                rec.edge.0, rec.edge.1, lu, lv
            )?;
        }
        write!(
            f,
            "k={} leaders={} tree_side={} grid={}x{} bound={} ok={}",
            self.k,
            self.leader_count,
            self.tree_side,
            self.width,
            self.height,
            self.ledger_bound,
            self.ok
        )
    }
}

/// Spanning tree selection: the input's `tree:` block when present (verified),
/// otherwise the backtracking search. Outerplanar inputs have no leaders for
/// any good tree, so their search keeps enumerating until a tree whose
/// first-quadrant drawing stays within n x n turns up, falling back to the
/// first good tree otherwise.
pub fn select_good_tree(
    g: &EmbeddedGraph,
    budget: u64,
) -> Result<RootedOrderedTree, PipelineError> {
    match g.tree_hint() {
        Some(edges) => {
            let t = RootedOrderedTree::from_graph_edges(g, edges)?;
            match verify_good_tree(g, &t)? {
                GoodTreeVerdict::Ok => Ok(t),
                bad => Err(PipelineError::BadTreeHint(bad)),
            }
        }
        None if g.inner_vertices().is_empty() => {
            let n = g.vertex_count() as i64;
            Ok(find_good_tree_where(g, budget, |t| {
                layout_first_quadrant(t).0.side() <= n
            })?)
        }
        None => Ok(find_good_tree(g, budget)?),
    }
}

/// Runs the whole pipeline on an embedded graph.
pub fn draw_monotone(
    g: &EmbeddedGraph,
    mode: LambdaMode,
    find_budget: u64,
) -> Result<(GridDrawing, RootedOrderedTree, DrawReport), PipelineError> {
    let tree = select_good_tree(g, find_budget)?;
    draw_monotone_with_tree(g, &tree, mode)
}

/// Pipeline with a pre-selected good spanning tree.
pub fn draw_monotone_with_tree(
    g: &EmbeddedGraph,
    tree: &RootedOrderedTree,
    mode: LambdaMode,
) -> Result<(GridDrawing, RootedOrderedTree, DrawReport), PipelineError> {
    let n = g.vertex_count();
    let k = g.inner_vertices().len();
    let leaders = leader_edges(g, tree)?;
    if leaders.len() > k {
        return Err(LeaderError::InternalInconsistency(format!(
            "{} leaders exceed the {} inner vertices",
            leaders.len(),
            k
        ))
        .into());
    }
    let leader_lines: Vec<String> = leaders.iter().map(|r| r.report_line()).collect();

    let (state, outerplanar_path) = if leaders.is_empty() {
        // no elongation will happen, so the tighter first-quadrant drawing
        // serves directly
        let (drawing, witness) = layout_first_quadrant(tree);
        let refs = RefVectorTable::from_drawing(tree, &drawing);
        (
            PipelineState::new(g.clone(), tree.clone(), drawing, witness, refs, mode),
            true,
        )
    } else {
        let (drawing, witness, refs) = layout_tree(tree);
        (
            PipelineState::new(g.clone(), tree.clone(), drawing, witness, refs, mode),
            false,
        )
    };
    let tree_side = state.drawing().side();

    let order = dependency_order(&leaders, tree)?;
    let order_report = order_line(&order);
    let mut state = state;
    let mut elongations = Vec::new();
    for rec in &order {
        let before = state.elongation_log().len();
        state = state.insert_leader(rec)?;
        let log = &state.elongation_log()[before..];
        elongations.push((rec.clone(), log[0].lambda, log[1].lambda));
    }
    let state = state.insert_ordinary();

    let (width, height) = state.drawing().extent();
    let leader_count = order.len();
    let ledger_bound = tree_side + leader_count as i64 * (tree_side + 1);
    let paper_bound = 2 * (k as i64 + 1) * n as i64;
    let ok = check_planar_drawing(g, state.drawing()).is_pass()
        && check_monotone(g, tree, state.drawing()).is_pass();

    let report = DrawReport {
        n,
        k,
        leader_count,
        tree_side,
        width,
        height,
        ledger_bound,
        paper_bound,
        mode,
        outerplanar_path,
        elongations,
        shared_endpoint_repeats: state.repeat_elongations(),
        leader_lines,
        order_line: order_report,
        ok,
    };
    let mut drawing = state.drawing.clone();
    drawing.set_stage(Stage::Final);
    Ok((drawing, tree.clone(), report))
}
