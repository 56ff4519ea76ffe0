//! Rooted ordered spanning trees and the good-spanning-tree conditions.
//!
//! A spanning tree of an embedded graph, rooted at the graph root, is *good*
//! when every non-root vertex `v` with root path `u_1 = r, ..., u_k = v`
//! satisfies:
//!
//! * C1 — no non-tree edge joins `v` to a proper ancestor `u_i`, `i < k`;
//! * C2 — the edges at `v` other than the parent edge split, clockwise after
//!   the parent edge, into consecutive groups `X` (non-tree), `Y` (tree) and
//!   `Z` (non-tree), where `X` edges end in subtrees hanging left of the root
//!   path and `Z` edges in subtrees hanging right of it.
//!
//! "Left of" and "right of" are decided at each path vertex `u_i` by whether
//! the branch child comes before or after `u_{i+1}` in the clockwise rotation
//! anchored at the edge `(u_i, u_{i-1})`. At the root, which has no `u_0`,
//! the anchor is the outer-walk edge arriving at the root.

use crate::graph::{edge_key, EmbeddedGraph, VertexId};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("edge set does not span the graph")]
    NotSpanning,
    #[error("tree root {tree} differs from graph root {graph}")]
    RootMismatch { tree: VertexId, graph: VertexId },
    #[error("edge {0}-{1} is not an edge of the host graph")]
    EdgeNotInGraph(VertexId, VertexId),
    #[error("vertex {0} is not a tree vertex")]
    UnknownVertex(VertexId),
    #[error("no good spanning tree found in the given embedding")]
    NotFound,
    #[error("good-tree search exceeded its node budget ({0} nodes)")]
    BudgetExhausted(u64),
}

/// A rooted tree whose children sequences respect an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedOrderedTree {
    root: VertexId,
    parent: BTreeMap<VertexId, VertexId>,
    children: BTreeMap<VertexId, Vec<VertexId>>,
    /// Preorder with children visited in order; index doubles as entry time.
    order: Vec<VertexId>,
    tin: BTreeMap<VertexId, usize>,
    tout: BTreeMap<VertexId, usize>,
    subtree_size: BTreeMap<VertexId, usize>,
    depth: BTreeMap<VertexId, usize>,
}

impl RootedOrderedTree {
    /// Builds the tree spanned by `edges` inside `g`, rooted at the graph
    /// root, with children ordered clockwise starting after the parent edge
    /// (after the root anchor edge at the root).
    pub fn from_graph_edges(
        g: &EmbeddedGraph,
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self, TreeError> {
        let root = g.root();
        let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> =
            g.vertices().map(|v| (v, BTreeSet::new())).collect();
        for &(a, b) in edges {
            if !g.has_edge(a, b) {
                return Err(TreeError::EdgeNotInGraph(a, b));
            }
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }

        // parent assignment by BFS from the root over tree edges
        let mut parent = BTreeMap::new();
        let mut seen = BTreeSet::from([root]);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    parent.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        if seen.len() != g.vertex_count() || edges.len() != g.vertex_count() - 1 {
            return Err(TreeError::NotSpanning);
        }

        let mut children: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for v in g.vertices() {
            if g.rotation(v).is_empty() {
                children.insert(v, Vec::new());
                continue;
            }
            let anchor = if v == root { g.root_anchor() } else { parent[&v] };
            let rot = rotation_from(g.rotation(v), anchor);
            let mut kids: Vec<VertexId> = rot
                .into_iter()
                .skip(1)
                .filter(|w| parent.get(w) == Some(&v))
                .collect();
            // the anchor itself may be a child of the root; it then comes last
            if v == root && parent.get(&g.root_anchor()) == Some(&root) {
                kids.push(g.root_anchor());
            }
            children.insert(v, kids);
        }

        Ok(Self::assemble(root, parent, children))
    }

    /// Builds a standalone ordered tree from explicit children lists. Used for
    /// tree-only pipelines (layout benchmarks and corpora) with no host graph.
    pub fn from_children(
        root: VertexId,
        children: BTreeMap<VertexId, Vec<VertexId>>,
    ) -> Result<Self, TreeError> {
        let mut parent = BTreeMap::new();
        let mut seen = BTreeSet::from([root]);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in children.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                if !seen.insert(w) {
                    return Err(TreeError::NotSpanning);
                }
                parent.insert(w, v);
                stack.push(w);
            }
        }
        let mut all: BTreeMap<VertexId, Vec<VertexId>> =
            seen.iter().map(|&v| (v, Vec::new())).collect();
        for (v, kids) in children {
            if !seen.contains(&v) {
                return Err(TreeError::UnknownVertex(v));
            }
            all.insert(v, kids);
        }
        Ok(Self::assemble(root, parent, all))
    }

    fn assemble(
        root: VertexId,
        parent: BTreeMap<VertexId, VertexId>,
        children: BTreeMap<VertexId, Vec<VertexId>>,
    ) -> Self {
        let n = children.len();
        let mut order = Vec::with_capacity(n);
        let mut tin = BTreeMap::new();
        let mut tout = BTreeMap::new();
        let mut subtree_size = BTreeMap::new();
        let mut depth = BTreeMap::new();

        // iterative preorder with post hooks
        enum Ev {
            Enter(VertexId, usize),
            Exit(VertexId),
        }
        let mut stack = vec![Ev::Enter(root, 0)];
        while let Some(ev) = stack.pop() {
            match ev {
                Ev::Enter(v, d) => {
                    tin.insert(v, order.len());
                    order.push(v);
                    depth.insert(v, d);
                    stack.push(Ev::Exit(v));
                    for &c in children[&v].iter().rev() {
                        stack.push(Ev::Enter(c, d + 1));
                    }
                }
                Ev::Exit(v) => {
                    tout.insert(v, order.len());
                    let size = 1 + children[&v]
                        .iter()
                        .map(|c| subtree_size[c])
                        .sum::<usize>();
                    subtree_size.insert(v, size);
                }
            }
        }
        RootedOrderedTree { root, parent, children, order, tin, tout, subtree_size, depth }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.tin.contains_key(&v)
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent.get(&v).copied()
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[&v]
    }

    pub fn subtree_size(&self, v: VertexId) -> usize {
        self.subtree_size[&v]
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[&v]
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.children[&v].is_empty()
    }

    /// Vertices in preorder; leaves appear in child-order.
    pub fn preorder(&self) -> &[VertexId] {
        &self.order
    }

    /// Tree leaves in child-order.
    pub fn leaves(&self) -> Vec<VertexId> {
        self.order.iter().copied().filter(|&v| self.is_leaf(v)).collect()
    }

    /// Tree edges as (parent, child) pairs in preorder of the child.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.order
            .iter()
            .filter_map(move |&v| self.parent(v).map(|p| (p, v)))
    }

    pub fn edge_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.edges().map(|(a, b)| edge_key(a, b)).collect()
    }

    /// True when `a` is `d` or an ancestor of `d`.
    pub fn is_ancestor_or_self(&self, a: VertexId, d: VertexId) -> bool {
        self.tin[&a] <= self.tin[&d] && self.tin[&d] < self.tout[&a]
    }

    pub fn is_proper_ancestor(&self, a: VertexId, d: VertexId) -> bool {
        a != d && self.is_ancestor_or_self(a, d)
    }

    /// Root path `r, ..., v` inclusive.
    pub fn root_path(&self, v: VertexId) -> Vec<VertexId> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent(cur) {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Vertices of the unique tree path from `a` to `b` inclusive.
    pub fn tree_path(&self, a: VertexId, b: VertexId) -> Vec<VertexId> {
        let mut up_a = vec![a];
        let mut up_b = vec![b];
        let (mut x, mut y) = (a, b);
        while !self.is_ancestor_or_self(x, b) {
            x = self.parent(x).expect("root is an ancestor of everything");
            up_a.push(x);
        }
        while y != x {
            y = self.parent(y).expect("lca is an ancestor of b");
            up_b.push(y);
        }
        up_b.pop(); // drop the lca, already in up_a
        up_a.extend(up_b.into_iter().rev());
        up_a
    }
}

/// Rotates a cyclic neighbor list so `anchor` comes first.
fn rotation_from(rotation: &[VertexId], anchor: VertexId) -> Vec<VertexId> {
    let i = rotation
        .iter()
        .position(|&w| w == anchor)
        .expect("anchor is a neighbor");
    let mut out = Vec::with_capacity(rotation.len());
    out.extend_from_slice(&rotation[i..]);
    out.extend_from_slice(&rotation[..i]);
    out
}

/// Which good-tree condition a witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoodTreeCondition {
    C1,
    C2a,
    C2b,
    C2c,
}

impl fmt::Display for GoodTreeCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoodTreeCondition::C1 => write!(f, "C1"),
            GoodTreeCondition::C2a => write!(f, "C2a"),
            GoodTreeCondition::C2b => write!(f, "C2b"),
            GoodTreeCondition::C2c => write!(f, "C2c"),
        }
    }
}

/// Outcome of checking the good-tree conditions, with a re-checkable witness
/// on violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoodTreeVerdict {
    Ok,
    Violation {
        condition: GoodTreeCondition,
        vertex: VertexId,
        /// Root path of the offending vertex.
        path: Vec<VertexId>,
        edge: (VertexId, VertexId),
    },
}

impl GoodTreeVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, GoodTreeVerdict::Ok)
    }
}

impl fmt::Display for GoodTreeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoodTreeVerdict::Ok => write!(f, "GOODTREE ok"),
            GoodTreeVerdict::Violation { condition, vertex, edge, .. } => {
                write!(f, "GOODTREE violation {condition} v={vertex} edge={}-{}", edge.0, edge.1)
            }
        }
    }
}

/// Side of the root path a branch subtree hangs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PathSide {
    Left,
    Right,
}

/// Checks conditions C1 and C2 for every non-root vertex. Vertices are
/// examined in id order and C1 before C2, so the witness is deterministic.
pub fn verify_good_tree(g: &EmbeddedGraph, t: &RootedOrderedTree) -> Result<GoodTreeVerdict, TreeError> {
    if t.root() != g.root() {
        return Err(TreeError::RootMismatch { tree: t.root(), graph: g.root() });
    }
    if t.len() != g.vertex_count() || g.vertices().any(|v| !t.contains(v)) {
        return Err(TreeError::NotSpanning);
    }
    let tree_edges = t.edge_set();

    for v in g.vertices() {
        if v == g.root() {
            continue;
        }
        // C1: no non-tree edge from v to a vertex on its root path
        for &w in g.rotation(v) {
            if !tree_edges.contains(&edge_key(v, w)) && t.is_proper_ancestor(w, v) {
                return Ok(GoodTreeVerdict::Violation {
                    condition: GoodTreeCondition::C1,
                    vertex: v,
                    path: t.root_path(v),
                    edge: (v, w),
                });
            }
        }
    }

    for v in g.vertices() {
        if v == g.root() {
            continue;
        }
        if let Some(violation) = check_c2(g, t, &tree_edges, v) {
            return Ok(violation);
        }
    }
    Ok(GoodTreeVerdict::Ok)
}

fn check_c2(
    g: &EmbeddedGraph,
    t: &RootedOrderedTree,
    tree_edges: &BTreeSet<(VertexId, VertexId)>,
    v: VertexId,
) -> Option<GoodTreeVerdict> {
    let parent = t.parent(v).expect("non-root vertex");
    let seq: Vec<VertexId> = rotation_from(g.rotation(v), parent).into_iter().skip(1).collect();
    let is_tree = |w: VertexId| tree_edges.contains(&edge_key(v, w));
    let violation = |condition, w: VertexId| {
        Some(GoodTreeVerdict::Violation {
            condition,
            vertex: v,
            path: t.root_path(v),
            edge: (v, w),
        })
    };

    let first_tree = seq.iter().position(|&w| is_tree(w));
    let last_tree = seq.iter().rposition(|&w| is_tree(w));
    let (x_part, z_part): (&[VertexId], &[VertexId]) = match (first_tree, last_tree) {
        (Some(lo), Some(hi)) => {
            // C2a: the tree edges must be one consecutive block
            if let Some(&w) = seq[lo..=hi].iter().find(|&&w| !is_tree(w)) {
                return violation(GoodTreeCondition::C2a, w);
            }
            (&seq[..lo], &seq[hi + 1..])
        }
        _ => (&seq[..], &[]),
    };

    let side_of = |w: VertexId| branch_side(g, t, v, w);

    if first_tree.is_some() {
        for &w in x_part {
            match side_of(w) {
                Some(PathSide::Left) => {}
                Some(PathSide::Right) => return violation(GoodTreeCondition::C2b, w),
                None => return violation(GoodTreeCondition::C2c, w),
            }
        }
        for &w in z_part {
            match side_of(w) {
                Some(PathSide::Right) => {}
                Some(PathSide::Left) => return violation(GoodTreeCondition::C2b, w),
                None => return violation(GoodTreeCondition::C2c, w),
            }
        }
        return None;
    }

    // No tree edges at v beyond the parent: X and Z meet at a free split.
    let sides: Vec<Option<PathSide>> = x_part.iter().map(|&w| side_of(w)).collect();
    if let Some(i) = sides.iter().position(|s| s.is_none()) {
        return violation(GoodTreeCondition::C2c, x_part[i]);
    }
    let left_prefix = sides
        .iter()
        .take_while(|s| **s == Some(PathSide::Left))
        .count();
    if let Some(offset) = sides[left_prefix..].iter().position(|s| *s == Some(PathSide::Left)) {
        // a left-bound edge after a right-bound one: ordering broken
        return violation(GoodTreeCondition::C2b, x_part[left_prefix + offset]);
    }
    None
}

/// Decides whether the non-tree edge target `w` (seen from `v`) lies in a
/// subtree hanging left or right of the root path of `v`. `None` when `w`
/// is ancestor-related to `v`, which C1 already forbids.
fn branch_side(
    g: &EmbeddedGraph,
    t: &RootedOrderedTree,
    v: VertexId,
    w: VertexId,
) -> Option<PathSide> {
    if t.is_ancestor_or_self(v, w) || t.is_ancestor_or_self(w, v) {
        return None;
    }
    // lowest path vertex u_i whose subtree contains w
    let mut lca = t.parent(v).expect("v is not the root");
    while !t.is_ancestor_or_self(lca, w) {
        lca = t.parent(lca).expect("root contains everything");
    }
    // branch child of the lca toward w
    let mut branch = w;
    while t.parent(branch) != Some(lca) {
        branch = t.parent(branch).expect("w is below the lca");
    }
    // child of the lca along the path toward v
    let mut toward_v = v;
    while t.parent(toward_v) != Some(lca) {
        toward_v = t.parent(toward_v).expect("v is below the lca");
    }

    let anchor = if lca == t.root() { g.root_anchor() } else { t.parent(lca).unwrap() };
    let rot = rotation_from(g.rotation(lca), anchor);
    let pos = |x: VertexId| rot.iter().position(|&y| y == x).expect("neighbor of lca");
    if pos(branch) < pos(toward_v) {
        Some(PathSide::Left)
    } else {
        Some(PathSide::Right)
    }
}

/// Searches for a good spanning tree of the fixed embedding rooted at the
/// graph root.
///
/// Spanning trees are enumerated by include/exclude backtracking over the
/// lexicographically sorted edge list, so the first tree found is the
/// lexicographically smallest good one. Every edge at the root is forced into
/// the tree (a non-tree edge at the root would violate C1 outright), and a
/// branch is pruned as soon as two vertices of the partial tree are joined by
/// a permanently-non-tree edge while being ancestor-related.
///
/// `budget` caps the number of search nodes; exceeding it reports
/// [`TreeError::BudgetExhausted`].
pub fn find_good_tree(g: &EmbeddedGraph, budget: u64) -> Result<RootedOrderedTree, TreeError> {
    find_good_tree_where(g, budget, |_| true)
}

/// Like [`find_good_tree`], but keeps enumerating until a good tree also
/// satisfies `accept`. When the enumeration (or the budget) ends without an
/// accepted tree, the first good tree found is returned instead, so callers
/// can treat `accept` as a preference rather than a hard requirement.
pub fn find_good_tree_where(
    g: &EmbeddedGraph,
    budget: u64,
    accept: impl FnMut(&RootedOrderedTree) -> bool,
) -> Result<RootedOrderedTree, TreeError> {
    if g.vertex_count() == 1 {
        return RootedOrderedTree::from_graph_edges(g, &[]);
    }
    let root = g.root();
    let forced: Vec<(VertexId, VertexId)> =
        g.rotation(root).iter().map(|&w| edge_key(root, w)).collect();
    let candidates: Vec<(VertexId, VertexId)> = g
        .edges()
        .filter(|&(a, b)| a != root && b != root)
        .collect();

    let mut search = Search {
        g,
        candidates,
        chosen: forced,
        budget,
        initial_budget: budget,
        accept,
        fallback: None,
        result: None,
    };
    let outcome = search.run(0);
    if let Some(t) = search.result.take().or_else(|| search.fallback.take()) {
        return Ok(t);
    }
    outcome.and(Err(TreeError::NotFound))
}

struct Search<'a, F> {
    g: &'a EmbeddedGraph,
    candidates: Vec<(VertexId, VertexId)>,
    chosen: Vec<(VertexId, VertexId)>,
    budget: u64,
    initial_budget: u64,
    accept: F,
    fallback: Option<RootedOrderedTree>,
    result: Option<RootedOrderedTree>,
}

impl<F: FnMut(&RootedOrderedTree) -> bool> Search<'_, F> {
    fn run(&mut self, index: usize) -> Result<(), TreeError> {
        if self.result.is_some() {
            return Ok(());
        }
        if self.budget == 0 {
            return Err(TreeError::BudgetExhausted(self.initial_budget));
        }
        self.budget -= 1;

        let n = self.g.vertex_count();
        if self.chosen.len() == n - 1 {
            if let Ok(tree) = RootedOrderedTree::from_graph_edges(self.g, &self.chosen) {
                if verify_good_tree(self.g, &tree)? == GoodTreeVerdict::Ok {
                    if (self.accept)(&tree) {
                        self.result = Some(tree);
                    } else if self.fallback.is_none() {
                        self.fallback = Some(tree);
                    }
                }
            }
            return Ok(());
        }
        if index == self.candidates.len() {
            return Ok(());
        }
        if self.chosen.len() + (self.candidates.len() - index) < n - 1 {
            return Ok(());
        }
        if !self.connectable(index) || self.c1_dead(index) {
            return Ok(());
        }

        let e = self.candidates[index];
        if !self.closes_cycle(e) {
            self.chosen.push(e);
            self.run(index + 1)?;
            self.chosen.pop();
            if self.result.is_some() {
                return Ok(());
            }
        }
        self.run(index + 1)
    }

    /// Every vertex must still be reachable from the root using chosen edges
    /// plus undecided candidates.
    fn connectable(&self, index: usize) -> bool {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
            self.g.vertices().map(|v| (v, Vec::new())).collect();
        for &(a, b) in self.chosen.iter().chain(&self.candidates[index..]) {
            adj.get_mut(&a).unwrap().push(b);
            adj.get_mut(&b).unwrap().push(a);
        }
        let mut seen = BTreeSet::from([self.g.root()]);
        let mut queue = VecDeque::from([self.g.root()]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.g.vertex_count()
    }

    fn closes_cycle(&self, e: (VertexId, VertexId)) -> bool {
        // chosen edges form a forest; connectivity check by BFS from e.0
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &(a, b) in &self.chosen {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = BTreeSet::from([e.0]);
        let mut queue = VecDeque::from([e.0]);
        while let Some(v) = queue.pop_front() {
            if v == e.1 {
                return true;
            }
            for &w in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        false
    }

    /// Ancestor relations inside the root component of the partial forest are
    /// final. An edge that can no longer become a tree edge and joins an
    /// ancestor-descendant pair kills the whole branch.
    fn c1_dead(&self, index: usize) -> bool {
        let root = self.g.root();
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &(a, b) in &self.chosen {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = BTreeSet::from([root]);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                if seen.insert(w) {
                    parent.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        let in_root_component = |v: VertexId| seen.contains(&v);
        let ancestor_related = |a: VertexId, b: VertexId| {
            let mut cur = b;
            loop {
                if cur == a {
                    return true;
                }
                match parent.get(&cur) {
                    Some(&p) => cur = p,
                    None => break,
                }
            }
            let mut cur = a;
            loop {
                if cur == b {
                    return true;
                }
                match parent.get(&cur) {
                    Some(&p) => cur = p,
                    None => return false,
                }
            }
        };

        let chosen_set: BTreeSet<(VertexId, VertexId)> = self.chosen.iter().copied().collect();
        let undecided: BTreeSet<(VertexId, VertexId)> =
            self.candidates[index..].iter().copied().collect();
        for (a, b) in self.g.edges() {
            if chosen_set.contains(&(a, b)) || undecided.contains(&(a, b)) {
                continue;
            }
            if in_root_component(a) && in_root_component(b) && ancestor_related(a, b) {
                return true;
            }
        }
        false
    }
}

/// Follows children downward from `u` to a leaf: `Left` takes the last child
/// at every step, `Right` the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundarySide {
    Left,
    Right,
}

pub fn boundary_path(t: &RootedOrderedTree, u: VertexId, side: BoundarySide) -> Vec<VertexId> {
    let mut path = vec![u];
    let mut cur = u;
    loop {
        let kids = t.children(cur);
        let next = match side {
            BoundarySide::Left => kids.last(),
            BoundarySide::Right => kids.first(),
        };
        match next {
            Some(&c) => {
                path.push(c);
                cur = c;
            }
            None => return path,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testutil::{instance_a, instance_b};

    fn v(n: u32) -> VertexId {
        VertexId(n)
    }

    fn e(a: u32, b: u32) -> (VertexId, VertexId) {
        (v(a), v(b))
    }

    #[test]
    fn instance_a_fan_tree_is_good() {
        let g = instance_a();
        let t = RootedOrderedTree::from_graph_edges(&g, &[e(1, 2), e(1, 3)]).unwrap();
        assert_eq!(verify_good_tree(&g, &t).unwrap(), GoodTreeVerdict::Ok);
        assert_eq!(t.children(v(1)), &[v(2), v(3)]);
    }

    #[test]
    fn instance_a_path_tree_violates_c1() {
        let g = instance_a();
        let t = RootedOrderedTree::from_graph_edges(&g, &[e(1, 2), e(2, 3)]).unwrap();
        match verify_good_tree(&g, &t).unwrap() {
            GoodTreeVerdict::Violation { condition, vertex, edge, path } => {
                assert_eq!(condition, GoodTreeCondition::C1);
                assert_eq!(vertex, v(3));
                assert_eq!(edge, e(3, 1));
                assert_eq!(path, vec![v(1), v(2), v(3)]);
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn instance_b_star_is_good() {
        let g = instance_b();
        let t = RootedOrderedTree::from_graph_edges(&g, &[e(1, 2), e(1, 4), e(1, 3)]).unwrap();
        assert_eq!(verify_good_tree(&g, &t).unwrap(), GoodTreeVerdict::Ok);
        assert_eq!(t.children(v(1)), &[v(2), v(4), v(3)]);
    }

    #[test]
    fn finds_first_lexicographic_good_tree() {
        let g = instance_a();
        let t = find_good_tree(&g, 10_000).unwrap();
        assert_eq!(t.edge_set(), [e(1, 2), e(1, 3)].into_iter().collect());
    }

    #[test]
    fn finds_star_for_instance_b() {
        let g = instance_b();
        let t = find_good_tree(&g, 10_000).unwrap();
        assert_eq!(
            t.edge_set(),
            [e(1, 2), e(1, 3), e(1, 4)].into_iter().collect()
        );
    }

    #[test]
    fn single_vertex_graph_has_trivial_tree() {
        let g = crate::graph::parse_embedded_graph("n 1\nv 1:\nouter: 1\nroot: 1\n").unwrap();
        let t = find_good_tree(&g, 10).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.is_leaf(v(1)));
    }

    #[test]
    fn boundary_path_examples() {
        let g = instance_b();
        let t = RootedOrderedTree::from_graph_edges(&g, &[e(1, 2), e(1, 4), e(1, 3)]).unwrap();
        // a leaf is its own boundary path
        assert_eq!(boundary_path(&t, v(2), BoundarySide::Left), vec![v(2)]);
        assert_eq!(boundary_path(&t, v(2), BoundarySide::Right), vec![v(2)]);
        // star root, children (2, 4, 3)
        assert_eq!(boundary_path(&t, v(1), BoundarySide::Right), vec![v(1), v(2)]);
        assert_eq!(boundary_path(&t, v(1), BoundarySide::Left), vec![v(1), v(3)]);
    }

    #[test]
    fn boundary_path_chain() {
        let children: BTreeMap<VertexId, Vec<VertexId>> =
            [(v(1), vec![v(2)]), (v(2), vec![v(3)]), (v(3), vec![])]
                .into_iter()
                .collect();
        let t = RootedOrderedTree::from_children(v(1), children).unwrap();
        assert_eq!(boundary_path(&t, v(1), BoundarySide::Left), vec![v(1), v(2), v(3)]);
        assert_eq!(boundary_path(&t, v(1), BoundarySide::Right), vec![v(1), v(2), v(3)]);
    }

    #[test]
    fn good_trees_have_no_ancestor_chords() {
        for g in [instance_a(), instance_b()] {
            let t = find_good_tree(&g, 100_000).unwrap();
            let tree_edges = t.edge_set();
            for (a, b) in g.edges() {
                if !tree_edges.contains(&edge_key(a, b)) {
                    assert!(!t.is_proper_ancestor(a, b));
                    assert!(!t.is_proper_ancestor(b, a));
                }
            }
        }
    }

    #[test]
    fn tree_path_crosses_lca() {
        let g = instance_b();
        let t = RootedOrderedTree::from_graph_edges(&g, &[e(1, 2), e(1, 4), e(1, 3)]).unwrap();
        assert_eq!(t.tree_path(v(2), v(3)), vec![v(2), v(1), v(3)]);
        assert_eq!(t.tree_path(v(1), v(4)), vec![v(1), v(4)]);
        assert_eq!(t.tree_path(v(4), v(4)), vec![v(4)]);
    }
}
