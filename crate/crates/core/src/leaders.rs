//! Covered-leaf sets, leader edges and their insertion order.
//!
//! A non-tree edge `e` together with the tree path between its endpoints
//! bounds a cycle; the leaves strictly inside that cycle form `C(e)`. Among
//! all non-tree edges sharing one covered-leaf set, exactly one — the
//! innermost — is the *leader*; the rest are ordinary. Interiors are decided
//! combinatorially in the dual: cutting the cycle's edges out of the face
//! adjacency splits the faces into the component of the outer face and the
//! rest, and the rest is the inside.

use crate::graph::{edge_key, EmbeddedGraph, FaceSet, VertexId};
use crate::tree::{boundary_path, BoundarySide, RootedOrderedTree};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LeaderError {
    #[error("{0}-{1} is a tree edge")]
    TreeEdge(VertexId, VertexId),
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(VertexId, VertexId),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Which side of the stored edge orientation the cycle interior lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "L"),
            Side::Right => write!(f, "R"),
        }
    }
}

/// A leader edge with its covered leaves, induced tree cycle, orientation and
/// hull boundary vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeaderRecord {
    /// Endpoints with the smaller id first.
    pub edge: (VertexId, VertexId),
    /// Leaves strictly inside the induced cycle.
    pub covered: BTreeSet<VertexId>,
    /// Tree path from `edge.0` to `edge.1`; the cycle is this path plus the
    /// edge itself.
    pub cycle: Vec<VertexId>,
    /// Side of `edge.0 -> edge.1` holding the cycle interior.
    pub inner_side: Side,
    /// Descent path from `edge.0` bounding the pocket on its side.
    pub path_u: Vec<VertexId>,
    /// Descent path from `edge.1` bounding the pocket on its side.
    pub path_v: Vec<VertexId>,
}

impl LeaderRecord {
    /// Boundary vertex set `N(e)`: both descent paths.
    pub fn boundary_set(&self) -> BTreeSet<VertexId> {
        self.path_u.iter().chain(&self.path_v).copied().collect()
    }

    pub fn report_line(&self) -> String {
        let ids: Vec<String> = self.covered.iter().map(|v| v.to_string()).collect();
        format!(
            "leader {}-{} C={{{}}} side={}",
            self.edge.0,
            self.edge.1,
            ids.join(","),
            self.inner_side
        )
    }
}

/// Face ids strictly inside the cycle formed by non-tree edge `e` and the
/// tree path between its endpoints.
fn inside_faces(
    g: &EmbeddedGraph,
    faces: &FaceSet,
    t: &RootedOrderedTree,
    e: (VertexId, VertexId),
) -> Vec<bool> {
    let path = t.tree_path(e.0, e.1);
    let mut cycle_edges: BTreeSet<(VertexId, VertexId)> =
        path.windows(2).map(|w| edge_key(w[0], w[1])).collect();
    cycle_edges.insert(edge_key(e.0, e.1));

    // flood the dual from the outer face without crossing cycle edges
    let mut outside = vec![false; faces.len()];
    outside[faces.outer_face_id] = true;
    let mut queue = VecDeque::from([faces.outer_face_id]);
    while let Some(f) = queue.pop_front() {
        for &(a, b) in &faces.faces[f] {
            if cycle_edges.contains(&edge_key(a, b)) {
                continue;
            }
            let twin = faces.face_of[&(b, a)];
            if !outside[twin] {
                outside[twin] = true;
                queue.push_back(twin);
            }
        }
    }
    let _ = g;
    outside.iter().map(|&o| !o).collect()
}

/// Computes `C(e)`: the tree leaves strictly inside the cycle of `e`.
pub fn covered_leaves(
    g: &EmbeddedGraph,
    t: &RootedOrderedTree,
    e: (VertexId, VertexId),
) -> Result<BTreeSet<VertexId>, LeaderError> {
    let key = edge_key(e.0, e.1);
    if !g.has_edge(key.0, key.1) {
        return Err(LeaderError::NotAnEdge(key.0, key.1));
    }
    if t.edge_set().contains(&key) {
        return Err(LeaderError::TreeEdge(key.0, key.1));
    }
    let faces = g.faces();
    let inside = inside_faces(g, &faces, t, key);
    Ok(covered_from_inside(g, &faces, t, key, &inside))
}

fn covered_from_inside(
    g: &EmbeddedGraph,
    faces: &FaceSet,
    t: &RootedOrderedTree,
    e: (VertexId, VertexId),
    inside: &[bool],
) -> BTreeSet<VertexId> {
    let on_cycle: BTreeSet<VertexId> = t.tree_path(e.0, e.1).into_iter().collect();
    g.vertices()
        .filter(|&v| {
            if !t.is_leaf(v) || on_cycle.contains(&v) {
                return false;
            }
            // a vertex off the cycle has all its faces on one side
            let w = g.rotation(v)[0];
            inside[faces.face_of[&(v, w)]]
        })
        .collect()
}

/// Identifies the leader edges of `g` with respect to the good spanning tree
/// `t`, in lexicographic edge order.
pub fn leader_edges(
    g: &EmbeddedGraph,
    t: &RootedOrderedTree,
) -> Result<Vec<LeaderRecord>, LeaderError> {
    let faces = g.faces();
    let tree_edges = t.edge_set();
    let non_tree: Vec<(VertexId, VertexId)> =
        g.edges().filter(|e| !tree_edges.contains(e)).collect();

    let mut inside: BTreeMap<(VertexId, VertexId), Vec<bool>> = BTreeMap::new();
    let mut groups: BTreeMap<Vec<VertexId>, Vec<(VertexId, VertexId)>> = BTreeMap::new();
    for &e in &non_tree {
        let region = inside_faces(g, &faces, t, e);
        let covered = covered_from_inside(g, &faces, t, e, &region);
        if !covered.is_empty() {
            groups
                .entry(covered.into_iter().collect())
                .or_default()
                .push(e);
        }
        inside.insert(e, region);
    }

    let mut records = Vec::new();
    for (covered, group) in groups {
        let mut leaders = Vec::new();
        for &e in &group {
            let enclosed_other = group.iter().any(|&other| {
                other != e && edge_inside_region(&faces, other, &inside[&e])
            });
            if !enclosed_other {
                leaders.push(e);
            }
        }
        if leaders.len() != 1 {
            return Err(LeaderError::InternalInconsistency(format!(
                "covered set {:?} selects {} innermost edges",
                covered,
                leaders.len()
            )));
        }
        let e = leaders[0];
        records.push(build_record(g, &faces, t, e, &inside[&e], covered));
    }
    records.sort_by_key(|r| r.edge);
    Ok(records)
}

/// True when edge `e` (not on the region's bounding cycle) lies inside it.
fn edge_inside_region(faces: &FaceSet, e: (VertexId, VertexId), inside: &[bool]) -> bool {
    inside[faces.face_of[&e]] && inside[faces.face_of[&(e.1, e.0)]]
}

fn build_record(
    g: &EmbeddedGraph,
    faces: &FaceSet,
    t: &RootedOrderedTree,
    e: (VertexId, VertexId),
    inside: &[bool],
    covered: Vec<VertexId>,
) -> LeaderRecord {
    // Our face tracing keeps each face on the left of its directed edges, so
    // the interior is right of e.0 -> e.1 exactly when the face left of the
    // reversed edge is inside.
    let inner_side = if inside[faces.face_of[&(e.1, e.0)]] {
        Side::Right
    } else {
        Side::Left
    };
    // The pocket-facing descents: with the interior right of u -> v, the
    // boundary follows the clockwise-last children below u and the
    // clockwise-first children below v; mirrored otherwise.
    let (side_u, side_v) = match inner_side {
        Side::Right => (BoundarySide::Left, BoundarySide::Right),
        Side::Left => (BoundarySide::Right, BoundarySide::Left),
    };
    let _ = g;
    LeaderRecord {
        edge: e,
        covered: covered.into_iter().collect(),
        cycle: t.tree_path(e.0, e.1),
        inner_side,
        path_u: boundary_path(t, e.0, side_u),
        path_v: boundary_path(t, e.1, side_v),
    }
}

/// Topologically orders leaders so every edge is examined exactly once:
/// `a` precedes `b` when `C(a)` is a strict subset of `C(b)` or when an
/// endpoint of `a` is a proper tree ancestor of an endpoint of `b`.
/// Ties keep input order.
pub fn dependency_order(
    leaders: &[LeaderRecord],
    t: &RootedOrderedTree,
) -> Result<Vec<LeaderRecord>, LeaderError> {
    let k = leaders.len();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut indegree = vec![0usize; k];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let subset = leaders[i].covered.is_subset(&leaders[j].covered)
                && leaders[i].covered != leaders[j].covered;
            let ancestor = [leaders[i].edge.0, leaders[i].edge.1].iter().any(|&a| {
                [leaders[j].edge.0, leaders[j].edge.1]
                    .iter()
                    .any(|&b| t.is_proper_ancestor(a, b))
            });
            if subset || ancestor {
                succ[i].push(j);
                indegree[j] += 1;
            }
        }
    }

    let mut ready: Vec<usize> = (0..k).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::with_capacity(k);
    while let Some(&i) = ready.iter().min() {
        ready.retain(|&x| x != i);
        order.push(leaders[i].clone());
        for &j in &succ[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(j);
            }
        }
    }
    if order.len() != k {
        return Err(LeaderError::InternalInconsistency(
            "dependency graph of leaders has a cycle".into(),
        ));
    }
    Ok(order)
}

/// `order: a-b c-d ...` report line.
pub fn order_line(order: &[LeaderRecord]) -> String {
    let parts: Vec<String> = order
        .iter()
        .map(|r| format!("{}-{}", r.edge.0, r.edge.1))
        .collect();
    format!("order: {}", parts.join(" "))
}
