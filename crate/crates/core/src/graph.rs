//! Connected simple plane graphs given as rotation systems.
//!
//! A graph is described combinatorially: every vertex carries the clockwise
//! cyclic order of its neighbors, one traced face is designated as the outer
//! face, and a root vertex on that face anchors all tree constructions.
//! Faces are traced with the next-edge rule `next(u -> v) = (v, w)` where `w`
//! follows `u` in the clockwise rotation at `v`; with that rule every face
//! walk keeps its face on the left of each directed edge, inner faces come
//! out counter-clockwise and the outer face clockwise.

use crate::geom::{cmp_angle, Point};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

/// Identifier of a vertex as written in the input (decimal, >= 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Undirected edge key with the smaller endpoint first.
pub fn edge_key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("rotation of vertex {0} lists {1}, but not vice versa")]
    AsymmetricRotation(VertexId, VertexId),
    #[error("vertex {0} lists itself as a neighbor")]
    SelfLoop(VertexId),
    #[error("vertex {0} lists neighbor {1} more than once")]
    ParallelEdge(VertexId, VertexId),
    #[error("unknown vertex {0} referenced")]
    UnknownVertex(VertexId),
    #[error("vertex {0} declared more than once")]
    DuplicateVertex(VertexId),
    #[error("declared n={declared} but {found} vertex lines present")]
    VertexCountMismatch { declared: usize, found: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("Euler check failed: V={v} E={e} F={f}")]
    EulerCheckFailed { v: usize, e: usize, f: usize },
    #[error("outer walk is not a traced face of the rotation system")]
    OuterWalkNotAFace,
    #[error("root {0} does not lie on the outer walk")]
    RootNotOnOuterWalk(VertexId),
    #[error("missing `{0}` section")]
    MissingSection(&'static str),
    #[error("tree edge {0}-{1} is not an edge of the graph")]
    TreeEdgeNotInGraph(VertexId, VertexId),
    #[error("straight-line input is degenerate: {0}")]
    DegenerateDrawing(String),
}

/// A validated connected simple plane graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    ids: Vec<VertexId>,
    rotation: BTreeMap<VertexId, Vec<VertexId>>,
    outer_walk: Vec<VertexId>,
    root: VertexId,
    edges: BTreeSet<(VertexId, VertexId)>,
    tree_hint: Option<Vec<(VertexId, VertexId)>>,
}

/// The faces traced from a rotation system.
#[derive(Debug, Clone)]
pub struct FaceSet {
    /// Directed-edge cycles; `faces[id]` lists the boundary walk of face `id`.
    pub faces: Vec<Vec<(VertexId, VertexId)>>,
    /// Face id of each directed edge.
    pub face_of: BTreeMap<(VertexId, VertexId), usize>,
    pub outer_face_id: usize,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Vertices on the boundary walk of a face, in walk order (may repeat).
    pub fn face_vertices(&self, id: usize) -> Vec<VertexId> {
        self.faces[id].iter().map(|&(u, _)| u).collect()
    }
}

impl EmbeddedGraph {
    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.ids.iter().copied()
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn outer_walk(&self) -> &[VertexId] {
        &self.outer_walk
    }

    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[&v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.contains(&edge_key(a, b))
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.rotation.contains_key(&v)
    }

    /// Spanning tree supplied by the input's `tree:` block, if any.
    pub fn tree_hint(&self) -> Option<&[(VertexId, VertexId)]> {
        self.tree_hint.as_deref()
    }

    /// The neighbor of the root that precedes it along the outer walk.
    ///
    /// Children orderings at the root are anchored at this edge. When the root
    /// is a cut vertex it occurs several times on the walk; the first
    /// occurrence in the stored walk is the one that counts.
    pub fn root_anchor(&self) -> VertexId {
        let i = self
            .outer_walk
            .iter()
            .position(|&v| v == self.root)
            .expect("root is on the outer walk");
        let m = self.outer_walk.len();
        self.outer_walk[(i + m - 1) % m]
    }

    /// Number of times the root occurs on the outer walk (> 1 for cut roots).
    pub fn root_walk_occurrences(&self) -> usize {
        self.outer_walk.iter().filter(|&&v| v == self.root).count()
    }

    /// Trace all faces of the rotation system.
    pub fn faces(&self) -> FaceSet {
        if self.ids.len() == 1 {
            return FaceSet {
                faces: vec![Vec::new()],
                face_of: BTreeMap::new(),
                outer_face_id: 0,
            };
        }
        let faces = trace_faces(&self.rotation);
        face_set_with_outer(faces, &self.outer_walk).expect("validated at construction")
    }

    /// Vertices not on the outer walk; their count is the `k` of a
    /// `k`-inner embedding.
    pub fn inner_vertices(&self) -> BTreeSet<VertexId> {
        let outer: BTreeSet<VertexId> = self.outer_walk.iter().copied().collect();
        self.ids.iter().copied().filter(|v| !outer.contains(v)).collect()
    }

    /// Canonical text form; `parse_embedded_graph` reads it back unchanged.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("n {}\n", self.ids.len()));
        for &v in &self.ids {
            out.push_str(&format!("v {}:", v));
            for &w in &self.rotation[&v] {
                out.push_str(&format!(" {}", w));
            }
            out.push('\n');
        }
        out.push_str("outer:");
        for &v in &self.outer_walk {
            out.push_str(&format!(" {}", v));
        }
        out.push('\n');
        out.push_str(&format!("root: {}\n", self.root));
        if let Some(tree) = &self.tree_hint {
            out.push_str("tree:");
            for &(a, b) in tree {
                out.push_str(&format!(" {}-{}", a, b));
            }
            out.push('\n');
        }
        out
    }

    /// Builds and validates a graph from raw parts.
    pub fn new(
        rotation: BTreeMap<VertexId, Vec<VertexId>>,
        outer_walk: Vec<VertexId>,
        root: VertexId,
        tree_hint: Option<Vec<(VertexId, VertexId)>>,
    ) -> Result<Self, GraphError> {
        let ids: Vec<VertexId> = rotation.keys().copied().collect();

        // A single vertex is a plane graph with one (empty) face.
        if ids.len() == 1 {
            let v0 = ids[0];
            if !rotation[&v0].is_empty() {
                return Err(GraphError::UnknownVertex(rotation[&v0][0]));
            }
            if outer_walk != [v0] {
                return Err(GraphError::OuterWalkNotAFace);
            }
            if root != v0 {
                return Err(GraphError::RootNotOnOuterWalk(root));
            }
            if tree_hint.as_deref().is_some_and(|t| !t.is_empty()) {
                let (a, b) = tree_hint.as_deref().unwrap()[0];
                return Err(GraphError::TreeEdgeNotInGraph(a, b));
            }
            return Ok(EmbeddedGraph {
                ids,
                rotation,
                outer_walk,
                root,
                edges: BTreeSet::new(),
                tree_hint,
            });
        }

        let mut edges = BTreeSet::new();
        for (&v, neighbors) in &rotation {
            let mut seen = BTreeSet::new();
            for &w in neighbors {
                if w == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if !rotation.contains_key(&w) {
                    return Err(GraphError::UnknownVertex(w));
                }
                if !seen.insert(w) {
                    return Err(GraphError::ParallelEdge(v, w));
                }
                edges.insert(edge_key(v, w));
            }
        }
        for &(a, b) in &edges {
            if !rotation[&a].contains(&b) {
                return Err(GraphError::AsymmetricRotation(b, a));
            }
            if !rotation[&b].contains(&a) {
                return Err(GraphError::AsymmetricRotation(a, b));
            }
        }

        // connectivity
        if let Some(&start) = ids.first() {
            let mut seen = BTreeSet::new();
            seen.insert(start);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &rotation[&v] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            if seen.len() != ids.len() {
                return Err(GraphError::Disconnected);
            }
        }

        let faces = trace_faces(&rotation);
        let v = ids.len();
        let e = edges.len();
        let f = faces.len();
        if v + f != e + 2 {
            return Err(GraphError::EulerCheckFailed { v, e, f });
        }

        for &w in &outer_walk {
            if !rotation.contains_key(&w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        face_set_with_outer(faces, &outer_walk)?;
        if !outer_walk.contains(&root) {
            return Err(GraphError::RootNotOnOuterWalk(root));
        }

        if let Some(tree) = &tree_hint {
            for &(a, b) in tree {
                if !edges.contains(&edge_key(a, b)) {
                    return Err(GraphError::TreeEdgeNotInGraph(a, b));
                }
            }
        }

        Ok(EmbeddedGraph { ids, rotation, outer_walk, root, edges, tree_hint })
    }

    /// Derives an embedding from a crossing-free straight-line drawing:
    /// rotations are the clockwise geometric order around each vertex.
    pub fn from_straight_line_drawing(
        coords: &BTreeMap<VertexId, Point>,
        edges: &[(VertexId, VertexId)],
        outer_walk: Vec<VertexId>,
        root: VertexId,
        tree_hint: Option<Vec<(VertexId, VertexId)>>,
    ) -> Result<Self, GraphError> {
        let mut rotation: BTreeMap<VertexId, Vec<VertexId>> =
            coords.keys().map(|&v| (v, Vec::new())).collect();
        for &(a, b) in edges {
            for (u, w) in [(a, b), (b, a)] {
                rotation
                    .get_mut(&u)
                    .ok_or(GraphError::UnknownVertex(u))?
                    .push(w);
                if !coords.contains_key(&w) {
                    return Err(GraphError::UnknownVertex(w));
                }
            }
        }
        for (&v, neighbors) in rotation.iter_mut() {
            let origin = coords[&v];
            for &w in neighbors.iter() {
                if coords[&w] == origin {
                    return Err(GraphError::DegenerateDrawing(format!(
                        "vertices {v} and {w} coincide"
                    )));
                }
            }
            // clockwise = descending angle
            neighbors.sort_by(|&p, &q| cmp_angle(origin.to(coords[&q]), origin.to(coords[&p])));
        }
        EmbeddedGraph::new(rotation, outer_walk, root, tree_hint)
    }
}

/// Traces every face of a rotation system, in order of the lexicographically
/// smallest unvisited directed edge, so ids are reproducible.
fn trace_faces(rotation: &BTreeMap<VertexId, Vec<VertexId>>) -> Vec<Vec<(VertexId, VertexId)>> {
    let mut next_at: BTreeMap<VertexId, BTreeMap<VertexId, VertexId>> = BTreeMap::new();
    for (&v, neighbors) in rotation {
        let mut succ = BTreeMap::new();
        for (i, &w) in neighbors.iter().enumerate() {
            succ.insert(w, neighbors[(i + 1) % neighbors.len()]);
        }
        next_at.insert(v, succ);
    }

    let mut visited: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut faces = Vec::new();
    for (&v, neighbors) in rotation {
        for &w in neighbors {
            if visited.contains(&(v, w)) {
                continue;
            }
            let mut cycle = Vec::new();
            let (mut a, mut b) = (v, w);
            loop {
                cycle.push((a, b));
                visited.insert((a, b));
                let c = next_at[&b][&a];
                a = std::mem::replace(&mut b, c);
                if (a, b) == (v, w) {
                    break;
                }
            }
            faces.push(cycle);
        }
    }
    faces
}

/// Locates the face whose directed cycle equals the given outer walk
/// (up to cyclic rotation) and packages the result.
fn face_set_with_outer(
    faces: Vec<Vec<(VertexId, VertexId)>>,
    outer_walk: &[VertexId],
) -> Result<FaceSet, GraphError> {
    if outer_walk.is_empty() {
        return Err(GraphError::OuterWalkNotAFace);
    }
    let m = outer_walk.len();
    let walk_edges: Vec<(VertexId, VertexId)> =
        (0..m).map(|i| (outer_walk[i], outer_walk[(i + 1) % m])).collect();

    let mut outer_face_id = None;
    'faces: for (id, cycle) in faces.iter().enumerate() {
        if cycle.len() != m {
            continue;
        }
        let Some(offset) = cycle.iter().position(|&e| e == walk_edges[0]) else {
            continue;
        };
        for (i, &e) in walk_edges.iter().enumerate() {
            if cycle[(offset + i) % m] != e {
                continue 'faces;
            }
        }
        outer_face_id = Some(id);
        break;
    }
    let outer_face_id = outer_face_id.ok_or(GraphError::OuterWalkNotAFace)?;

    let mut face_of = BTreeMap::new();
    for (id, cycle) in faces.iter().enumerate() {
        for &e in cycle {
            face_of.insert(e, id);
        }
    }
    Ok(FaceSet { faces, face_of, outer_face_id })
}

/// Parses the line-based graph format.
///
/// ```text
/// # comment
/// n 4
/// v 1: 2 4 3
/// v 2: 3 4 1
/// v 3: 1 4 2
/// v 4: 3 1 2
/// outer: 1 2 3
/// root: 1
/// tree: 1-2 1-4 1-3
/// ```
pub fn parse_embedded_graph(text: &str) -> Result<EmbeddedGraph, GraphError> {
    let mut declared_n: Option<usize> = None;
    let mut rotation: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut outer_walk: Option<Vec<VertexId>> = None;
    let mut root: Option<VertexId> = None;
    let mut tree_hint: Option<Vec<(VertexId, VertexId)>> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line_number = lineno + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut tokens = tokenize(line);
        let Some((first, first_col)) = tokens.next() else {
            continue;
        };
        let syntax = |col: usize, msg: String| GraphError::Syntax { line: line_number, col, msg };

        match first {
            "n" => {
                let (tok, col) = tokens
                    .next()
                    .ok_or_else(|| syntax(first_col, "expected vertex count after `n`".into()))?;
                let count: usize =
                    tok.parse().map_err(|_| syntax(col, format!("bad vertex count `{tok}`")))?;
                declared_n = Some(count);
            }
            "v" => {
                let (tok, col) = tokens
                    .next()
                    .ok_or_else(|| syntax(first_col, "expected vertex id after `v`".into()))?;
                let (id_str, explicit_colon) = match tok.strip_suffix(':') {
                    Some(s) => (s, true),
                    None => (tok, false),
                };
                let id = parse_id(id_str).map_err(|msg| syntax(col, msg))?;
                if !explicit_colon {
                    let (sep, sep_col) = tokens
                        .next()
                        .ok_or_else(|| syntax(col, "expected `:` after vertex id".into()))?;
                    if sep != ":" {
                        return Err(syntax(sep_col, format!("expected `:`, found `{sep}`")));
                    }
                }
                let mut neighbors = Vec::new();
                for (t, tcol) in tokens.by_ref() {
                    neighbors.push(parse_id(t).map_err(|msg| syntax(tcol, msg))?);
                }
                if rotation.insert(id, neighbors).is_some() {
                    return Err(GraphError::DuplicateVertex(id));
                }
            }
            "outer:" | "outer" => {
                if first == "outer" {
                    let (sep, sep_col) = tokens
                        .next()
                        .ok_or_else(|| syntax(first_col, "expected `:` after `outer`".into()))?;
                    if sep != ":" {
                        return Err(syntax(sep_col, format!("expected `:`, found `{sep}`")));
                    }
                }
                let mut walk = Vec::new();
                for (t, tcol) in tokens.by_ref() {
                    walk.push(parse_id(t).map_err(|msg| syntax(tcol, msg))?);
                }
                outer_walk = Some(walk);
            }
            "root:" | "root" => {
                if first == "root" {
                    let (sep, sep_col) = tokens
                        .next()
                        .ok_or_else(|| syntax(first_col, "expected `:` after `root`".into()))?;
                    if sep != ":" {
                        return Err(syntax(sep_col, format!("expected `:`, found `{sep}`")));
                    }
                }
                let (tok, col) =
                    tokens.next().ok_or_else(|| syntax(first_col, "expected root id".into()))?;
                root = Some(parse_id(tok).map_err(|msg| syntax(col, msg))?);
            }
            "tree:" | "tree" => {
                if first == "tree" {
                    let (sep, sep_col) = tokens
                        .next()
                        .ok_or_else(|| syntax(first_col, "expected `:` after `tree`".into()))?;
                    if sep != ":" {
                        return Err(syntax(sep_col, format!("expected `:`, found `{sep}`")));
                    }
                }
                let mut pairs = Vec::new();
                for (t, tcol) in tokens.by_ref() {
                    let (a, b) = t
                        .split_once('-')
                        .ok_or_else(|| syntax(tcol, format!("expected `a-b` pair, found `{t}`")))?;
                    let a = parse_id(a).map_err(|msg| syntax(tcol, msg))?;
                    let b = parse_id(b).map_err(|msg| syntax(tcol, msg))?;
                    pairs.push((a, b));
                }
                tree_hint = Some(pairs);
            }
            other => {
                return Err(syntax(first_col, format!("unknown directive `{other}`")));
            }
        }
    }

    let declared = declared_n.ok_or(GraphError::MissingSection("n"))?;
    if declared != rotation.len() {
        return Err(GraphError::VertexCountMismatch { declared, found: rotation.len() });
    }
    let outer_walk = outer_walk.ok_or(GraphError::MissingSection("outer"))?;
    let root = root.ok_or(GraphError::MissingSection("root"))?;
    EmbeddedGraph::new(rotation, outer_walk, root, tree_hint)
}

fn parse_id(s: &str) -> Result<VertexId, String> {
    match s.parse::<u32>() {
        Ok(n) if n >= 1 => Ok(VertexId(n)),
        _ => Err(format!("bad vertex id `{s}` (expected integer >= 1)")),
    }
}

fn tokenize(line: &str) -> impl Iterator<Item = (&str, usize)> {
    line.split_whitespace().map(move |tok| {
        let col = tok.as_ptr() as usize - line.as_ptr() as usize + 1;
        (tok, col)
    })
}
