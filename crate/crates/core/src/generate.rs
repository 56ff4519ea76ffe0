//! Seeded instance generators.
//!
//! Graphs are grown combinatorially: an outer cycle on `n - k` vertices,
//! then `k` inner vertices dropped one at a time into an inner face and tied
//! to at least two of its boundary vertices, then chords across inner faces.
//! Every mutation updates the rotation system directly, so connectivity,
//! simplicity and planarity hold by construction and the result validates
//! against the full rotation-system checks.

use crate::graph::{EmbeddedGraph, GraphError, VertexId};
use crate::tree::RootedOrderedTree;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("infeasible parameters: need k <= n - 3 and n >= 3 (got n={n}, k={k})")]
    Infeasible { n: usize, k: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Deterministic k-inner instance for a seed: same seed, same graph.
pub fn generate_k_inner(seed: u64, n: usize, k: usize) -> Result<EmbeddedGraph, GenerateError> {
    if n < 3 || k + 3 > n {
        return Err(GenerateError::Infeasible { n, k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cycle_len = n - k;

    // outer cycle 1..=cycle_len, outer walk in ascending order
    let mut rotation: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for i in 1..=cycle_len {
        let prev = VertexId(if i == 1 { cycle_len as u32 } else { i as u32 - 1 });
        let next = VertexId(if i == cycle_len { 1 } else { i as u32 + 1 });
        rotation.insert(VertexId(i as u32), vec![prev, next]);
    }
    let outer_walk: Vec<VertexId> = (1..=cycle_len as u32).map(VertexId).collect();

    for inner in 0..k {
        let id = VertexId((cycle_len + inner + 1) as u32);
        insert_inner_vertex(&mut rotation, &outer_walk, id, &mut rng);
    }

    let chords = rng.gen_range(0..=k + 2);
    for _ in 0..chords {
        try_add_chord(&mut rotation, &outer_walk, &mut rng);
    }

    Ok(EmbeddedGraph::new(rotation, outer_walk, VertexId(1), None)?)
}

/// Inner faces of the current rotation system: every traced face except the
/// one matching the outer walk. Faces come back as vertex cycles.
fn inner_faces(
    rotation: &BTreeMap<VertexId, Vec<VertexId>>,
    outer_walk: &[VertexId],
) -> Vec<Vec<VertexId>> {
    let mut next_at: BTreeMap<(VertexId, VertexId), VertexId> = BTreeMap::new();
    for (&v, neighbors) in rotation {
        for (i, &w) in neighbors.iter().enumerate() {
            next_at.insert((w, v), neighbors[(i + 1) % neighbors.len()]);
        }
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
                cycle.push(a);
                visited.insert((a, b));
                let c = next_at[&(a, b)];
                a = std::mem::replace(&mut b, c);
                if (a, b) == (v, w) {
                    break;
                }
            }
            faces.push(cycle);
        }
    }
    faces.retain(|cycle| !is_cyclic_eq(cycle, outer_walk));
    faces
}

fn is_cyclic_eq(a: &[VertexId], b: &[VertexId]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return a.len() == b.len();
    }
    let m = a.len();
    (0..m).any(|off| (0..m).all(|i| a[(off + i) % m] == b[i]))
}

/// Splits the corner of `at` between its face-walk predecessor and successor
/// by inserting `new` there. The face keeps `prev -> at -> next` consecutive,
/// so `new` slots between `prev` and `next` in the rotation at `at`.
fn insert_in_corner(
    rotation: &mut BTreeMap<VertexId, Vec<VertexId>>,
    at: VertexId,
    prev: VertexId,
    next: VertexId,
    new: VertexId,
) {
    let rot = rotation.get_mut(&at).unwrap();
    debug_assert!(rot.len() >= 2, "corner insertion needs a real corner");
    let i = rot.iter().position(|&x| x == prev).unwrap();
    debug_assert_eq!(rot[(i + 1) % rot.len()], next);
    rot.insert(i + 1, new);
}

fn insert_inner_vertex(
    rotation: &mut BTreeMap<VertexId, Vec<VertexId>>,
    outer_walk: &[VertexId],
    id: VertexId,
    rng: &mut ChaCha8Rng,
) {
    let faces = inner_faces(rotation, outer_walk);
    let face = &faces[rng.gen_range(0..faces.len())];
    let m = face.len();
    let attach_count = rng.gen_range(2..=m.min(4));
    let mut picks: Vec<usize> = (0..m).collect();
    // deterministic sample: shuffle indices, take a prefix, restore face order
    for i in (1..picks.len()).rev() {
        let j = rng.gen_range(0..=i);
        picks.swap(i, j);
    }
    let mut chosen: Vec<usize> = picks.into_iter().take(attach_count).collect();
    chosen.sort_unstable();

    // rotation at the new vertex: reverse face order of its attachments
    let attach: Vec<VertexId> = chosen.iter().map(|&i| face[i]).collect();
    let mut own: Vec<VertexId> = attach.clone();
    own.reverse();
    rotation.insert(id, own);

    for &i in &chosen {
        let at = face[i];
        let prev = face[(i + m - 1) % m];
        let next = face[(i + 1) % m];
        insert_in_corner(rotation, at, prev, next, id);
    }
}

fn try_add_chord(
    rotation: &mut BTreeMap<VertexId, Vec<VertexId>>,
    outer_walk: &[VertexId],
    rng: &mut ChaCha8Rng,
) {
    let faces = inner_faces(rotation, outer_walk);
    let candidates: Vec<&Vec<VertexId>> = faces.iter().filter(|f| f.len() >= 4).collect();
    if candidates.is_empty() {
        return;
    }
    let face = candidates[rng.gen_range(0..candidates.len())];
    let m = face.len();
    for _ in 0..8 {
        let i = rng.gen_range(0..m);
        let j = rng.gen_range(0..m);
        let (a, b) = (face[i], face[j]);
        if a == b || rotation[&a].contains(&b) {
            continue;
        }
        insert_in_corner(rotation, a, face[(i + m - 1) % m], face[(i + 1) % m], b);
        insert_in_corner(rotation, b, face[(j + m - 1) % m], face[(j + 1) % m], a);
        return;
    }
}

/// Random ordered tree on `n` vertices: vertex `i` attaches to a uniformly
/// random earlier vertex at a uniformly random child position.
pub fn random_tree(seed: u64, n: usize) -> RootedOrderedTree {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut children: BTreeMap<VertexId, Vec<VertexId>> =
        (1..=n as u32).map(|i| (VertexId(i), Vec::new())).collect();
    for i in 2..=n as u32 {
        let parent = VertexId(rng.gen_range(1..i));
        let kids = children.get_mut(&parent).unwrap();
        let pos = rng.gen_range(0..=kids.len());
        kids.insert(pos, VertexId(i));
    }
    RootedOrderedTree::from_children(VertexId(1), children).expect("construction is a tree")
}

/// Path on `n` vertices rooted at one end.
pub fn path_tree(n: usize) -> RootedOrderedTree {
    let children: BTreeMap<VertexId, Vec<VertexId>> = (1..=n as u32)
        .map(|i| {
            let kids = if i < n as u32 { vec![VertexId(i + 1)] } else { vec![] };
            (VertexId(i), kids)
        })
        .collect();
    RootedOrderedTree::from_children(VertexId(1), children).unwrap()
}

/// Star: root 1 with children 2..=n.
pub fn star_tree(n: usize) -> RootedOrderedTree {
    let mut children: BTreeMap<VertexId, Vec<VertexId>> =
        (1..=n as u32).map(|i| (VertexId(i), Vec::new())).collect();
    children.insert(VertexId(1), (2..=n as u32).map(VertexId).collect());
    RootedOrderedTree::from_children(VertexId(1), children).unwrap()
}

/// Broom: a handle path of `handle` vertices ending in a fan of leaves.
pub fn broom_tree(n: usize, handle: usize) -> RootedOrderedTree {
    let handle = handle.clamp(1, n);
    let mut children: BTreeMap<VertexId, Vec<VertexId>> =
        (1..=n as u32).map(|i| (VertexId(i), Vec::new())).collect();
    for i in 1..handle as u32 {
        children.insert(VertexId(i), vec![VertexId(i + 1)]);
    }
    children.insert(
        VertexId(handle as u32),
        (handle as u32 + 1..=n as u32).map(VertexId).collect(),
    );
    RootedOrderedTree::from_children(VertexId(1), children).unwrap()
}

/// Caterpillar: a spine with one leaf leg per spine vertex; the spine child
/// precedes the leg in child order.
pub fn caterpillar_tree(spine: usize) -> RootedOrderedTree {
    assert!(spine >= 1);
    let n = 2 * spine;
    let mut children: BTreeMap<VertexId, Vec<VertexId>> =
        (1..=n as u32).map(|i| (VertexId(i), Vec::new())).collect();
    for s in 1..=spine as u32 {
        let mut kids = Vec::new();
        if s < spine as u32 {
            kids.push(VertexId(s + 1));
        }
        kids.push(VertexId(spine as u32 + s));
        children.insert(VertexId(s), kids);
    }
    RootedOrderedTree::from_children(VertexId(1), children).unwrap()
}

/// Complete binary tree with `depth` levels below the root.
pub fn balanced_binary_tree(depth: u32) -> RootedOrderedTree {
    let n = (1u32 << (depth + 1)) - 1;
    let mut children: BTreeMap<VertexId, Vec<VertexId>> =
        (1..=n).map(|i| (VertexId(i), Vec::new())).collect();
    for i in 1..=n {
        let (l, r) = (2 * i, 2 * i + 1);
        if r <= n {
            children.insert(VertexId(i), vec![VertexId(l), VertexId(r)]);
        }
    }
    RootedOrderedTree::from_children(VertexId(1), children).unwrap()
}
