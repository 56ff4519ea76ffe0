//! Acceptance suite: one test per shipped guarantee, each printing a
//! `ACCEPT <id> <name>: pass` line. Bound targets that are corpus-validated
//! rather than proven report their violators as named known-gap lines
//! instead of silently passing them.

use monodraw_core::assemble::{draw_monotone, LambdaMode, PipelineState};
use monodraw_core::generate::{
    balanced_binary_tree, broom_tree, caterpillar_tree, generate_k_inner, path_tree, random_tree,
    star_tree,
};
use monodraw_core::geom::Point;
use monodraw_core::graph::VertexId;
use monodraw_core::layout::{layout_first_quadrant, layout_tree};
use monodraw_core::leaders::{covered_leaves, leader_edges};
use monodraw_core::tree::{find_good_tree, RootedOrderedTree};
use monodraw_core::verify::{
    check_monotone, check_near_convex, check_planar_drawing, check_planar_segments,
    check_slope_disjoint, root_exception_count,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MONOTONE_ALL_PAIRS_LIMIT: usize = 128;
const FIND_BUDGET: u64 = 60_000;

fn v(n: u32) -> VertexId {
    VertexId(n)
}

/// 200 seeded random trees up to n = 512 plus the structured families.
fn tree_corpus() -> Vec<(String, RootedOrderedTree)> {
    let mut corpus = Vec::new();
    for i in 0..200u64 {
        let n = match i {
            0 => 512,
            1 => 2,
            2 => 3,
            _ => 4 + ((i * 2654435761) % 509) as usize,
        };
        corpus.push((format!("random(seed={i},n={n})"), random_tree(i, n)));
    }
    for n in [2usize, 3, 17, 128, 512] {
        corpus.push((format!("path(n={n})"), path_tree(n)));
        corpus.push((format!("star(n={n})"), star_tree(n)));
    }
    for n in [16usize, 128, 512] {
        corpus.push((format!("broom(n={n})"), broom_tree(n, n / 2)));
    }
    for spine in [8usize, 64, 256] {
        corpus.push((format!("caterpillar(spine={spine})"), caterpillar_tree(spine)));
    }
    for depth in [3u32, 6, 8] {
        corpus.push((format!("binary(depth={depth})"), balanced_binary_tree(depth)));
    }
    corpus
}

/// First 100 generated k-inner instances (n <= 64, k <= 5) whose fixed
/// embedding admits a good spanning tree within the search budget. Computed
/// once; several criteria walk the same corpus.
fn pipeline_corpus() -> &'static [(u64, monodraw_core::EmbeddedGraph, RootedOrderedTree)] {
    static CORPUS: std::sync::OnceLock<Vec<(u64, monodraw_core::EmbeddedGraph, RootedOrderedTree)>> =
        std::sync::OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut out = Vec::new();
        let mut seed = 0u64;
        while out.len() < 100 && seed < 400 {
            let n = 8 + ((seed * 31) % 57) as usize; // 8..=64
            let k = (seed % 6) as usize; // 0..=5
            let g = generate_k_inner(seed, n, k).expect("parameters are feasible");
            if let Ok(t) = find_good_tree(&g, FIND_BUDGET) {
                out.push((seed, g, t));
            }
            seed += 1;
        }
        assert!(
            out.len() == 100,
            "only {} of 100 pipeline instances found a good tree within {} seeds",
            out.len(),
            seed
        );
        out
    })
}

fn outerplanar_corpus() -> Vec<(u64, monodraw_core::EmbeddedGraph)> {
    let mut out = Vec::new();
    let mut seed = 1000u64;
    while out.len() < 50 && seed < 1300 {
        let n = 4 + ((seed * 17) % 61) as usize; // 4..=64
        let g = generate_k_inner(seed, n, 0).expect("parameters are feasible");
        if find_good_tree(&g, FIND_BUDGET).is_ok() {
            out.push((seed, g));
        }
        seed += 1;
    }
    assert!(out.len() == 50, "only {} of 50 outerplanar instances", out.len());
    out
}

#[test]
fn acceptance_1_tree_layout_properties() {
    for (name, t) in tree_corpus() {
        let (d, w, _) = layout_tree(&t);
        assert!(
            check_slope_disjoint(&t, &d, &w).unwrap().is_pass(),
            "slope-disjoint witness fails on {name}"
        );
        assert!(check_near_convex(&t, &d).is_pass(), "near-convexity fails on {name}");
        assert_eq!(root_exception_count(&t, &d), 0, "root exception used on {name}");
        for (vid, p) in d.iter() {
            assert!(
                p.y >= p.x && p.x >= 0,
                "{name}: vertex {vid} at ({}, {}) leaves the second octant",
                p.x,
                p.y
            );
        }
        if t.len() <= MONOTONE_ALL_PAIRS_LIMIT {
            let g = tree_as_graph(&t);
            assert!(
                check_monotone(&g, &t, &d).is_pass(),
                "all-pairs monotonicity fails on {name}"
            );
        }
    }
    println!("ACCEPT 1 tree-layout-properties: pass");
}

/// Wraps a standalone tree as an embedded graph so graph-level checks apply.
fn tree_as_graph(t: &RootedOrderedTree) -> monodraw_core::EmbeddedGraph {
    // rotations: parent first, then children in order; outer walk = the tree's
    // single face, traced child-first from the root
    let mut rotation = std::collections::BTreeMap::new();
    for &x in t.preorder() {
        let mut rot = Vec::new();
        if let Some(p) = t.parent(x) {
            rot.push(p);
        }
        rot.extend(t.children(x).iter().copied());
        rotation.insert(x, rot);
    }
    let mut walk = Vec::new();
    fn tour(
        t: &RootedOrderedTree,
        walk: &mut Vec<VertexId>,
        x: VertexId,
    ) {
        for &c in t.children(x) {
            walk.push(x);
            tour(t, walk, c);
        }
        walk.push(x);
    }
    tour(t, &mut walk, t.root());
    walk.pop(); // closing the cycle re-adds the root implicitly
    if walk.is_empty() {
        walk.push(t.root());
    }
    monodraw_core::EmbeddedGraph::new(rotation, walk, t.root(), None).expect("tree embeds")
}

#[test]
fn acceptance_2_tree_grid_bounds() {
    // exact n-1 for paths and stars
    for n in [2usize, 3, 17, 128, 512] {
        for (name, t) in [("path", path_tree(n)), ("star", star_tree(n))] {
            let (d, _) = layout_first_quadrant(&t);
            assert!(
                d.side() <= n as i64 - 1,
                "{name}(n={n}) side {} exceeds n-1",
                d.side()
            );
        }
    }

    let mut nxn_gaps = Vec::new();
    let mut shape_gaps = Vec::new();
    for (name, t) in tree_corpus() {
        let n = t.len() as i64;
        let (d, _) = layout_first_quadrant(&t);
        let (w, h) = d.extent();
        // proven envelope: every dimension at most n^2 / 4
        assert!(
            4 * w <= n * n && 4 * h <= n * n,
            "{name}: grid {w}x{h} exceeds the proven n^2/4 envelope"
        );
        if w > n || h > n {
            nxn_gaps.push(format!("ACCEPT 2 KNOWN-GAP(nxn) tree={name} grid={w}x{h} n={n}"));
        }
        if w.min(h) > n {
            shape_gaps.push(format!(
                "ACCEPT 2 KNOWN-GAP(envelope-shape) tree={name} grid={w}x{h} n={n}"
            ));
        }
    }
    for line in nxn_gaps.iter().chain(&shape_gaps) {
        println!("{line}");
    }
    println!(
        "ACCEPT 2 tree-grid-bounds: pass ({} n-by-n gaps, {} envelope-shape gaps reported)",
        nxn_gaps.len(),
        shape_gaps.len()
    );
}

#[test]
fn acceptance_3_pipeline_bounds() {
    for (seed, g, t) in pipeline_corpus() {
        let (_, _, report) =
            monodraw_core::assemble::draw_monotone_with_tree(&g, &t, LambdaMode::Strict).unwrap();
        assert!(
            report.fits_ledger(),
            "seed {seed}: side {} exceeds ledger bound {}",
            report.side(),
            report.ledger_bound
        );

        let (_, _, paper) =
            monodraw_core::assemble::draw_monotone_with_tree(&g, &t, LambdaMode::Paper).unwrap();
        let n = g.vertex_count() as i64;
        if paper.tree_side <= 2 * n {
            assert!(
                paper.fits_paper_bound(),
                "seed {seed}: paper-mode side {} exceeds 2(k+1)n = {}",
                paper.side(),
                paper.paper_bound
            );
        }
    }
    println!("ACCEPT 3 pipeline-bounds: pass");
}

#[test]
fn acceptance_4_leader_and_cover_counts() {
    for (seed, g, t) in pipeline_corpus() {
        let k = g.inner_vertices().len();
        let leaders = leader_edges(&g, &t).unwrap();
        assert!(
            leaders.len() <= k,
            "seed {seed}: {} leaders exceed k = {k}",
            leaders.len()
        );
        let tree_edges = t.edge_set();
        for e in g.edges() {
            if tree_edges.contains(&e) {
                continue;
            }
            let c = covered_leaves(&g, &t, e).unwrap();
            assert!(c.len() <= k, "seed {seed}: |C({e:?})| = {} exceeds k = {k}", c.len());
        }
    }
    println!("ACCEPT 4 leader-and-cover-counts: pass");
}

#[test]
fn acceptance_5_final_drawings_planar_and_monotone() {
    for (seed, g, t) in pipeline_corpus() {
        let (d, _, report) =
            monodraw_core::assemble::draw_monotone_with_tree(&g, &t, LambdaMode::Strict).unwrap();
        // the leaders-only sub-drawing stays planar, and adding the ordinary
        // edges preserves that
        let leaders = leader_edges(&g, &t).unwrap();
        let mut partial: Vec<(VertexId, VertexId)> = t.edge_set().into_iter().collect();
        partial.extend(leaders.iter().map(|r| r.edge));
        let vertices: Vec<VertexId> = g.vertices().collect();
        assert!(
            check_planar_segments(&d, &partial, &vertices).is_pass(),
            "seed {seed}: tree+leader drawing is not planar"
        );
        assert!(
            check_planar_drawing(&g, &d).is_pass(),
            "seed {seed}: final drawing is not planar"
        );
        assert!(
            check_monotone(&g, &t, &d).is_pass(),
            "seed {seed}: final drawing is not tree-path monotone"
        );
        assert!(report.ok, "seed {seed}: pipeline self-check failed");
    }
    println!("ACCEPT 5 final-drawings-planar-and-monotone: pass");
}

#[test]
fn acceptance_6_elongation_instrumentation() {
    let mut total_repeats = 0usize;
    let mut repeat_seeds = Vec::new();
    for (seed, g, t) in pipeline_corpus() {
        let (_, _, report) =
            monodraw_core::assemble::draw_monotone_with_tree(g, t, LambdaMode::Strict).unwrap();
        let mut endpoint_uses: std::collections::BTreeMap<VertexId, usize> = Default::default();
        for (rec, _, _) in &report.elongations {
            *endpoint_uses.entry(rec.edge.0).or_default() += 1;
            *endpoint_uses.entry(rec.edge.1).or_default() += 1;
        }
        let mut touched: Vec<VertexId> = Vec::new();
        let mut repeats = 0usize;
        for (rec, lu, lv) in &report.elongations {
            for (endpoint, lambda) in [(rec.edge.0, *lu), (rec.edge.1, *lv)] {
                if lambda == 0 {
                    continue;
                }
                // no edge strictly inside the subtree moved before its entry
                // edge: the property the dependency order exists to provide
                for &earlier in &touched {
                    assert!(
                        !t.is_proper_ancestor(endpoint, earlier),
                        "seed {seed}: edge inside subtree of {endpoint} elongated first"
                    );
                }
                if touched.contains(&endpoint) {
                    // an entry edge moves twice only when two leaders share
                    // the endpoint; anything else is a bookkeeping bug
                    repeats += 1;
                    assert!(
                        endpoint_uses[&endpoint] > 1,
                        "seed {seed}: edge into {endpoint} elongated twice without shared leaders"
                    );
                } else {
                    touched.push(endpoint);
                }
            }
        }
        assert_eq!(repeats, report.shared_endpoint_repeats, "seed {seed}: repeat accounting");
        if repeats > 0 {
            total_repeats += repeats;
            repeat_seeds.push(*seed);
        }
        let _ = g;
    }
    for seed in &repeat_seeds {
        println!("ACCEPT 6 SHARED-ENDPOINT seed={seed}: entry edge re-elongated for a second leader");
    }
    println!(
        "ACCEPT 6 elongation-instrumentation: pass ({total_repeats} shared-endpoint re-elongations across {} instances)",
        repeat_seeds.len()
    );
}

#[test]
fn acceptance_7_outerplanar_nxn() {
    for (seed, g) in outerplanar_corpus() {
        let n = g.vertex_count() as i64;
        let (d, t, report) = draw_monotone(&g, LambdaMode::Strict, FIND_BUDGET).unwrap();
        assert_eq!(report.leader_count, 0, "seed {seed}: outerplanar instance has leaders");
        assert!(report.outerplanar_path, "seed {seed}: fast path not taken");
        let (quadrant, _) = layout_first_quadrant(&t);
        for x in g.vertices() {
            assert_eq!(
                d.point(x),
                quadrant.point(x),
                "seed {seed}: final drawing differs from the tree drawing"
            );
        }
        assert!(report.side() <= n, "seed {seed}: side {} exceeds n = {n}", report.side());
        assert!(check_planar_drawing(&g, &d).is_pass(), "seed {seed}: not planar");
        assert!(check_monotone(&g, &t, &d).is_pass(), "seed {seed}: not monotone");
    }
    println!("ACCEPT 7 outerplanar-nxn: pass");
}

#[test]
fn acceptance_8_k4_snapshot() {
    let g = monodraw_core::parse_embedded_graph(
        "n 4\nv 1: 2 4 3\nv 2: 3 4 1\nv 3: 1 4 2\nv 4: 3 1 2\nouter: 1 2 3\nroot: 1\n",
    )
    .unwrap();
    let (d, _, report) = draw_monotone(&g, LambdaMode::Strict, 100_000).unwrap();
    assert_eq!(d.point(v(1)), Point::new(0, 0));
    assert_eq!(d.point(v(2)), Point::new(0, 4));
    assert_eq!(d.point(v(4)), Point::new(1, 3));
    assert_eq!(d.point(v(3)), Point::new(4, 6));
    assert_eq!((report.width, report.height), (4, 6));
    assert!(report.side() <= 16);
    assert!(report.ok);
    println!("ACCEPT 8 k4-snapshot: pass");
}

#[test]
fn acceptance_9_verifier_cross_validation() {
    // 9a: the planarity predicate agrees with an exact rational-intersection
    // oracle over random segment families with many degeneracies
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for case in 0..1000 {
        let p = |rng: &mut ChaCha8Rng| Point::new(rng.gen_range(-8..=8), rng.gen_range(-8..=8));
        let (a, b, c, d) = (p(&mut rng), p(&mut rng), p(&mut rng), p(&mut rng));
        let fast = monodraw_core::geom::segments_intersect(a, b, c, d);
        let slow = oracle_intersect(a, b, c, d);
        assert_eq!(fast, slow, "case {case}: {a:?}-{b:?} vs {c:?}-{d:?}");
    }

    // 9b: witness acceptance implies monotonicity on the tree corpus
    for (name, t) in tree_corpus() {
        if t.len() > MONOTONE_ALL_PAIRS_LIMIT {
            continue;
        }
        let (d, w, _) = layout_tree(&t);
        if check_slope_disjoint(&t, &d, &w).unwrap().is_pass() {
            let g = tree_as_graph(&t);
            assert!(
                check_monotone(&g, &t, &d).is_pass(),
                "{name}: witness passed but the drawing is not monotone"
            );
        }
    }

    // elongation invariance: random factor sequences keep all directions and
    // all tree-stage certificates intact
    for seed in 0..20u64 {
        let t = random_tree(seed + 7000, 40);
        let g = tree_as_graph(&t);
        let (drawing, witness, refs) = layout_tree(&t);
        let mut state =
            PipelineState::new(g.clone(), t.clone(), drawing, witness, refs.clone(), LambdaMode::Strict);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10 {
            let x = VertexId(rng.gen_range(2..=40));
            let lambda = rng.gen_range(0..4);
            state = state.elongate(x, lambda).unwrap();
        }
        let d = state.drawing();
        for (child, reference) in refs.iter() {
            let p = t.parent(child).unwrap();
            let dir = d.point(p).to(d.point(child));
            assert!(
                reference.same_direction(dir),
                "seed {seed}: direction of edge into {child} changed"
            );
        }
        assert!(check_slope_disjoint(&t, d, state.witness()).unwrap().is_pass());
        assert!(check_near_convex(&t, d).is_pass());
        assert!(check_monotone(&g, &t, d).is_pass());
        let tree_edges: Vec<_> = t.edge_set().into_iter().collect();
        let vertices: Vec<_> = g.vertices().collect();
        assert!(check_planar_segments(d, &tree_edges, &vertices).is_pass());
    }
    println!("ACCEPT 9 verifier-cross-validation: pass");
}

/// Exact rational segment intersection: solves the 2x2 parametric system and
/// compares the parameters against [0, 1] with sign-aware integer arithmetic.
fn oracle_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    type I = i128;
    let (d1x, d1y) = ((b.x - a.x) as I, (b.y - a.y) as I);
    let (d2x, d2y) = ((d.x - c.x) as I, (d.y - c.y) as I);
    let (acx, acy) = ((c.x - a.x) as I, (c.y - a.y) as I);
    let cross = |ux: I, uy: I, vx: I, vy: I| ux * vy - uy * vx;
    let in_unit = |num: I, den: I| {
        if den > 0 {
            0 <= num && num <= den
        } else {
            den <= num && num <= 0
        }
    };
    let point_on = |px: I, py: I, qx: I, qy: I, ex: I, ey: I| {
        // p relative to segment origin q with direction e
        let (rx, ry) = (px - qx, py - qy);
        cross(rx, ry, ex, ey) == 0 && {
            let t = rx * ex + ry * ey;
            0 <= t && t <= ex * ex + ey * ey
        }
    };

    let deg1 = d1x == 0 && d1y == 0;
    let deg2 = d2x == 0 && d2y == 0;
    if deg1 && deg2 {
        return a == c;
    }
    if deg1 {
        return point_on(a.x as I, a.y as I, c.x as I, c.y as I, d2x, d2y);
    }
    if deg2 {
        return point_on(c.x as I, c.y as I, a.x as I, a.y as I, d1x, d1y);
    }

    let denom = cross(d1x, d1y, d2x, d2y);
    if denom != 0 {
        let t_num = cross(acx, acy, d2x, d2y);
        let u_num = cross(acx, acy, d1x, d1y);
        return in_unit(t_num, denom) && in_unit(u_num, denom);
    }
    // parallel: intersect only if collinear with overlapping parameter ranges
    if cross(acx, acy, d1x, d1y) != 0 {
        return false;
    }
    let len2 = d1x * d1x + d1y * d1y;
    let tc = acx * d1x + acy * d1y;
    let td = (d.x as I - a.x as I) * d1x + (d.y as I - a.y as I) * d1y;
    let (lo, hi) = (tc.min(td), tc.max(td));
    lo.max(0) <= hi.min(len2)
}
