//! Explicit cospectral tree / non-tree constructions: the Schwenk limb swap for
//! `A`, coalesced pairs for `Q`, ornamented binary trees and a fixed ternary
//! example for the normalized adjacency matrix.

use serde::Serialize;

use crate::cycle_decomp::Block;
use crate::error::{Error, Result};
use crate::graph::named::{complete, spider, star};
use crate::graph::{bits, canonical_form_colored, coalesce, coalesce_with_map, graph6_encode, Graph, RootedGraph};
use crate::spectra::{char_poly, CharPoly, MatrixKind};
use crate::word::{ExtendedWord, WordTree};

/// Two graphs with both characteristic polynomials and the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CospectralityCertificate {
    pub kind: MatrixKind,
    pub first: String,
    pub second: String,
    pub first_charpoly: CharPoly,
    pub second_charpoly: CharPoly,
    pub cospectral: bool,
}

pub fn certify(g1: &Graph, g2: &Graph, kind: MatrixKind) -> Result<CospectralityCertificate> {
    let a = char_poly(g1, kind)?.charpoly;
    let b = char_poly(g2, kind)?.charpoly;
    Ok(CospectralityCertificate {
        kind,
        first: graph6_encode(g1),
        second: graph6_encode(g2),
        cospectral: a == b,
        first_charpoly: a,
        second_charpoly: b,
    })
}

/// Rooted tree `t1` and rooted non-tree `t2`, cospectral under `A`, whose
/// root-deleted graphs are also cospectral (both `P5 ∪ K1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LimbPair {
    /// Spider with three legs of length two, rooted at the middle of a leg.
    pub t1: RootedGraph,
    /// Six-cycle plus an isolated vertex, rooted on the cycle.
    pub t2: RootedGraph,
}

pub fn limb_pair() -> LimbPair {
    // spider: centre 0, legs 0-1-2, 0-3-4, 0-5-6
    let t1 = RootedGraph::new(spider(&[2, 2, 2]), 1).expect("root in range");
    let c6_k1 = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).expect("seven vertices");
    let t2 = RootedGraph::new(c6_k1, 0).expect("root in range");
    LimbPair { t1, t2 }
}

/// A copy of a rooted graph inside a host: `map[x]` is the host vertex of limb
/// vertex `x`, with the limb root sent to `vertex`. Apart from `vertex`, the
/// copy has no edges to the rest of the host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimbOccurrence {
    pub vertex: usize,
    pub vertices: u32,
    pub map: Vec<usize>,
}

/// Components of `g - root`, each with its attachment vertex (`None` for a
/// component not adjacent to the root).
fn branches(g: &Graph, root: usize) -> Vec<(u32, Option<usize>)> {
    let rest = g.vertex_mask() & !(1 << root);
    let h = g.induced(rest);
    let expand = |m: u32| -> u32 { bits(m).map(|i| bits(rest).nth(i).unwrap()).fold(0, |acc, v| acc | 1 << v) };
    h.component_masks().into_iter().map(expand).map(|mask| (mask, bits(g.neighbors(root) & mask).next())).collect()
}

/// Canonical labelling of the rooted induced subgraph, translated back to
/// host vertices: `order[i]` is the host vertex at canonical position `i`.
fn rooted_canon(g: &Graph, mask: u32, root: usize) -> (crate::graph::CanonicalCert, Vec<usize>) {
    let verts: Vec<usize> = bits(mask).collect();
    let sub = g.induced(mask);
    let mut colors = vec![1u32; verts.len()];
    colors[verts.iter().position(|&v| v == root).expect("root in mask")] = 0;
    let (cert, perm) = canonical_form_colored(&sub, &colors);
    let mut order = vec![0; verts.len()];
    for (i, &p) in perm.iter().enumerate() {
        order[p] = verts[i];
    }
    (cert, order)
}

fn find_occurrence(
    g: &Graph,
    limb: &RootedGraph,
    v: usize,
    host_branches: &[(u32, usize, crate::graph::CanonicalCert)],
) -> Option<LimbOccurrence> {
    let lg = limb.graph();
    let mut map = vec![usize::MAX; lg.n()];
    map[limb.root()] = v;
    let mut used = vec![false; host_branches.len()];
    let mut vertices = 1u32 << v;
    for (mask, attach) in branches(lg, limb.root()) {
        let attach = attach?;
        let (cert, order) = rooted_canon(lg, mask, attach);
        let j = (0..host_branches.len()).find(|&j| !used[j] && host_branches[j].2 == cert)?;
        used[j] = true;
        let (hmask, hattach, _) = host_branches[j];
        let (_, horder) = rooted_canon(g, hmask, hattach);
        for (x, y) in order.iter().zip(&horder) {
            map[*x] = *y;
        }
        vertices |= hmask;
    }
    Some(LimbOccurrence { vertex: v, vertices, map })
}

/// Every vertex of the tree `s` at which `limb` hangs as a limb, one
/// occurrence per vertex.
pub fn limb_occurrences(s: &Graph, limb: &RootedGraph) -> Result<Vec<LimbOccurrence>> {
    if !s.is_tree() {
        return Err(Error::NotATree);
    }
    let mut out = Vec::new();
    if limb.graph().n() > s.n() {
        return Ok(out);
    }
    for v in 0..s.n() {
        let host: Vec<_> = branches(s, v)
            .into_iter()
            .map(|(mask, attach)| {
                let attach = attach.expect("trees are connected");
                (mask, attach, rooted_canon(s, mask, attach).0)
            })
            .collect();
        if let Some(occ) = find_occurrence(s, limb, v, &host) {
            out.push(occ);
        }
    }
    Ok(out)
}

/// Checks that `occ` embeds `limb` in `g` as a limb.
pub fn check_occurrence(g: &Graph, occ: &LimbOccurrence, limb: &RootedGraph) -> Result<()> {
    let lg = limb.graph();
    let bad = || Error::InvalidOccurrence(occ.vertex);
    if occ.map.len() != lg.n() || occ.vertex >= g.n() || occ.map[limb.root()] != occ.vertex {
        return Err(bad());
    }
    let image =
        occ.map
            .iter()
            .try_fold(0u32, |m, &y| if y < g.n() && m & (1 << y) == 0 { Ok(m | 1 << y) } else { Err(bad()) })?;
    if image != occ.vertices {
        return Err(bad());
    }
    for x in 0..lg.n() {
        let y = occ.map[x];
        let want = bits(lg.neighbors(x)).fold(0u32, |m, w| m | 1 << occ.map[w]);
        let have = if x == limb.root() { g.neighbors(y) & image } else { g.neighbors(y) };
        if want != have {
            return Err(bad());
        }
    }
    Ok(())
}

/// Replaces the copy of `from` at `occ` by `with`, attached at the same
/// vertex. Vertices outside the old copy keep their relative order and come
/// first; returns the new graph and the occurrence of `with` in it.
pub fn replace_limb(
    g: &Graph,
    occ: &LimbOccurrence,
    from: &RootedGraph,
    with: &RootedGraph,
) -> Result<(Graph, LimbOccurrence)> {
    check_occurrence(g, occ, from)?;
    let keep = (g.vertex_mask() & !occ.vertices) | 1 << occ.vertex;
    let host = g.induced(keep);
    let root = (keep & ((1u32 << occ.vertex) - 1)).count_ones() as usize;
    let (out, map) = coalesce_with_map(&RootedGraph::new(host, root)?, with)?;
    let vertices = map.iter().fold(0u32, |m, &y| m | 1 << y);
    Ok((out, LimbOccurrence { vertex: root, vertices, map }))
}

/// Swaps the spider limb at `occ` for the six-cycle limb. The result is
/// `A`-cospectral with `s` and contains a six-cycle.
pub fn limb_swap(s: &Graph, occ: &LimbOccurrence) -> Result<Graph> {
    let pair = limb_pair();
    Ok(replace_limb(s, occ, &pair.t1, &pair.t2)?.0)
}

/// Triangle plus an isolated vertex, and the star `K_{1,3}`: `Q`-cospectral.
pub fn q_base_pair() -> (Graph, Graph) {
    let faux = complete(3).disjoint_union(&Graph::empty(1).expect("one vertex")).expect("four vertices");
    (faux, star(3))
}

/// Coalesces a copy of `rooted` at every vertex of both base graphs. The two
/// results stay `Q`-cospectral; for a tree on `k` vertices they are a non-tree
/// and a tree on `4k` vertices.
pub fn q_attach(rooted: &RootedGraph) -> Result<(Graph, Graph)> {
    let (a, b) = q_base_pair();
    let attach = |base: Graph| -> Result<Graph> {
        let mut g = base;
        for v in 0..4 {
            g = coalesce(&RootedGraph::new(g, v)?, rooted)?;
        }
        Ok(g)
    };
    let (fa, fb) = (attach(a)?, attach(b)?);
    debug_assert_eq!(
        char_poly(&fa, MatrixKind::SignlessLaplacian)?.charpoly,
        char_poly(&fb, MatrixKind::SignlessLaplacian)?.charpoly,
        "coalesced Q pair lost cospectrality"
    );
    Ok((fa, fb))
}

/// A word together with the block shape `K_{p,q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrnamentSpec {
    pub word: WordTree,
    pub p: usize,
    pub q: usize,
}

impl OrnamentSpec {
    pub fn new(word: WordTree, p: usize, q: usize) -> Result<Self> {
        if p < 1 || q < 2 {
            return Err(Error::OrnamentParams { p, q });
        }
        Ok(OrnamentSpec { word, p, q })
    }

    pub fn from_extended(word: &ExtendedWord, p: usize, q: usize) -> Result<Self> {
        OrnamentSpec::new(word.body.clone(), p, q)
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.word.letters() * (self.p + self.q - 1)
    }
}

pub fn build_ornamented(spec: &OrnamentSpec) -> Result<Graph> {
    Ok(ornament_with_blocks(spec)?.0)
}

/// The ornament and its `K_{p,q}` blocks, one per letter in pre-order.
///
/// Vertex 0 is the root. Each block, when reached, appends its `+` child, its
/// `-` child, the `p - 1` extra p-side vertices and the `q - 2` extra q-side
/// vertices, in that order.
pub fn ornament_with_blocks(spec: &OrnamentSpec) -> Result<(Graph, Vec<Block>)> {
    let n = spec.vertex_count();
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge(format!("ornament with {n} vertices")));
    }
    let mut edges = Vec::new();
    let mut blocks = Vec::new();
    let mut next = 1;
    grow(&spec.word, 0, spec, &mut next, &mut edges, &mut blocks);
    debug_assert_eq!(next, n);
    Ok((Graph::from_edges(n, &edges)?, blocks))
}

fn grow(
    w: &WordTree,
    apex: usize,
    spec: &OrnamentSpec,
    next: &mut usize,
    edges: &mut Vec<(usize, usize)>,
    blocks: &mut Vec<Block>,
) {
    let start = *next;
    let (plus, minus) = (start, start + 1);
    let p_side: Vec<usize> = std::iter::once(apex).chain(start + 2..start + 1 + spec.p).collect();
    let q_side: Vec<usize> = [plus, minus].into_iter().chain(start + 1 + spec.p..start + spec.p + spec.q - 1).collect();
    *next = start + spec.p + spec.q - 1;
    for &a in &p_side {
        for &b in &q_side {
            edges.push((a, b));
        }
    }
    blocks.push(Block::new(&p_side, &q_side));
    match w {
        WordTree::End => {}
        WordTree::Single(inner) => grow(inner, minus, spec, next, edges, blocks),
        WordTree::Double(a, b) => {
            grow(a, plus, spec, next, edges, blocks);
            grow(b, minus, spec, next, edges, blocks);
        }
    }
}

/// Fixed 17-vertex pair from a ternary tree, cospectral under the normalized
/// adjacency matrix: the tree first, then the non-tree.
pub fn kary_example_pair() -> (Graph, Graph) {
    // 0 = A; 1..=3 = B, C, D; 4..=12 = B1..B3, C1..C3, D1..D3; 13 = AA; 14..=16 = BB, CC, DD
    let mut shared = Vec::new();
    for i in 0..3 {
        let mid = 1 + i;
        shared.push((0, mid));
        for j in 0..3 {
            shared.push((mid, 4 + 3 * i + j));
        }
    }
    let mut tree = shared.clone();
    tree.push((0, 13));
    for i in 0..3 {
        tree.push((1 + i, 14 + i));
    }
    let mut faux = shared;
    for i in 0..3 {
        faux.push((13, 1 + i));
        for j in 0..3 {
            faux.push((14 + i, 4 + 3 * i + j));
        }
    }
    (Graph::from_edges(17, &tree).expect("17 vertices"), Graph::from_edges(17, &faux).expect("17 vertices"))
}
