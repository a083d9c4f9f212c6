//! Isomorph-free generation of all graphs on `n` vertices by canonical
//! augmentation: every graph is built from exactly one parent class by
//! appending a vertex.
//!
//! A child `G = P + v` is kept when `v` lies in the automorphism orbit of the
//! designated vertex of `G`. The designated vertex is the member of the first
//! smallest cell of the equitable refinement of the unit partition that comes
//! first in the canonical labelling, so it depends only on the isomorphism
//! class of `G`. Children of one parent that are isomorphic to each other are
//! removed by certificate.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::{bits, canonical_form, canonical_form_colored, canonical_labeling_from, refine_equitable, Graph};

/// Restrictions on generated graphs. Only `max_edges` prunes the search; the
/// other conditions are checked on the final graphs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub max_edges: Option<usize>,
    pub exact_edges: Option<usize>,
    pub connected: bool,
    pub no_isolated: bool,
}

impl GraphFilter {
    pub fn all() -> Self {
        GraphFilter::default()
    }

    pub fn connected() -> Self {
        GraphFilter { connected: true, ..Default::default() }
    }

    pub fn no_isolated() -> Self {
        GraphFilter { no_isolated: true, ..Default::default() }
    }

    pub fn edges(k: usize) -> Self {
        GraphFilter { exact_edges: Some(k), ..Default::default() }
    }

    fn edge_cap(&self) -> usize {
        match (self.max_edges, self.exact_edges) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => usize::MAX,
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        let e = g.edge_count();
        self.max_edges.is_none_or(|m| e <= m)
            && self.exact_edges.is_none_or(|k| e == k)
            && (!self.connected || g.is_connected())
            && (!self.no_isolated || g.isolated_vertex().is_none())
    }
}

/// Whether the last vertex of `g` is a canonical choice of vertex to delete.
fn is_canonical_extension(g: &Graph) -> bool {
    let n = g.n();
    let last = n - 1;
    let mut cells = vec![g.vertex_mask()];
    refine_equitable(g, &mut cells);
    let smallest = cells.iter().map(|c| c.count_ones()).min().expect("nonempty partition");
    let cell = *cells.iter().find(|c| c.count_ones() == smallest).unwrap();
    if cell & (1 << last) == 0 {
        return false;
    }
    if smallest == 1 {
        return true;
    }
    let lab = canonical_labeling_from(g, cells);
    let w = bits(cell).min_by_key(|&v| lab.perm[v]).unwrap();
    if w == last {
        return true;
    }
    let orbits = lab.known_orbits();
    if orbits[w] == orbits[last] {
        return true;
    }
    let rooted = |r: usize| {
        let mut colors = vec![1u32; n];
        colors[r] = 0;
        canonical_form_colored(g, &colors).0
    };
    rooted(w) == rooted(last)
}

/// Accepted children of `parent`, one per isomorphism class.
fn children(parent: &Graph, edge_cap: usize) -> Vec<Graph> {
    let m = parent.n();
    let room = edge_cap.saturating_sub(parent.edge_count());
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        if mask.count_ones() as usize > room {
            continue;
        }
        let g = parent.extended(mask);
        if !is_canonical_extension(&g) {
            continue;
        }
        let (cert, _) = canonical_form(&g);
        if seen.insert(cert) {
            out.push(g);
        }
    }
    out
}

fn level(n: usize, edge_cap: usize) -> Vec<Graph> {
    let mut graphs = vec![Graph::empty(1).expect("one vertex")];
    for _ in 1..n {
        graphs = graphs.par_iter().flat_map_iter(|p| children(p, edge_cap)).collect();
    }
    graphs
}

/// Calls `f` on one representative of every isomorphism class of graphs on
/// `n` vertices accepted by `filter`. Shards by parent graph across the rayon
/// pool, so `f` runs concurrently and in no fixed order.
pub fn par_for_each_graph(n: usize, filter: GraphFilter, f: impl Fn(&Graph) + Sync) {
    if n == 0 {
        return;
    }
    let cap = filter.edge_cap();
    if n == 1 {
        let g = Graph::empty(1).expect("one vertex");
        if filter.accepts(&g) {
            f(&g);
        }
        return;
    }
    let parents = level(n - 1, cap);
    parents.par_iter().for_each(|p| {
        for g in children(p, cap) {
            if filter.accepts(&g) {
                f(&g);
            }
        }
    });
}

/// All graphs on `n` vertices accepted by `filter`, sorted by certificate.
pub fn all_graphs(n: usize, filter: GraphFilter) -> Vec<Graph> {
    let out = std::sync::Mutex::new(Vec::new());
    par_for_each_graph(n, filter, |g| {
        out.lock().unwrap().push((canonical_form(g).0, *g));
    });
    let mut v = out.into_inner().unwrap();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v.into_iter().map(|(_, g)| g).collect()
}
