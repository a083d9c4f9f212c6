//! Simple undirected graphs on at most 32 vertices.
//!
//! Each neighbourhood is a single `u32` bitset, so set operations used by the
//! enumeration and refinement code are single machine instructions. Values are
//! immutable once built; every "mutation" returns a new graph.

mod canon;
mod graph6;
pub mod named;

use std::fmt;

use crate::error::{Error, Result};

pub(crate) use canon::canonical_labeling_from;
pub use canon::{canonical_form, canonical_form_colored, refine_equitable, CanonicalCert, Labeling};
pub use graph6::{graph6_decode, graph6_encode};

pub const MAX_VERTICES: usize = 32;

/// Iterate over the set bits of a mask, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_VERTICES] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Build from raw adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let mut g = Graph::empty(rows.len())?;
        let n = rows.len();
        let valid = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        for (v, &r) in rows.iter().enumerate() {
            if r & !valid != 0 {
                return Err(Error::VertexOutOfRange { vertex: (r & !valid).trailing_zeros() as usize, n });
            }
            if r & (1 << v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            g.adj[v] = r;
        }
        for u in 0..n {
            for v in bits(g.adj[u]) {
                if g.adj[v] & (1 << u) == 0 {
                    return Err(Error::Dimension(format!("adjacency not symmetric at ({u},{v})")));
                }
            }
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = *self;
        g.set_edge(u, v);
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n()]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in bits(self.adj[u] & !((2u64 << u) - 1) as u32) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_mask(&self) -> u32 {
        if self.n() == 32 {
            u32::MAX
        } else {
            (1u32 << self.n()) - 1
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n()).find(|&v| self.adj[v] == 0)
    }

    /// Vertex set of the component containing `v`, as a bitmask.
    pub fn component_of(&self, v: usize) -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u32> {
        let mut rest = self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_of(rest.trailing_zeros() as usize);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks().into_iter().map(|m| bits(m).collect()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// A proper 2-colouring (`false`/`true` per vertex) if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut color = vec![None::<bool>; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            stack.push(s);
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for w in bits(self.adj[u]) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected, exactly one cycle, and that cycle is odd.
    pub fn is_odd_unicyclic(&self) -> bool {
        // connected with n edges has exactly one cycle; it is odd iff not bipartite
        self.is_connected() && self.edge_count() == self.n() && !self.is_bipartite()
    }

    /// Number of connected components that are bipartite.
    pub fn bipartite_component_count(&self) -> usize {
        self.component_masks().into_iter().filter(|&m| self.induced(m).is_bipartite()).count()
    }

    /// Induced subgraph on the vertices of `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u32) -> Graph {
        let verts: Vec<usize> = bits(mask).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph { n: verts.len() as u8, adj: [0; MAX_VERTICES] };
        for (i, &v) in verts.iter().enumerate() {
            for w in bits(self.adj[v] & mask) {
                g.adj[i] |= 1 << index[w];
            }
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n() == 1 {
            return Err(Error::VertexCount(0));
        }
        Ok(self.induced(self.vertex_mask() & !(1 << v)))
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for u in 0..self.n() {
            for w in bits(self.adj[u]) {
                g.adj[perm[u]] |= 1 << perm[w];
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n() + other.n();
        let mut g = Graph::empty(n)?;
        g.adj[..self.n()].copy_from_slice(self.rows());
        let off = self.n();
        for (v, &row) in other.rows().iter().enumerate() {
            g.adj[v + off] = row << off;
        }
        Ok(g)
    }

    /// Append one vertex adjacent to exactly the vertices in `mask`.
    pub(crate) fn extended(&self, mask: u32) -> Graph {
        let mut g = *self;
        let v = self.n();
        g.n += 1;
        g.adj[v] = mask;
        for u in bits(mask) {
            g.adj[u] |= 1 << v;
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6_encode(self))
    }
}

/// A graph with a distinguished vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootedGraph {
    graph: Graph,
    root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        graph.check_vertex(root)?;
        Ok(RootedGraph { graph, root })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Canonical certificate of the graph with the root individualised.
    pub fn certificate(&self) -> CanonicalCert {
        let mut colors = vec![1u32; self.graph.n()];
        colors[self.root] = 0;
        canonical_form_colored(&self.graph, &colors).0
    }
}

/// Identify the root of `g` with the root of `h`.
///
/// The result keeps `h`'s labelling on its first `h.n` vertices; the non-root
/// vertices of `g` follow in increasing order.
pub fn coalesce(h: &RootedGraph, g: &RootedGraph) -> Result<Graph> {
    coalesce_with_map(h, g).map(|(out, _)| out)
}

/// As [`coalesce`], also returning where each vertex of `g` landed.
pub fn coalesce_with_map(h: &RootedGraph, g: &RootedGraph) -> Result<(Graph, Vec<usize>)> {
    let hn = h.graph.n();
    let gn = g.graph.n();
    let n = hn + gn - 1;
    let mut out = Graph::empty(n)?;
    out.adj[..hn].copy_from_slice(h.graph.rows());
    let mut map = vec![0usize; gn];
    let mut next = hn;
    for (v, slot) in map.iter_mut().enumerate() {
        if v == g.root {
            *slot = h.root;
        } else {
            *slot = next;
            next += 1;
        }
    }
    for (u, v) in g.graph.edges() {
        out.set_edge(map[u], map[v]);
    }
    Ok((out, map))
}
