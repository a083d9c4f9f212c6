//! Canonical labelling by equitable partition refinement and a backtracking
//! search over individualised vertices.
//!
//! Every search node carries an isomorphism-invariant trace (its quotient
//! matrix, or the permuted adjacency rows at a leaf). The canonical leaf is the
//! one with the lexicographically smallest sequence of traces along its path,
//! so subtrees whose trace already exceeds the best path are cut. Automorphisms
//! discovered at equal leaves prune sibling subtrees lying in the same orbit
//! of the pointwise stabiliser of the current prefix.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{bits, graph6_encode, Graph};

/// Upper-triangle adjacency bitstring of the canonically relabelled graph,
/// stored in graph6 byte layout (so it prints as a graph6 line).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCert(Vec<u8>);

impl CanonicalCert {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl Serialize for CanonicalCert {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cert({})", self.as_str())
    }
}

impl fmt::Display for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of a canonical search.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `perm[v]` is the canonical position of vertex `v`.
    pub perm: Vec<usize>,
    /// Automorphisms met during the search (not necessarily a generating set).
    pub automorphisms: Vec<Vec<usize>>,
}

impl Labeling {
    /// Union of the orbits of the automorphisms found, as representative ids.
    pub fn known_orbits(&self) -> Vec<usize> {
        let n = self.perm.len();
        let mut uf: Vec<usize> = (0..n).collect();
        for gen in &self.automorphisms {
            for (v, &w) in gen.iter().enumerate() {
                union(&mut uf, v, w);
            }
        }
        (0..n).map(|v| find(&mut uf, v)).collect()
    }
}

/// Canonical certificate and relabelling (`perm[v]` = new index of `v`).
pub fn canonical_form(g: &Graph) -> (CanonicalCert, Vec<usize>) {
    let colors = vec![0u32; g.n()];
    canonical_form_colored(g, &colors)
}

/// Canonical form of a vertex-coloured graph. Colour classes are ordered by
/// colour value, and only colour-preserving isomorphisms are considered.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> (CanonicalCert, Vec<usize>) {
    let lab = canonical_labeling(g, colors);
    let cert = certificate(g, &lab.perm);
    (cert, lab.perm)
}

pub(crate) fn certificate(g: &Graph, perm: &[usize]) -> CanonicalCert {
    CanonicalCert(graph6_encode(&g.permuted(perm)).into_bytes())
}

pub(crate) fn canonical_labeling(g: &Graph, colors: &[u32]) -> Labeling {
    assert_eq!(colors.len(), g.n());
    let mut cells = initial_cells(g, colors);
    refine_equitable(g, &mut cells);
    canonical_labeling_from(g, cells)
}

/// Search from an already refined ordered partition.
pub(crate) fn canonical_labeling_from(g: &Graph, cells: Vec<u32>) -> Labeling {
    let mut search = Search {
        g,
        n: g.n(),
        path: Vec::new(),
        best: None,
        best_version: 0,
        first_rows: None,
        first_lab: Vec::new(),
        first_prefix: Vec::new(),
        automorphisms: Vec::new(),
    };
    let mut prefix = Vec::new();
    let _ = search.visit(cells, &mut prefix, Ordering::Equal);
    let best = search.best.expect("search reaches at least one leaf");
    let mut perm = vec![0usize; g.n()];
    for (pos, &v) in best.lab.iter().enumerate() {
        perm[v as usize] = pos;
    }
    Labeling {
        perm,
        automorphisms: search.automorphisms.into_iter().map(|a| a.into_iter().map(|v| v as usize).collect()).collect(),
    }
}

fn initial_cells(g: &Graph, colors: &[u32]) -> Vec<u32> {
    let mut keyed: Vec<(u32, usize)> = colors.iter().copied().zip(0..g.n()).collect();
    keyed.sort_unstable();
    let mut cells: Vec<u32> = Vec::new();
    let mut last = None;
    for (c, v) in keyed {
        if last == Some(c) {
            *cells.last_mut().unwrap() |= 1 << v;
        } else {
            cells.push(1 << v);
            last = Some(c);
        }
    }
    cells
}

/// Refine an ordered partition to the coarsest equitable refinement.
///
/// Cells are split by neighbour counts into each splitter cell; the pieces
/// replace the original cell in increasing count order. The procedure only
/// reads the cell structure, so it commutes with relabelling.
pub fn refine_equitable(g: &Graph, cells: &mut Vec<u32>) {
    let n = g.n();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            if cells.len() == n {
                return;
            }
            let w = cells[s];
            let mut i = 0;
            while i < cells.len() {
                let x = cells[i];
                if x & x.wrapping_sub(1) != 0 {
                    let mut groups = [0u32; 33];
                    let (mut lo, mut hi) = (usize::MAX, 0usize);
                    for v in bits(x) {
                        let c = (g.adj[v] & w).count_ones() as usize;
                        groups[c] |= 1 << v;
                        lo = lo.min(c);
                        hi = hi.max(c);
                    }
                    if lo != hi {
                        let parts: Vec<u32> = groups[lo..=hi].iter().copied().filter(|&m| m != 0).collect();
                        let k = parts.len();
                        cells.splice(i..=i, parts);
                        i += k;
                        changed = true;
                        continue;
                    }
                }
                i += 1;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

struct BestLeaf {
    traces: Vec<Vec<u32>>,
    lab: Vec<u8>,
    prefix: Vec<u8>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    path: Vec<Vec<u32>>,
    best: Option<BestLeaf>,
    best_version: u64,
    first_rows: Option<Vec<u32>>,
    first_lab: Vec<u8>,
    first_prefix: Vec<u8>,
    automorphisms: Vec<Vec<u8>>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 256;

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn trace(&self, cells: &[u32]) -> Vec<u32> {
        let k = cells.len();
        let mut t = Vec::with_capacity(1 + k + k * k);
        t.push(k as u32);
        if k == self.n {
            let mut pos = [0u8; 32];
            for (i, &c) in cells.iter().enumerate() {
                pos[c.trailing_zeros() as usize] = i as u8;
            }
            for &c in cells {
                let v = c.trailing_zeros() as usize;
                let mut row = 0u32;
                for w in bits(self.g.adj[v]) {
                    row |= 1 << pos[w];
                }
                t.push(row);
            }
        } else {
            t.extend(cells.iter().map(|c| c.count_ones()));
            for &ci in cells {
                let rep = ci.trailing_zeros() as usize;
                let row = self.g.adj[rep];
                t.extend(cells.iter().map(|&cj| (row & cj).count_ones()));
            }
        }
        t
    }

    fn record_automorphism(&mut self, from: &[u8], to: &[u8]) {
        if from == to || self.automorphisms.len() >= MAX_STORED_AUTOMORPHISMS {
            return;
        }
        let mut gamma = vec![0u8; self.n];
        for (a, b) in from.iter().zip(to) {
            gamma[*a as usize] = *b;
        }
        if !self.automorphisms.contains(&gamma) {
            self.automorphisms.push(gamma);
        }
    }

    /// Orbit representatives under automorphisms fixing `prefix` pointwise.
    fn stabilizer_orbits(&self, prefix: &[u8]) -> Vec<usize> {
        let mut uf: Vec<usize> = (0..self.n).collect();
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&v| gamma[v as usize] == v) {
                for (v, &w) in gamma.iter().enumerate() {
                    union(&mut uf, v, w as usize);
                }
            }
        }
        (0..self.n).map(|v| find(&mut uf, v)).collect()
    }

    /// Returns `Some(d)` when a leaf equivalent to an earlier one was met:
    /// every node deeper than `d` on the current path lies in an image of an
    /// explored subtree and is abandoned.
    fn visit(&mut self, cells: Vec<u32>, prefix: &mut Vec<u8>, mut state: Ordering) -> Option<usize> {
        let depth = prefix.len();
        let trace = self.trace(&cells);
        if state == Ordering::Equal {
            if let Some(best) = &self.best {
                match trace.cmp(&best.traces[depth]) {
                    Ordering::Less => state = Ordering::Less,
                    Ordering::Greater => return None,
                    Ordering::Equal => {}
                }
            }
        }
        self.path.push(trace);

        if cells.len() == self.n {
            let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
            let mut jump = None;
            match &self.first_rows {
                None => {
                    self.first_rows = Some(self.path[depth][1..].to_vec());
                    self.first_lab = lab.clone();
                    self.first_prefix = prefix.clone();
                }
                Some(first) if first.as_slice() == &self.path[depth][1..] => {
                    let first_lab = self.first_lab.clone();
                    self.record_automorphism(&first_lab, &lab);
                    jump = Some(common_prefix(&self.first_prefix, prefix));
                }
                _ => {}
            }
            if state == Ordering::Equal && self.best.is_some() {
                let best = self.best.as_ref().unwrap();
                let (best_lab, back) = (best.lab.clone(), common_prefix(&best.prefix, prefix));
                self.record_automorphism(&best_lab, &lab);
                jump = Some(jump.map_or(back, |j| j.min(back)));
            } else {
                self.best = Some(BestLeaf { traces: self.path.clone(), lab, prefix: prefix.clone() });
                self.best_version += 1;
            }
            self.path.pop();
            return jump;
        }

        let ti = cells.iter().position(|c| c.count_ones() > 1).expect("non-discrete partition");
        let target = cells[ti];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !explored.is_empty() && !self.automorphisms.is_empty() {
                let orbits = self.stabilizer_orbits(prefix);
                if explored.iter().any(|&w| orbits[w] == orbits[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine_equitable(self.g, &mut child);
            prefix.push(v as u8);
            let version = self.best_version;
            let jump = self.visit(child, prefix, state);
            prefix.pop();
            if self.best_version != version {
                // the new best leaf descends from this node
                state = Ordering::Equal;
            }
            if let Some(d) = jump {
                if d < depth {
                    self.path.pop();
                    return Some(d);
                }
            }
        }
        self.path.pop();
        None
    }
}

fn find(uf: &mut [usize], mut v: usize) -> usize {
    while uf[v] != v {
        uf[v] = uf[uf[v]];
        v = uf[v];
    }
    v
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        uf[hi] = lo;
    }
}
