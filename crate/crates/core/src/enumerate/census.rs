//! Grouping of trees and non-trees by exact characteristic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalCert, Graph};
use crate::spectra::{char_poly, CharPoly, MatrixKind};

use super::{free_trees, par_for_each_graph, q_candidates, GraphFilter};

/// Largest `n` accepted in brute mode.
pub const MAX_BRUTE_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CensusMode {
    /// Every graph in the universe of the matrix kind.
    Brute,
    /// Signless Laplacian only: the structured candidates of [`q_candidates`].
    Structured,
}

impl CensusMode {
    pub fn label(self) -> &'static str {
        match self {
            CensusMode::Brute => "brute",
            CensusMode::Structured => "structured",
        }
    }
}

impl fmt::Display for CensusMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for CensusMode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl FromStr for CensusMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(CensusMode::Brute),
            "structured" => Ok(CensusMode::Structured),
            other => Err(Error::Unsupported(format!("census mode {other:?} (expected brute or structured)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMember {
    pub graph6: CanonicalCert,
    pub is_tree: bool,
}

/// Graphs sharing one characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralClass {
    pub key: CharPoly,
    pub members: Vec<ClassMember>,
}

impl SpectralClass {
    pub fn tree_count(&self) -> usize {
        self.members.iter().filter(|m| m.is_tree).count()
    }

    pub fn nontree_count(&self) -> usize {
        self.members.len() - self.tree_count()
    }
}

/// Census of one vertex count and matrix. `classes` holds every class that
/// contains a tree, sorted by key; members are sorted by certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusTable {
    pub n: usize,
    pub kind: MatrixKind,
    pub mode: CensusMode,
    pub pruned: bool,
    pub tree_count: usize,
    pub faux_tree_count: usize,
    pub trees_with_mate_count: usize,
    pub classes: Vec<SpectralClass>,
}

impl CensusTable {
    /// `(trees, faux trees, trees with a non-tree mate)` recomputed from the classes.
    pub fn recount(&self) -> (usize, usize, usize) {
        let trees = self.classes.iter().map(SpectralClass::tree_count).sum();
        let faux = self.classes.iter().map(SpectralClass::nontree_count).sum();
        let mated = self.classes.iter().filter(|c| c.nontree_count() > 0).map(SpectralClass::tree_count).sum();
        (trees, faux, mated)
    }

    /// Faux trees as graph6 certificates.
    pub fn faux_trees(&self) -> impl Iterator<Item = &CanonicalCert> {
        self.classes.iter().flat_map(|c| c.members.iter().filter(|m| !m.is_tree).map(|m| &m.graph6))
    }
}

/// Universe searched in brute mode. With `prune`, only graphs that could
/// share a polynomial with a tree are generated: those with `n - 1` edges for
/// `A`, `L` and `Q`, and connected graphs for the normalized adjacency.
pub fn brute_universe(n: usize, kind: MatrixKind, prune: bool) -> GraphFilter {
    match (kind, prune) {
        (MatrixKind::NormalizedAdjacency, true) => GraphFilter::connected(),
        (MatrixKind::NormalizedAdjacency, false) => GraphFilter::no_isolated(),
        (_, true) => GraphFilter::edges(n.saturating_sub(1)),
        (_, false) => GraphFilter::all(),
    }
}

fn key(g: &Graph, kind: MatrixKind) -> Result<CharPoly> {
    Ok(char_poly(g, kind)?.charpoly)
}

/// Groups the trees on `n` vertices with the non-trees of the chosen universe
/// by characteristic polynomial of `kind`.
pub fn census(n: usize, kind: MatrixKind, mode: CensusMode, prune: bool) -> Result<CensusTable> {
    match mode {
        CensusMode::Brute if n > MAX_BRUTE_N => {
            return Err(Error::TooLarge(format!("brute census at n = {n} (limit {MAX_BRUTE_N})")))
        }
        CensusMode::Structured if kind != MatrixKind::SignlessLaplacian => {
            return Err(Error::Unsupported(format!("structured census for {kind} (only Q)")))
        }
        _ => {}
    }
    if n == 0 {
        return Err(Error::VertexCount(0));
    }

    let mut classes: Vec<SpectralClass> = Vec::new();
    let mut index: HashMap<CharPoly, usize> = HashMap::new();
    let tree_keys: Vec<(CharPoly, CanonicalCert)> = free_trees(n)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|t| Ok((key(t, kind)?, canonical_form(t).0)))
        .collect::<Result<_>>()?;
    let tree_count = tree_keys.len();
    for (k, cert) in tree_keys {
        let member = ClassMember { graph6: cert, is_tree: true };
        match index.get(&k) {
            Some(&i) => classes[i].members.push(member),
            None => {
                index.insert(k.clone(), classes.len());
                classes.push(SpectralClass { key: k, members: vec![member] });
            }
        }
    }

    let found: Mutex<Vec<(usize, CanonicalCert)>> = Mutex::new(Vec::new());
    let failure: Mutex<Option<Error>> = Mutex::new(None);
    let visit = |g: &Graph| {
        if g.is_tree() {
            return;
        }
        match key(g, kind) {
            Ok(k) => {
                if let Some(&i) = index.get(&k) {
                    found.lock().unwrap().push((i, canonical_form(g).0));
                }
            }
            Err(e) => *failure.lock().unwrap() = Some(e),
        }
    };
    match mode {
        CensusMode::Brute => par_for_each_graph(n, brute_universe(n, kind, prune), visit),
        CensusMode::Structured => q_candidates(n).par_iter().for_each(visit),
    }
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    for (i, cert) in found.into_inner().unwrap() {
        classes[i].members.push(ClassMember { graph6: cert, is_tree: false });
    }

    for c in &mut classes {
        c.members.sort_by(|a, b| (!a.is_tree, &a.graph6).cmp(&(!b.is_tree, &b.graph6)));
    }
    classes.sort_by(|a, b| a.key.cmp(&b.key));
    let mut table =
        CensusTable { n, kind, mode, pruned: prune, tree_count, faux_tree_count: 0, trees_with_mate_count: 0, classes };
    let (_, faux, mated) = table.recount();
    table.faux_tree_count = faux;
    table.trees_with_mate_count = mated;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_censuses() {
        let t = census(4, MatrixKind::SignlessLaplacian, CensusMode::Brute, true).unwrap();
        assert_eq!((t.tree_count, t.faux_tree_count, t.trees_with_mate_count), (2, 1, 1));
        assert_eq!(t.recount(), (2, 1, 1));
        let t = census(4, MatrixKind::Laplacian, CensusMode::Brute, false).unwrap();
        assert_eq!(t.faux_tree_count, 0);
        let t = census(7, MatrixKind::Adjacency, CensusMode::Brute, true).unwrap();
        assert_eq!((t.faux_tree_count, t.trees_with_mate_count), (6, 6));
    }

    #[test]
    fn unsupported_requests() {
        assert!(matches!(census(12, MatrixKind::Adjacency, CensusMode::Brute, true), Err(Error::TooLarge(_))));
        assert!(matches!(census(8, MatrixKind::Adjacency, CensusMode::Structured, true), Err(Error::Unsupported(_))));
        assert!("fast".parse::<CensusMode>().is_err());
    }
}
