//! Brute-force evaluation of the normalized-adjacency characteristic
//! polynomial as a signed sum over cycle decompositions.
//!
//! A cycle decomposition is a set of vertex-disjoint parts, each an edge
//! (a 2-cycle) or a cycle of length at least 3. With `u` uncovered vertices,
//! `lng` cycles of length at least 3 and `cy` parts in total, it contributes
//! `x^u 2^lng (-1)^cy / prod(deg v)` over the covered vertices `v`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::RatPoly;
use crate::error::{Error, Result};
use crate::graph::{bits, named, Graph};

/// Largest host graph accepted by the enumerators.
pub const MAX_ORACLE_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    Edge(usize, usize),
    /// Vertices in cyclic order, smallest first, second smaller than last.
    Cycle(Vec<usize>),
}

impl Part {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Part::Edge(a, b) => vec![*a, *b],
            Part::Cycle(c) => c.clone(),
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            Part::Edge(a, b) => vec![(*a, *b)],
            Part::Cycle(c) => (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect(),
        }
    }

    fn mask(&self) -> u32 {
        self.vertices().iter().fold(0, |m, &v| m | 1 << v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    parts: Vec<Part>,
}

impl CycleDecomposition {
    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn covered(&self) -> u32 {
        self.parts.iter().fold(0, |m, p| m | p.mask())
    }

    /// Number of uncovered vertices.
    pub fn u(&self) -> usize {
        self.n - self.covered().count_ones() as usize
    }

    /// Number of cycles of length at least 3.
    pub fn lng(&self) -> usize {
        self.parts.iter().filter(|p| matches!(p, Part::Cycle(_))).count()
    }

    /// Number of parts, edges included.
    pub fn cy(&self) -> usize {
        self.parts.len()
    }

    /// Contribution `2^lng (-1)^cy / prod(deg)` without the power of `x`.
    pub fn weight(&self, g: &Graph) -> BigRational {
        let den: BigInt = bits(self.covered()).map(|v| BigInt::from(g.degree(v))).product();
        let mut num = BigInt::one() << self.lng();
        if self.cy() % 2 == 1 {
            num = -num;
        }
        BigRational::new(num, den)
    }
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_ORACLE_VERTICES {
        return Err(Error::TooLarge(format!(
            "{} vertices (cycle decompositions need at most {MAX_ORACLE_VERTICES})",
            g.n()
        )));
    }
    Ok(())
}

/// Calls `f` once for every cycle decomposition of `g`, the empty one included.
pub fn for_each_decomposition(g: &Graph, mut f: impl FnMut(&CycleDecomposition)) -> Result<()> {
    check_size(g)?;
    let mut d = CycleDecomposition { n: g.n(), parts: Vec::new() };
    recurse(g, g.vertex_mask(), &mut d, &mut f);
    Ok(())
}

/// All cycle decompositions of `g`.
pub fn decompositions(g: &Graph) -> Result<Vec<CycleDecomposition>> {
    let mut out = Vec::new();
    for_each_decomposition(g, |d| out.push(d.clone()))?;
    Ok(out)
}

fn recurse(g: &Graph, undecided: u32, d: &mut CycleDecomposition, f: &mut impl FnMut(&CycleDecomposition)) {
    if undecided == 0 {
        f(d);
        return;
    }
    let v = undecided.trailing_zeros() as usize;
    let rest = undecided & !(1 << v);
    // v uncovered
    recurse(g, rest, d, f);
    // v in an edge
    for w in bits(g.neighbors(v) & rest) {
        d.parts.push(Part::Edge(v, w));
        recurse(g, rest & !(1 << w), d, f);
        d.parts.pop();
    }
    // v smallest vertex of a longer cycle
    let mut path = vec![v];
    for a in bits(g.neighbors(v) & rest) {
        path.push(a);
        extend_cycle(g, rest & !(1 << a), &mut path, d, f);
        path.pop();
    }
}

fn extend_cycle(
    g: &Graph,
    free: u32,
    path: &mut Vec<usize>,
    d: &mut CycleDecomposition,
    f: &mut impl FnMut(&CycleDecomposition),
) {
    let start = path[0];
    let last = *path.last().unwrap();
    for z in bits(g.neighbors(last) & free) {
        path.push(z);
        if g.has_edge(z, start) && path[1] < z {
            let used = path.iter().fold(0u32, |m, &x| m | 1 << x);
            d.parts.push(Part::Cycle(path.clone()));
            let remaining = free & !used;
            recurse(g, remaining, d, f);
            d.parts.pop();
        }
        extend_cycle(g, free & !(1 << z), path, d, f);
        path.pop();
    }
}

fn accumulate(coeffs: &mut [BigRational], d: &CycleDecomposition, g: &Graph) {
    coeffs[d.u()] += d.weight(g);
}

/// Normalized-adjacency characteristic polynomial summed over all cycle
/// decompositions.
pub fn na_charpoly_by_decomposition(g: &Graph) -> Result<RatPoly> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let mut coeffs = vec![BigRational::zero(); g.n() + 1];
    for_each_decomposition(g, |d| accumulate(&mut coeffs, d, g))?;
    Ok(RatPoly::new(coeffs))
}

/// Sum of `2^lng (-1)^cy` over the decompositions of `K_{t,t}` covering all
/// `2t` vertices.
pub fn ktt_full_sum(t: usize) -> Result<BigInt> {
    if t == 0 {
        return Err(Error::Unsupported("K_{t,t} needs t >= 1".into()));
    }
    let g = named::complete_bipartite(t, t);
    let mut total = BigInt::zero();
    for_each_decomposition(&g, |d| {
        if d.u() == 0 {
            let term = BigInt::one() << d.lng();
            if d.cy() % 2 == 1 {
                total -= term;
            } else {
                total += term;
            }
        }
    })?;
    Ok(total)
}

/// A complete bipartite subgraph of a host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub p_side: u32,
    pub q_side: u32,
}

impl Block {
    pub fn new(p_side: &[usize], q_side: &[usize]) -> Self {
        Block { p_side: p_side.iter().fold(0, |m, &v| m | 1 << v), q_side: q_side.iter().fold(0, |m, &v| m | 1 << v) }
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        let (ma, mb) = (1u32 << a, 1u32 << b);
        (self.p_side & ma != 0 && self.q_side & mb != 0) || (self.p_side & mb != 0 && self.q_side & ma != 0)
    }

    fn contains_part(&self, part: &Part) -> bool {
        part.edges().iter().all(|&(a, b)| self.has_edge(a, b))
    }
}

/// Pairwise edge-disjoint complete bipartite blocks of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSet {
    blocks: Vec<Block>,
}

impl BlockSet {
    /// Validates that every block is a complete bipartite subgraph of `g`
    /// with a q-side of at least two vertices, and that no edge lies in two
    /// blocks.
    pub fn new(g: &Graph, blocks: Vec<Block>) -> Result<Self> {
        let all = g.vertex_mask();
        for (i, b) in blocks.iter().enumerate() {
            if b.p_side == 0 || b.q_side.count_ones() < 2 {
                return Err(Error::InvalidBlocks(format!(
                    "block {i} needs a nonempty p-side and a q-side of size >= 2"
                )));
            }
            if b.p_side & b.q_side != 0 || (b.p_side | b.q_side) & !all != 0 {
                return Err(Error::InvalidBlocks(format!("block {i} has overlapping or out-of-range sides")));
            }
            for u in bits(b.p_side) {
                if g.neighbors(u) & b.q_side != b.q_side {
                    return Err(Error::InvalidBlocks(format!("block {i} misses an edge at vertex {u}")));
                }
            }
            for (j, c) in blocks.iter().enumerate().skip(i + 1) {
                let shared = (b.p_side & c.p_side != 0 && b.q_side & c.q_side != 0)
                    || (b.p_side & c.q_side != 0 && b.q_side & c.p_side != 0);
                if shared {
                    return Err(Error::InvalidBlocks(format!("blocks {i} and {j} share an edge")));
                }
            }
        }
        Ok(BlockSet { blocks })
    }

    pub fn empty() -> Self {
        BlockSet { blocks: Vec::new() }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }
}

/// Sum over the decompositions whose parts lying inside each block amount to
/// at most one edge.
pub fn restricted_na_charpoly(g: &Graph, blocks: &BlockSet) -> Result<RatPoly> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let mut coeffs = vec![BigRational::zero(); g.n() + 1];
    for_each_decomposition(g, |d| {
        let keep = blocks.blocks.iter().all(|b| {
            let mut inside = d.parts.iter().filter(|p| b.contains_part(p));
            matches!((inside.next(), inside.next()), (None, _) | (Some(Part::Edge(..)), None))
        });
        if keep {
            accumulate(&mut coeffs, d, g);
        }
    })?;
    Ok(RatPoly::new(coeffs))
}
