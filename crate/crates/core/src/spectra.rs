//! Exact characteristic polynomials of the adjacency, Laplacian, signless
//! Laplacian and normalized adjacency matrices.
//!
//! Integer cases interpolate `det(kI - M)` at `k = 0..=n`. The normalized
//! adjacency `D^{-1/2} A D^{-1/2}` is similar to `D^{-1} A`, so its
//! characteristic polynomial is `det(xD - A) / prod(deg)`, which keeps every
//! computation rational.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::{det_int, IntPoly, RatPoly};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    NormalizedAdjacency,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 4] =
        [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian, MatrixKind::NormalizedAdjacency];

    /// Short label: `A`, `L`, `Q` or `NA`.
    pub fn label(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "A",
            MatrixKind::Laplacian => "L",
            MatrixKind::SignlessLaplacian => "Q",
            MatrixKind::NormalizedAdjacency => "NA",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for MatrixKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(MatrixKind::Adjacency),
            "L" => Ok(MatrixKind::Laplacian),
            "Q" => Ok(MatrixKind::SignlessLaplacian),
            "NA" => Ok(MatrixKind::NormalizedAdjacency),
            other => Err(Error::Unsupported(format!("matrix kind {other:?} (expected A, L, Q or NA)"))),
        }
    }
}

/// Characteristic polynomial, integral for `A`, `L`, `Q` and rational for the
/// normalized adjacency.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum CharPoly {
    Int(IntPoly),
    Rat(RatPoly),
}

impl CharPoly {
    pub fn to_rat(&self) -> RatPoly {
        match self {
            CharPoly::Int(p) => p.to_rat(),
            CharPoly::Rat(p) => p.clone(),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            CharPoly::Int(p) => p.degree(),
            CharPoly::Rat(p) => p.degree(),
        }
    }

    /// Coefficients low to high as exact rationals.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.to_rat().into_coeffs()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharPoly::Int(p) => p.fmt(f),
            CharPoly::Rat(p) => p.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Spectrum {
    pub kind: MatrixKind,
    pub charpoly: CharPoly,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.charpoly.degree().unwrap_or(0)
    }
}

/// Exact monic characteristic polynomial of `g` for the given matrix.
pub fn char_poly(g: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    let charpoly = match kind {
        MatrixKind::NormalizedAdjacency => CharPoly::Rat(normalized_charpoly(g)?),
        _ => CharPoly::Int(integer_charpoly(g, kind)),
    };
    Ok(Spectrum { kind, charpoly })
}

fn integer_charpoly(g: &Graph, kind: MatrixKind) -> IntPoly {
    let n = g.n();
    let diag_sign = if kind == MatrixKind::Adjacency { 0 } else { 1 };
    let off = if kind == MatrixKind::Laplacian { 1 } else { -1 };
    let deg = g.degrees();
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for j in bits(g.neighbors(i)) {
            row[j] = off;
        }
    }
    // kI - M has diagonal k - diag_sign * deg
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|k| {
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = k - diag_sign * deg[i] as i64;
            }
            det_int(&m)
        })
        .collect();
    IntPoly::interpolate_at_naturals(&values).expect("integer matrix has an integer characteristic polynomial")
}

/// `det(xD - A)` as an integer polynomial with leading coefficient `prod(deg)`.
pub fn degree_weighted_poly(g: &Graph) -> IntPoly {
    let n = g.n();
    let deg = g.degrees();
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for j in bits(g.neighbors(i)) {
            row[j] = -1;
        }
    }
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|k| {
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = k * deg[i] as i64;
            }
            det_int(&m)
        })
        .collect();
    IntPoly::interpolate_at_naturals(&values).expect("integer matrix has an integer determinant polynomial")
}

fn normalized_charpoly(g: &Graph) -> Result<RatPoly> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let scale: BigInt = g.degrees().iter().map(|&d| BigInt::from(d)).product();
    let inv = BigRational::new(BigInt::one(), scale);
    Ok(degree_weighted_poly(g).to_rat().scale(&inv))
}

/// Whether `g1` and `g2` have identical characteristic polynomials.
pub fn cospectral(g1: &Graph, g2: &Graph, kind: MatrixKind) -> Result<bool> {
    if g1.n() != g2.n() {
        return Err(Error::VertexCountMismatch(g1.n(), g2.n()));
    }
    Ok(char_poly(g1, kind)?.charpoly == char_poly(g2, kind)?.charpoly)
}

/// Largest `k` such that `(x - r)^k` divides the characteristic polynomial.
pub fn root_multiplicity(s: &Spectrum, r: &BigRational) -> usize {
    let mut p = s.charpoly.to_rat();
    if p.is_zero() {
        return 0;
    }
    let lin = RatPoly::new(vec![-r.clone(), BigRational::one()]);
    let mut k = 0;
    while let Ok(q) = p.divexact(&lin) {
        p = q;
        k += 1;
    }
    k
}

/// Number of spanning trees, as the determinant of the Laplacian with the
/// first row and column removed.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    let n = g.n();
    let m: Vec<Vec<i64>> = (1..n)
        .map(|i| {
            (1..n)
                .map(|j| {
                    if i == j {
                        g.degree(i) as i64
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    det_int(&m)
}

/// Product of the eigenvalues: `(-1)^n` times the constant coefficient.
pub fn det_from_spectrum(s: &Spectrum) -> BigRational {
    let p = s.charpoly.to_rat();
    let c = p.coeff(0);
    if s.n() % 2 == 1 {
        -c
    } else {
        c
    }
}

/// Product of the nonzero eigenvalues, read off the lowest nonzero coefficient.
pub fn nonzero_eigenvalue_product(s: &Spectrum) -> BigRational {
    let p = s.charpoly.to_rat();
    let n = s.n();
    match p.coeffs().iter().position(|c| !c.is_zero()) {
        Some(k) => {
            let c = p.coeffs()[k].clone();
            if (n - k) % 2 == 1 {
                -c
            } else {
                c
            }
        }
        None => BigRational::zero(),
    }
}
