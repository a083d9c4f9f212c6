//! Transfer matrices of `(p,q)` ornaments and the intertwiner `U_{p,q}`.
//!
//! States index the choice of edge inside one `K_{p,q}` block, in this order:
//! no edge; an edge avoiding the parent `△` and both children `+`, `-`; an
//! edge at `+` only; at `-` only; at `△` only; `△+`; `△-`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExtendedWord, WordTree};
use crate::algebra::{PolyMatrix, RatPoly};
use crate::error::{Error, Result};

pub const STATE_LABELS: [&str; 7] = ["none", "plain", "+", "-", "△", "△+", "△-"];

/// Row vector `e`: every state of the next block is allowed.
const E: [i64; 7] = [1, 1, 1, 1, 1, 1, 1];
/// Row vector `t`: the next block may not use its `△`.
const T: [i64; 7] = [1, 1, 1, 1, 0, 0, 0];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrixSet {
    pub p: usize,
    pub q: usize,
    /// 1 x 7
    pub i_row: PolyMatrix,
    /// 7 x 7
    pub s_mat: PolyMatrix,
    /// 7 x 49
    pub d_mat: PolyMatrix,
    /// 7 x 1
    pub e_col: PolyMatrix,
    pub e: [i64; 7],
    pub t: [i64; 7],
}

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn check_params(p: usize, q: usize) -> Result<()> {
    if p < 1 || q < 2 {
        return Err(Error::OrnamentParams { p, q });
    }
    Ok(())
}

/// Diagonal weights of the block states. The `S` and `D` matrices differ
/// from the column `e` only in how the degrees at `+` and `-` are counted.
fn weights(p: i64, q: i64, plus_extends: bool, minus_extends: bool) -> [RatPoly; 7] {
    let s = p + q;
    let plus = if plus_extends { q * s } else { p * q };
    let minus = if minus_extends { q * s } else { p * q };
    let tri_plus = if plus_extends { s * s } else { p * s };
    let tri_minus = if minus_extends { s * s } else { p * s };
    let c = |r: BigRational| RatPoly::constant(-r);
    [
        RatPoly::monomial(BigRational::one(), 2),
        c(frac((p - 1) * (q - 2), p * q)),
        c(frac(p - 1, plus)),
        c(frac(p - 1, minus)),
        c(frac(q - 2, p * s)),
        c(frac(1, tri_plus)),
        c(frac(1, tri_minus)),
    ]
}

/// The matrices `i`, `S`, `D` and `e` for `(p, q)` ornaments, including the
/// scalar factors `x` and `x^{p+q-3}`.
pub fn transfer_matrices(p: usize, q: usize) -> Result<TransferMatrixSet> {
    check_params(p, q)?;
    let (pi, qi) = (p as i64, q as i64);
    let scale = RatPoly::monomial(BigRational::one(), p + q - 3);
    let x = RatPoly::x();

    let boost = RatPoly::constant(frac(pi + qi, qi));
    let i_row = PolyMatrix::from_fn(1, 7, |_, j| if j < 4 { x.clone() } else { &x * &boost });

    // `S` attaches its only internal child through `-`
    let ws = weights(pi, qi, false, true);
    let s_pattern = [E, E, E, T, E, E, T];
    let s_mat = PolyMatrix::from_fn(7, 7, |i, j| if s_pattern[i][j] == 0 { RatPoly::zero() } else { &ws[i] * &scale });

    let wd = weights(pi, qi, true, true);
    // (first factor, second factor) patterns; the first child hangs at `+`
    let d_pattern = [(E, E), (E, E), (T, E), (E, T), (E, E), (T, E), (E, T)];
    let d_mat = PolyMatrix::from_fn(7, 49, |i, j| {
        let (a, b) = d_pattern[i];
        if a[j / 7] * b[j % 7] == 0 {
            RatPoly::zero()
        } else {
            &wd[i] * &scale
        }
    });

    let we = weights(pi, qi, false, false);
    let e_col = PolyMatrix::from_fn(7, 1, |i, _| &we[i] * &scale);

    Ok(TransferMatrixSet { p, q, i_row, s_mat, d_mat, e_col, e: E, t: T })
}

impl TransferMatrixSet {
    /// Column of state polynomials of a word (without the leading `i`).
    pub fn evaluate(&self, w: &WordTree) -> PolyMatrix {
        match w {
            WordTree::End => self.e_col.clone(),
            WordTree::Single(inner) => &self.s_mat * &self.evaluate(inner),
            WordTree::Double(a, b) => &self.d_mat * &self.evaluate(a).kron(&self.evaluate(b)),
        }
    }
}

/// Characteristic polynomial together with the state column of every subword,
/// listed in pre-order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferEvaluation {
    pub charpoly: RatPoly,
    pub states: Vec<(String, Vec<RatPoly>)>,
}

pub fn transfer_evaluation(w: &ExtendedWord, p: usize, q: usize) -> Result<TransferEvaluation> {
    let m = transfer_matrices(p, q)?;
    let mut states = Vec::new();
    let top = collect_states(&m, &w.body, &mut states);
    let total = &m.i_row * &top;
    Ok(TransferEvaluation { charpoly: total.get(0, 0).clone(), states })
}

fn collect_states(m: &TransferMatrixSet, w: &WordTree, out: &mut Vec<(String, Vec<RatPoly>)>) -> PolyMatrix {
    let slot = out.len();
    out.push((w.to_string(), Vec::new()));
    let col = match w {
        WordTree::End => m.e_col.clone(),
        WordTree::Single(inner) => &m.s_mat * &collect_states(m, inner, out),
        WordTree::Double(a, b) => {
            let va = collect_states(m, a, out);
            let vb = collect_states(m, b, out);
            &m.d_mat * &va.kron(&vb)
        }
    };
    out[slot].1 = col.entries().to_vec();
    col
}

/// Normalized-adjacency characteristic polynomial of the `(p, q)` ornament
/// of `w`, by transfer matrices.
pub fn transfer_charpoly(w: &ExtendedWord, p: usize, q: usize) -> Result<RatPoly> {
    let m = transfer_matrices(p, q)?;
    let total = &m.i_row * &m.evaluate(&w.body);
    Ok(total.get(0, 0).clone())
}

/// The matrix `U_{p,q}` relating the `(1, p+q-1)` and `(p, q)` systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwinerU {
    pub p: usize,
    pub q: usize,
    pub matrix: PolyMatrix,
}

pub fn intertwiner(p: usize, q: usize) -> Result<IntertwinerU> {
    check_params(p, q)?;
    if p + q < 4 {
        return Err(Error::IntertwinerUndefined { p, q });
    }
    let (p, q) = (p as i64, q as i64);
    let s = p + q;
    let a = frac(s * (p - 1) * (q - 2), p * q * (s - 3));
    let b = frac(s * (p - 1) * (p - 1), p * q * (s - 1) * (s - 3));
    let c = frac(s * (p - 1), p * (s - 1));
    let d = frac(q - 2, p * (s - 3));
    let e = frac(p - 1, p * (s - 1) * (s - 3));
    let f = frac(q, p * (s - 1));
    let o = BigRational::one();
    let z = BigRational::zero();
    let rows: [[&BigRational; 7]; 7] = [
        [&o, &z, &z, &z, &z, &z, &z],
        [&z, &o, &z, &z, &a, &z, &z],
        [&z, &z, &o, &z, &b, &c, &z],
        [&z, &z, &z, &o, &b, &z, &c],
        [&z, &z, &z, &z, &d, &z, &z],
        [&z, &z, &z, &z, &e, &f, &z],
        [&z, &z, &z, &z, &e, &z, &f],
    ];
    let matrix = PolyMatrix::from_fn(7, 7, |i, j| RatPoly::constant(rows[i][j].clone()));
    Ok(IntertwinerU { p: p as usize, q: q as usize, matrix })
}

/// Truth of the four identities
/// `i' = i U`, `U S' = S U`, `U D' = D (U ⊗ U)`, `U e' = e`,
/// where primed matrices belong to `(1, p+q-1)`.
pub fn intertwiner_identities(p: usize, q: usize) -> Result<[bool; 4]> {
    let u = intertwiner(p, q)?.matrix;
    let base = transfer_matrices(1, p + q - 1)?;
    let m = transfer_matrices(p, q)?;
    Ok([
        base.i_row == &m.i_row * &u,
        &u * &base.s_mat == &m.s_mat * &u,
        &u * &base.d_mat == &m.d_mat * &u.kron(&u),
        &u * &base.e_col == m.e_col,
    ])
}

pub fn verify_intertwiner(p: usize, q: usize) -> Result<bool> {
    Ok(intertwiner_identities(p, q)?.iter().all(|&ok| ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn consts(v: &[(i64, i64)]) -> Vec<RatPoly> {
        v.iter().map(|&(n, d)| RatPoly::constant(frac(n, d))).collect()
    }

    #[test]
    fn matrices_for_small_parameters() {
        let m = transfer_matrices(1, 2).unwrap();
        let mut expect = vec![RatPoly::from_ints(&[0, 0, 1])];
        expect.extend(consts(&[(0, 1), (0, 1), (0, 1), (0, 1), (-1, 3), (-1, 3)]));
        assert_eq!(m.e_col.entries(), expect.as_slice());

        let m = transfer_matrices(2, 2).unwrap();
        let x = RatPoly::x();
        let two_x = x.scale(&frac(2, 1));
        assert_eq!(m.i_row.entries(), &[x.clone(), x.clone(), x.clone(), x, two_x.clone(), two_x.clone(), two_x][..]);

        let m = transfer_matrices(3, 5).unwrap();
        for j in 0..7 {
            assert_eq!(m.s_mat.get(3, j).is_zero(), j >= 4);
            assert_eq!(m.s_mat.get(6, j).is_zero(), j >= 4);
            assert!(!m.s_mat.get(0, j).is_zero());
        }
        assert_eq!(m.d_mat.cols(), 49);
        assert!(transfer_matrices(0, 3).is_err());
        assert!(transfer_matrices(2, 1).is_err());
    }

    #[test]
    fn small_charpolys() {
        let ie = parse_word("ie").unwrap();
        assert_eq!(transfer_charpoly(&ie, 1, 2).unwrap(), RatPoly::from_ints(&[0, -1, 0, 1]));
        assert_eq!(transfer_charpoly(&ie, 2, 2).unwrap(), RatPoly::from_ints(&[0, 0, -1, 0, 1]));
        let fig5 = parse_word("iSSD((e)*(Se))").unwrap();
        let a = transfer_charpoly(&fig5, 1, 4).unwrap();
        assert_eq!(a.degree(), Some(25));
        assert_eq!(a, transfer_charpoly(&fig5, 2, 3).unwrap());
        assert_eq!(a, transfer_charpoly(&fig5, 3, 2).unwrap());
        let ev = transfer_evaluation(&fig5, 2, 3).unwrap();
        assert_eq!(ev.charpoly, a);
        assert_eq!(ev.states.len(), 6);
        assert_eq!(ev.states[0].0, "SSD((e)*(Se))");
        assert!(ev.states.iter().all(|(_, col)| col.len() == 7));
    }

    #[test]
    fn intertwiner_entries() {
        let u = intertwiner(1, 4).unwrap();
        assert_eq!(u.matrix, PolyMatrix::identity(7));
        let u = intertwiner(2, 2).unwrap();
        assert!(u.matrix.get(1, 4).is_zero());
        assert!(matches!(intertwiner(1, 2), Err(Error::IntertwinerUndefined { p: 1, q: 2 })));
        assert!(verify_intertwiner(2, 2).unwrap());
        assert!(verify_intertwiner(3, 5).unwrap());
        assert!(verify_intertwiner(1, 5).unwrap());
    }
}
