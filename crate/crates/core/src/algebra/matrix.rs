use std::fmt;
use std::ops::Mul;

use super::RatPoly;
use crate::error::{Error, Result};

/// Dense row-major matrix of rational polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatPoly>,
}

impl PolyMatrix {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<RatPoly>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::Dimension(format!("{rows}x{cols} matrix from {} entries", entries.len())));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RatPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![RatPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { RatPoly::one() } else { RatPoly::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[RatPoly] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &RatPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn scale(&self, c: &RatPoly) -> PolyMatrix {
        PolyMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    pub fn try_mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let mut out = PolyMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; row `(a, b)` of the result is row `a * rhs.rows + b`.
    pub fn kron(&self, rhs: &PolyMatrix) -> PolyMatrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        PolyMatrix::from_fn(rows, cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols) * rhs.get(i % rhs.rows, j % rhs.cols)
        })
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;

    /// Panics on a dimension mismatch; use [`PolyMatrix::try_mul`] otherwise.
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_mul(rhs).expect("matrix dimensions")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, v: &[i64]) -> PolyMatrix {
        PolyMatrix::from_vec(rows, cols, v.iter().map(|&c| RatPoly::from_ints(&[c])).collect()).unwrap()
    }

    #[test]
    fn product_and_kron() {
        let a = m(2, 2, &[1, 2, 3, 4]);
        let b = m(2, 1, &[1, -1]);
        assert_eq!(&a * &b, m(2, 1, &[-1, -1]));
        assert!(b.try_mul(&a).is_err());
        let col = m(2, 1, &[2, 3]);
        assert_eq!(col.kron(&b), m(4, 1, &[2, -2, 3, -3]));
        // mixed product rule
        let c = m(2, 2, &[0, 1, 1, 1]);
        assert_eq!(&a.kron(&c) * &b.kron(&col), (&a * &b).kron(&(&c * &col)));
        assert_eq!(&PolyMatrix::identity(2) * &a, a);
    }

    #[test]
    fn bad_shape() {
        assert!(PolyMatrix::from_vec(2, 3, vec![RatPoly::zero(); 5]).is_err());
    }
}
