//! Fraction-free (Bareiss) determinants and evaluation–interpolation
//! determinants of polynomial matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{PolyMatrix, RatPoly};
use crate::error::{Error, Result};

/// Exact determinant of a square integer matrix.
///
/// Runs Bareiss elimination in `i128` with overflow checks and restarts in
/// arbitrary precision if any intermediate value overflows.
pub fn det_int(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n), "det_int needs a square matrix");
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(&mut a) {
        Some(d) => BigInt::from(d),
        None => det_bigint(m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
    }
}

/// `None` signals overflow.
fn bareiss_i128(a: &mut [Vec<i128>]) -> Option<i128> {
    let n = a.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(s) => {
                    a.swap(k, s);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = pivot_row[k];
        for row in bottom.iter_mut() {
            let aik = row[k];
            for j in k + 1..n {
                let t = row[j].checked_mul(pivot)?.checked_sub(aik.checked_mul(pivot_row[j])?)?;
                row[j] = t / prev;
            }
        }
        prev = pivot;
    }
    a[n - 1][n - 1].checked_mul(sign)
}

/// Exact determinant over arbitrary-precision integers.
pub fn det_bigint(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(s) => {
                    a.swap(k, s);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let aik = row[k].clone();
            for j in k + 1..n {
                let t = &row[j] * pivot - &aik * &pivot_row[j];
                row[j] = t.div_floor(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a square matrix of rational scalars: each row is scaled to
/// integers by the lcm of its denominators, and the product of the scalings is
/// divided out afterwards.
pub fn det_rational(m: &[Vec<BigRational>]) -> BigRational {
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    BigRational::new(det_bigint(rows), scale)
}

/// Determinant of a square polynomial matrix whose entries have degree at
/// most `entry_degree_bound`, by evaluating at the integer points
/// `0, 1, ..., rows * entry_degree_bound` and interpolating.
pub fn det_poly(m: &PolyMatrix, entry_degree_bound: usize) -> Result<RatPoly> {
    if m.rows() != m.cols() {
        return Err(Error::Dimension(format!("det of {}x{} matrix", m.rows(), m.cols())));
    }
    if let Some(bad) = m.entries().iter().find(|e| e.degree().unwrap_or(0) > entry_degree_bound) {
        return Err(Error::Dimension(format!("entry {bad} exceeds degree bound {entry_degree_bound}")));
    }
    let n = m.rows();
    let points = n * entry_degree_bound + 1;
    let xs: Vec<BigRational> = (0..points as i64).map(|k| BigRational::from_integer(k.into())).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| {
            let vals: Vec<Vec<BigRational>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).eval(x)).collect()).collect();
            det_rational(&vals)
        })
        .collect();
    Ok(RatPoly::interpolate(&xs, &ys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cofactor(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for j in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let term = BigInt::from(m[0][j]) * cofactor(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn cofactor_poly(m: &PolyMatrix) -> RatPoly {
        let n = m.rows();
        if n == 0 {
            return RatPoly::one();
        }
        let mut total = RatPoly::zero();
        for j in 0..n {
            let minor = PolyMatrix::from_fn(n - 1, n - 1, |r, c| m.get(r + 1, if c < j { c } else { c + 1 }).clone());
            let term = m.get(0, j) * &cofactor_poly(&minor);
            total = if j % 2 == 0 { &total + &term } else { &total - &term };
        }
        total
    }

    #[test]
    fn small_examples() {
        assert_eq!(det_int(&[vec![1, 2], vec![3, 4]]), BigInt::from(-2));
        for n in 0..6 {
            let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
            assert_eq!(det_int(&id), BigInt::one());
        }
        let k22 = vec![vec![0, 0, 1, 1], vec![0, 0, 1, 1], vec![1, 1, 0, 0], vec![1, 1, 0, 0]];
        assert_eq!(det_int(&k22), BigInt::zero());
        assert_eq!(det_int(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let n = 12;
        let m: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1 << 40 } else { ((i * 7 + j * 3) % 5) as i64 }).collect())
            .collect();
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(det_int(&m), det_bigint(big));
    }

    #[test]
    fn random_matrices_match_cofactor() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=6);
            let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
            assert_eq!(det_int(&m), cofactor(&m), "{m:?}");
        }
    }

    #[test]
    fn poly_determinants() {
        let x = RatPoly::x();
        let one = RatPoly::one();
        let zero = RatPoly::zero();
        // xI - A(P2)
        let m = PolyMatrix::from_vec(2, 2, vec![x.clone(), -&one, -&one, x.clone()]).unwrap();
        assert_eq!(det_poly(&m, 1).unwrap(), RatPoly::from_ints(&[-1, 0, 1]));
        // xD - A for P3, D = diag(1,2,1)
        let two_x = x.scale(&BigRational::from_integer(2.into()));
        let m = PolyMatrix::from_vec(
            3,
            3,
            vec![x.clone(), -&one, zero.clone(), -&one, two_x, -&one, zero.clone(), -&one, x.clone()],
        )
        .unwrap();
        assert_eq!(det_poly(&m, 1).unwrap(), RatPoly::from_ints(&[0, -2, 0, 2]));
        // diagonal
        let d = [RatPoly::from_ints(&[1, 1]), RatPoly::from_ints(&[0, 0, 3]), RatPoly::from_ints(&[-2])];
        let m = PolyMatrix::from_fn(3, 3, |i, j| if i == j { d[i].clone() } else { RatPoly::zero() });
        assert_eq!(det_poly(&m, 2).unwrap(), &(&d[0] * &d[1]) * &d[2]);
        assert!(det_poly(&m, 1).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn det_poly_matches_cofactor(n in 1usize..=4,
                                     raw in prop::collection::vec((-5i64..=5, -5i64..=5, 1i64..=3), 16)) {
            let m = PolyMatrix::from_fn(n, n, |i, j| {
                let (a, b, d) = raw[i * 4 + j];
                RatPoly::new(vec![BigRational::new(a.into(), d.into()), BigRational::from_integer(b.into())])
            });
            prop_assert_eq!(det_poly(&m, 1).unwrap(), cofactor_poly(&m));
        }
    }
}
