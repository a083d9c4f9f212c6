//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored low degree first. The zero polynomial is the empty
//! vector and the top coefficient is never zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

macro_rules! poly_common {
    ($ty:ident, $coef:ty) => {
        impl $ty {
            pub fn new(mut coeffs: Vec<$coef>) -> Self {
                trim(&mut coeffs);
                $ty { coeffs }
            }

            pub fn zero() -> Self {
                $ty { coeffs: Vec::new() }
            }

            pub fn one() -> Self {
                $ty { coeffs: vec![<$coef>::one()] }
            }

            /// The monomial `x`.
            pub fn x() -> Self {
                $ty { coeffs: vec![<$coef>::zero(), <$coef>::one()] }
            }

            pub fn constant(c: $coef) -> Self {
                $ty::new(vec![c])
            }

            /// `c * x^k`.
            pub fn monomial(c: $coef, k: usize) -> Self {
                let mut v = vec![<$coef>::zero(); k + 1];
                v[k] = c;
                $ty::new(v)
            }

            pub fn coeffs(&self) -> &[$coef] {
                &self.coeffs
            }

            pub fn into_coeffs(self) -> Vec<$coef> {
                self.coeffs
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.is_empty()
            }

            /// `None` for the zero polynomial.
            pub fn degree(&self) -> Option<usize> {
                self.coeffs.len().checked_sub(1)
            }

            pub fn leading(&self) -> Option<&$coef> {
                self.coeffs.last()
            }

            /// Coefficient of `x^k` (zero past the degree).
            pub fn coeff(&self, k: usize) -> $coef {
                self.coeffs.get(k).cloned().unwrap_or_else(<$coef>::zero)
            }

            pub fn is_monic(&self) -> bool {
                self.leading().is_some_and(|c| c.is_one())
            }

            pub fn scale(&self, c: &$coef) -> Self {
                $ty::new(self.coeffs.iter().map(|a| a * c).collect())
            }

            /// Multiply by `x^k`.
            pub fn shift(&self, k: usize) -> Self {
                if self.is_zero() {
                    return self.clone();
                }
                let mut v = vec![<$coef>::zero(); k];
                v.extend(self.coeffs.iter().cloned());
                $ty { coeffs: v }
            }

            pub fn pow(&self, k: u32) -> Self {
                let mut acc = $ty::one();
                for _ in 0..k {
                    acc = &acc * self;
                }
                acc
            }
        }

        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
                let mut v = long.coeffs.clone();
                for (a, b) in v.iter_mut().zip(&short.coeffs) {
                    *a += b;
                }
                $ty::new(v)
            }
        }

        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty { coeffs: self.coeffs.iter().map(|c| -c).collect() }
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }

        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                self + &(-rhs)
            }
        }

        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }

        impl Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                if self.is_zero() || rhs.is_zero() {
                    return $ty::zero();
                }
                let mut v = vec![<$coef>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
                for (i, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in rhs.coeffs.iter().enumerate() {
                        v[i + j] += a * b;
                    }
                }
                $ty::new(v)
            }
        }

        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
    };
}

poly_common!(IntPoly, BigInt);
poly_common!(RatPoly, BigRational);

impl IntPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect() }
    }

    /// Interpolate the unique polynomial of degree `<= values.len() - 1` with
    /// `p(k) = values[k]` for `k = 0, 1, ...`, assuming integer coefficients.
    ///
    /// Uses Newton forward differences; the `j`-th difference is divisible by
    /// `j!` for every integer polynomial, which is checked.
    pub fn interpolate_at_naturals(values: &[BigInt]) -> Result<Self> {
        let d = values.len();
        let mut diffs: Vec<BigInt> = values.to_vec();
        // newton[j] = Δ^j y_0 / j!
        let mut newton = Vec::with_capacity(d);
        let mut fact = BigInt::one();
        for j in 0..d {
            if j > 0 {
                fact *= BigInt::from(j);
                for k in 0..d - j {
                    diffs[k] = &diffs[k + 1] - &diffs[k];
                }
            }
            let (q, r) = diffs[0].div_rem(&fact);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            newton.push(q);
        }
        // sum newton[j] * x(x-1)...(x-j+1)
        let mut result = vec![BigInt::zero(); d];
        let mut falling = vec![BigInt::one()];
        for (j, c) in newton.iter().enumerate() {
            if !c.is_zero() {
                for (k, f) in falling.iter().enumerate() {
                    result[k] += c * f;
                }
            }
            // falling *= (x - j)
            let jj = BigInt::from(j);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (k, f) in falling.iter().enumerate() {
                next[k + 1] += f;
                next[k] -= f * &jj;
            }
            falling = next;
        }
        Ok(IntPoly::new(result))
    }
}

impl RatPoly {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Returns `None` if any coefficient is not an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect::<Option<Vec<_>>>().map(IntPoly::new)
    }

    pub fn div_rem(&self, den: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let lead = den.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, b) in den.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * b;
                }
            }
            quot[k] = c;
        }
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    /// Exact quotient; fails if `den` does not divide `self`.
    pub fn divexact(&self, den: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Interpolate through the points `(xs[k], ys[k])` (distinct `xs`).
    pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> RatPoly {
        assert_eq!(xs.len(), ys.len());
        let d = xs.len();
        let mut dd: Vec<BigRational> = ys.to_vec();
        for j in 1..d {
            for k in (j..d).rev() {
                dd[k] = (&dd[k] - &dd[k - 1]) / (&xs[k] - &xs[k - j]);
            }
        }
        // Horner on the Newton form
        let mut acc = RatPoly::zero();
        for k in (0..d).rev() {
            let lin = RatPoly::new(vec![-xs[k].clone(), BigRational::one()]);
            acc = &(&acc * &lin) + &RatPoly::constant(dd[k].clone());
        }
        acc
    }
}

/// `"num/den"` in lowest terms, as used in JSON and CSV output.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(format_rational))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| format!("{c}/1")))
    }
}

fn write_terms<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl DoubleEndedIterator<Item = (usize, bool, T, bool)>,
) -> fmt::Result {
    // (power, negative, |coefficient|, coefficient is one)
    let mut first = true;
    for (k, neg, mag, unit) in terms.rev() {
        let sign = match (first, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        f.write_str(sign)?;
        let var = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        if k == 0 || !unit {
            write!(f, "{mag}")?;
            if k > 0 {
                f.write_str("*")?;
            }
        }
        f.write_str(&var)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.is_negative(), c.abs(), c.abs().is_one())),
        )
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.is_negative(), c.abs(), c.abs().is_one())),
        )
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}
