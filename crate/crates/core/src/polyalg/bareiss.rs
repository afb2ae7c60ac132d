//! Fraction-free (Bareiss) elimination over integral domains with exact
//! division: rationals and polynomials.

use num_traits::{One, Zero};

use super::MPoly;
use crate::rational::Rational;

/// Commutative ring operations needed by Bareiss elimination.
pub trait ExactRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `self / rhs`, where the caller guarantees divisibility.
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl ExactRing for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl ExactRing for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        if let Some(c) = rhs.constant_value() {
            return self.scale(&(<Rational as One>::one() / c));
        }
        self.exact_div(rhs)
            .expect("Bareiss step produced a non-exact division")
    }
}

/// Determinant of a square matrix by fraction-free elimination with row
/// pivoting.
pub fn determinant<R: ExactRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        R::zero().sub(&det)
    } else {
        det
    }
}

/// Rank over the fraction field, by fraction-free elimination with full
/// pivot search.
pub fn rank<R: ExactRing>(mut m: Vec<Vec<R>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = R::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = m[i][j].mul(&m[r][c]).sub(&m[i][c].mul(&m[r][j]));
                m[i][j] = num.exact_div(&prev);
            }
            m[i][c] = R::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}
