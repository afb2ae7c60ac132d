use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, serde_bigint_array, Rational};

/// Index pairs of the Plücker coordinates, in storage order.
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

fn canonical4(v: &[Rational; 4], what: &str) -> Result<[BigInt; 4]> {
    let ints = rational::primitive_integer_vector(v)
        .ok_or_else(|| Error::DegenerateInput(format!("zero {what} vector")))?;
    Ok(ints.try_into().unwrap())
}

fn to_rationals<const N: usize>(v: &[BigInt; N]) -> [Rational; N] {
    std::array::from_fn(|i| Rational::from_integer(v[i].clone()))
}

/// Point of P³ as `[x:y:z:w]`, stored as coprime integers with the first
/// nonzero coordinate positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointP3(#[serde(with = "serde_bigint_array")] [BigInt; 4]);

/// Plane `t0·x + t1·y + t2·z + t3·w = 0`, canonicalized like [`PointP3`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlaneP3(#[serde(with = "serde_bigint_array")] [BigInt; 4]);

macro_rules! homogeneous_quadruple {
    ($t:ident, $what:literal) => {
        impl $t {
            pub fn new(v: [Rational; 4]) -> Result<Self> {
                Ok(Self(canonical4(&v, $what)?))
            }

            pub fn from_ints(v: [i64; 4]) -> Result<Self> {
                Self::new(v.map(rational::int))
            }

            pub fn coords(&self) -> &[BigInt; 4] {
                &self.0
            }

            pub fn to_rationals(&self) -> [Rational; 4] {
                to_rationals(&self.0)
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let [a, b, c, d] = &self.0;
                write!(f, "[{a}:{b}:{c}:{d}]")
            }
        }
    };
}

homogeneous_quadruple!(PointP3, "point");
homogeneous_quadruple!(PlaneP3, "plane");

impl PointP3 {
    pub fn affine(x: Rational, y: Rational, z: Rational) -> PointP3 {
        PointP3::new([x, y, z, rational::int(1)]).unwrap()
    }

    /// Affine coordinates, or `None` at infinity.
    pub fn to_affine(&self) -> Option<[Rational; 3]> {
        let w = &self.0[3];
        if w.is_zero() {
            return None;
        }
        Some(std::array::from_fn(|i| Rational::new(self.0[i].clone(), w.clone())))
    }

    pub fn on_plane(&self, plane: &PlaneP3) -> bool {
        self.0.iter().zip(&plane.0).map(|(a, b)| a * b).sum::<BigInt>().is_zero()
    }
}

impl PlaneP3 {
    pub fn contains(&self, p: &PointP3) -> bool {
        p.on_plane(self)
    }
}

/// Line of P³ in Plücker coordinates `(p01, p02, p03, p23, p31, p12)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LineP3(#[serde(with = "serde_bigint_array")] [BigInt; 6]);

impl fmt::Debug for LineP3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.0;
        write!(f, "Line({} {} {} {} {} {})", p[0], p[1], p[2], p[3], p[4], p[5])
    }
}

impl LineP3 {
    /// From raw Plücker coordinates; the quadratic relation must hold.
    pub fn from_plucker(p: [Rational; 6]) -> Result<LineP3> {
        let ints = rational::primitive_integer_vector(&p)
            .ok_or_else(|| Error::DegenerateInput("zero Plücker vector".into()))?;
        let line = LineP3(ints.try_into().unwrap());
        if !line.relation().is_zero() {
            return Err(Error::DegenerateInput("Plücker relation fails".into()));
        }
        Ok(line)
    }

    pub fn join(a: &PointP3, b: &PointP3) -> Result<LineP3> {
        let (a, b) = (a.to_rationals(), b.to_rationals());
        let p = PLUCKER_PAIRS.map(|(i, j)| &a[i] * &b[j] - &a[j] * &b[i]);
        LineP3::from_plucker(p).map_err(|_| Error::DegenerateInput("points coincide".into()))
    }

    pub fn meet(u: &PlaneP3, v: &PlaneP3) -> Result<LineP3> {
        let (u, v) = (u.to_rationals(), v.to_rationals());
        let pi = PLUCKER_PAIRS.map(|(i, j)| &u[i] * &v[j] - &u[j] * &v[i]);
        // dual coordinates: p01 = π23, p02 = π31, p03 = π12 and back
        let [a, b, c, d, e, f] = pi;
        LineP3::from_plucker([d, e, f, a, b, c])
            .map_err(|_| Error::DegenerateInput("planes coincide".into()))
    }

    pub fn plucker(&self) -> &[BigInt; 6] {
        &self.0
    }

    pub fn to_rationals(&self) -> [Rational; 6] {
        to_rationals(&self.0)
    }

    /// `p01 p23 + p02 p31 + p03 p12`.
    pub fn relation(&self) -> BigInt {
        let p = &self.0;
        &p[0] * &p[3] + &p[1] * &p[4] + &p[2] * &p[5]
    }

    /// Antisymmetric `L[i][j] = p_ij`; `L·u` is the point where the line
    /// meets plane `u`, zero iff the line lies in `u`.
    pub fn primal_matrix(&self) -> linalg::Matrix {
        antisymmetric(&self.to_rationals())
    }

    /// Antisymmetric matrix of dual coordinates; `L*·X` is the plane through
    /// the line and `X`, zero iff `X` is on the line.
    pub fn dual_matrix(&self) -> linalg::Matrix {
        let [a, b, c, d, e, f] = self.to_rationals();
        antisymmetric(&[d, e, f, a, b, c])
    }

    pub fn contains_point(&self, x: &PointP3) -> bool {
        linalg::mat_vec(&self.dual_matrix(), &x.to_rationals())
            .iter()
            .all(Zero::is_zero)
    }

    pub fn lies_in(&self, plane: &PlaneP3) -> bool {
        linalg::mat_vec(&self.primal_matrix(), &plane.to_rationals())
            .iter()
            .all(Zero::is_zero)
    }

    /// Intersection with a plane not containing the line.
    pub fn meet_plane(&self, plane: &PlaneP3) -> Result<PointP3> {
        let x = linalg::mat_vec(&self.primal_matrix(), &plane.to_rationals());
        PointP3::new(x.try_into().unwrap())
            .map_err(|_| Error::DegenerateInput("line lies in the plane".into()))
    }

    /// Plane spanned by the line and a point off it.
    pub fn plane_through(&self, point: &PointP3) -> Result<PlaneP3> {
        let u = linalg::mat_vec(&self.dual_matrix(), &point.to_rationals());
        PlaneP3::new(u.try_into().unwrap())
            .map_err(|_| Error::DegenerateInput("point lies on the line".into()))
    }

    /// Two distinct points spanning the line.
    pub fn two_points(&self) -> (PointP3, PointP3) {
        let m = self.primal_matrix();
        let [a, b] = two_independent(&m).map(|v| PointP3::new(v).unwrap());
        (a, b)
    }

    /// Two distinct planes containing the line.
    pub fn two_planes(&self) -> (PlaneP3, PlaneP3) {
        let m = self.dual_matrix();
        let [a, b] = two_independent(&m).map(|v| PlaneP3::new(v).unwrap());
        (a, b)
    }

    pub fn pairing(&self, other: &LineP3) -> BigInt {
        pairing(&self.0, &other.0)
    }

    /// True iff the lines neither meet nor coincide.
    pub fn is_skew_to(&self, other: &LineP3) -> bool {
        !self.pairing(other).is_zero()
    }
}

/// Ω(p, q) = p01 q23 + p23 q01 + p02 q31 + p31 q02 + p03 q12 + p12 q03.
pub fn pairing<T>(p: &[T; 6], q: &[T; 6]) -> T
where
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
    T: std::iter::Sum,
{
    [(0, 3), (3, 0), (1, 4), (4, 1), (2, 5), (5, 2)]
        .iter()
        .map(|&(i, j)| &p[i] * &q[j])
        .sum()
}

pub fn lines_skew(l: &LineP3, m: &LineP3) -> bool {
    l.is_skew_to(m)
}

fn antisymmetric(p: &[Rational; 6]) -> linalg::Matrix {
    let mut m = vec![vec![Rational::zero(); 4]; 4];
    for (k, &(i, j)) in PLUCKER_PAIRS.iter().enumerate() {
        m[i][j] = p[k].clone();
        m[j][i] = -p[k].clone();
    }
    m
}

// columns of a rank-2 antisymmetric matrix span the 2-dimensional image
fn two_independent(m: &linalg::Matrix) -> [[Rational; 4]; 2] {
    let cols: Vec<Vec<Rational>> = linalg::transpose(m);
    let first = cols.iter().position(|c| c.iter().any(|x| !x.is_zero())).unwrap();
    let second = (first + 1..4)
        .find(|&j| linalg::rank(&[cols[first].clone(), cols[j].clone()]) == 2)
        .unwrap();
    [
        cols[first].clone().try_into().unwrap(),
        cols[second].clone().try_into().unwrap(),
    ]
}
