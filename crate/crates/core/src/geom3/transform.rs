use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::objects::{LineP3, PlaneP3, PointP3};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::polyalg::MPoly;
use crate::rational::{self, serde_rational_vec, Rational};

/// Projective transformation of P³ given by a 4×4 matrix acting on column
/// vectors of point coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjTransform {
    m: Matrix,
}

impl ProjTransform {
    pub fn new(m: Matrix) -> ProjTransform {
        assert!(m.len() == 4 && m.iter().all(|r| r.len() == 4));
        ProjTransform { m }
    }

    pub fn identity() -> ProjTransform {
        ProjTransform::new(linalg::identity(4))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn determinant(&self) -> Rational {
        linalg::determinant(&self.m)
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    pub fn inverse(&self) -> Option<ProjTransform> {
        linalg::inverse(&self.m).map(ProjTransform::new)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ProjTransform) -> ProjTransform {
        ProjTransform::new(linalg::mat_mul(&self.m, &other.m))
    }

    pub fn apply_point(&self, p: &PointP3) -> Result<PointP3> {
        let v = linalg::mat_vec(&self.m, &p.to_rationals());
        PointP3::new(v.try_into().unwrap())
            .map_err(|_| Error::DegenerateInput("point maps to zero".into()))
    }

    /// Planes transform by the inverse transpose.
    pub fn apply_plane(&self, h: &PlaneP3) -> Result<PlaneP3> {
        let inv = self.inverse().ok_or_else(singular)?;
        let v = linalg::mat_vec(&linalg::transpose(&inv.m), &h.to_rationals());
        Ok(PlaneP3::new(v.try_into().unwrap()).unwrap())
    }

    pub fn apply_line(&self, l: &LineP3) -> Result<LineP3> {
        if !self.is_invertible() {
            return Err(singular());
        }
        let (a, b) = l.two_points();
        LineP3::join(&self.apply_point(&a)?, &self.apply_point(&b)?)
    }

    /// True when the two transforms agree as projective maps.
    pub fn projectively_equal(&self, other: &ProjTransform) -> bool {
        let a: Vec<Rational> = self.m.iter().flatten().cloned().collect();
        let b: Vec<Rational> = other.m.iter().flatten().cloned().collect();
        rational::primitive_integer_vector(&a) == rational::primitive_integer_vector(&b)
    }
}

fn singular() -> Error {
    Error::DegenerateInput("singular transform".into())
}

// 16 rational strings, row major
impl Serialize for ProjTransform {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let flat: Vec<Rational> = self.m.iter().flatten().cloned().collect();
        serde_rational_vec::serialize(&flat, s)
    }
}

impl<'de> Deserialize<'de> for ProjTransform {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let flat = serde_rational_vec::deserialize(d)?;
        if flat.len() != 16 {
            return Err(serde::de::Error::invalid_length(flat.len(), &"16 entries"));
        }
        Ok(ProjTransform::new(flat.chunks(4).map(<[Rational]>::to_vec).collect()))
    }
}

/// The three canonical skew lines: `x = y = 0`, `z = 0, y = w` and
/// `x = w, z = w`.
pub fn canonical_lines() -> [LineP3; 3] {
    let pl = |v| PlaneP3::from_ints(v).unwrap();
    [
        LineP3::meet(&pl([1, 0, 0, 0]), &pl([0, 1, 0, 0])).unwrap(),
        LineP3::meet(&pl([0, 0, 1, 0]), &pl([0, 1, 0, -1])).unwrap(),
        LineP3::meet(&pl([1, 0, 0, -1]), &pl([0, 0, 1, -1])).unwrap(),
    ]
}

/// Transform sending three pairwise skew lines to the canonical triple.
///
/// With `P1, Q1` spanning `l1` and `P2, Q2` spanning `l2`, `l3` is the graph
/// of a linear isomorphism `l2 → l1` (every point of `l3` splits uniquely into
/// an `l2` part and an `l1` part). The transform sends `P2, Q2` to `e0`,
/// `e1 + e3` and fixes the images of `P1, Q1` so that this isomorphism
/// becomes the canonical one, `e0 ↦ e2 + e3`, `e1 + e3 ↦ -e3`.
pub fn normalize_three_skew_lines(l1: &LineP3, l2: &LineP3, l3: &LineP3) -> Result<ProjTransform> {
    if !(l1.is_skew_to(l2) && l1.is_skew_to(l3) && l2.is_skew_to(l3)) {
        return Err(Error::NotSkew);
    }
    let (p1, q1) = l1.two_points();
    let (p2, q2) = basis_of_second(l2);
    let (a, b) = l3.two_points();
    let basis: Vec<[Rational; 4]> =
        [&p2, &q2, &p1, &q1].iter().map(|p| p.to_rationals()).collect();
    let source = linalg::transpose(&basis.iter().map(|v| v.to_vec()).collect::<Vec<_>>());
    let coords = |x: &PointP3| linalg::solve(&source, &x.to_rationals()).unwrap();
    let (ca, cb) = (coords(&a), coords(&b));
    // phi_s * [l2 coords] = [l1 coords]
    let l2_part = vec![vec![ca[0].clone(), cb[0].clone()], vec![ca[1].clone(), cb[1].clone()]];
    let l1_part = vec![vec![ca[2].clone(), cb[2].clone()], vec![ca[3].clone(), cb[3].clone()]];
    let phi_s = linalg::mat_mul(&l1_part, &linalg::inverse(&l2_part).ok_or(Error::NotSkew)?);
    let phi_c = vec![
        vec![rational::int(1), rational::int(0)],
        vec![rational::int(1), rational::int(-1)],
    ];
    let k = linalg::mat_mul(&phi_c, &linalg::inverse(&phi_s).ok_or(Error::NotSkew)?);
    let z = Rational::zero;
    let o = Rational::one;
    // columns: e0, e1 + e3, K[0][0] e2 + K[1][0] e3, K[0][1] e2 + K[1][1] e3
    let target = vec![
        vec![o(), z(), z(), z()],
        vec![z(), o(), z(), z()],
        vec![z(), z(), k[0][0].clone(), k[0][1].clone()],
        vec![z(), o(), k[1][0].clone(), k[1][1].clone()],
    ];
    let inv = linalg::inverse(&source).ok_or(Error::NotSkew)?;
    Ok(ProjTransform::new(linalg::mat_mul(&target, &inv)))
}

// l2 ∩ {y = 0} and l2 ∩ {x = 0}; on the canonical l2 these are e0 and
// e1 + e3, which makes the canonical triple normalize to the identity
fn basis_of_second(l2: &LineP3) -> (PointP3, PointP3) {
    let y0 = PlaneP3::from_ints([0, 1, 0, 0]).unwrap();
    let x0 = PlaneP3::from_ints([1, 0, 0, 0]).unwrap();
    match (l2.meet_plane(&y0), l2.meet_plane(&x0)) {
        (Ok(p), Ok(q)) if p != q => (p, q),
        _ => l2.two_points(),
    }
}

/// The stabilizer family of the canonical triple:
///
/// ```text
/// [ 1  b        0    0     ]
/// [ a  1+b-a-c  0    0     ]
/// [ 0  b        1+b  -b    ]
/// [ a  b        c    1-a-c ]
/// ```
pub fn m_abc(a: &Rational, b: &Rational, c: &Rational) -> ProjTransform {
    let one = Rational::one();
    let zero = Rational::zero();
    ProjTransform::new(vec![
        vec![one.clone(), b.clone(), zero.clone(), zero.clone()],
        vec![a.clone(), &one + b - a - c, zero.clone(), zero.clone()],
        vec![zero.clone(), b.clone(), &one + b, -b.clone()],
        vec![a.clone(), b.clone(), c.clone(), &one - a - c],
    ])
}

/// [`m_abc`] with polynomial entries.
pub fn m_abc_symbolic(a: &MPoly, b: &MPoly, c: &MPoly) -> Vec<Vec<MPoly>> {
    let one = MPoly::one();
    let zero = MPoly::zero();
    vec![
        vec![one.clone(), b.clone(), zero.clone(), zero.clone()],
        vec![a.clone(), &(&(&one + b) - a) - c, zero.clone(), zero.clone()],
        vec![zero.clone(), b.clone(), &one + b, -b],
        vec![a.clone(), b.clone(), c.clone(), &(&one - a) - c],
    ]
}

/// Parameters of [`m_abc`] that carry the plane `t1 x + t2 y + t3 z + w = 0`
/// into `X + Y + Z = 0`.
pub fn solve_abc(t1: &Rational, t2: &Rational, t3: &Rational) -> Result<(Rational, Rational, Rational)> {
    let d = t3 + Rational::one();
    if d.is_zero() {
        return Err(Error::T3IsMinusOne);
    }
    let one = Rational::one();
    let a = (t1 - t3 - &one) / &d;
    let b = -&one / &d;
    let c = (-t1 - t2 + rational::int(2) * t3 - &one) / &d;
    Ok((a, b, c))
}
