use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::objects::{LineP3, PlaneP3};
use super::transform::{m_abc, solve_abc, ProjTransform};
use crate::error::{Error, Result};
use crate::rational::{self, serde_rational, Rational};

/// Position of the fourth axial line after the first three are canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum CaseTag {
    /// `l4 = {X + Y + Z = 0} ∩ {s1 X + s2 Y + 1 = 0}` after a stabilizer move.
    Case1 {
        #[serde(with = "serde_rational")]
        s1: Rational,
        #[serde(with = "serde_rational")]
        s2: Rational,
    },
    /// `l4` is the line at infinity of `X + Y + Z = 0`.
    Case1AtInfinity,
    /// The planes through `l4` are `α(1+s)x − (1+α)y + s z + 1 = 0`.
    Case2 {
        #[serde(with = "serde_rational")]
        alpha: Rational,
    },
}

/// `h3² + h3(h0 + h1 + h2) + h1 h2`, the homogenized `1 + t1 + t2 + t3 + t2 t3`.
fn det_form(h: &[Rational; 4]) -> Rational {
    &h[3] * &h[3] + &h[3] * (&h[0] + &h[1] + &h[2]) + &h[1] * &h[2]
}

fn combine(a: &[Rational; 4], b: &[Rational; 4], lambda: &Rational) -> [Rational; 4] {
    std::array::from_fn(|i| &a[i] + lambda * &b[i])
}

fn sample_lambdas() -> impl Iterator<Item = Rational> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] }).map(rational::int)
}

/// Classifies a line skew to the canonical triple.
pub fn classify_l4(l4: &LineP3) -> Result<CaseTag> {
    Ok(classify_l4_with_transform(l4)?.0)
}

/// As [`classify_l4`], also returning the stabilizer move (identity when none
/// is needed) that puts `l4` in the reported normal form.
pub fn classify_l4_with_transform(l4: &LineP3) -> Result<(CaseTag, ProjTransform)> {
    let (u, v) = l4.two_planes();
    let (h0, h1) = (u.to_rationals(), v.to_rationals());
    let q0 = det_form(&h0);
    let q1 = det_form(&h1);
    let cross = det_form(&combine(&h0, &h1, &Rational::one())) - &q0 - &q1;
    if q0.is_zero() && q1.is_zero() && cross.is_zero() {
        return classify_case2(&h0, &h1);
    }

    let flat = PlaneP3::from_ints([1, 1, 1, 0]).unwrap();
    let transform = if l4.lies_in(&flat) {
        ProjTransform::identity()
    } else {
        let h = sample_lambdas()
            .map(|lambda| combine(&h0, &h1, &lambda))
            .chain(std::iter::once(h1.clone()))
            .find(|h| !h[3].is_zero() && !(&h[2] + &h[3]).is_zero() && !det_form(h).is_zero())
            .expect("a nonzero quadratic form misses some integer parameter");
        let t: Vec<Rational> = h[..3].iter().map(|x| x / &h[3]).collect();
        let (a, b, c) = solve_abc(&t[0], &t[1], &t[2])?;
        m_abc(&a, &b, &c)
    };
    let image = transform.apply_line(l4)?;
    if !image.lies_in(&flat) {
        return Err(Error::DegenerateInput("stabilizer move failed to flatten l4".into()));
    }
    let (g1, g2) = image.two_planes();
    let g = if g1 == flat { g2 } else { g1 }.to_rationals();
    if g[3].is_zero() {
        return Err(Error::DegenerateInput("l4 meets the axis x = y = 0".into()));
    }
    let s1 = (&g[0] - &g[2]) / &g[3];
    let s2 = (&g[1] - &g[2]) / &g[3];
    let tag = if s1.is_zero() && s2.is_zero() {
        CaseTag::Case1AtInfinity
    } else {
        CaseTag::Case1 { s1, s2 }
    };
    Ok((tag, transform))
}

// dual line inside 1 + X + Y + Z + YZ = 0, with X, Y, Z = h0/h3, h1/h3, h2/h3
fn classify_case2(h0: &[Rational; 4], h1: &[Rational; 4]) -> Result<(CaseTag, ProjTransform)> {
    let affine: Vec<[Rational; 3]> = sample_lambdas()
        .map(|lambda| combine(h0, h1, &lambda))
        .chain(std::iter::once(h1.clone()))
        .filter(|h| !h[3].is_zero())
        .take(2)
        .map(|h| std::array::from_fn(|i| &h[i] / &h[3]))
        .collect();
    let [p, q] = [&affine[0], &affine[1]];
    let one = Rational::one();
    if p[1] == q[1] {
        // first ruling: -(1 + Y) = α and X = α(1 + Z)
        let alpha = -(&one + &p[1]);
        for pt in [p, q] {
            if pt[0] != &alpha * (&one + &pt[2]) {
                return Err(Error::DegenerateInput("dual line leaves the quadric".into()));
            }
        }
        if alpha.is_zero() || alpha == -one.clone() {
            return Err(Error::AlphaExcluded { alpha: rational::to_text(&alpha) });
        }
        Ok((CaseTag::Case2 { alpha }, ProjTransform::identity()))
    } else if p[2] == q[2] {
        Err(Error::RulingL2)
    } else {
        Err(Error::DegenerateInput("dual line is not a ruling".into()))
    }
}
