use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::objects::{pairing, LineP3};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, serde_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransversalResult {
    /// All common transversals, each rational.
    Lines(Vec<LineP3>),
    /// Two transversals conjugate over a quadratic extension; the field is
    /// real iff the discriminant is positive.
    IrrationalPair {
        #[serde(with = "serde_rational")]
        discriminant: Rational,
    },
    InfinitelyMany,
}

fn half_pairing(p: &[Rational; 6]) -> Rational {
    &p[0] * &p[3] + &p[1] * &p[4] + &p[2] * &p[5]
}

/// Lines meeting all four given lines.
///
/// Meeting `l_i` is the linear condition `Ω(L, l_i) = 0`, so the candidates
/// form a pencil `u + λv` in P⁵; the Plücker relation restricted to it is a
/// quadratic in `λ`.
pub fn transversals_of_four_lines(lines: [&LineP3; 4]) -> Result<TransversalResult> {
    let [l1, l2, l3, _] = lines;
    if !(l1.is_skew_to(l2) && l1.is_skew_to(l3) && l2.is_skew_to(l3)) {
        return Err(Error::NotSkew);
    }
    // Ω(L, m) = L · J m with J swapping the complementary index pairs
    let rows: Vec<Vec<Rational>> = lines
        .iter()
        .map(|l| {
            let m = l.to_rationals();
            vec![
                m[3].clone(),
                m[4].clone(),
                m[5].clone(),
                m[0].clone(),
                m[1].clone(),
                m[2].clone(),
            ]
        })
        .collect();
    let kernel = linalg::nullspace(&rows, 6);
    if kernel.len() != 2 {
        return Err(Error::DegenerateConditions { dimension: kernel.len().saturating_sub(1) });
    }
    let u: [Rational; 6] = kernel[0].clone().try_into().unwrap();
    let v: [Rational; 6] = kernel[1].clone().try_into().unwrap();
    // Q(u + λv) = qa λ² + qb λ + qc
    let qa = half_pairing(&v);
    let qb = pairing(&u, &v);
    let qc = half_pairing(&u);
    let combo = |lambda: &Rational| -> [Rational; 6] {
        std::array::from_fn(|i| &u[i] + lambda * &v[i])
    };
    let to_line = |p: [Rational; 6]| LineP3::from_plucker(p).expect("root lies on the Plücker quadric");
    if qa.is_zero() && qb.is_zero() && qc.is_zero() {
        return Ok(TransversalResult::InfinitelyMany);
    }
    let mut found = Vec::new();
    if qa.is_zero() {
        // v itself is a root at infinity
        found.push(to_line(v.clone()));
        if !qb.is_zero() {
            found.push(to_line(combo(&(-&qc / &qb))));
        }
    } else {
        let disc = &qb * &qb - rational::int(4) * &qa * &qc;
        if disc.is_negative() {
            return Ok(TransversalResult::IrrationalPair { discriminant: disc });
        }
        let Some(root) = rational::sqrt_exact(&disc) else {
            return Ok(TransversalResult::IrrationalPair { discriminant: disc });
        };
        let two_a = rational::int(2) * &qa;
        found.push(to_line(combo(&((-&qb + &root) / &two_a))));
        if !root.is_zero() {
            found.push(to_line(combo(&((-&qb - &root) / &two_a))));
        }
    }
    found.sort();
    found.dedup();
    Ok(TransversalResult::Lines(found))
}
