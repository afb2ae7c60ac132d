//! Elimination of the point coordinates from the incidence systems, leaving
//! one polynomial relation among the family parameters.
//!
//! Plane systems use the variables `x, y, z, w` for the four sheaf
//! parameters, sphere systems `t1..t4` for squared radii, and the planar
//! system `t1, t3, t4` (squared radius about the origin and the two slopes).

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::{self, MPoly};
use crate::ratfun::RatFun;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolvedStep {
    pub variable: String,
    pub value: RatFun,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EliminationResult {
    #[serde(rename = "F")]
    pub f: MPoly,
    /// Parameter variables of `F`, in the order used by the golden text.
    pub parameters: Vec<String>,
    pub solved_chain: Vec<SolvedStep>,
    /// Denominators cleared along the way; the relation is only meaningful
    /// off their zero sets.
    pub excluded_locus: Vec<MPoly>,
}

impl EliminationResult {
    pub fn parameter_refs(&self) -> Vec<&str> {
        self.parameters.iter().map(String::as_str).collect()
    }

    pub fn canonical_text(&self) -> String {
        let order = self.parameter_refs();
        self.f.to_text_with_order(&order)
    }
}

fn v(name: &str) -> MPoly {
    MPoly::var(name)
}

fn c(n: i64) -> MPoly {
    MPoly::from_int(n)
}

/// Plane `base + m·dir` of a sheaf, homogeneous coefficients on `(X, Y, Z, W)`.
pub fn pencil_plane(base: &[MPoly; 4], dir: &[MPoly; 4], m: &MPoly) -> [MPoly; 4] {
    std::array::from_fn(|i| &base[i] + &(m * &dir[i]))
}

/// The three canonical sheaves in parameters `x, y, z`:
/// `X = x Y`, `Y - 1 = y Z`, `Z - 1 = z (X - 1)`.
pub fn canonical_sheaf_planes() -> [[MPoly; 4]; 3] {
    [
        [c(1), -v("x"), c(0), c(0)],
        [c(0), c(1), -v("y"), c(-1)],
        [-v("z"), c(0), c(1), &v("z") - &c(1)],
    ]
}

/// Eliminates the common point of four planes with polynomial coefficients.
/// The first three are solved by Cramer's rule; the result is the
/// determinant of the four coefficient rows, up to sign.
pub fn eliminate_planes(planes: &[[MPoly; 4]; 4], parameters: &[&str]) -> EliminationResult {
    let a: Vec<Vec<MPoly>> = planes[..3].iter().map(|p| p[..3].to_vec()).collect();
    let rhs: Vec<MPoly> = planes[..3].iter().map(|p| -&p[3]).collect();
    let det = polyalg::determinant(a.clone());
    let mut nums = Vec::new();
    for col in 0..3 {
        let mut m = a.clone();
        for (row, r) in m.iter_mut().zip(&rhs) {
            row[col] = r.clone();
        }
        nums.push(polyalg::determinant(m));
    }
    let p4 = &planes[3];
    let mut f = &p4[3] * &det;
    for i in 0..3 {
        f = &f + &(&p4[i] * &nums[i]);
    }
    let solved_chain = ["X", "Y", "Z"]
        .iter()
        .zip(&nums)
        .map(|(name, n)| SolvedStep {
            variable: name.to_string(),
            value: RatFun::new(n.clone(), det.clone()).expect("three sheaf planes meet in a point"),
        })
        .collect();
    EliminationResult {
        f,
        parameters: parameters.iter().map(|s| s.to_string()).collect(),
        solved_chain,
        excluded_locus: vec![det],
    }
}

fn four_sheaves(fourth: [MPoly; 4]) -> EliminationResult {
    let [p1, p2, p3] = canonical_sheaf_planes();
    eliminate_planes(&[p1, p2, p3, fourth], &["x", "y", "z", "w"])
}

/// Fourth sheaf `(s1 + w)X + (s2 + w)Y + wZ + 1 = 0`.
pub fn eliminate_planes_case1(s1: &MPoly, s2: &MPoly) -> EliminationResult {
    let w = v("w");
    four_sheaves([s1 + &w, s2 + &w, w.clone(), c(1)])
}

/// Fourth sheaf `X + Y + Z = w`.
pub fn eliminate_planes_at_infinity() -> EliminationResult {
    four_sheaves([c(1), c(1), c(1), -v("w")])
}

/// Fourth sheaf `α(1 + w)X − (1 + α)Y + wZ + 1 = 0`.
pub fn eliminate_planes_case2(alpha: &MPoly) -> Result<EliminationResult> {
    if let Some(a) = alpha.constant_value() {
        if a.is_zero() || a == rational::int(-1) {
            return Err(Error::AlphaExcluded { alpha: rational::to_text(&a) });
        }
    }
    let w = v("w");
    Ok(four_sheaves([
        alpha * &(&c(1) + &w),
        -(&c(1) + alpha),
        w,
        c(1),
    ]))
}

/// Squared-distance relation for four concentric families with centres
/// `centers[i]`: `t_i = |p − c_i|²`. Translating `c_1` to the origin turns the
/// differences into the linear system `D p' = h` with rows `d_i = c_i − c_1`
/// and `2h_i = |d_i|² + t1 − t_i`; then `|adj(D)·2h|² = 4 det(D)² t1`.
/// This stays a polynomial when `D` is singular.
pub fn spheres_polynomial(centers: &[[MPoly; 3]; 4]) -> EliminationResult {
    let t = ["t1", "t2", "t3", "t4"].map(v);
    let d: Vec<Vec<MPoly>> = (1..4)
        .map(|i| (0..3).map(|k| &centers[i][k] - &centers[0][k]).collect())
        .collect();
    let r: Vec<MPoly> = (0..3)
        .map(|i| {
            let norm = d[i].iter().fold(MPoly::zero(), |acc, x| &acc + &(x * x));
            &(&norm + &t[0]) - &t[i + 1]
        })
        .collect();
    let det = polyalg::determinant(d.clone());
    // adj(D) r by Cramer numerators
    let nums: Vec<MPoly> = (0..3)
        .map(|col| {
            let mut m = d.clone();
            for (row, ri) in m.iter_mut().zip(&r) {
                row[col] = ri.clone();
            }
            polyalg::determinant(m)
        })
        .collect();
    let sq = nums.iter().fold(MPoly::zero(), |acc, n| &acc + &(n * n));
    let f = &sq - &(&(&det * &det) * &t[0]).scale(&rational::int(4));
    let two_det = det.scale(&rational::int(2));
    let solved_chain = ["x", "y", "z"]
        .iter()
        .zip(&nums)
        .enumerate()
        .map(|(k, (name, n))| SolvedStep {
            variable: name.to_string(),
            // p = c1 + p'
            value: RatFun::new(n + &(&centers[0][k] * &two_det), two_det.clone())
                .unwrap_or_else(|_| RatFun::zero()),
        })
        .collect();
    EliminationResult {
        f,
        parameters: ["t1", "t2", "t3", "t4"].map(String::from).to_vec(),
        solved_chain,
        excluded_locus: vec![det],
    }
}

/// Centres `(0,0,0)`, `(1,0,0)`, `(a,b,0)`, `(c,d,e)`.
pub fn eliminate_spheres(a: &MPoly, b: &MPoly, cc: &MPoly, d: &MPoly, e: &MPoly) -> Result<EliminationResult> {
    let centers = [
        [c(0), c(0), c(0)],
        [c(1), c(0), c(0)],
        [a.clone(), b.clone(), c(0)],
        [cc.clone(), d.clone(), e.clone()],
    ];
    let res = spheres_polynomial(&centers);
    if res.excluded_locus[0].is_zero() {
        return Err(Error::CoplanarCenters);
    }
    Ok(res)
}

/// Circle pencils about `(0,0)` and `(1,0)`, line pencils through `(a,b)`
/// and `(c,d)` with slopes `t3`, `t4`. The lines meet at
/// `x = (c t4 − d − a t3 + b)/(t4 − t3)`,
/// `y = (t3(c t4 − d) − t4(a t3 − b))/(t4 − t3)`, and `t2` is determined by
/// the point, so it drops out.
pub fn eliminate_2d(a: &MPoly, b: &MPoly, cc: &MPoly, d: &MPoly) -> Result<EliminationResult> {
    let diff = [(a, cc), (b, d)];
    if diff.iter().all(|(p, q)| (*p - *q).is_zero()) {
        return Err(Error::CoincidentCenters);
    }
    let (t1, t3, t4) = (v("t1"), v("t3"), v("t4"));
    let xn = &(&(&(cc * &t4) - d) - &(a * &t3)) + b;
    let yn = &(&t3 * &(&(cc * &t4) - d)) - &(&t4 * &(&(a * &t3) - b));
    let den = &t4 - &t3;
    let f = &(&(&xn * &xn) + &(&yn * &yn)) - &(&t1 * &(&den * &den));
    let solved_chain = vec![
        SolvedStep { variable: "x".into(), value: RatFun::new(xn.clone(), den.clone())? },
        SolvedStep { variable: "y".into(), value: RatFun::new(yn.clone(), den.clone())? },
    ];
    Ok(EliminationResult {
        f,
        parameters: ["t1", "t3", "t4"].map(String::from).to_vec(),
        solved_chain,
        excluded_locus: vec![den],
    })
}

/// `t1` as a function of the two slopes.
pub fn solve_2d_for_t1(elim: &EliminationResult) -> Result<RatFun> {
    crate::ratfun::solve_linear_variable(&elim.f, "t1")
}

pub fn sym(name: &str) -> MPoly {
    v(name)
}

pub fn num(q: Rational) -> MPoly {
    MPoly::constant(q)
}
