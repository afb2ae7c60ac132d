//! Rational functions over the rationals and the derivative tests for
//! degeneracy in three and four variables.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::MPoly;
use crate::rational::Rational;

/// `num / den` with `den` nonzero. Not kept in lowest terms; equality goes
/// through cross multiplication.
#[derive(Clone, Serialize, Deserialize)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl RatFun {
    pub fn new(num: MPoly, den: MPoly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        Ok(RatFun { num, den }.normalized())
    }

    pub fn from_poly(p: MPoly) -> RatFun {
        RatFun { num: p, den: MPoly::one() }
    }

    pub fn zero() -> RatFun {
        RatFun::from_poly(MPoly::zero())
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MPoly, MPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    // scale so the denominator's leading coefficient is one
    fn normalized(mut self) -> RatFun {
        if self.num.is_zero() {
            self.den = MPoly::one();
            return self;
        }
        if let Some(c) = self.den.constant_value() {
            self.num = self.num.scale(&(Rational::one() / c));
            self.den = MPoly::one();
            return self;
        }
        let lc = self.den.leading_term().map(|(_, c)| c.clone()).unwrap();
        if !lc.is_one() {
            let inv = Rational::one() / lc;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        self
    }

    pub fn add(&self, g: &RatFun) -> RatFun {
        if self.den == g.den {
            return RatFun { num: &self.num + &g.num, den: self.den.clone() }.normalized();
        }
        let num = &(&self.num * &g.den) + &(&g.num * &self.den);
        RatFun { num, den: &self.den * &g.den }.normalized()
    }

    pub fn sub(&self, g: &RatFun) -> RatFun {
        self.add(&g.neg())
    }

    pub fn neg(&self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, g: &RatFun) -> RatFun {
        RatFun { num: &self.num * &g.num, den: &self.den * &g.den }.normalized()
    }

    pub fn div(&self, g: &RatFun) -> Result<RatFun> {
        if g.num.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        Ok(RatFun { num: &self.num * &g.den, den: &self.den * &g.num }.normalized())
    }

    /// Quotient rule, without cancellation.
    pub fn partial(&self, var: &str) -> RatFun {
        let dn = self.num.partial(var);
        let dd = self.den.partial(var);
        if dd.is_zero() {
            return RatFun { num: dn, den: self.den.clone() }.normalized();
        }
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        RatFun { num, den: &self.den * &self.den }.normalized()
    }

    /// Evaluates at a rational point. `None` if a variable is unassigned or the
    /// denominator vanishes there.
    pub fn eval(&self, values: &[(&str, Rational)]) -> Option<Rational> {
        let d = self.den.eval(values)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(values)? / d)
    }

    /// Replaces `var` by the rational function `g`.
    pub fn substitute(&self, var: &str, g: &RatFun) -> RatFun {
        let (n, kn) = homogeneous_subs(&self.num, var, g);
        let (d, kd) = homogeneous_subs(&self.den, var, g);
        // n / b^kn divided by d / b^kd
        let (num, den) = if kn >= kd {
            (n, &d * &g.den.pow(kn - kd))
        } else {
            (&n * &g.den.pow(kd - kn), d)
        };
        RatFun { num, den }.normalized()
    }
}

/// `p(var = a/b) · b^k` with `k = deg_var p`, returned with `k`.
fn homogeneous_subs(p: &MPoly, var: &str, g: &RatFun) -> (MPoly, u32) {
    let coeffs = p.coefficients_in(var);
    let k = coeffs.len().saturating_sub(1) as u32;
    let mut acc = MPoly::zero();
    let mut a_pow = MPoly::one();
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &(&(c * &a_pow) * &g.den.pow(k - i as u32));
        }
        if i + 1 < coeffs.len() {
            a_pow = &a_pow * &g.num;
        }
    }
    (acc, k)
}

impl From<MPoly> for RatFun {
    fn from(p: MPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for MPoly {
    fn is_one_poly(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

pub fn rf_add(f: &RatFun, g: &RatFun) -> RatFun {
    f.add(g)
}

pub fn rf_mul(f: &RatFun, g: &RatFun) -> RatFun {
    f.mul(g)
}

pub fn rf_div(f: &RatFun, g: &RatFun) -> Result<RatFun> {
    f.div(g)
}

pub fn rf_partial(f: &RatFun, var: &str) -> RatFun {
    f.partial(var)
}

/// `f.num·g.den − g.num·f.den ≡ 0`.
pub fn rf_equal(f: &RatFun, g: &RatFun) -> bool {
    (&(&f.num * &g.den) - &(&g.num * &f.den)).is_zero()
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        rf_equal(self, other)
    }
}

/// `-B/A` for `F = A·var + B`.
pub fn solve_linear_variable(f: &MPoly, var: &str) -> Result<RatFun> {
    let degree = f.degree_in(var);
    if degree != 1 {
        return Err(Error::NotLinear { var: var.into(), degree });
    }
    let a = f.coefficient(var, 1);
    let b = f.coefficient(var, 0);
    RatFun::new(-b, a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegeneracyStatus {
    NonDegenerate,
    DegenerateConsistent,
}

/// Outcome of a derivative test. `DegenerateConsistent` only says the test
/// expressions vanish; it is not a proof of degeneracy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyVerdict {
    pub status: DegeneracyStatus,
    pub witness: Option<String>,
    pub witness_numerator_terms: Option<usize>,
}

impl DegeneracyVerdict {
    fn consistent() -> Self {
        DegeneracyVerdict {
            status: DegeneracyStatus::DegenerateConsistent,
            witness: None,
            witness_numerator_terms: None,
        }
    }

    fn witnessed(name: String, numerator: &MPoly) -> Self {
        DegeneracyVerdict {
            status: DegeneracyStatus::NonDegenerate,
            witness: Some(name),
            witness_numerator_terms: Some(numerator.num_terms()),
        }
    }

    pub fn is_non_degenerate(&self) -> bool {
        self.status == DegeneracyStatus::NonDegenerate
    }
}

/// `P_v` with `f_v = P_v / den²` for `f = num/den`.
fn derivative_numerator(f: &RatFun, v: &str) -> MPoly {
    let dn = f.num.partial(v);
    let dd = f.den.partial(v);
    &(&dn * &f.den) - &(&f.num * &dd)
}

/// Numerator of `∂_t (p/q)`.
fn quotient_derivative_numerator(p: &MPoly, q: &MPoly, t: &str) -> MPoly {
    &(&p.partial(t) * q) - &(p * &q.partial(t))
}

fn test_names(vars: [&str; 3]) -> [(String, usize, usize, usize); 3] {
    let [x, y, z] = vars;
    [
        (format!("d/d{z} (f_{x}/f_{y})"), 0, 1, 2),
        (format!("d/d{x} (f_{y}/f_{z})"), 1, 2, 0),
        (format!("d/d{y} (f_{x}/f_{z})"), 0, 2, 1),
    ]
}

/// Four-variable test for `w = f(x, y, z)`: the three expressions
/// `∂z(fx/fy)`, `∂x(fy/fz)`, `∂y(fx/fz)` in this order. The first one with
/// a nonzero numerator is the witness.
pub fn degeneracy_test_4d(f: &RatFun, vars: [&str; 3]) -> Result<DegeneracyVerdict> {
    Ok(degeneracy_test_4d_with_witness(f, vars)?.0)
}

/// As [`degeneracy_test_4d`], also returning the witness expression.
pub fn degeneracy_test_4d_with_witness(
    f: &RatFun,
    vars: [&str; 3],
) -> Result<(DegeneracyVerdict, Option<RatFun>)> {
    let p: Vec<MPoly> = vars.iter().map(|v| derivative_numerator(f, v)).collect();
    for (v, pv) in vars.iter().zip(&p) {
        if pv.is_zero() {
            return Err(Error::MissingDependence { var: v.to_string() });
        }
    }
    for (name, i, j, t) in test_names(vars) {
        // f_i / f_j = P_i / P_j since the den² factors cancel
        let num = quotient_derivative_numerator(&p[i], &p[j], vars[t]);
        if !num.is_zero() {
            let verdict = DegeneracyVerdict::witnessed(name, &num);
            let expr = RatFun::new(num, &p[j] * &p[j])?;
            return Ok((verdict, Some(expr)));
        }
    }
    Ok((DegeneracyVerdict::consistent(), None))
}

/// Four-variable test for a surface `F(x, y, z, w) = 0` that is not solved
/// for `w`. Along the surface `f_a/f_b = F_a/F_b`, and the chain rule gives
/// the test expressions with numerator
/// `((F_a)_c F_b − F_a (F_b)_c) F_w − ((F_a)_w F_b − F_a (F_b)_w) F_c`.
/// For irreducible `F` such an expression vanishes on `Z(F)` iff `F`
/// divides its numerator, which a single division decides.
pub fn degeneracy_test_4d_implicit(
    big_f: &MPoly,
    vars: [&str; 3],
    w: &str,
) -> Result<DegeneracyVerdict> {
    let fw = big_f.partial(w);
    if fw.is_zero() {
        return Err(Error::MissingDependence { var: w.into() });
    }
    let grads: Vec<MPoly> = vars.iter().map(|v| big_f.partial(v)).collect();
    for (v, g) in vars.iter().zip(&grads) {
        if g.is_zero() {
            return Err(Error::MissingDependence { var: v.to_string() });
        }
    }
    for (name, i, j, t) in test_names(vars) {
        let (fa, fb, fc) = (&grads[i], &grads[j], &grads[t]);
        let along_c = quotient_derivative_numerator(fa, fb, vars[t]);
        let along_w = quotient_derivative_numerator(fa, fb, w);
        let num = &(&along_c * &fw) - &(&along_w * fc);
        if num.is_zero() {
            continue;
        }
        let (_, rem) = num.div_rem(big_f);
        if !rem.is_zero() {
            return Ok(DegeneracyVerdict::witnessed(name, &rem));
        }
    }
    Ok(DegeneracyVerdict::consistent())
}

/// Three-variable test for `z = f(x, y)`: the mixed partial of
/// `ln(f_x/f_y)`, computed as `∂y((P_x Q − P Q_x)/(P Q))` with
/// `f_x/f_y = P/Q`.
pub fn degeneracy_test_3d(f: &RatFun, vars: [&str; 2]) -> Result<DegeneracyVerdict> {
    Ok(degeneracy_test_3d_with_expression(f, vars)?.0)
}

pub fn degeneracy_test_3d_with_expression(
    f: &RatFun,
    vars: [&str; 2],
) -> Result<(DegeneracyVerdict, RatFun)> {
    let [x, y] = vars;
    let p = derivative_numerator(f, x);
    let q = derivative_numerator(f, y);
    for (v, pv) in [(x, &p), (y, &q)] {
        if pv.is_zero() {
            return Err(Error::MissingDependence { var: v.into() });
        }
    }
    let log_x = RatFun::new(quotient_derivative_numerator(&p, &q, x), &p * &q)?;
    let t = log_x.partial(y);
    let verdict = if t.is_zero() {
        DegeneracyVerdict::consistent()
    } else {
        DegeneracyVerdict::witnessed(format!("d2/d{x}d{y} ln(f_{x}/f_{y})"), t.num())
    };
    Ok((verdict, t))
}
