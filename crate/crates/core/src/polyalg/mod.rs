//! Sparse multivariate polynomials over the rationals: arithmetic,
//! resultants, and the two reducibility criteria used by the certificates.

pub mod bareiss;
mod mpoly;
mod parse;

pub use bareiss::{determinant, rank};
pub use mpoly::MPoly;
pub use parse::parse_poly;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Sylvester convention used by [`resultant`]: for `p` of degree `m` and `q`
/// of degree `n` in the eliminated variable, the matrix has `n` shifted rows
/// of `p`'s coefficients (leading coefficient first) above `m` shifted rows
/// of `q`'s coefficients. `Res(x - a, x - b, x) = a - b`.
pub const SYLVESTER_CONVENTION: &str =
    "deg_x(q) shifted rows of p above deg_x(p) shifted rows of q, leading coefficients first";

/// Resultant of `p` and `q` with respect to `var`, using the actual degrees.
pub fn resultant(p: &MPoly, q: &MPoly, var: &str) -> Result<MPoly> {
    let m = p.degree_in(var);
    let n = q.degree_in(var);
    if m == 0 || p.is_zero() {
        return Err(Error::ZeroDegree { var: var.into() });
    }
    if n == 0 || q.is_zero() {
        return Err(Error::ZeroDegree { var: var.into() });
    }
    Ok(resultant_with_degrees(p, q, var, m, n))
}

/// Resultant built from formal degrees `m >= deg p`, `n >= deg q`. Missing
/// leading coefficients are zero; this is the form to use when a symbolic
/// leading coefficient may vanish after specialization.
pub fn resultant_with_degrees(p: &MPoly, q: &MPoly, var: &str, m: u32, n: u32) -> MPoly {
    assert!(p.degree_in(var) <= m && q.degree_in(var) <= n);
    let (m, n) = (m as usize, n as usize);
    let size = m + n;
    if size == 0 {
        return MPoly::one();
    }
    let pc = padded_coefficients(p, var, m);
    let qc = padded_coefficients(q, var, n);
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![MPoly::zero(); size];
        for (j, c) in pc.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![MPoly::zero(); size];
        for (j, c) in qc.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    determinant(rows)
}

/// Coefficients from `var^deg` down to `var^0`.
fn padded_coefficients(p: &MPoly, var: &str, deg: usize) -> Vec<MPoly> {
    let mut c = p.coefficients_in(var);
    c.resize(deg + 1, MPoly::zero());
    c.reverse();
    c
}

/// Returns `λ ≠ 0` with `p = λ·q`, if such a scalar exists.
pub fn equal_up_to_scalar(p: &MPoly, q: &MPoly) -> Option<Rational> {
    if q.is_zero() {
        return p.is_zero().then(Rational::one);
    }
    if p.is_zero() {
        return None;
    }
    let vars = {
        let mut v = q.variables().to_vec();
        for x in p.variables() {
            if !v.contains(x) {
                v.push(x.clone());
            }
        }
        v
    };
    let q2 = q.with_variables(&vars);
    let p2 = p.with_variables(&vars);
    let (e, qc) = q2.leading_term()?;
    let pc = p2
        .terms()
        .find(|(pe, _)| *pe == e)
        .map(|(_, c)| c.clone())?;
    let lambda = pc / qc;
    if lambda.is_zero() {
        return None;
    }
    (&p2 - &q2.scale(&lambda)).is_zero().then_some(lambda)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinearReducibility {
    Irreducible,
    HasFactorFreeOfVar,
    Inconclusive,
}

/// Outcome of [`linear_in_var_reducibility`] with its resultant evidence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReducibilityEvidence {
    pub verdict: LinearReducibility,
    /// `(u, Res(F, F_var, u))` for every other variable `u` of `F`.
    pub resultants: Vec<(String, MPoly)>,
}

/// Irreducibility test for polynomials of degree one in `var`.
///
/// A factorization `F = g·h` forces one factor, say `h`, to be free of `var`,
/// so `h` divides both `F` and `F_var` and kills `Res(F, F_var, u)` for some
/// variable `u` it depends on. All resultants nonzero therefore proves
/// irreducibility; conversely a vanishing resultant exhibits a common factor
/// free of `var`.
pub fn linear_in_var_reducibility(f: &MPoly, var: &str) -> Result<ReducibilityEvidence> {
    let others: Vec<String> = f
        .variables_used()
        .into_iter()
        .filter(|v| v != var)
        .collect();
    let refs: Vec<&str> = others.iter().map(String::as_str).collect();
    linear_in_var_reducibility_over(f, var, &refs)
}

/// Same test, taking resultants only with respect to `over`.
pub fn linear_in_var_reducibility_over(
    f: &MPoly,
    var: &str,
    over: &[&str],
) -> Result<ReducibilityEvidence> {
    let degree = f.degree_in(var);
    if degree != 1 {
        return Err(Error::NotLinear { var: var.into(), degree });
    }
    let fv = f.partial(var);
    let mut resultants = Vec::new();
    let mut all_nonzero = true;
    for &u in over {
        let m = f.degree_in(u);
        if m == 0 {
            continue;
        }
        let n = fv.degree_in(u);
        // Res(F, c, u) = c^m when c is free of u
        let r = if n == 0 {
            fv.pow(m)
        } else {
            resultant_with_degrees(f, &fv, u, m, n)
        };
        all_nonzero &= !r.is_zero();
        resultants.push((u.to_string(), r));
    }
    let verdict = if !all_nonzero {
        LinearReducibility::HasFactorFreeOfVar
    } else if resultants.is_empty() && f.variables_used().len() > 1 {
        LinearReducibility::Inconclusive
    } else {
        LinearReducibility::Irreducible
    };
    Ok(ReducibilityEvidence { verdict, resultants })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuadraticReducibility {
    ProductOfLinears,
    Irreducible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticEvidence {
    pub verdict: QuadraticReducibility,
    /// Rank of the homogenized symmetric coefficient matrix.
    pub rank: usize,
}

/// Decides whether a quadric in `vars` splits into two linear factors over
/// the algebraic closure. Variables outside `vars` are treated as parameters
/// and the rank is taken over their fraction field.
pub fn quadratic_reducibility(f: &MPoly, vars: &[&str]) -> Result<QuadraticEvidence> {
    let degree = f.total_degree_in(vars);
    if degree != 2 {
        return Err(Error::NotQuadratic { degree });
    }
    let k = vars.len();
    let half = Rational::new(1.into(), 2.into());
    let mut m = vec![vec![MPoly::zero(); k + 1]; k + 1];
    let strip = |monomial: &[(&str, u32)]| -> MPoly {
        // coefficient with every variable in `vars` at exponent zero
        let mut c = f.coefficient_of_monomial(monomial);
        for v in vars {
            if !monomial.iter().any(|(w, _)| w == v) {
                c = c.coefficient(v, 0);
            }
        }
        c
    };
    for i in 0..k {
        m[i][i] = strip(&[(vars[i], 2)]);
        for j in i + 1..k {
            let c = strip(&[(vars[i], 1), (vars[j], 1)]).scale(&half);
            m[i][j] = c.clone();
            m[j][i] = c;
        }
        let c = strip(&[(vars[i], 1)]).scale(&half);
        m[i][k] = c.clone();
        m[k][i] = c;
    }
    m[k][k] = strip(&[]);
    let r = rank(m);
    let verdict = if r <= 2 {
        QuadraticReducibility::ProductOfLinears
    } else {
        QuadraticReducibility::Irreducible
    };
    Ok(QuadraticEvidence { verdict, rank: r })
}

/// True when some coefficient of `p`, viewed as a polynomial in `main`, is a
/// nonzero constant, so `p` stays nonzero under every specialization of the
/// remaining variables.
pub fn has_constant_coefficient(p: &MPoly, main: &[&str]) -> bool {
    let params: Vec<String> = p
        .variables_used()
        .into_iter()
        .filter(|v| !main.contains(&v.as_str()))
        .collect();
    if params.is_empty() {
        return !p.is_zero();
    }
    // group terms by their exponents on the main variables
    let idx_main: Vec<Option<usize>> = main
        .iter()
        .map(|m| p.variables().iter().position(|v| v == m))
        .collect();
    let idx_params: Vec<usize> = params
        .iter()
        .map(|m| p.variables().iter().position(|v| v == m).unwrap())
        .collect();
    let mut groups: std::collections::BTreeMap<Vec<u32>, (bool, bool)> = Default::default();
    for (e, _) in p.terms() {
        let key: Vec<u32> = idx_main.iter().map(|i| i.map_or(0, |i| e[i])).collect();
        let has_param = idx_params.iter().any(|&i| e[i] > 0);
        let entry = groups.entry(key).or_insert((false, false));
        if has_param {
            entry.1 = true;
        } else {
            entry.0 = true;
        }
    }
    groups.values().any(|&(constant, param)| constant && !param)
}
