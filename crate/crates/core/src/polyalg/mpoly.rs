use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{self, Rational};

type Exponents = Vec<u32>;

/// Sparse multivariate polynomial over the rationals.
///
/// Variables are identified by name. Each polynomial carries its own ordered
/// variable list; binary operations align operands by name, appending
/// variables of the right operand that the left one does not know.
/// Terms are keyed by exponent vectors of the same length as the variable
/// list and never hold a zero coefficient.
#[derive(Clone, Default)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { vars: Vec::new(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rational::int(n))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        Self {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds a polynomial from raw terms. Zero coefficients are dropped and
    /// repeated exponent vectors are summed.
    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let n = vars.len();
        let mut map: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent vector length mismatch");
            accumulate(&mut map, e, c);
        }
        Self { vars, terms: map }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    /// Variables that occur with a positive exponent in some term.
    pub fn variables_used(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    fn index_of(&self, var: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == var)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.index_of(var) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Total degree counted only over the listed variables.
    pub fn total_degree_in(&self, vars: &[&str]) -> u32 {
        let idx: Vec<usize> = vars.iter().filter_map(|v| self.index_of(v)).collect();
        self.terms
            .keys()
            .map(|e| idx.iter().map(|&i| e[i]).sum())
            .max()
            .unwrap_or(0)
    }

    /// Leading term under lexicographic order on this polynomial's variable
    /// list.
    pub fn leading_term(&self) -> Option<(&[u32], &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficients with respect to `var`: entry `k` multiplies `var^k`.
    /// The coefficient polynomials no longer mention `var`.
    pub fn coefficients_in(&self, var: &str) -> Vec<MPoly> {
        let Some(i) = self.index_of(var) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(var) as usize;
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut out: Vec<BTreeMap<Exponents, Rational>> = vec![BTreeMap::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2.remove(i) as usize;
            out[k].insert(e2, c.clone());
        }
        out.into_iter()
            .map(|terms| MPoly {
                vars: vars.clone(),
                terms,
            })
            .collect()
    }

    /// Coefficient of `var^k`.
    pub fn coefficient(&self, var: &str, k: u32) -> MPoly {
        self.coefficients_in(var)
            .into_iter()
            .nth(k as usize)
            .unwrap_or_default()
    }

    /// Coefficient of a monomial given as `(name, exponent)` pairs, viewing
    /// every unlisted variable as part of the coefficient.
    pub fn coefficient_of_monomial(&self, monomial: &[(&str, u32)]) -> MPoly {
        let mut p = self.clone();
        for (v, k) in monomial {
            p = p.coefficient(v, *k);
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative.
    pub fn partial(&self, var: &str) -> MPoly {
        let Some(i) = self.index_of(var) else {
            return MPoly::zero();
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            terms.insert(e2, c * Rational::from_integer(e[i].into()));
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Substitutes a rational value for one variable; the variable is removed.
    pub fn subs_value(&self, var: &str, value: &Rational) -> MPoly {
        let Some(i) = self.index_of(var) else {
            return self.clone();
        };
        let deg = self.degree_in(var) as usize;
        let mut powers = vec![Rational::one(); deg + 1];
        for k in 1..=deg {
            powers[k] = &powers[k - 1] * value;
        }
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2.remove(i) as usize;
            accumulate(&mut terms, e2, c * &powers[k]);
        }
        MPoly { vars, terms }
    }

    /// Substitutes several values in sequence.
    pub fn subs_values(&self, values: &[(&str, Rational)]) -> MPoly {
        values
            .iter()
            .fold(self.clone(), |p, (v, q)| p.subs_value(v, q))
    }

    /// Substitutes a polynomial for a variable.
    pub fn subs_poly(&self, var: &str, replacement: &MPoly) -> MPoly {
        let coeffs = self.coefficients_in(var);
        if self.index_of(var).is_none() {
            return self.clone();
        }
        // Horner
        let mut acc = MPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * replacement) + c;
        }
        acc
    }

    /// Evaluates at a full assignment. Variables missing from `values` make
    /// the call return `None` when they occur in some term.
    pub fn eval(&self, values: &[(&str, Rational)]) -> Option<Rational> {
        let p = self.subs_values(values);
        p.constant_value()
    }

    pub fn rename(&self, from: &str, to: &str) -> MPoly {
        let mut p = self.clone();
        if let Some(i) = p.index_of(from) {
            if p.index_of(to).is_some() {
                return self.subs_poly(from, &MPoly::var(to));
            }
            p.vars[i] = to.to_string();
        }
        p
    }

    /// Drops variables that do not occur in any term.
    pub fn compact(&self) -> MPoly {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if keep.len() == self.vars.len() {
            return self.clone();
        }
        MPoly {
            vars: keep.iter().map(|&i| self.vars[i].clone()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone()))
                .collect(),
        }
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable used by `self`.
    pub fn with_variables(&self, vars: &[String]) -> MPoly {
        MPoly {
            vars: vars.to_vec(),
            terms: self.remap(vars),
        }
    }

    fn remap(&self, target: &[String]) -> BTreeMap<Exponents, Rational> {
        if self.vars.as_slice() == target {
            return self.terms.clone();
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = vec![0u32; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].expect("target variable list must cover used variables");
                e2[j] = k;
            }
            out.insert(e2, c.clone());
        }
        out
    }

    fn union_vars(&self, other: &MPoly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    /// Multivariate division by a single divisor under lexicographic order.
    /// The remainder is zero exactly when `divisor` divides `self`.
    pub fn div_rem(&self, divisor: &MPoly) -> (MPoly, MPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let vars = self.union_vars(divisor);
        let d = divisor.remap(&vars);
        let (lead_e, lead_c) = d.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut p = self.remap(&vars);
        let mut q: BTreeMap<Exponents, Rational> = BTreeMap::new();
        let mut r: BTreeMap<Exponents, Rational> = BTreeMap::new();
        while let Some((e, c)) = p.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lead_e).all(|(a, b)| a >= b) {
                let shift: Exponents = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
                let factor = &c / &lead_c;
                for (de, dc) in &d {
                    let m: Exponents = de.iter().zip(&shift).map(|(a, b)| a + b).collect();
                    accumulate(&mut p, m, -(dc * &factor));
                }
                accumulate(&mut q, shift, factor);
            } else {
                p.remove(&e);
                r.insert(e, c);
            }
        }
        (
            MPoly { vars: vars.clone(), terms: q },
            MPoly { vars, terms: r },
        )
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &MPoly) -> Option<MPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Canonical text: terms in graded-lexicographic order on the variable
    /// list, every coefficient written as `num/den`.
    pub fn to_canonical_text(&self) -> String {
        self.format_terms(true)
    }

    /// Canonical text after [`MPoly::reordered`].
    pub fn to_text_with_order(&self, order: &[&str]) -> String {
        self.reordered(order).to_canonical_text()
    }

    /// Same polynomial with `order` leading the variable list; unknown names
    /// are ignored and unlisted variables keep their relative order after.
    pub fn reordered(&self, order: &[&str]) -> MPoly {
        let mut vars: Vec<String> = order
            .iter()
            .filter(|v| self.vars.iter().any(|w| w == *v))
            .map(|v| v.to_string())
            .collect();
        for v in &self.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        self.with_variables(&vars)
    }

    fn sorted_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|(a, _), (b, _)| grlex_desc(a, b));
        t
    }

    fn format_terms(&self, full: bool) -> String {
        if self.is_zero() {
            return if full { "0/1".to_string() } else { "0".to_string() };
        }
        let mut parts = Vec::new();
        for (e, c) in self.sorted_terms() {
            let mut s = if full {
                rational::to_text_full(c)
            } else {
                rational::to_text(c)
            };
            for (v, &k) in self.vars.iter().zip(e.iter()) {
                match k {
                    0 => {}
                    1 => s.push_str(&format!("*{v}")),
                    _ => s.push_str(&format!("*{v}^{k}")),
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

fn grlex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

fn accumulate(map: &mut BTreeMap<Exponents, Rational>, e: Exponents, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let vars = self.union_vars(other);
        self.remap(&vars) == other.remap(&vars)
    }
}

impl Eq for MPoly {}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_terms(false))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self.format_terms(false))
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let vars = self.union_vars(rhs);
        let mut terms = self.remap(&vars);
        let other = if rhs.vars == vars { rhs.terms.clone() } else { rhs.remap(&vars) };
        for (e, c) in other {
            accumulate(&mut terms, e, c);
        }
        MPoly { vars, terms }
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let vars = self.union_vars(rhs);
        let a = self.remap(&vars);
        let b = rhs.remap(&vars);
        let mut acc: std::collections::HashMap<Exponents, Rational> =
            std::collections::HashMap::with_capacity(a.len() * b.len());
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                acc.entry(e)
                    .and_modify(|x| *x += &c)
                    .or_insert(c);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        MPoly { vars, terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &'a MPoly) -> MPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_canonical_text())
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        super::parse::parse_poly(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn x() -> MPoly {
        MPoly::var("x")
    }
    fn y() -> MPoly {
        MPoly::var("y")
    }

    #[test]
    fn difference_of_squares() {
        let p = (x() + y()) * (x() - y());
        let expected = x().pow(2) - y().pow(2);
        assert_eq!(p, expected);
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn adding_zero_is_identity() {
        let p = x() * y() + MPoly::from_int(3);
        assert_eq!(&p + &MPoly::zero(), p);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn equality_ignores_variable_order() {
        let a = x() + y();
        let b = y() + x();
        assert_eq!(a, b);
        let c = a.with_variables(&["q".into(), "y".into(), "x".into()]);
        assert_eq!(c, b);
    }

    #[test]
    fn partial_derivatives() {
        let p = x().pow(2) * y();
        assert_eq!(p.partial("x"), MPoly::from_int(2) * x() * y());
        assert!(p.partial("w").is_zero());
    }

    #[test]
    fn coefficients_and_degrees() {
        let p = x().pow(2) * y() + x() * MPoly::from_int(3) + MPoly::from_int(5);
        assert_eq!(p.degree_in("x"), 2);
        assert_eq!(p.degree_in("y"), 1);
        assert_eq!(p.degree_in("z"), 0);
        assert_eq!(p.total_degree(), 3);
        let c = p.coefficients_in("x");
        assert_eq!(c.len(), 3);
        assert_eq!(c[2], y());
        assert_eq!(c[1], MPoly::from_int(3));
        assert_eq!(c[0], MPoly::from_int(5));
    }

    #[test]
    fn substitution_and_evaluation() {
        let p = x().pow(2) + x() * y();
        assert_eq!(p.eval(&[("x", int(2)), ("y", frac(1, 2))]), Some(int(5)));
        assert_eq!(p.eval(&[("x", int(2))]), None);
        let q = p.subs_poly("x", &(y() + MPoly::one()));
        let expected = (y() + MPoly::one()).pow(2) + (y() + MPoly::one()) * y();
        assert_eq!(q, expected);
    }

    #[test]
    fn exact_division_and_remainders() {
        let a = x() + y();
        let b = x() - MPoly::from_int(2) * y() + MPoly::one();
        let p = &a * &b;
        assert_eq!(p.exact_div(&a), Some(b.clone()));
        assert_eq!(p.exact_div(&b), Some(a.clone()));
        assert!((&p + &MPoly::one()).exact_div(&a).is_none());
        let (q, r) = (x().pow(2) + MPoly::one()).div_rem(&x());
        assert_eq!(q, x());
        assert_eq!(r, MPoly::one());
    }

    #[test]
    fn canonical_text_is_graded() {
        let p = MPoly::from_int(-1) + x() * y() * MPoly::from_int(3) + x();
        assert_eq!(p.to_canonical_text(), "3/1*x*y + 1/1*x + -1/1");
        assert_eq!(MPoly::zero().to_canonical_text(), "0/1");
    }
}
