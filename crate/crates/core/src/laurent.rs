//! Exact Laurent monomials and polynomials in the doubly indexed variables
//! `Y[s,i]`, plus exact rational evaluation.
//!
//! Canonical text form (bit-exact):
//!
//! * a factor is `Y[s,i]` or `Y[s,i]^e` (exponent omitted when it is 1),
//! * factors of a monomial are joined by `*` in increasing `(s, i)` order,
//!   the empty monomial is `1`,
//! * terms are joined by ` + `, a coefficient other than 1 is written as a
//!   prefix `c*` (`-` alone for -1), the zero polynomial is `0`.
//!
//! Terms are ordered by [`Monomial`]'s `Ord`: the factor lists are compared
//! starting from the largest variable. This puts, for example, the expansion
//! of a minor in the order in which its terms show up along a crystal graph.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("no value assigned to {0}")]
    MissingAssignment(VarId),
    #[error("{0} is assigned zero, Laurent variables must be nonzero")]
    ZeroAssignment(VarId),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// The variable `Y[s,i]`: `s` is the row (cycle) index, `i >= 1` the color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    pub s: i32,
    pub i: u32,
}

impl VarId {
    /// Panics if `i == 0`; colors start at 1.
    pub fn new(s: i32, i: u32) -> Self {
        assert!(i >= 1, "variable color must be >= 1");
        VarId { s, i }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y[{},{}]", self.s, self.i)
    }
}

/// A Laurent monomial `prod Y[s,i]^e`. Factors are kept sorted by variable
/// with no zero exponent stored, so equality and hashing are structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(VarId, i32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        Self::from_factors([(v, e)])
    }

    /// Builds a monomial from arbitrary factors; repeated variables are
    /// combined and zero exponents dropped.
    pub fn from_factors<I: IntoIterator<Item = (VarId, i32)>>(factors: I) -> Self {
        let mut map: BTreeMap<VarId, i32> = BTreeMap::new();
        for (v, e) in factors {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial {
            factors: map.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(VarId, i32)] {
        &self.factors
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        match self.factors.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(idx) => self.factors[idx].1,
            Err(_) => 0,
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }

    pub fn inv(&self) -> Self {
        Monomial {
            factors: self.factors.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, e: i32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|&(v, x)| (v, x * e)).collect(),
        }
    }

    /// Keeps only the factors whose variable satisfies `keep`.
    pub fn restrict<F: Fn(VarId) -> bool>(&self, keep: F) -> Self {
        Monomial {
            factors: self.factors.iter().copied().filter(|&(v, _)| keep(v)).collect(),
        }
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn eval(&self, assignment: &Assignment) -> Result<Rational, LaurentError> {
        let mut acc = Rational::one();
        for &(v, e) in &self.factors {
            let x = assignment.get(&v).ok_or(LaurentError::MissingAssignment(v))?;
            if x.is_zero() {
                return Err(LaurentError::ZeroAssignment(v));
            }
            acc = &acc * &x.pow(e);
        }
        Ok(acc)
    }

    fn merge(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                Ordering::Less => {
                    out.push(a[x]);
                    x += 1;
                }
                Ordering::Greater => {
                    out.push(b[y]);
                    y += 1;
                }
                Ordering::Equal => {
                    let e = a[x].1 + b[y].1;
                    if e != 0 {
                        out.push((a[x].0, e));
                    }
                    x += 1;
                    y += 1;
                }
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        Monomial { factors: out }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors.iter().rev().cmp(other.factors.iter().rev())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        self.merge(rhs)
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        self.merge(&rhs)
    }
}

impl Div for &Monomial {
    type Output = Monomial;
    fn div(self, rhs: &Monomial) -> Monomial {
        self.merge(&rhs.inv())
    }
}

impl Product for Monomial {
    fn product<I: Iterator<Item = Monomial>>(iter: I) -> Self {
        iter.fold(Monomial::one(), |acc, m| acc.merge(&m))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (idx, &(v, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

fn parse_factor(text: &str) -> Result<(VarId, i32), LaurentError> {
    let err = || LaurentError::Parse(text.to_string());
    let t = text.trim();
    let rest = t.strip_prefix("Y[").ok_or_else(err)?;
    let close = rest.find(']').ok_or_else(err)?;
    let (inside, tail) = (&rest[..close], &rest[close + 1..]);
    let (s, i) = inside.split_once(',').ok_or_else(err)?;
    let s: i32 = s.trim().parse().map_err(|_| err())?;
    let i: u32 = i.trim().parse().map_err(|_| err())?;
    if i == 0 {
        return Err(err());
    }
    let e = match tail.trim() {
        "" => 1,
        exp => {
            let exp = exp.strip_prefix('^').ok_or_else(err)?.trim();
            let exp = exp.trim_start_matches('(').trim_end_matches(')');
            exp.parse().map_err(|_| err())?
        }
    };
    Ok((VarId { s, i }, e))
}

impl FromStr for Monomial {
    type Err = LaurentError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let t = text.trim();
        if t == "1" {
            return Ok(Monomial::one());
        }
        let factors = t
            .split('*')
            .map(parse_factor)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial::from_factors(factors))
    }
}

/// Exact rational number; the denominator is positive and coprime to the
/// numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Panics when inverting zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rational(self.0.recip())
    }

    /// Integer power; negative exponents invert, which panics on zero.
    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.recip() } else { self.clone() };
        let mut acc = Rational::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for Rational {
    fn from(x: BigRational) -> Self {
        Rational(x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = LaurentError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || LaurentError::Parse(text.to_string());
        let t = text.trim();
        match t.split_once('/') {
            None => Ok(Rational::from_integer(t.parse().map_err(|_| err())?)),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| err())?;
                let d: BigInt = d.trim().parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(Rational(BigRational::new(n, d)))
            }
        }
    }
}

macro_rules! rational_binop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for &Rational {
            type Output = Rational;
            fn $f(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0.clone())
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |a, b| a * b)
    }
}

/// Values of the variables, used by [`LaurentPoly::eval`].
pub type Assignment = BTreeMap<VarId, Rational>;

/// A Laurent polynomial with arbitrary-precision integer coefficients.
/// No zero coefficient is ever stored; the zero polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_term(BigInt::from(c), Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::from_term(BigInt::one(), m)
    }

    pub fn from_term(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: VarId) -> Self {
        Self::from_monomial(Monomial::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.exponent(v) != 0)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies every term by the monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k * m, c.clone())).collect(),
        }
    }

    /// The inverse, which exists in the Laurent ring only for `±monomial`.
    pub fn try_inv(&self) -> Option<Self> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((m, c)), None) if c.abs().is_one() => {
                Some(LaurentPoly::from_term(c.clone(), m.inv()))
            }
            _ => None,
        }
    }

    pub fn eval(&self, assignment: &Assignment) -> Result<Rational, LaurentError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let v = m.eval(assignment)?;
            acc = acc + Rational::from_integer(c.clone()) * v;
        }
        Ok(acc)
    }

    /// JSON form: `[{"coeff": c, "vars": [[s, i, e], ...]}, ...]` in
    /// canonical order. Coefficients beyond `i64` are written as strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let coeff = match c.to_i64() {
                        Some(x) => json!(x),
                        None => json!(c.to_string()),
                    };
                    let vars: Vec<Value> =
                        m.factors().iter().map(|&(v, e)| json!([v.s, v.i, e])).collect();
                    json!({ "coeff": coeff, "vars": vars })
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self, LaurentError> {
        let err = || LaurentError::Parse(value.to_string());
        let mut out = LaurentPoly::zero();
        for term in value.as_array().ok_or_else(err)? {
            let coeff: BigInt = match term.get("coeff").ok_or_else(err)? {
                Value::Number(n) => n.to_string().parse().map_err(|_| err())?,
                Value::String(s) => s.parse().map_err(|_| err())?,
                _ => return Err(err()),
            };
            let mut factors = Vec::new();
            for triple in term.get("vars").and_then(Value::as_array).ok_or_else(err)? {
                let t = triple.as_array().filter(|t| t.len() == 3).ok_or_else(err)?;
                let s = t[0].as_i64().ok_or_else(err)?;
                let i = t[1].as_u64().filter(|&i| i >= 1).ok_or_else(err)?;
                let e = t[2].as_i64().ok_or_else(err)?;
                factors.push((VarId::new(s as i32, i as u32), e as i32));
            }
            out.add_term(Monomial::from_factors(factors), coeff);
        }
        Ok(out)
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::from_monomial(m)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl Sum<Monomial> for LaurentPoly {
    fn sum<I: Iterator<Item = Monomial>>(iter: I) -> Self {
        let mut out = LaurentPoly::zero();
        for m in iter {
            out.add_term(m, BigInt::one());
        }
        out
    }
}

/// Writes `terms` in the canonical `c*monomial + ...` layout, rendering each
/// monomial with `render`.
pub(crate) fn write_terms<'a, I, F>(f: &mut dyn fmt::Write, terms: I, render: F) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Monomial, &'a BigInt)>,
    F: Fn(&Monomial) -> String,
{
    let mut empty = true;
    for (idx, (m, c)) in terms.into_iter().enumerate() {
        empty = false;
        if idx > 0 {
            f.write_str(" + ")?;
        }
        let body = render(m);
        if c.is_one() {
            f.write_str(&body)?;
        } else if m.is_one() {
            write!(f, "{c}")?;
        } else if (-c).is_one() {
            write!(f, "-{body}")?;
        } else {
            write!(f, "{c}*{body}")?;
        }
    }
    if empty {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter(), |m| m.to_string())
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || LaurentError::Parse(text.to_string());
        let t = text.trim();
        if t == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut out = LaurentPoly::zero();
        for term in t.split(" + ") {
            let term = term.trim();
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term),
            };
            let (coeff, mono) = if body.starts_with('Y') {
                (BigInt::one(), body.parse::<Monomial>()?)
            } else {
                match body.split_once('*') {
                    Some((c, rest)) => (c.parse().map_err(|_| err())?, rest.parse()?),
                    None => (body.parse().map_err(|_| err())?, Monomial::one()),
                }
            };
            out.add_term(mono, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(s: i32, i: u32) -> VarId {
        VarId::new(s, i)
    }

    #[test]
    fn inverse_pair_cancels() {
        let a = Monomial::var_pow(y(0, 1), 2);
        let b = Monomial::var_pow(y(0, 1), -2);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn poly_plus_negation_is_zero() {
        let p: LaurentPoly = "Y[0,1] + 3*Y[1,2]^-1 + 2".parse().unwrap();
        assert!((&p + &(-&p)).is_zero());
        assert_eq!(&p + &LaurentPoly::zero(), p);
    }

    #[test]
    fn difference_of_squares() {
        let x = LaurentPoly::var(y(0, 1));
        let z = LaurentPoly::var(y(5, 2));
        let lhs = &(&x + &z) * &(&x - &z);
        let rhs = &(&x * &x) - &(&z * &z);
        assert_eq!(lhs, rhs);
        assert_eq!(&x * &LaurentPoly::one(), x);
    }

    #[test]
    fn eval_inverse_variable() {
        let p = LaurentPoly::from_monomial(Monomial::var_pow(y(0, 1), -1));
        let mut a = Assignment::new();
        a.insert(y(0, 1), Rational::from(2));
        assert_eq!(p.eval(&a).unwrap(), Rational::new(1, 2));
    }

    #[test]
    fn eval_errors() {
        let p = LaurentPoly::var(y(0, 1));
        assert_eq!(
            p.eval(&Assignment::new()),
            Err(LaurentError::MissingAssignment(y(0, 1)))
        );
        let mut a = Assignment::new();
        a.insert(y(0, 1), Rational::zero());
        assert_eq!(p.eval(&a), Err(LaurentError::ZeroAssignment(y(0, 1))));
    }

    #[test]
    fn text_form() {
        let p: LaurentPoly = "Y[2,2]^-1 + Y[0,2]*Y[0,4]^-1".parse().unwrap();
        assert_eq!(p.to_string(), "Y[0,2]*Y[0,4]^-1 + Y[2,2]^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        let q: LaurentPoly = "-Y[0,1] + -2*Y[0,1]^3 + 5".parse().unwrap();
        assert_eq!(q.to_string(), "5 + -Y[0,1] + -2*Y[0,1]^3");
        assert_eq!(q.to_string().parse::<LaurentPoly>().unwrap(), q);
    }

    #[test]
    fn json_form() {
        let p: LaurentPoly = "Y[-1,3] + -7*Y[0,1]^-2*Y[1,1]".parse().unwrap();
        let v = p.to_json();
        assert_eq!(
            v.to_string(),
            r#"[{"coeff":1,"vars":[[-1,3,1]]},{"coeff":-7,"vars":[[0,1,-2],[1,1,1]]}]"#
        );
        assert_eq!(LaurentPoly::from_json(&v).unwrap(), p);
    }

    #[test]
    fn big_coefficients_survive() {
        let mut p = LaurentPoly::constant(i64::MAX);
        for _ in 0..4 {
            p = &p * &p;
        }
        let back = LaurentPoly::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
    }

    #[test]
    fn inverse_only_for_unit_monomials() {
        let m: LaurentPoly = "-Y[0,1]*Y[1,1]^-1".parse().unwrap();
        assert!((&m * &m.try_inv().unwrap()).is_one());
        assert!("2*Y[0,1]".parse::<LaurentPoly>().unwrap().try_inv().is_none());
        assert!("Y[0,1] + 1".parse::<LaurentPoly>().unwrap().try_inv().is_none());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("Y[0,0]".parse::<Monomial>().is_err());
        assert!("X[0,1]".parse::<Monomial>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert_eq!("-6/4".parse::<Rational>().unwrap(), Rational::new(-3, 2));
    }
}
