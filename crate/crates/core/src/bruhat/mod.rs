//! Generators of `SL_{r+1}` as exact matrices, the factorization maps of the
//! reduced double Bruhat cells `L^{u,e}` and `G^{u,e}`, and generalized
//! minors on them.
//!
//! Position `k = l_s + j` of a word carries the variable `Y[s,j]`, so the
//! minors come out directly in the crystal's variables.

mod matrix;
mod perm;
mod word;

pub use matrix::{Matrix, Scalar};
pub use perm::Permutation;
pub use word::{MinorSpec, WordSpec};

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::laurent::{Assignment, LaurentPoly, Rational, VarId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BruhatError {
    #[error("color {color} outside [1, {rank}]")]
    ColorOutOfRange { color: u32, rank: u32 },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("index {k} outside [-r, -1] or [1, {n}]")]
    IndexOutOfRange { k: i64, n: usize },
    #[error("no valid extension: {0}")]
    InvalidExtension(String),
    #[error("{0} is missing or zero in the assignment")]
    ZeroAssignment(VarId),
    #[error("torus element {0}")]
    NotInTorus(String),
    #[error("generator parameter is not invertible")]
    NotInvertible,
}

fn block<T: Scalar>(r: u32, i: u32, b: [[T; 2]; 2]) -> Result<Matrix<T>, BruhatError> {
    if i == 0 || i > r {
        return Err(BruhatError::ColorOutOfRange { color: i, rank: r });
    }
    let mut m = Matrix::identity(r as usize + 1);
    let i = i as usize - 1;
    let [[a, b2], [c, d]] = b;
    m.set(i, i, a);
    m.set(i, i + 1, b2);
    m.set(i + 1, i, c);
    m.set(i + 1, i + 1, d);
    Ok(m)
}

/// `x_i(t)`: identity with `t` at `(i, i+1)`.
pub fn x_gen<T: Scalar>(r: u32, i: u32, t: &T) -> Result<Matrix<T>, BruhatError> {
    block(r, i, [[T::one(), t.clone()], [T::zero(), T::one()]])
}

/// `y_i(t)`: identity with `t` at `(i+1, i)`.
pub fn y_gen<T: Scalar>(r: u32, i: u32, t: &T) -> Result<Matrix<T>, BruhatError> {
    block(r, i, [[T::one(), T::zero()], [t.clone(), T::one()]])
}

/// `x_{-i}(t) = y_i(t) α_i^∨(t^{-1})`, block `[[t^{-1}, 0], [1, t]]`.
pub fn xneg_gen<T: Scalar>(r: u32, i: u32, t: &T) -> Result<Matrix<T>, BruhatError> {
    let inv = t.try_recip().ok_or(BruhatError::NotInvertible)?;
    block(r, i, [[inv, T::zero()], [T::one(), t.clone()]])
}

/// `α_i^∨(t) = diag(.., t, t^{-1}, ..)` at `i, i+1`.
pub fn alpha_gen<T: Scalar>(r: u32, i: u32, t: &T) -> Result<Matrix<T>, BruhatError> {
    let inv = t.try_recip().ok_or(BruhatError::NotInvertible)?;
    block(r, i, [[t.clone(), T::zero()], [T::zero(), inv]])
}

/// `x_i(v)` with a variable parameter.
pub fn gen_x(r: u32, i: u32, v: VarId) -> Result<Matrix<LaurentPoly>, BruhatError> {
    x_gen(r, i, &LaurentPoly::var(v))
}

/// `y_i(v)` with a variable parameter.
pub fn gen_y(r: u32, i: u32, v: VarId) -> Result<Matrix<LaurentPoly>, BruhatError> {
    y_gen(r, i, &LaurentPoly::var(v))
}

/// `x_{-i}(v)` with a variable parameter.
pub fn gen_xneg(r: u32, i: u32, v: VarId) -> Result<Matrix<LaurentPoly>, BruhatError> {
    xneg_gen(r, i, &LaurentPoly::var(v))
}

/// `α_i^∨(v)` with a variable parameter.
pub fn gen_alpha(r: u32, i: u32, v: VarId) -> Result<Matrix<LaurentPoly>, BruhatError> {
    alpha_gen(r, i, &LaurentPoly::var(v))
}

/// `x^L(t) = x_{-i_1}(t_1) ... x_{-i_n}(t_n)` with `t_k` the variable of
/// position `k`.
pub fn xl_matrix(w: &WordSpec) -> Matrix<LaurentPoly> {
    let r = w.rank();
    let mut acc = Matrix::identity(r as usize + 1);
    for k in 1..=w.len() {
        let g = gen_xneg(r, w.letter(k), w.position_var(k)).expect("word colors are in range");
        acc = &acc * &g;
    }
    acc
}

fn position_values(w: &WordSpec, t: &Assignment) -> Result<Vec<Rational>, BruhatError> {
    w.position_vars()
        .into_iter()
        .map(|v| match t.get(&v) {
            Some(x) if !x.is_zero() => Ok(x.clone()),
            _ => Err(BruhatError::ZeroAssignment(v)),
        })
        .collect()
}

/// `x^L(t)` at a numeric point.
pub fn xl_numeric(w: &WordSpec, t: &Assignment) -> Result<Matrix<Rational>, BruhatError> {
    let r = w.rank();
    let values = position_values(w, t)?;
    let mut acc = Matrix::identity(r as usize + 1);
    for (k, x) in values.iter().enumerate() {
        acc = &acc * &xneg_gen(r, w.letter(k + 1), x)?;
    }
    Ok(acc)
}

/// `u_{≤k} = s_{i_1} ... s_{i_k}`; the identity for `k` in `[-r, -1]`.
pub fn u_leq(w: &WordSpec, k: i64) -> Result<Permutation, BruhatError> {
    let r = w.rank() as i64;
    let n = w.len();
    if (-r..=-1).contains(&k) {
        return Ok(Permutation::identity(r as usize + 1));
    }
    if k < 1 || k as usize > n {
        return Err(BruhatError::IndexOutOfRange { k, n });
    }
    Ok(Permutation::from_word(r as usize + 1, &w.letters()[..k as usize]))
}

/// Rows `u_{≤k}([1,d])` of the minor attached to `spec`.
pub fn minor_rows(spec: &MinorSpec) -> Vec<usize> {
    let u = u_leq(spec.word(), spec.k() as i64).expect("spec index is valid");
    u.apply_set(1..=spec.d() as usize).into_iter().collect()
}

/// `Δ^L(k)`: the minor of `x^L` on rows `u_{≤k}([1,d])` and columns `[1,d]`.
pub fn delta_l(spec: &MinorSpec) -> LaurentPoly {
    delta_l_of(&xl_matrix(spec.word()), spec)
}

/// [`delta_l`] reusing an already computed `x^L`.
pub fn delta_l_of(xl: &Matrix<LaurentPoly>, spec: &MinorSpec) -> LaurentPoly {
    xl.minor(&minor_rows(spec), &spec.col_labels())
}

/// Extends the word by its next standard letter and checks that `Δ^L(k)` is
/// unchanged and free of the new position's variable.
pub fn delta_l_truncation_check(w: &WordSpec, k: usize) -> Result<bool, BruhatError> {
    let spec = MinorSpec::new(*w, k)?;
    let ext = w
        .extension()
        .ok_or_else(|| BruhatError::InvalidExtension(format!("{w} is already the longest word")))?;
    let new_letter = ext.letter(ext.len());
    if new_letter == spec.d() {
        return Err(BruhatError::InvalidExtension(format!(
            "new letter {new_letter} equals i_{k}"
        )));
    }
    let before = delta_l(&spec);
    let after = delta_l(&MinorSpec::new(ext, k)?);
    let new_var = ext.position_var(ext.len());
    Ok(!after.contains_var(new_var) && after == before)
}

/// A diagonal element of `SL_{r+1}`: nonzero entries with product 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Torus(Vec<Rational>);

impl Torus {
    pub fn new(entries: Vec<Rational>) -> Result<Self, BruhatError> {
        if entries.iter().any(Rational::is_zero) {
            return Err(BruhatError::NotInTorus("has a zero entry".into()));
        }
        let prod: Rational = entries.iter().cloned().product();
        if !prod.is_one() {
            return Err(BruhatError::NotInTorus(format!("has determinant {prod}")));
        }
        Ok(Torus(entries))
    }

    pub fn identity(r: u32) -> Self {
        Torus(vec![Rational::one(); r as usize + 1])
    }

    /// Random small nonzero rationals, the last entry fixing the product.
    pub fn random<R: Rng>(r: u32, rng: &mut R) -> Self {
        let mut entries: Vec<Rational> = (0..r).map(|_| random_nonzero(rng)).collect();
        let prod: Rational = entries.iter().cloned().product();
        entries.push(prod.recip());
        Torus(entries)
    }

    pub fn rank(&self) -> u32 {
        self.0.len() as u32 - 1
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    /// 1-based entry.
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn matrix(&self) -> Matrix<Rational> {
        Matrix::diagonal(&self.0)
    }
}

impl fmt::Display for Torus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "diag({})", parts.join(", "))
    }
}

/// A random nonzero rational `±p/q` with `1 <= p, q <= 9`.
pub fn random_nonzero<R: Rng>(rng: &mut R) -> Rational {
    let p = rng.gen_range(1..=9i64);
    let q = rng.gen_range(1..=9i64);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    Rational::new(sign * p, q)
}

/// Random nonzero values for every position variable of `w`.
pub fn random_point<R: Rng>(w: &WordSpec, rng: &mut R) -> Assignment {
    w.position_vars().into_iter().map(|v| (v, random_nonzero(rng))).collect()
}

fn check_torus(w: &WordSpec, a: &Torus) -> Result<(), BruhatError> {
    if a.rank() != w.rank() {
        return Err(BruhatError::NotInTorus(format!("has size {} for rank {}", a.0.len(), w.rank())));
    }
    Ok(())
}

/// `x̄^G(a, t) = a · x^L(t)`.
pub fn xbar_g(w: &WordSpec, a: &Torus, t: &Assignment) -> Result<Matrix<Rational>, BruhatError> {
    check_torus(w, a)?;
    Ok(&a.matrix() * &xl_numeric(w, t)?)
}

/// `x^G(a; t) = a · y_{i_1}(t_1) ... y_{i_n}(t_n)`.
pub fn x_g(w: &WordSpec, a: &Torus, t: &Assignment) -> Result<Matrix<Rational>, BruhatError> {
    check_torus(w, a)?;
    let values = position_values(w, t)?;
    let mut acc = a.matrix();
    for (k, x) in values.iter().enumerate() {
        acc = &acc * &y_gen(w.rank(), w.letter(k + 1), x)?;
    }
    Ok(acc)
}

/// `Δ^G(k)` at `(a, t)`: the minor of `a · x^L(t)` on the rows and columns
/// of [`delta_l`], computed numerically.
pub fn delta_g(spec: &MinorSpec, a: &Torus, t: &Assignment) -> Result<Rational, BruhatError> {
    let m = xbar_g(spec.word(), a, t)?;
    Ok(m.minor(&minor_rows(spec), &spec.col_labels()))
}

/// The change of coordinates `(a, t) -> (a(t), τ(t))` turning `x̄^G` into
/// `x^G`. Positions absent from the word count as 1.
pub fn phi_map(w: &WordSpec, a: &Torus, t: &Assignment) -> Result<(Torus, Assignment), BruhatError> {
    check_torus(w, a)?;
    let values = position_values(w, t)?;
    let m = w.cycles();
    let one = Rational::one();
    let at = |zeta: u32, c: u32| -> &Rational {
        if c == 0 {
            return &one;
        }
        w.position(zeta, c).map_or(&one, |k| &values[k - 1])
    };

    // a(t) = a · Π α_{i_k}(t_k)^{-1}
    let mut entries = a.entries().to_vec();
    for k in 1..=w.len() {
        let i = w.letter(k) as usize;
        let x = &values[k - 1];
        entries[i - 1] = &entries[i - 1] / x;
        entries[i] = &entries[i] * x;
    }

    let mut tau = Assignment::new();
    for k in 1..=w.len() {
        let (s, j) = w.locate(k);
        let mut num = Rational::one();
        let mut den = at(s, j).clone();
        for zeta in s + 1..m {
            num = &num * at(zeta, j - 1);
            den = &den * &at(zeta, j).pow(2);
        }
        for zeta in s..m {
            num = &num * at(zeta, j + 1);
        }
        tau.insert(w.position_var(k), &num / &den);
    }
    Ok((Torus(entries), tau))
}
