//! Dense square matrices over an exact ring.

use std::collections::HashMap;
use std::ops::Mul;

use serde_json::Value;

use crate::laurent::{Assignment, LaurentError, LaurentPoly, Rational};

/// The ring operations a matrix entry needs.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse where one exists in the ring.
    fn try_recip(&self) -> Option<Self>;
}

impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_recip(&self) -> Option<Self> {
        self.try_inv()
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// Square matrix, row-major, 0-based storage. Minor labels are 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    size: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![T::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = T::one();
        }
        Matrix { size, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "matrix must be square");
        Matrix { size, entries: rows.into_iter().flatten().collect() }
    }

    pub fn diagonal(diag: &[T]) -> Self {
        let mut m = Self::identity(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.entries[row * self.size + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { size: self.size, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<U, E, F: Fn(&T) -> Result<U, E>>(&self, f: F) -> Result<Matrix<U>, E> {
        let entries = self.entries.iter().map(f).collect::<Result<_, _>>()?;
        Ok(Matrix { size: self.size, entries })
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        out
    }

    /// Determinant of the submatrix with the given 1-based row and column
    /// labels, by Laplace expansion memoized on the set of used columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> T {
        assert_eq!(rows.len(), cols.len(), "minor must be square");
        assert!(cols.len() < 64, "minor too large");
        let d = rows.len();
        if d == 0 {
            return T::one();
        }
        let mut memo: HashMap<u64, T> = HashMap::new();
        memo.insert(0, T::one());
        // det of the first popcount(mask) rows against the columns in mask,
        // built up by mask size
        let mut layer: Vec<u64> = vec![0];
        for (p, &label) in rows.iter().enumerate().take(d) {
            let row = label - 1;
            let mut next: Vec<u64> = Vec::new();
            for &mask in &layer {
                for c in 0..d {
                    if mask & (1 << c) == 0 {
                        let m2 = mask | (1 << c);
                        if let std::collections::hash_map::Entry::Vacant(slot) = memo.entry(m2) {
                            slot.insert(T::zero());
                            next.push(m2);
                        }
                    }
                }
            }
            for &m2 in &next {
                let mut acc = T::zero();
                let mut pos = 0;
                for c in 0..d {
                    if m2 & (1 << c) == 0 {
                        continue;
                    }
                    let entry = self.get(row, cols[c] - 1);
                    if !entry.is_zero() {
                        let sub = &memo[&(m2 & !(1 << c))];
                        if !sub.is_zero() {
                            let term = entry.mul(sub);
                            // sign of moving column `pos` to the last slot
                            acc = if (p - pos) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                        }
                    }
                    pos += 1;
                }
                memo.insert(m2, acc);
            }
            for &mask in &layer {
                memo.remove(&mask);
            }
            layer = next;
        }
        memo.remove(&((1u64 << d) - 1)).unwrap()
    }

    pub fn det(&self) -> T {
        let all: Vec<usize> = (1..=self.size).collect();
        self.minor(&all, &all)
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.size, rhs.size, "size mismatch");
        let n = self.size;
        let mut entries = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] = entries[i * n + j].add(&a.mul(b));
                    }
                }
            }
        }
        Matrix { size: n, entries }
    }
}

impl Matrix<LaurentPoly> {
    pub fn eval(&self, assignment: &Assignment) -> Result<Matrix<Rational>, LaurentError> {
        self.try_map(|p| p.eval(assignment))
    }

    /// Row-major array of polynomials in their JSON encoding.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows()
                .map(|row| Value::Array(row.iter().map(LaurentPoly::to_json).collect()))
                .collect(),
        )
    }
}

impl Matrix<Rational> {
    /// Row-major array of `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows()
                .map(|row| Value::Array(row.iter().map(|x| Value::String(x.to_string())).collect()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn leibniz(m: &Matrix<Rational>) -> Rational {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut p2 = p.clone();
                    p2.insert(pos, n - 1);
                    out.push(p2);
                }
            }
            out
        }
        let n = m.size();
        perms(n)
            .into_iter()
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let prod: Rational = (0..n).map(|i| m.get(i, p[i]).clone()).product();
                if inversions % 2 == 0 { prod } else { -prod }
            })
            .sum()
    }

    #[test]
    fn determinant_matches_permutation_expansion() {
        let mut seed = 7i64;
        for n in 1..=5 {
            let rows: Vec<Vec<Rational>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            seed = (seed * 1103515245 + 12345) % 2147483648;
                            q(seed % 11 - 5)
                        })
                        .collect()
                })
                .collect();
            let m = Matrix::from_rows(rows);
            assert_eq!(m.det(), leibniz(&m), "n={n}");
        }
    }

    #[test]
    fn minors_of_known_matrix() {
        let m = Matrix::from_rows(vec![
            vec![q(2), q(0), q(1)],
            vec![q(1), q(3), q(2)],
            vec![q(1), q(1), q(1)],
        ]);
        assert_eq!(m.minor(&[1, 2], &[1, 2]), q(6));
        assert_eq!(m.minor(&[2, 3], &[1, 3]), q(-1));
        assert_eq!(m.minor(&[3], &[2]), q(1));
        assert_eq!(m.minor(&[], &[]), q(1));
        assert_eq!(m.det(), q(0));
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]]);
        let b = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        assert_eq!(&a * &b, Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(4), q(3)]]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(&a * &Matrix::identity(2), a);
    }
}
