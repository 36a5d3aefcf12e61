//! Seed matrices of the cluster structure on `G^{u,e}`, matrix mutation and
//! exchange relations.
//!
//! Indices are `-1, ..., -r` followed by the word positions `1, ..., n`,
//! ordered `-r < ... < -1 < 1 < ... < n`. For a negative index `i_k := k`.
//! The successor `k^+` is the smallest index after `k` with `|i_{k^+}| = |i_k|`,
//! or `n + 1` if there is none. With `p = max(k, l)` and `q = min(k^+, l^+)`,
//! the entry `b_{kl}` is
//!
//! ```text
//! -sgn((k - l) i_p)                    if p = q
//! -sgn((k - l) i_p a_{|i_k| |i_l|})    if p < q and sgn(i_p i_q) (k - l) (k^+ - l^+) > 0
//! 0                                    otherwise
//! ```
//!
//! where `a` is the Cartan matrix and `i_{n+1}` counts as 0. This successor
//! convention is the one of Berenstein, Fomin and Zelevinsky for double
//! Bruhat cells.

use std::fmt;

use num_traits::Signed;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bruhat::WordSpec;
use crate::laurent::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClusterError {
    #[error("index {0} is not a mutable direction")]
    IndexOutOfRange(i64),
    #[error("matrix is not well formed: {0}")]
    Shape(String),
}

/// `-r, ..., -1` followed by `1, ..., n`.
pub fn all_indices(w: &WordSpec) -> Vec<i64> {
    let r = w.rank() as i64;
    (-r..=-1).chain(1..=w.len() as i64).collect()
}

/// `[-1, -r]` together with the positions whose color occurs again later,
/// in increasing order.
pub fn e_set(w: &WordSpec) -> Vec<i64> {
    let letters = w.letters();
    let r = w.rank() as i64;
    let repeats = (0..letters.len())
        .filter(|&k| letters[k + 1..].contains(&letters[k]))
        .map(|k| k as i64 + 1);
    (-r..=-1).chain(repeats).collect()
}

struct Indexing {
    letters: Vec<u32>,
}

impl Indexing {
    fn n(&self) -> i64 {
        self.letters.len() as i64
    }

    /// `i_k` as a signed color; 0 for `n + 1`.
    fn color(&self, k: i64) -> i64 {
        if k < 0 {
            k
        } else if k <= self.n() {
            self.letters[k as usize - 1] as i64
        } else {
            0
        }
    }

    fn successor(&self, k: i64) -> i64 {
        let c = self.color(k).abs();
        let start = if k < 0 { 1 } else { k + 1 };
        (start..=self.n()).find(|&l| self.color(l).abs() == c).unwrap_or(self.n() + 1)
    }
}

fn cartan(i: i64, j: i64) -> i64 {
    match (i - j).abs() {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// An integer matrix with labeled rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedMatrix {
    rows: Vec<i64>,
    cols: Vec<i64>,
    entries: Vec<Vec<i64>>,
}

impl SeedMatrix {
    pub fn new(rows: Vec<i64>, cols: Vec<i64>, entries: Vec<Vec<i64>>) -> Result<Self, ClusterError> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(ClusterError::Shape(format!("{}x{} labels", rows.len(), cols.len())));
        }
        if cols.iter().any(|c| !rows.contains(c)) {
            return Err(ClusterError::Shape("column labels must also label rows".into()));
        }
        Ok(SeedMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> &[i64] {
        &self.rows
    }

    pub fn cols(&self) -> &[i64] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `b_{kl}` by labels.
    pub fn entry(&self, k: i64, l: i64) -> Option<i64> {
        let i = self.rows.iter().position(|&x| x == k)?;
        let j = self.cols.iter().position(|&x| x == l)?;
        Some(self.entries[i][j])
    }

    /// The square part on the column labels.
    pub fn principal(&self) -> Vec<Vec<i64>> {
        self.cols
            .iter()
            .map(|&k| self.cols.iter().map(|&l| self.entry(k, l).unwrap()).collect())
            .collect()
    }

    /// Mutation in the direction labeled `k`.
    pub fn mutate(&self, k: i64) -> Result<SeedMatrix, ClusterError> {
        let i = self.rows.iter().position(|&x| x == k).ok_or(ClusterError::IndexOutOfRange(k))?;
        let j = self.cols.iter().position(|&x| x == k).ok_or(ClusterError::IndexOutOfRange(k))?;
        let entries = mutate_at(&self.entries, i, j);
        Ok(SeedMatrix { rows: self.rows.clone(), cols: self.cols.clone(), entries })
    }

    /// `{"rows": [...], "cols": [...], "entries": [[...]]}`.
    pub fn to_json(&self) -> Value {
        json!({ "rows": self.rows, "cols": self.cols, "entries": self.entries })
    }
}

impl fmt::Display for SeedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .chain(self.cols.iter().map(|c| c.to_string().len()))
            .max()
            .unwrap_or(1);
        let head = self.rows.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        write!(f, "{:>head$} |", "")?;
        for c in &self.cols {
            write!(f, " {c:>width$}")?;
        }
        writeln!(f)?;
        for (k, row) in self.rows.iter().zip(&self.entries) {
            write!(f, "{k:>head$} |")?;
            for x in row {
                write!(f, " {x:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The exchange matrix of the word: rows are all indices, columns [`e_set`].
pub fn seed_matrix(w: &WordSpec) -> SeedMatrix {
    let idx = Indexing { letters: w.letters() };
    let rows = all_indices(w);
    let cols = e_set(w);
    let entries = rows
        .iter()
        .map(|&k| cols.iter().map(|&l| seed_entry(&idx, k, l)).collect())
        .collect();
    SeedMatrix { rows, cols, entries }
}

fn seed_entry(idx: &Indexing, k: i64, l: i64) -> i64 {
    let (kp, lp) = (idx.successor(k), idx.successor(l));
    let p = k.max(l);
    let q = kp.min(lp);
    let ip = idx.color(p);
    if p == q {
        return -((k - l) * ip).signum();
    }
    let iq = idx.color(q);
    if p < q && (ip * iq).signum() * (k - l) * (kp - lp) > 0 {
        let a = cartan(idx.color(k).abs(), idx.color(l).abs());
        return -((k - l) * ip * a).signum();
    }
    0
}

fn mutate_at(a: &[Vec<i64>], row: usize, col: usize) -> Vec<Vec<i64>> {
    a.iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, &x)| {
                    if i == row || j == col {
                        -x
                    } else {
                        let (aik, akj) = (a[i][col], a[row][j]);
                        x + (aik.abs() * akj + aik * akj.abs()) / 2
                    }
                })
                .collect()
        })
        .collect()
}

/// Matrix mutation in direction `k` (0-based), for any matrix with at least
/// `k + 1` rows and columns.
pub fn mutate(a: &[Vec<i64>], k: usize) -> Result<Vec<Vec<i64>>, ClusterError> {
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != cols) {
        return Err(ClusterError::Shape("ragged rows".into()));
    }
    if k >= a.len() || k >= cols {
        return Err(ClusterError::IndexOutOfRange(k as i64));
    }
    Ok(mutate_at(a, k, k))
}

/// `sgn(a_ij) = -sgn(a_ji)` for all `i, j` of a square matrix.
pub fn is_sign_skew_symmetric(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    a.iter().all(|r| r.len() == n)
        && (0..n).all(|i| (0..n).all(|j| a[i][j].signum() == -a[j][i].signum()))
}

/// A positive diagonal `D` with `D A` skew-symmetric, if one exists.
pub fn skew_symmetrizer(a: &[Vec<i64>]) -> Option<Vec<Rational>> {
    let n = a.len();
    if !is_sign_skew_symmetric(a) {
        return None;
    }
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().unwrap();
            for j in 0..n {
                if a[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = -d_j a_ji
                let dj = &(&di * &Rational::from(a[i][j])) / &Rational::from(-a[j][i]);
                match &d[j] {
                    Some(existing) if *existing != dj => return None,
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
    debug_assert!(d.iter().all(|x| x.numer().is_positive()));
    Some(d)
}

/// A cluster of variable tags, frozen tags, and the exchange matrix with one
/// row per cluster variable and one column per cluster or frozen variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeSeed {
    pub cluster: Vec<String>,
    pub frozen: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
}

/// The two monomials of an exchange relation, as `(tag, exponent)` lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binomial {
    pub positive: Vec<(String, i64)>,
    pub negative: Vec<(String, i64)>,
}

fn write_product(f: &mut fmt::Formatter<'_>, factors: &[(String, i64)]) -> fmt::Result {
    if factors.is_empty() {
        return f.write_str("1");
    }
    for (idx, (tag, e)) in factors.iter().enumerate() {
        if idx > 0 {
            f.write_str("*")?;
        }
        if *e == 1 {
            f.write_str(tag)?;
        } else {
            write!(f, "{tag}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_product(f, &self.positive)?;
        f.write_str(" + ")?;
        write_product(f, &self.negative)
    }
}

impl ExchangeSeed {
    pub fn new(cluster: Vec<String>, frozen: Vec<String>, matrix: Vec<Vec<i64>>) -> Result<Self, ClusterError> {
        let width = cluster.len() + frozen.len();
        if matrix.len() != cluster.len() || matrix.iter().any(|r| r.len() != width) {
            return Err(ClusterError::Shape(format!(
                "exchange matrix must be {}x{width}",
                cluster.len()
            )));
        }
        let principal: Vec<Vec<i64>> = matrix.iter().map(|r| r[..cluster.len()].to_vec()).collect();
        if !is_sign_skew_symmetric(&principal) {
            return Err(ClusterError::Shape("principal part is not sign-skew-symmetric".into()));
        }
        Ok(ExchangeSeed { cluster, frozen, matrix })
    }

    /// The seed of a word: cluster `x_l` for `l` in [`e_set`], the other
    /// indices frozen.
    pub fn from_seed_matrix(b: &SeedMatrix) -> Self {
        let tag = |k: i64| format!("x_{k}");
        let frozen_labels: Vec<i64> = b.rows.iter().copied().filter(|k| !b.cols.contains(k)).collect();
        let order: Vec<i64> = b.cols.iter().copied().chain(frozen_labels.iter().copied()).collect();
        let matrix = b
            .cols
            .iter()
            .map(|&l| order.iter().map(|&k| b.entry(k, l).unwrap()).collect())
            .collect();
        ExchangeSeed {
            cluster: b.cols.iter().map(|&k| tag(k)).collect(),
            frozen: frozen_labels.into_iter().map(tag).collect(),
            matrix,
        }
    }

    pub fn tags(&self) -> impl Iterator<Item = &String> {
        self.cluster.iter().chain(&self.frozen)
    }

    /// Position of a cluster tag.
    pub fn position(&self, tag: &str) -> Option<usize> {
        self.cluster.iter().position(|t| t == tag)
    }
}

/// The exchange relation `x_k x_k' = Π_{b_ki > 0} x_i^{b_ki} + Π_{b_ki < 0} x_i^{-b_ki}`
/// in direction `k` (0-based), and the adjacent seed in which `x_k` is
/// replaced by the tag `x_k'` and the matrix is mutated.
pub fn exchange(seed: &ExchangeSeed, k: usize) -> Result<(Binomial, ExchangeSeed), ClusterError> {
    if k >= seed.cluster.len() {
        return Err(ClusterError::IndexOutOfRange(k as i64));
    }
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    for (tag, &b) in seed.tags().zip(&seed.matrix[k]) {
        if b > 0 {
            positive.push((tag.clone(), b));
        } else if b < 0 {
            negative.push((tag.clone(), -b));
        }
    }
    let mut next = seed.clone();
    next.cluster[k] = format!("{}'", seed.cluster[k]);
    next.matrix = mutate_at(&seed.matrix, k, k);
    Ok((Binomial { positive, negative }, next))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // Search small positive integer diagonals directly.
    fn brute_symmetrizer(a: &[Vec<i64>], max: i64) -> bool {
        let n = a.len();
        let mut d = vec![1i64; n];
        loop {
            if (0..n).all(|i| (0..n).all(|j| d[i] * a[i][j] == -d[j] * a[j][i])) {
                return true;
            }
            let mut pos = 0;
            while pos < n && d[pos] == max {
                d[pos] = 1;
                pos += 1;
            }
            if pos == n {
                return false;
            }
            d[pos] += 1;
        }
    }

    #[test]
    fn e_sets() {
        let w = WordSpec::from_word(2, &[1, 2, 1]).unwrap();
        assert_eq!(e_set(&w), vec![-2, -1, 1]);
        let w = WordSpec::longest(4).unwrap();
        assert_eq!(e_set(&w), vec![-4, -3, -2, -1, 1, 2, 3, 5, 6, 8]);
        for r in 1..=5 {
            for w in WordSpec::all(r) {
                let letters = w.letters();
                let mut expect: Vec<i64> = (1..=r as i64).map(|x| -x).collect();
                for k in 0..letters.len() {
                    if (k + 1..letters.len()).any(|l| letters[l] == letters[k]) {
                        expect.push(k as i64 + 1);
                    }
                }
                expect.sort();
                assert_eq!(e_set(&w), expect);
            }
        }
    }

    #[test]
    fn rank_one_seed() {
        let w = WordSpec::new(1, 1, 1).unwrap();
        let b = seed_matrix(&w);
        assert_eq!(b.rows(), &[-1, 1]);
        assert_eq!(b.cols(), &[-1]);
        assert_eq!(b.entry(-1, -1), Some(0));
        assert_eq!(b.entry(1, -1), Some(-1));
    }

    #[test]
    fn seed_matrices_are_skew_symmetrizable() {
        for r in 1..=4 {
            for w in WordSpec::all(r) {
                let b = seed_matrix(&w).principal();
                assert!(is_sign_skew_symmetric(&b), "{w}");
                assert!(skew_symmetrizer(&b).is_some(), "{w}");
                assert!(brute_symmetrizer(&b, 3), "{w}");
            }
        }
    }

    #[test]
    fn mutation_basics() {
        let a = vec![vec![0, 1], vec![-1, 0]];
        assert_eq!(mutate(&a, 0).unwrap(), vec![vec![0, -1], vec![1, 0]]);
        assert!(mutate(&a, 2).is_err());
        let b = vec![vec![0, 2, -1], vec![-1, 0, 1], vec![1, -2, 0]];
        for k in 0..3 {
            assert_eq!(mutate(&mutate(&b, k).unwrap(), k).unwrap(), b);
        }
    }

    #[test]
    fn mutation_keeps_sign_skew_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for r in 1..=4 {
            for w in WordSpec::all(r) {
                let mut b = seed_matrix(&w);
                for _ in 0..20 {
                    let k = b.cols()[rng.gen_range(0..b.cols().len())];
                    b = b.mutate(k).unwrap();
                    assert!(is_sign_skew_symmetric(&b.principal()), "{w}");
                }
            }
        }
    }

    #[test]
    fn exchange_relations() {
        let seed = ExchangeSeed::new(vec!["x_1".into(), "x_2".into()], vec![], vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let (rel, next) = exchange(&seed, 0).unwrap();
        assert_eq!(rel.to_string(), "x_2 + 1");
        assert_eq!(next.cluster, vec!["x_1'", "x_2"]);
        let (_, back) = exchange(&next, 0).unwrap();
        assert_eq!(back.matrix, seed.matrix);

        let isolated = ExchangeSeed::new(vec!["x_1".into()], vec!["y".into()], vec![vec![0, 0]]).unwrap();
        assert_eq!(exchange(&isolated, 0).unwrap().0.to_string(), "1 + 1");
        assert!(exchange(&isolated, 1).is_err());
        assert!(ExchangeSeed::new(vec!["a".into(), "b".into()], vec![], vec![vec![0, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn word_seed_layout() {
        let w = WordSpec::from_word(2, &[1, 2, 1]).unwrap();
        let b = seed_matrix(&w);
        let seed = ExchangeSeed::from_seed_matrix(&b);
        assert_eq!(seed.cluster, vec!["x_-2", "x_-1", "x_1"]);
        assert_eq!(seed.frozen, vec!["x_2", "x_3"]);
        for (row, &l) in seed.matrix.iter().zip(b.cols()) {
            for (x, k) in row.iter().zip([-2, -1, 1, 2, 3]) {
                assert_eq!(Some(*x), b.entry(k, l));
            }
        }
    }
}
