//! Permutations of `[1, n]`, the Weyl group of `SL_n`.

use std::collections::BTreeSet;
use std::fmt;

/// `images[x-1]` is the image of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// `None` unless `images` is a bijection of `[1, images.len()]`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Permutation { images })
    }

    /// The transposition `s_i = (i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not in S_{n}");
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// `x -> n + 1 - x`.
    pub fn reversal(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn apply_set(&self, xs: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        xs.into_iter().map(|x| self.apply(x)).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `s_{w_1} s_{w_2} ... s_{w_k}`.
    pub fn from_word(n: usize, word: &[u32]) -> Self {
        word.iter()
            .fold(Self::identity(n), |acc, &i| acc.compose(&Self::simple(n, i as usize)))
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_reflections_are_involutions() {
        for i in 1..5 {
            let s = Permutation::simple(5, i);
            assert_eq!(s.compose(&s), Permutation::identity(5));
        }
    }

    #[test]
    fn braid_relation() {
        let (a, b) = (Permutation::simple(4, 1), Permutation::simple(4, 2));
        assert_eq!(a.compose(&b).compose(&a), b.compose(&a).compose(&b));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1, 3]).is_none());
        assert!(Permutation::from_images(vec![1, 4, 2]).is_none());
        assert!(Permutation::from_images(vec![3, 1, 2]).is_some());
    }

    #[test]
    fn inverse_undoes() {
        let p = Permutation::from_images(vec![3, 1, 4, 2]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(4));
        assert_eq!(p.inversions(), 3);
    }
}
