//! Left factors of the standard reduced word of the longest element and
//! the minors attached to their positions.

use std::fmt;

use super::BruhatError;
use crate::crystal::cycle_offset;
use crate::laurent::VarId;

/// The word `(1..r, 1..r-1, ..., 1..r-m+2, 1..last)`: `m - 1` full cycles
/// followed by a partial `m`-th cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordSpec {
    r: u32,
    m: u32,
    last: u32,
}

impl WordSpec {
    pub fn new(r: u32, m: u32, last: u32) -> Result<Self, BruhatError> {
        if r == 0 || m == 0 || m > r || last == 0 || last > r - m + 1 {
            return Err(BruhatError::InvalidWord(format!("r={r} m={m} last={last}")));
        }
        Ok(WordSpec { r, m, last })
    }

    /// Recognizes a word of the standard shape.
    pub fn from_word(r: u32, word: &[u32]) -> Result<Self, BruhatError> {
        let bad = || BruhatError::InvalidWord(format!("{word:?} is not a left factor of the standard word for r={r}"));
        if word.is_empty() || word[0] != 1 {
            return Err(bad());
        }
        let m = word.iter().filter(|&&i| i == 1).count() as u32;
        let last = *word.last().unwrap();
        let spec = Self::new(r, m, last).map_err(|_| bad())?;
        if spec.letters() != word {
            return Err(bad());
        }
        Ok(spec)
    }

    /// Every valid word of rank `r`, ordered by length.
    pub fn all(r: u32) -> impl Iterator<Item = WordSpec> {
        (1..=r).flat_map(move |m| (1..=r - m + 1).map(move |last| WordSpec { r, m, last }))
    }

    /// The full standard word of the longest element.
    pub fn longest(r: u32) -> Result<Self, BruhatError> {
        Self::new(r, r, 1)
    }

    pub fn rank(&self) -> u32 {
        self.r
    }

    pub fn cycles(&self) -> u32 {
        self.m
    }

    pub fn last(&self) -> u32 {
        self.last
    }

    /// Length of cycle `c` (0-based).
    pub fn cycle_len(&self, c: u32) -> u32 {
        if c + 1 < self.m {
            self.r - c
        } else if c + 1 == self.m {
            self.last
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        (cycle_offset(self.r, self.m as i32 - 1) + self.last as i64) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> Vec<u32> {
        (0..self.m).flat_map(|c| 1..=self.cycle_len(c)).collect()
    }

    /// Color at 1-based position `k`.
    pub fn letter(&self, k: usize) -> u32 {
        self.locate(k).1
    }

    /// `(cycle, color)` of position `k = l_cycle + color`, cycle 0-based.
    pub fn locate(&self, k: usize) -> (u32, u32) {
        assert!(k >= 1 && k <= self.len(), "position {k} outside the word");
        let mut c = 0;
        while cycle_offset(self.r, c as i32 + 1) < k as i64 {
            c += 1;
        }
        (c, (k as i64 - cycle_offset(self.r, c as i32)) as u32)
    }

    /// The variable attached to position `k`: `Y[s,j]` with `k = l_s + j`.
    pub fn position_var(&self, k: usize) -> VarId {
        let (s, j) = self.locate(k);
        VarId::new(s as i32, j)
    }

    /// Position of color `c` in cycle `s`, if the word has it.
    pub fn position(&self, s: u32, c: u32) -> Option<usize> {
        (c >= 1 && c <= self.cycle_len(s)).then(|| (cycle_offset(self.r, s as i32) + c as i64) as usize)
    }

    pub fn position_vars(&self) -> Vec<VarId> {
        (1..=self.len()).map(|k| self.position_var(k)).collect()
    }

    /// The one-letter extension that keeps the standard shape, if any.
    pub fn extension(&self) -> Option<WordSpec> {
        if self.last < self.r - self.m + 1 {
            Some(WordSpec { last: self.last + 1, ..*self })
        } else if self.m < self.r {
            Some(WordSpec { m: self.m + 1, last: 1, ..*self })
        } else {
            None
        }
    }
}

impl fmt::Display for WordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters().iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A position `k` of a word, determining the color `d = i_k` and the 1-based
/// cycle `m'` containing `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorSpec {
    word: WordSpec,
    k: usize,
}

impl MinorSpec {
    pub fn new(word: WordSpec, k: usize) -> Result<Self, BruhatError> {
        if k == 0 || k > word.len() {
            return Err(BruhatError::IndexOutOfRange { k: k as i64, n: word.len() });
        }
        Ok(MinorSpec { word, k })
    }

    /// Every position of `word` carrying its last color.
    pub fn with_last_color(word: WordSpec) -> Vec<MinorSpec> {
        (0..word.cycles())
            .filter_map(|c| word.position(c, word.last()))
            .map(|k| MinorSpec { word, k })
            .collect()
    }

    pub fn word(&self) -> &WordSpec {
        &self.word
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.word.letter(self.k)
    }

    pub fn m_prime(&self) -> u32 {
        self.word.locate(self.k).0 + 1
    }

    /// `{m'+1, ..., m'+d}`.
    pub fn row_labels(&self) -> Vec<usize> {
        let mp = self.m_prime() as usize;
        (mp + 1..=mp + self.d() as usize).collect()
    }

    /// `{1, ..., d}`.
    pub fn col_labels(&self) -> Vec<usize> {
        (1..=self.d() as usize).collect()
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} of {}", self.k, self.word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_word_rank_four() {
        let w = WordSpec::longest(4).unwrap();
        assert_eq!(w.letters(), vec![1, 2, 3, 4, 1, 2, 3, 1, 2, 1]);
        assert_eq!(w.len(), 10);
        assert_eq!(w.position_var(6), VarId::new(1, 2));
        assert_eq!(w.position_var(10), VarId::new(3, 1));
        assert_eq!(WordSpec::from_word(4, &w.letters()).unwrap(), w);
    }

    #[test]
    fn validation() {
        assert!(WordSpec::new(4, 2, 4).is_err());
        assert!(WordSpec::new(4, 5, 1).is_err());
        assert!(WordSpec::new(4, 2, 0).is_err());
        assert!(WordSpec::from_word(4, &[1, 2, 4]).is_err());
        assert!(WordSpec::from_word(4, &[1, 2, 3, 4, 1, 2]).is_ok());
    }

    #[test]
    fn counts_and_extensions() {
        // r(r+1)/2 words per rank, chained by extension
        for r in 1..=6 {
            let all: Vec<_> = WordSpec::all(r).collect();
            assert_eq!(all.len() as u32, r * (r + 1) / 2);
            for pair in all.windows(2) {
                assert_eq!(pair[0].extension(), Some(pair[1]));
                assert_eq!(pair[1].len(), pair[0].len() + 1);
            }
            assert_eq!(all.last().unwrap().extension(), None);
        }
    }

    #[test]
    fn minor_data() {
        let w = WordSpec::from_word(4, &[1, 2, 3, 4, 1, 2]).unwrap();
        let spec = MinorSpec::new(w, 6).unwrap();
        assert_eq!((spec.d(), spec.m_prime()), (2, 2));
        assert_eq!(spec.row_labels(), vec![3, 4]);
        let ks: Vec<_> = MinorSpec::with_last_color(w).iter().map(|s| s.k()).collect();
        assert_eq!(ks, vec![2, 6]);
        assert!(MinorSpec::new(w, 7).is_err());
    }
}
