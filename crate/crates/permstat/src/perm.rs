use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, ParseError, Result};
use crate::text;

/// A permutation of `{1..n}`, written as the word `σ1 σ2 ... σn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for (j, &v) in word.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::invalid(
                    "permutation",
                    format!("value {v} at position {} outside 1..{n}", j + 1),
                ));
            }
            if seen[v - 1] {
                return Err(Error::invalid(
                    "permutation",
                    format!("value {v} repeated at position {}", j + 1),
                ));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// 0-based position of each value: `positions()[v-1]` is the index
    /// `j` with `σ_{j+1} = v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.word.len()];
        for (j, &v) in self.word.iter().enumerate() {
            pos[v - 1] = j;
        }
        pos
    }

    /// Recoil set: values `i` such that `i+1` appears to the left of `i`.
    pub fn recoils(&self) -> BTreeSet<usize> {
        let pos = self.positions();
        (1..self.size())
            .filter(|&i| pos[i] < pos[i - 1])
            .collect()
    }

    /// Recoil composition `Rec`: the composition whose descent set is
    /// the recoil set.
    pub fn rec(&self) -> Composition {
        Composition::from_descents(self.size(), self.recoils())
            .expect("recoil set lies in 1..n-1")
    }

    /// Genocchi descent set `GDes`: values immediately followed by a
    /// smaller value (descent tops). The last value never qualifies.
    pub fn gdes(&self) -> BTreeSet<usize> {
        self.word
            .windows(2)
            .filter(|w| w[0] > w[1])
            .map(|w| w[0])
            .collect()
    }

    /// Genocchi composition `GC`: descent set `{d-1 | d ∈ GDes}`.
    pub fn gc(&self) -> Composition {
        Composition::from_descents(self.size(), self.gdes().into_iter().map(|d| d - 1))
            .expect("shifted Genocchi descents lie in 1..n-1")
    }

    /// Type-0 Genocchi descent set: with the convention `σ_{n+1} = 0`,
    /// the values immediately followed by a smaller value. Both `σn`
    /// and `n` always belong to it.
    pub fn gdes0(&self) -> BTreeSet<usize> {
        let n = self.size();
        (0..n)
            .filter(|&j| {
                let next = if j + 1 < n { self.word[j + 1] } else { 0 };
                self.word[j] > next
            })
            .map(|j| self.word[j])
            .collect()
    }

    /// Type-0 Genocchi composition `GC⁰`: descent set `GDes⁰ \ {n}`.
    pub fn gc0(&self) -> Composition {
        let n = self.size();
        Composition::from_descents(n, self.gdes0().into_iter().filter(|&d| d != n))
            .expect("type-0 Genocchi descents lie in 1..n-1")
    }

    /// Number of 31-2 patterns: pairs `(i, j)` with `j > i+1` and
    /// `σ_{i+1} < σ_j < σ_i`.
    pub fn tot(&self) -> usize {
        self.tot_table().iter().sum()
    }

    /// Number of 31-2 patterns in which the value `k` stands for the 2.
    pub fn tot_k(&self, k: usize) -> usize {
        assert!(k >= 1 && k <= self.size(), "value {k} outside 1..n");
        self.tot_table()[k - 1]
    }

    /// `tot_k` for every value: entry `k-1` counts the 31-2 patterns
    /// where `k` stands for the 2.
    pub fn tot_table(&self) -> Vec<usize> {
        let n = self.size();
        let mut table = vec![0; n];
        for i in 0..n.saturating_sub(1) {
            if self.word[i] > self.word[i + 1] {
                for j in i + 2..n {
                    let v = self.word[j];
                    if self.word[i + 1] < v && v < self.word[i] {
                        table[v - 1] += 1;
                    }
                }
            }
        }
        table
    }

    /// Left-to-right maxima: values with only smaller values to their
    /// left. Always contains `σ1` and `n`.
    pub fn ltr_maxima(&self) -> BTreeSet<usize> {
        let mut best = 0;
        let mut out = BTreeSet::new();
        for &v in &self.word {
            if v > best {
                best = v;
                out.insert(v);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::join_usize_word(&self.word))
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let word = text::parse_usize_word(s)?;
        Permutation::new(word).map_err(|e| ParseError::new(1, e.to_string()))
    }
}
