use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

/// An integer composition: a sequence of positive parts summing to `n`.
///
/// Compositions of `n` are in bijection with subsets of `{1..n-1}`
/// through their descent set `{i1, i1+i2, ...}`; both views are used
/// throughout the crate. The empty composition (of `n = 0`) is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::invalid(
                "composition",
                format!("part at position {} is zero", pos + 1),
            ));
        }
        Ok(Composition { parts })
    }

    /// The composition of `n` whose descent set is `descents`.
    ///
    /// Inverse of [`Composition::descents`]. Every element must lie in
    /// `1..n-1`.
    pub fn from_descents<I>(n: usize, descents: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let set: BTreeSet<usize> = descents.into_iter().collect();
        if let Some(&d) = set.iter().find(|&&d| d == 0 || d >= n) {
            return Err(Error::invalid(
                "composition",
                format!("descent {d} outside 1..{}", n.saturating_sub(1)),
            ));
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &d in &set {
            parts.push(d - prev);
            prev = d;
        }
        if n > 0 {
            parts.push(n - prev);
        }
        Ok(Composition { parts })
    }

    /// Total `n` (the sum of the parts).
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Descent set `{i1, i1+i2, ..., i1+...+i_{r-1}}` as a sorted set.
    pub fn descents(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        self.parts
            .iter()
            .take(self.parts.len().saturating_sub(1))
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// Major index: the sum of the descent set.
    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// The mirror image (parts reversed).
    pub fn mirror(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Descent set packed into a bitmask: bit `i-1` is set iff `i` is a
    /// descent. This is the canonical row/column index used by the
    /// transition matrices.
    pub fn descent_bitmask(&self) -> usize {
        self.descents().iter().map(|d| 1usize << (d - 1)).sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| ParseError::new(1, "expected composition of the form (1,3,2)"))?;
        if inner.trim().is_empty() {
            return Ok(Composition { parts: vec![] });
        }
        let mut parts = Vec::new();
        for (i, tok) in inner.split(',').enumerate() {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| ParseError::new(i + 1, format!("invalid part {:?}", tok.trim())))?;
            if p == 0 {
                return Err(ParseError::new(i + 1, "composition part must be positive"));
            }
            parts.push(p);
        }
        Ok(Composition { parts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn from_descents_examples() {
        assert_eq!(
            Composition::from_descents(9, [1, 4, 6, 7]).unwrap(),
            comp(&[1, 3, 2, 1, 2])
        );
        assert_eq!(Composition::from_descents(5, []).unwrap(), comp(&[5]));
        assert_eq!(
            Composition::from_descents(4, [1, 2, 3]).unwrap(),
            comp(&[1, 1, 1, 1])
        );
    }

    #[test]
    fn from_descents_rejects_out_of_range() {
        assert!(Composition::from_descents(4, [4]).is_err());
        assert!(Composition::from_descents(4, [0]).is_err());
    }

    #[test]
    fn maj_examples() {
        assert_eq!(comp(&[1, 3, 2, 1, 2]).maj(), 18);
        assert_eq!(comp(&[7]).maj(), 0);
        // descents {2,3,4,5} sum to 14
        assert_eq!(comp(&[2, 1, 1, 1, 4]).maj(), 14);
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(comp(&[2, 1, 1, 1, 4]).mirror(), comp(&[4, 1, 1, 1, 2]));
        assert_eq!(comp(&[6]).mirror(), comp(&[6]));
        assert_eq!(comp(&[1, 3]).mirror(), comp(&[3, 1]));
    }

    #[test]
    fn descents_round_trip_exhaustive() {
        // Every composition of every n <= 10, by descent bitmask.
        for n in 1..=10usize {
            for mask in 0..(1usize << (n - 1)) {
                let descents: Vec<usize> =
                    (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let c = Composition::from_descents(n, descents.iter().copied()).unwrap();
                assert_eq!(c.size(), n);
                assert_eq!(
                    c.descents().into_iter().collect::<Vec<_>>(),
                    descents,
                    "descents of {c}"
                );
                assert_eq!(c.descent_bitmask(), mask);
                let back = Composition::from_descents(n, c.descents()).unwrap();
                assert_eq!(back, c);
            }
        }
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Composition::new(vec![1, 0, 2]).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["(1,3,2,1,2)", "(9)", "()"] {
            let c: Composition = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert!("1,2".parse::<Composition>().is_err());
        assert!("(1,x)".parse::<Composition>().is_err());
        assert!("(0)".parse::<Composition>().is_err());
    }
}
