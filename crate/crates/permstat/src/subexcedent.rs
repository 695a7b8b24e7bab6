use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, ParseError, Result};
use crate::text;

/// A subexcedent function: a word `u1 ... un` of nonnegative integers
/// with `u_i <= n - i` (so `u_n = 0`). There are `n!` of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubexcedentFunction {
    entries: Vec<usize>,
}

impl SubexcedentFunction {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        for (i, &u) in entries.iter().enumerate() {
            if u > n - i - 1 {
                return Err(Error::invalid(
                    "subexcedent function",
                    format!("entry {u} at position {} exceeds n-i = {}", i + 1, n - i - 1),
                ));
            }
        }
        Ok(SubexcedentFunction { entries })
    }

    pub fn zero(n: usize) -> Self {
        SubexcedentFunction {
            entries: vec![0; n],
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Number of inversions: the sum of the entries.
    pub fn inv(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Descent set `{i | u_i > u_{i+1}}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Descent composition `DC`.
    pub fn dc(&self) -> Composition {
        Composition::from_descents(self.size(), self.descents())
            .expect("descents lie in 1..n-1")
    }

    /// 1-based positions holding zeroes; the left-to-right-maxima
    /// statistic on subexcedent functions.
    pub fn zero_positions(&self) -> BTreeSet<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &u)| u == 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The statistic `LC`: read the word from right to left growing a
    /// set `S`; whenever the entry `k` exceeds `|S|`, insert the
    /// `(k-|S|)`-th element of `1..n` not already in `S`. The result is
    /// the mirror of the composition whose descent set is `S`.
    pub fn lc(&self) -> Composition {
        let n = self.size();
        let mut s: BTreeSet<usize> = BTreeSet::new();
        for &k in self.entries.iter().rev() {
            if k > s.len() {
                let mut rank = k - s.len();
                for v in 1..=n {
                    if !s.contains(&v) {
                        rank -= 1;
                        if rank == 0 {
                            s.insert(v);
                            break;
                        }
                    }
                }
            }
        }
        Composition::from_descents(n, s)
            .expect("the LC scan never inserts n")
            .mirror()
    }

    /// Whether removing all zeroes leaves a strictly decreasing word.
    pub fn is_decreasing(&self) -> bool {
        let mut last: Option<usize> = None;
        for &u in &self.entries {
            if u == 0 {
                continue;
            }
            if let Some(prev) = last {
                if u >= prev {
                    return false;
                }
            }
            last = Some(u);
        }
        true
    }

    /// Component-wise maximal weight admissible for a decreasing
    /// subexcedent function: `W_k = #{ i < k : 0 < u_i <= n-k }`.
    pub fn max_weight(&self) -> Result<Vec<usize>> {
        if !self.is_decreasing() {
            return Err(Error::invalid(
                "subexcedent function",
                "max weight is only defined for decreasing subexcedent functions",
            ));
        }
        let n = self.size();
        Ok((1..=n)
            .map(|k| {
                self.entries[..k - 1]
                    .iter()
                    .filter(|&&u| u > 0 && u <= n - k)
                    .count()
            })
            .collect())
    }
}

impl fmt::Display for SubexcedentFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::join_usize_word(&self.entries))
    }
}

impl FromStr for SubexcedentFunction {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let entries = text::parse_usize_word(s)?;
        SubexcedentFunction::new(entries).map_err(|e| ParseError::new(1, e.to_string()))
    }
}

/// A decreasing subexcedent function together with a weight bounded by
/// [`SubexcedentFunction::max_weight`]. The intermediate object of the
/// sorting bijections; there are `n!` of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecreasingWeightedSf {
    sf: SubexcedentFunction,
    weight: Vec<usize>,
}

impl DecreasingWeightedSf {
    pub fn new(sf: SubexcedentFunction, weight: Vec<usize>) -> Result<Self> {
        if !sf.is_decreasing() {
            return Err(Error::invalid(
                "decreasing weighted subexcedent function",
                "nonzero entries must be strictly decreasing",
            ));
        }
        if weight.len() != sf.size() {
            return Err(Error::invalid(
                "decreasing weighted subexcedent function",
                format!("weight length {} differs from size {}", weight.len(), sf.size()),
            ));
        }
        let bounds = sf.max_weight().expect("checked decreasing");
        for (i, (&w, &b)) in weight.iter().zip(&bounds).enumerate() {
            if w > b {
                return Err(Error::invalid(
                    "decreasing weighted subexcedent function",
                    format!("weight {w} at position {} exceeds the bound {b}", i + 1),
                ));
            }
        }
        Ok(DecreasingWeightedSf { sf, weight })
    }

    pub fn size(&self) -> usize {
        self.sf.size()
    }

    pub fn sf(&self) -> &SubexcedentFunction {
        &self.sf
    }

    pub fn weight(&self) -> &[usize] {
        &self.weight
    }

    pub fn into_parts(self) -> (SubexcedentFunction, Vec<usize>) {
        (self.sf, self.weight)
    }

    /// Number of inversions: the sum of the values of `u` and `w`.
    pub fn inv(&self) -> usize {
        self.sf.inv() + self.total_weight()
    }

    /// Total weight `tw`: the sum of the weight entries. Satisfies
    /// `tw = inv - maj(mirror(LC))`.
    pub fn total_weight(&self) -> usize {
        self.weight.iter().sum()
    }

    /// Descent set `{i | w_i > w_{i+1}} ∪ {i | w_i = w_{i+1}, u_i > u_{i+1}}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        let u = self.sf.entries();
        (1..self.size())
            .filter(|&i| {
                let (wl, wr) = (self.weight[i - 1], self.weight[i]);
                wl > wr || (wl == wr && u[i - 1] > u[i])
            })
            .collect()
    }

    pub fn dc(&self) -> Composition {
        Composition::from_descents(self.size(), self.descents())
            .expect("descents lie in 1..n-1")
    }

    /// The statistic `LC`, computed on the subexcedent function alone.
    pub fn lc(&self) -> Composition {
        self.sf.lc()
    }
}

impl fmt::Display for DecreasingWeightedSf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{};{}",
            self.sf,
            text::join_usize_word(&self.weight)
        )
    }
}

impl FromStr for DecreasingWeightedSf {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let (left, right) = s
            .split_once(';')
            .ok_or_else(|| ParseError::new(1, "expected \"<u>;<w>\""))?;
        let sf: SubexcedentFunction = left.parse()?;
        let weight = text::parse_usize_word(right)?;
        DecreasingWeightedSf::new(sf, weight).map_err(|e| ParseError::new(1, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(s: &str) -> SubexcedentFunction {
        s.parse().unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SubexcedentFunction::new(vec![2, 1, 0]).is_ok());
        assert!(SubexcedentFunction::new(vec![3, 1, 0]).is_err());
        assert!(SubexcedentFunction::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn lc_examples() {
        assert_eq!(sf("315503200").lc(), comp(&[4, 1, 1, 1, 2]));
        assert_eq!(sf("0 0 0 0 0").lc(), comp(&[5]));
        assert_eq!(sf("43210").lc(), comp(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn dc_inv_zero_positions() {
        let u = sf("315503200");
        assert_eq!(u.dc(), comp(&[1, 3, 2, 1, 2]));
        assert_eq!(u.inv(), 19);
        assert_eq!(u.zero_positions().into_iter().collect::<Vec<_>>(), vec![5, 8, 9]);
        assert_eq!(SubexcedentFunction::zero(6).inv(), 0);
    }

    #[test]
    fn decreasing_detection() {
        assert!(sf("540300200").is_decreasing());
        assert!(sf("000").is_decreasing());
        assert!(!sf("315503200").is_decreasing());
        // equal nonzero entries are not strictly decreasing
        assert!(!sf("110").is_decreasing());
    }

    #[test]
    fn max_weight_examples() {
        assert_eq!(
            sf("540300200").max_weight().unwrap(),
            vec![0, 1, 2, 2, 2, 1, 0, 0, 0]
        );
        assert_eq!(sf("0000").max_weight().unwrap(), vec![0; 4]);
        // (n-1) 0^(n-1): the single entry n-1 never fits a later slot,
        // so the counting formula gives the zero weight.
        for n in 2..=8 {
            let mut e = vec![0; n];
            e[0] = n - 1;
            let u = SubexcedentFunction::new(e).unwrap();
            assert_eq!(u.max_weight().unwrap(), vec![0; n]);
        }
        assert!(sf("315503200").max_weight().is_err());
    }

    #[test]
    fn dwsf_statistics() {
        let x = DecreasingWeightedSf::new(
            sf("540300200"),
            vec![0, 0, 2, 2, 0, 1, 0, 0, 0],
        )
        .unwrap();
        assert_eq!(x.inv(), 19);
        assert_eq!(x.total_weight(), 5);
        assert_eq!(x.lc(), comp(&[4, 1, 1, 1, 2]));
        assert_eq!(x.dc(), comp(&[1, 3, 2, 1, 2]));
        // tw = inv - maj(mirror(LC))
        assert_eq!(x.total_weight(), x.inv() - x.lc().mirror().maj());
    }

    #[test]
    fn dwsf_trivial_cases() {
        let z = DecreasingWeightedSf::new(SubexcedentFunction::zero(5), vec![0; 5]).unwrap();
        assert_eq!(z.inv(), 0);
        assert_eq!(z.total_weight(), 0);
        assert_eq!(z.lc(), comp(&[5]));
        assert_eq!(z.dc(), comp(&[5]));

        // a null weight gives the plain subexcedent statistics
        let u = sf("540300200");
        let x = DecreasingWeightedSf::new(u.clone(), vec![0; 9]).unwrap();
        assert_eq!(x.dc(), u.dc());
        assert_eq!(x.lc(), u.lc());
    }

    #[test]
    fn dwsf_validation_matches_max_weight() {
        // a weight validates iff it is componentwise below the bound
        let u = sf("540300200");
        let bounds = u.max_weight().unwrap();
        assert!(DecreasingWeightedSf::new(u.clone(), bounds.clone()).is_ok());
        assert!(DecreasingWeightedSf::new(u.clone(), vec![0, 0, 0, 0, 0, 2, 0, 0, 0]).is_err());
        let mut over = bounds.clone();
        over[2] += 1;
        assert!(DecreasingWeightedSf::new(u.clone(), over).is_err());
        assert!(DecreasingWeightedSf::new(sf("315503200"), vec![0; 9]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let x: DecreasingWeightedSf = "540300200;002201000".parse().unwrap();
        assert_eq!(x.to_string(), "5 4 0 3 0 0 2 0 0;0 0 2 2 0 1 0 0 0");
        assert!("540300200".parse::<DecreasingWeightedSf>().is_err());
        assert!("110;000".parse::<DecreasingWeightedSf>().is_err());
    }
}
