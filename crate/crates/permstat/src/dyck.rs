use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, ParseError, Result};
use crate::text;

/// One step of a Dyck path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

/// Which boundary convention a weighted-Dyck-path statistic follows.
///
/// `Standard` reads the statistics matching permutations under the
/// Françon-Viennot bijection; `Type0` reads the shifted variants that
/// appear after the step-swapping involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    Standard,
    Type0,
}

/// A Dyck path: `n` up steps and `n` down steps, never dipping below
/// the horizontal axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: isize = 0;
        for (i, &s) in steps.iter().enumerate() {
            height += match s {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(Error::invalid(
                    "Dyck path",
                    format!("path dips below the axis after step {}", i + 1),
                ));
            }
        }
        if height != 0 {
            return Err(Error::invalid(
                "Dyck path",
                format!("path ends at height {height}, not 0"),
            ));
        }
        Ok(DyckPath { steps })
    }

    /// Size `n`: half the number of steps.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// 1-based step accessor.
    pub fn step(&self, index: usize) -> Step {
        self.steps[index - 1]
    }

    /// Meeting-point heights: `h_i` is the height after step `2i-1`,
    /// where steps `2i-1` and `2i` meet. Every `h_i` is odd.
    pub fn meeting_heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        let mut height: usize = 0;
        for (i, &s) in self.steps.iter().enumerate() {
            height = match s {
                Step::Up => height + 1,
                Step::Down => height - 1,
            };
            if i % 2 == 0 {
                out.push(height);
            }
        }
        out
    }

    /// Per-pair weight bounds `(h_i - 1) / 2`. The division is exact:
    /// a height after an odd number of steps is odd.
    pub fn weight_bounds(&self) -> Vec<usize> {
        self.meeting_heights()
            .into_iter()
            .map(|h| {
                debug_assert!(h % 2 == 1, "meeting height {h} must be odd");
                (h - 1) / 2
            })
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut steps = Vec::with_capacity(s.len());
        for (i, c) in s.trim().chars().enumerate() {
            steps.push(match c {
                'U' | 'u' | '/' => Step::Up,
                'D' | 'd' | '\\' => Step::Down,
                other => {
                    return Err(ParseError::new(
                        i + 1,
                        format!("invalid step {other:?}, expected U or D"),
                    ))
                }
            });
        }
        DyckPath::new(steps).map_err(|e| ParseError::new(1, e.to_string()))
    }
}

/// A Dyck path of size `n` with a weight `w1 ... wn` satisfying
/// `w_i <= (h_i - 1) / 2` at each meeting height.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedDyckPath {
    path: DyckPath,
    weight: Vec<usize>,
}

impl WeightedDyckPath {
    pub fn new(path: DyckPath, weight: Vec<usize>) -> Result<Self> {
        if weight.len() != path.size() {
            return Err(Error::invalid(
                "weighted Dyck path",
                format!(
                    "weight length {} differs from path size {}",
                    weight.len(),
                    path.size()
                ),
            ));
        }
        let bounds = path.weight_bounds();
        for (i, (&w, &b)) in weight.iter().zip(&bounds).enumerate() {
            if w > b {
                return Err(Error::invalid(
                    "weighted Dyck path",
                    format!("weight {w} at position {} exceeds the bound {b}", i + 1),
                ));
            }
        }
        Ok(WeightedDyckPath { path, weight })
    }

    pub fn size(&self) -> usize {
        self.path.size()
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn weight(&self) -> &[usize] {
        &self.weight
    }

    pub fn into_parts(self) -> (DyckPath, Vec<usize>) {
        (self.path, self.weight)
    }

    /// Total weight `tw`: the sum of the weight entries.
    pub fn total_weight(&self) -> usize {
        self.weight.iter().sum()
    }

    /// Descent set.
    ///
    /// Standard: `{i | w_i > w_{i+1}} ∪ {i | w_i = w_{i+1}, D_{2i} = Up}`.
    /// Type 0 replaces the step index `2i` by `2i+1`.
    pub fn descents(&self, convention: Convention) -> BTreeSet<usize> {
        let n = self.size();
        (1..n)
            .filter(|&i| {
                let (wl, wr) = (self.weight[i - 1], self.weight[i]);
                wl > wr
                    || (wl == wr && {
                        let idx = match convention {
                            Convention::Standard => 2 * i,
                            Convention::Type0 => 2 * i + 1,
                        };
                        self.path.step(idx) == Step::Up
                    })
            })
            .collect()
    }

    /// Descent composition (`DC` or `DC⁰`).
    pub fn dc(&self, convention: Convention) -> Composition {
        Composition::from_descents(self.size(), self.descents(convention))
            .expect("descents lie in 1..n-1")
    }

    /// Genocchi descent set.
    ///
    /// Standard: `{i in [2, n] | D_{2i-1} = Down}`.
    /// Type 0: `{i in [1, n-1] | D_{2i} = Down}`.
    pub fn gdes(&self, convention: Convention) -> BTreeSet<usize> {
        let n = self.size();
        match convention {
            Convention::Standard => (2..=n)
                .filter(|&i| self.path.step(2 * i - 1) == Step::Down)
                .collect(),
            Convention::Type0 => (1..n)
                .filter(|&i| self.path.step(2 * i) == Step::Down)
                .collect(),
        }
    }

    /// Genocchi composition (`GC` or `GC⁰`). The standard convention
    /// shifts the descent set down by one; type 0 uses it unshifted.
    pub fn gc(&self, convention: Convention) -> Composition {
        let descents: Vec<usize> = match convention {
            Convention::Standard => self
                .gdes(Convention::Standard)
                .into_iter()
                .map(|d| d - 1)
                .collect(),
            Convention::Type0 => self.gdes(Convention::Type0).into_iter().collect(),
        };
        Composition::from_descents(self.size(), descents)
            .expect("Genocchi descents lie in 1..n-1")
    }
}

impl fmt::Display for WeightedDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.path, text::join_usize_word(&self.weight))
    }
}

impl FromStr for WeightedDyckPath {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let (left, right) = s
            .split_once(';')
            .ok_or_else(|| ParseError::new(1, "expected \"<path>;<weights>\""))?;
        let path: DyckPath = left.parse()?;
        let weight = text::parse_usize_word(right)?;
        WeightedDyckPath::new(path, weight).map_err(|e| ParseError::new(1, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wdp(s: &str) -> WeightedDyckPath {
        s.parse().unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    // The running weighted Dyck path of size 9 and its image under the
    // step-swapping involution.
    const WDP9: &str = "UUUUUDUUDDDDDUDDUD;0 0 2 2 0 1 0 0 0";
    const WDP9_SWAPPED: &str = "UUUUUUDDUDDDDDUUDD;0 0 2 2 0 1 0 0 0";

    #[test]
    fn dyck_validation() {
        assert!("UUDD".parse::<DyckPath>().is_ok());
        assert!("UDDU".parse::<DyckPath>().is_err());
        assert!("UUD".parse::<DyckPath>().is_err());
        assert!("UX".parse::<DyckPath>().is_err());
    }

    #[test]
    fn meeting_heights_and_bounds() {
        let p: DyckPath = "UUUUUDUUDDDDDUDDUD".parse().unwrap();
        assert_eq!(p.meeting_heights(), vec![1, 3, 5, 5, 5, 3, 1, 1, 1]);
        assert_eq!(p.weight_bounds(), vec![0, 1, 2, 2, 2, 1, 0, 0, 0]);
        for heights in [
            "UD".parse::<DyckPath>().unwrap().meeting_heights(),
            "UUDUDD".parse::<DyckPath>().unwrap().meeting_heights(),
            "UUUDDD".parse::<DyckPath>().unwrap().meeting_heights(),
        ] {
            assert!(heights.iter().all(|h| h % 2 == 1));
        }
    }

    #[test]
    fn weight_validation() {
        assert!(WeightedDyckPath::new(
            "UUUDDD".parse().unwrap(),
            vec![0, 1, 0]
        )
        .is_ok());
        // h2 of UUDUDD is 1, so w2 = 1 is out of bounds there
        assert!(WeightedDyckPath::new(
            "UUDUDD".parse().unwrap(),
            vec![0, 1, 0]
        )
        .is_err());
        assert!(WeightedDyckPath::new("UUDD".parse().unwrap(), vec![0]).is_err());
    }

    #[test]
    fn total_weight_examples() {
        assert_eq!(wdp(WDP9).total_weight(), 5);
        assert_eq!(wdp("UUDUDD;0 0 0").total_weight(), 0);
        assert_eq!(wdp("UUUDDD;0 1 0").total_weight(), 1);
    }

    #[test]
    fn descent_compositions() {
        assert_eq!(wdp(WDP9).dc(Convention::Standard), comp(&[1, 3, 2, 1, 2]));
        assert_eq!(
            wdp(WDP9_SWAPPED).dc(Convention::Type0),
            comp(&[1, 3, 2, 1, 2])
        );
        assert_eq!(wdp("UD;0").dc(Convention::Standard), comp(&[1]));
    }

    #[test]
    fn genocchi_compositions() {
        let x = wdp(WDP9);
        assert_eq!(
            x.gdes(Convention::Standard).into_iter().collect::<Vec<_>>(),
            vec![5, 6, 7, 8]
        );
        assert_eq!(x.gc(Convention::Standard), comp(&[4, 1, 1, 1, 2]));
        assert_eq!(
            wdp(WDP9_SWAPPED).gc(Convention::Type0),
            comp(&[4, 1, 1, 1, 2])
        );
        // UUDD: step 3 is Down, so GDes = {2} and GC = (1,1)
        assert_eq!(wdp("UUDD;0 0").gc(Convention::Standard), comp(&[1, 1]));
    }

    #[test]
    fn text_round_trip() {
        let x = wdp(WDP9);
        assert_eq!(x.to_string(), WDP9);
        assert!("UUDD".parse::<WeightedDyckPath>().is_err());
        assert!("UUDD;0 1".parse::<WeightedDyckPath>().is_err());
    }
}
