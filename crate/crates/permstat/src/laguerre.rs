use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::text;

/// One step of a Laguerre history: a Motzkin step with two kinds of
/// horizontal moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LaguerreStep {
    Up,
    Down,
    HorizSolid,
    HorizDashed,
}

/// Which weight regime a history obeys.
///
/// `Laguerre` histories bound the weight by the step height for up and
/// solid-horizontal steps and by height minus one for down and
/// dashed-horizontal steps; `Large` histories allow the full height
/// everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LaguerreKind {
    Laguerre,
    Large,
}

impl fmt::Display for LaguerreKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LaguerreKind::Laguerre => "laguerre",
            LaguerreKind::Large => "large",
        })
    }
}

/// A weighted Motzkin path with two kinds of horizontal steps and
/// height-bounded weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaguerreHistory {
    steps: Vec<LaguerreStep>,
    weight: Vec<usize>,
    kind: LaguerreKind,
}

impl LaguerreHistory {
    pub fn new(steps: Vec<LaguerreStep>, weight: Vec<usize>, kind: LaguerreKind) -> Result<Self> {
        if weight.len() != steps.len() {
            return Err(Error::invalid(
                "Laguerre history",
                format!(
                    "weight length {} differs from step count {}",
                    weight.len(),
                    steps.len()
                ),
            ));
        }
        let mut height: usize = 0;
        for (i, (&s, &w)) in steps.iter().zip(&weight).enumerate() {
            let bound = match (kind, s) {
                (LaguerreKind::Large, _)
                | (LaguerreKind::Laguerre, LaguerreStep::Up | LaguerreStep::HorizSolid) => {
                    Some(height)
                }
                (LaguerreKind::Laguerre, LaguerreStep::Down | LaguerreStep::HorizDashed) => {
                    height.checked_sub(1)
                }
            };
            match bound {
                Some(b) if w <= b => {}
                Some(b) => {
                    return Err(Error::invalid(
                        "Laguerre history",
                        format!("weight {w} at step {} exceeds the bound {b}", i + 1),
                    ))
                }
                None => {
                    return Err(Error::invalid(
                        "Laguerre history",
                        format!("step {} admits no weight at height 0", i + 1),
                    ))
                }
            }
            height = match s {
                LaguerreStep::Up => height + 1,
                LaguerreStep::Down => height.checked_sub(1).ok_or_else(|| {
                    Error::invalid(
                        "Laguerre history",
                        format!("path dips below the axis at step {}", i + 1),
                    )
                })?,
                LaguerreStep::HorizSolid | LaguerreStep::HorizDashed => height,
            };
        }
        if height != 0 {
            return Err(Error::invalid(
                "Laguerre history",
                format!("path ends at height {height}, not 0"),
            ));
        }
        Ok(LaguerreHistory {
            steps,
            weight,
            kind,
        })
    }

    pub fn size(&self) -> usize {
        self.steps.len()
    }

    pub fn steps(&self) -> &[LaguerreStep] {
        &self.steps
    }

    pub fn weight(&self) -> &[usize] {
        &self.weight
    }

    pub fn kind(&self) -> LaguerreKind {
        self.kind
    }

    pub fn total_weight(&self) -> usize {
        self.weight.iter().sum()
    }

    /// Height before each step.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut height: usize = 0;
        for &s in &self.steps {
            out.push(height);
            height = match s {
                LaguerreStep::Up => height + 1,
                LaguerreStep::Down => height - 1,
                _ => height,
            };
        }
        out
    }
}

impl fmt::Display for LaguerreHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                LaguerreStep::Up => "U",
                LaguerreStep::Down => "D",
                LaguerreStep::HorizSolid => "H",
                LaguerreStep::HorizDashed => "h",
            })?;
        }
        write!(f, ";{};{}", text::join_usize_word(&self.weight), self.kind)
    }
}

impl FromStr for LaguerreHistory {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut fields = s.splitn(3, ';');
        let (Some(steps_txt), Some(weight_txt), Some(kind_txt)) =
            (fields.next(), fields.next(), fields.next())
        else {
            return Err(ParseError::new(1, "expected \"<steps>;<weights>;<kind>\""));
        };
        let mut steps = Vec::with_capacity(steps_txt.len());
        for (i, c) in steps_txt.trim().chars().enumerate() {
            steps.push(match c {
                'U' => LaguerreStep::Up,
                'D' => LaguerreStep::Down,
                'H' => LaguerreStep::HorizSolid,
                'h' => LaguerreStep::HorizDashed,
                other => {
                    return Err(ParseError::new(
                        i + 1,
                        format!("invalid step {other:?}, expected U, D, H or h"),
                    ))
                }
            });
        }
        let weight = text::parse_usize_word(weight_txt)?;
        let kind = match kind_txt.trim() {
            "laguerre" => LaguerreKind::Laguerre,
            "large" => LaguerreKind::Large,
            other => {
                return Err(ParseError::new(
                    1,
                    format!("invalid kind {other:?}, expected laguerre or large"),
                ))
            }
        };
        LaguerreHistory::new(steps, weight, kind).map_err(|e| ParseError::new(1, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Both running examples: a Laguerre history of size 9 and a large
    // Laguerre history of size 8.
    pub(crate) const LH9: &str = "UUHUDDhDH;0 0 2 2 0 1 0 0 0;laguerre";
    pub(crate) const LLH8: &str = "UUHhDDhH;0 0 2 2 0 1 0 0;large";

    #[test]
    fn parses_running_examples() {
        let lh: LaguerreHistory = LH9.parse().unwrap();
        assert_eq!(lh.size(), 9);
        assert_eq!(lh.kind(), LaguerreKind::Laguerre);
        assert_eq!(lh.total_weight(), 5);
        assert_eq!(lh.heights(), vec![0, 1, 2, 2, 3, 2, 1, 1, 0]);

        let llh: LaguerreHistory = LLH8.parse().unwrap();
        assert_eq!(llh.size(), 8);
        assert_eq!(llh.kind(), LaguerreKind::Large);
        assert_eq!(llh.heights(), vec![0, 1, 2, 2, 2, 1, 0, 0]);
    }

    #[test]
    fn weight_bounds_differ_by_kind() {
        // dashed horizontal at height 2 with weight 2: fine for large,
        // out of bounds for laguerre
        assert!("UUhDD;0 0 2 0 0;large".parse::<LaguerreHistory>().is_ok());
        assert!("UUhDD;0 0 2 0 0;laguerre"
            .parse::<LaguerreHistory>()
            .is_err());
        assert!("UUhDD;0 0 1 0 0;laguerre"
            .parse::<LaguerreHistory>()
            .is_ok());
        // dashed at height 0 admits no weight in the laguerre regime
        assert!("h;0;laguerre".parse::<LaguerreHistory>().is_err());
        assert!("h;0;large".parse::<LaguerreHistory>().is_ok());
    }

    #[test]
    fn shape_validation() {
        assert!("DU;0 0;large".parse::<LaguerreHistory>().is_err());
        assert!("UU;0 0;large".parse::<LaguerreHistory>().is_err());
        assert!("UD;0 5;laguerre".parse::<LaguerreHistory>().is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in [LH9, LLH8, "H;0;laguerre"] {
            let lh: LaguerreHistory = s.parse().unwrap();
            assert_eq!(lh.to_string(), s);
        }
    }
}
