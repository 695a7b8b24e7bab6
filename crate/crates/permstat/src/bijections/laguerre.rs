use crate::dyck::{DyckPath, Step, WeightedDyckPath};
use crate::error::{Error, Result};
use crate::laguerre::{LaguerreHistory, LaguerreKind, LaguerreStep};

/// Converts a Laguerre history of either kind into a weighted Dyck
/// path.
///
/// Each Motzkin step becomes a pair of Dyck steps (Up -> UU, solid
/// horizontal -> UD, dashed horizontal -> DU, Down -> DD) and the
/// weight is carried. A large history of size `m` additionally gets an
/// Up step prepended, a Down step appended, and a trailing zero weight,
/// yielding a path of size `m + 1`.
pub fn laguerre_to_wdp(history: &LaguerreHistory) -> WeightedDyckPath {
    let large = history.kind() == LaguerreKind::Large;
    let mut steps = Vec::with_capacity(2 * history.size() + 2);
    if large {
        steps.push(Step::Up);
    }
    for &s in history.steps() {
        match s {
            LaguerreStep::Up => steps.extend([Step::Up, Step::Up]),
            LaguerreStep::HorizSolid => steps.extend([Step::Up, Step::Down]),
            LaguerreStep::HorizDashed => steps.extend([Step::Down, Step::Up]),
            LaguerreStep::Down => steps.extend([Step::Down, Step::Down]),
        }
    }
    let mut weight = history.weight().to_vec();
    if large {
        steps.push(Step::Down);
        weight.push(0);
    }
    let path = DyckPath::new(steps).expect("paired Motzkin steps form a Dyck path");
    WeightedDyckPath::new(path, weight).expect("height bounds transfer from the history")
}

/// Inverse of [`laguerre_to_wdp`] for the requested kind.
///
/// The `Large` kind requires a path of size at least 1 (the frame
/// steps are stripped).
pub fn wdp_to_laguerre(x: &WeightedDyckPath, kind: LaguerreKind) -> Result<LaguerreHistory> {
    let n = x.size();
    let steps = x.path().steps();
    let (pair_range, weight) = match kind {
        LaguerreKind::Laguerre => (&steps[..], x.weight().to_vec()),
        LaguerreKind::Large => {
            if n == 0 {
                return Err(Error::invalid(
                    "weighted Dyck path",
                    "a large Laguerre history needs a path of size at least 1",
                ));
            }
            // first step is always Up and last always Down on a Dyck
            // path; the final weight entry is forced to 0
            (&steps[1..2 * n - 1], x.weight()[..n - 1].to_vec())
        }
    };
    let motzkin: Vec<LaguerreStep> = pair_range
        .chunks_exact(2)
        .map(|pair| match (pair[0], pair[1]) {
            (Step::Up, Step::Up) => LaguerreStep::Up,
            (Step::Up, Step::Down) => LaguerreStep::HorizSolid,
            (Step::Down, Step::Up) => LaguerreStep::HorizDashed,
            (Step::Down, Step::Down) => LaguerreStep::Down,
        })
        .collect();
    Ok(LaguerreHistory::new(motzkin, weight, kind)
        .expect("weight bounds transfer from the path"))
}
