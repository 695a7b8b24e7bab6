//! Exhaustive generators for every object family, used by the
//! verification harness and the transition matrices.
//!
//! All streams are lazy, yield each object exactly once in a fixed
//! deterministic order, and refuse sizes beyond a resource guard
//! (default 12, overridable through the `PERMSTAT_MAX_N` environment
//! variable).

use crate::composition::Composition;
use crate::dyck::{DyckPath, Step, WeightedDyckPath};
use crate::error::{Error, Result};
use crate::laguerre::{LaguerreHistory, LaguerreKind, LaguerreStep};
use crate::perm::Permutation;
use crate::subexcedent::{DecreasingWeightedSf, SubexcedentFunction};

/// Largest size the enumeration streams accept. Defaults to 12.
pub fn enumeration_limit() -> usize {
    read_limit().unwrap_or(12)
}

/// Largest size the transition-matrix builders accept. Defaults to 9.
pub fn matrix_limit() -> usize {
    read_limit().unwrap_or(9)
}

fn read_limit() -> Option<usize> {
    std::env::var("PERMSTAT_MAX_N").ok()?.trim().parse().ok()
}

fn guard(n: usize) -> Result<()> {
    let limit = enumeration_limit();
    if n > limit {
        Err(Error::ResourceLimit {
            requested: n,
            limit,
        })
    } else {
        Ok(())
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The `n`-th Catalan number, by the convolution recurrence
/// `C_0 = 1`, `C_{m+1} = sum C_i C_{m-i}`.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64];
    for m in 0..n {
        let next = (0..=m).map(|i| c[i] * c[m - i]).sum();
        c.push(next);
    }
    c[n]
}

// ---------------------------------------------------------------------------
// permutations
// ---------------------------------------------------------------------------

/// All `n!` permutations of size `n`, in lexicographic order.
pub fn permutations(n: usize) -> Result<Permutations> {
    guard(n)?;
    Ok(Permutations {
        word: Some((1..=n).collect()),
    })
}

pub struct Permutations {
    word: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let word = self.word.as_mut()?;
        let item = Permutation::new(word.clone()).expect("generator yields valid permutations");
        if !next_permutation_word(word) {
            self.word = None;
        }
        Some(item)
    }
}

/// Advances a word to its lexicographic successor in place; false at
/// the last permutation.
pub(crate) fn next_permutation_word(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// The permutation of lexicographic rank `rank` (0-based) among the
/// `n!` permutations of size `n`, via the factorial number system.
pub(crate) fn permutation_word_from_rank(n: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut word = Vec::with_capacity(n);
    for i in 0..n {
        let place = factorial(n - 1 - i);
        let digit = (rank / place) as usize;
        rank %= place;
        word.push(pool.remove(digit));
    }
    word
}

// ---------------------------------------------------------------------------
// subexcedent functions
// ---------------------------------------------------------------------------

/// All `n!` subexcedent functions of size `n`: every word with
/// `u_i <= n-i`, in ascending odometer order.
pub fn subexcedent_functions(n: usize) -> Result<SubexcedentFunctions> {
    guard(n)?;
    Ok(SubexcedentFunctions {
        entries: Some(vec![0; n]),
    })
}

pub struct SubexcedentFunctions {
    entries: Option<Vec<usize>>,
}

impl Iterator for SubexcedentFunctions {
    type Item = SubexcedentFunction;

    fn next(&mut self) -> Option<SubexcedentFunction> {
        let entries = self.entries.as_mut()?;
        let item = SubexcedentFunction::new(entries.clone())
            .expect("generator yields valid subexcedent functions");
        if !next_subexcedent_word(entries) {
            self.entries = None;
        }
        Some(item)
    }
}

/// Advances a subexcedent word to its odometer successor in place;
/// false at the last word.
pub(crate) fn next_subexcedent_word(entries: &mut [usize]) -> bool {
    let n = entries.len();
    for i in (0..n).rev() {
        if entries[i] < n - 1 - i {
            entries[i] += 1;
            entries[i + 1..].fill(0);
            return true;
        }
    }
    false
}

/// The subexcedent function of rank `rank` (0-based) in odometer
/// order: mixed radix with place values `(n-1-i)!`.
pub(crate) fn subexcedent_word_from_rank(n: usize, mut rank: u64) -> Vec<usize> {
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let place = factorial(n - 1 - i);
        entries.push((rank / place) as usize);
        rank %= place;
    }
    entries
}

// ---------------------------------------------------------------------------
// decreasing subexcedent functions and their weighted family
// ---------------------------------------------------------------------------

/// All decreasing subexcedent functions of size `n`; there are
/// Catalan(n) of them.
pub fn decreasing_subexcedent_functions(n: usize) -> Result<DecreasingSfs> {
    guard(n)?;
    Ok(DecreasingSfs {
        entries: Some(vec![0; n]),
    })
}

pub struct DecreasingSfs {
    entries: Option<Vec<usize>>,
}

impl DecreasingSfs {
    /// Largest value allowed at 0-based position `i` given the prefix:
    /// one below the last nonzero entry, capped by the subexcedent
    /// bound.
    fn bound(entries: &[usize], i: usize) -> usize {
        let n = entries.len();
        let cap = n - 1 - i;
        match entries[..i].iter().rev().find(|&&v| v > 0) {
            Some(&prev) => cap.min(prev - 1),
            None => cap,
        }
    }
}

impl Iterator for DecreasingSfs {
    type Item = SubexcedentFunction;

    fn next(&mut self) -> Option<SubexcedentFunction> {
        let entries = self.entries.as_mut()?;
        let item = SubexcedentFunction::new(entries.clone())
            .expect("generator yields valid subexcedent functions");
        debug_assert!(item.is_decreasing());
        let n = entries.len();
        let mut advanced = false;
        for i in (0..n).rev() {
            if entries[i] + 1 <= Self::bound(entries, i) {
                entries[i] += 1;
                entries[i + 1..].fill(0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.entries = None;
        }
        Some(item)
    }
}

/// All `n!` decreasing weighted subexcedent functions: each decreasing
/// function paired with every weight below its maximum weight.
pub fn decreasing_weighted_sfs(n: usize) -> Result<DecreasingWeightedSfs> {
    let mut sfs = decreasing_subexcedent_functions(n)?;
    let current = sfs.next().map(|sf| {
        let bounds = sf.max_weight().expect("generator yields decreasing words");
        let weight = vec![0; n];
        (sf, bounds, Some(weight))
    });
    Ok(DecreasingWeightedSfs { sfs, current })
}

pub struct DecreasingWeightedSfs {
    sfs: DecreasingSfs,
    current: Option<(SubexcedentFunction, Vec<usize>, Option<Vec<usize>>)>,
}

impl Iterator for DecreasingWeightedSfs {
    type Item = DecreasingWeightedSf;

    fn next(&mut self) -> Option<DecreasingWeightedSf> {
        loop {
            let (sf, bounds, weight_slot) = self.current.as_mut()?;
            if let Some(weight) = weight_slot.as_mut() {
                let item = DecreasingWeightedSf::new(sf.clone(), weight.clone())
                    .expect("generator yields admissible weights");
                if !advance_box(weight, bounds) {
                    *weight_slot = None;
                }
                return Some(item);
            }
            self.current = self.sfs.next().map(|sf| {
                let bounds = sf.max_weight().expect("generator yields decreasing words");
                let n = sf.size();
                (sf, bounds, Some(vec![0; n]))
            });
        }
    }
}

/// Odometer over the box `0..=bounds[i]`; false once the top is
/// reached.
fn advance_box(digits: &mut [usize], bounds: &[usize]) -> bool {
    for i in (0..digits.len()).rev() {
        if digits[i] < bounds[i] {
            digits[i] += 1;
            digits[i + 1..].fill(0);
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Dyck paths and weighted Dyck paths
// ---------------------------------------------------------------------------

/// All Catalan(n) Dyck paths of size `n`, lexicographic with Up < Down.
pub fn dyck_paths(n: usize) -> Result<DyckPaths> {
    guard(n)?;
    let mut steps = vec![Step::Up; 2 * n];
    steps[n..].fill(Step::Down);
    Ok(DyckPaths { steps: Some(steps) })
}

pub struct DyckPaths {
    steps: Option<Vec<Step>>,
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let steps = self.steps.as_mut()?;
        let item = DyckPath::new(steps.clone()).expect("generator yields valid Dyck paths");
        if !advance_dyck(steps) {
            self.steps = None;
        }
        Some(item)
    }
}

/// Advances to the next Dyck word: turn the rightmost feasible Up step
/// into a Down step and refill the suffix minimally (all remaining Up
/// steps, then Down steps).
fn advance_dyck(steps: &mut [Step]) -> bool {
    let total = steps.len();
    let n = total / 2;
    let mut ups = steps.iter().filter(|&&s| s == Step::Up).count();
    let mut downs = total - ups;
    for i in (0..total).rev() {
        match steps[i] {
            Step::Up => ups -= 1,
            Step::Down => downs -= 1,
        }
        // try to place Down at i: needs a spare down and height >= 1
        if steps[i] == Step::Up && downs + 1 <= n && ups >= downs + 1 {
            steps[i] = Step::Down;
            let mut rest_ups = n - ups;
            for slot in steps[i + 1..].iter_mut() {
                *slot = if rest_ups > 0 {
                    rest_ups -= 1;
                    Step::Up
                } else {
                    Step::Down
                };
            }
            return true;
        }
    }
    false
}

/// All `n!` weighted Dyck paths: every path paired with every
/// admissible weight.
pub fn weighted_dyck_paths(n: usize) -> Result<WeightedDyckPaths> {
    let mut paths = dyck_paths(n)?;
    let current = paths.next().map(|p| {
        let bounds = p.weight_bounds();
        (p, bounds, Some(vec![0; n]))
    });
    Ok(WeightedDyckPaths { paths, current })
}

pub struct WeightedDyckPaths {
    paths: DyckPaths,
    current: Option<(DyckPath, Vec<usize>, Option<Vec<usize>>)>,
}

impl Iterator for WeightedDyckPaths {
    type Item = WeightedDyckPath;

    fn next(&mut self) -> Option<WeightedDyckPath> {
        loop {
            let (path, bounds, weight_slot) = self.current.as_mut()?;
            if let Some(weight) = weight_slot.as_mut() {
                let item = WeightedDyckPath::new(path.clone(), weight.clone())
                    .expect("generator yields admissible weights");
                if !advance_box(weight, bounds) {
                    *weight_slot = None;
                }
                return Some(item);
            }
            self.current = self.paths.next().map(|p| {
                let bounds = p.weight_bounds();
                let n = p.size();
                (p, bounds, Some(vec![0; n]))
            });
        }
    }
}

// ---------------------------------------------------------------------------
// compositions
// ---------------------------------------------------------------------------

/// The `2^(n-1)` compositions of `n` in canonical order: descent sets
/// read as bitmasks (bit `i-1` set iff `i` is a descent), ascending.
pub fn compositions(n: usize) -> Result<Vec<Composition>> {
    guard(n)?;
    if n == 0 {
        return Ok(vec![Composition::new(vec![]).unwrap()]);
    }
    Ok((0..(1usize << (n - 1)))
        .map(|mask| {
            let descents = (1..n).filter(|i| mask & (1 << (i - 1)) != 0);
            Composition::from_descents(n, descents).expect("descents lie in 1..n-1")
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Laguerre histories
// ---------------------------------------------------------------------------

/// All Laguerre histories of size `n` and the given kind. There are
/// `n!` of kind `Laguerre` and `(n+1)!` of kind `Large`.
pub fn laguerre_histories(n: usize, kind: LaguerreKind) -> Result<Vec<LaguerreHistory>> {
    guard(n)?;
    let mut shapes = Vec::new();
    let mut current = Vec::with_capacity(n);
    collect_motzkin_shapes(n, 0, &mut current, &mut shapes);
    let mut out = Vec::new();
    for shape in shapes {
        let bounds: Option<Vec<usize>> = {
            let mut height = 0usize;
            let mut bounds = Vec::with_capacity(n);
            let mut feasible = true;
            for &s in &shape {
                let b = match (kind, s) {
                    (LaguerreKind::Large, _)
                    | (LaguerreKind::Laguerre, LaguerreStep::Up | LaguerreStep::HorizSolid) => {
                        Some(height)
                    }
                    (LaguerreKind::Laguerre, LaguerreStep::Down | LaguerreStep::HorizDashed) => {
                        height.checked_sub(1)
                    }
                };
                match b {
                    Some(b) => bounds.push(b),
                    None => {
                        feasible = false;
                        break;
                    }
                }
                height = match s {
                    LaguerreStep::Up => height + 1,
                    LaguerreStep::Down => height - 1,
                    _ => height,
                };
            }
            feasible.then_some(bounds)
        };
        let Some(bounds) = bounds else { continue };
        let mut weight = vec![0usize; n];
        loop {
            out.push(
                LaguerreHistory::new(shape.clone(), weight.clone(), kind)
                    .expect("generator yields admissible weights"),
            );
            if !advance_box(&mut weight, &bounds) {
                break;
            }
        }
    }
    Ok(out)
}

fn collect_motzkin_shapes(
    remaining: usize,
    height: usize,
    current: &mut Vec<LaguerreStep>,
    out: &mut Vec<Vec<LaguerreStep>>,
) {
    if remaining == 0 {
        if height == 0 {
            out.push(current.clone());
        }
        return;
    }
    if height > remaining {
        return; // cannot come back down in time
    }
    for step in [
        LaguerreStep::Up,
        LaguerreStep::Down,
        LaguerreStep::HorizSolid,
        LaguerreStep::HorizDashed,
    ] {
        let next_height = match step {
            LaguerreStep::Up => height + 1,
            LaguerreStep::Down => {
                if height == 0 {
                    continue;
                }
                height - 1
            }
            _ => height,
        };
        current.push(step);
        collect_motzkin_shapes(remaining - 1, next_height, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counting_oracles() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(8), 40320);
        assert_eq!(catalan(0), 1);
        assert_eq!(catalan(3), 5);
        assert_eq!(catalan(12), 208_012);
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).unwrap().count(), 1);
        assert_eq!(permutations(1).unwrap().count(), 1);
        assert_eq!(permutations(3).unwrap().count(), 6);
        assert_eq!(permutations(8).unwrap().count(), 40320);
    }

    #[test]
    fn subexcedent_counts() {
        assert_eq!(subexcedent_functions(1).unwrap().count(), 1);
        assert_eq!(subexcedent_functions(3).unwrap().count(), 6);
        assert_eq!(subexcedent_functions(8).unwrap().count(), 40320);
        let singleton: Vec<_> = subexcedent_functions(1).unwrap().collect();
        assert_eq!(singleton[0].entries(), &[0]);
    }

    #[test]
    fn decreasing_counts_match_catalan() {
        for n in 0..=9 {
            assert_eq!(
                decreasing_subexcedent_functions(n).unwrap().count() as u64,
                catalan(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn weighted_families_count_factorial() {
        for n in 0..=6 {
            assert_eq!(
                decreasing_weighted_sfs(n).unwrap().count() as u64,
                factorial(n),
                "dwsf n = {n}"
            );
            assert_eq!(
                weighted_dyck_paths(n).unwrap().count() as u64,
                factorial(n),
                "wdp n = {n}"
            );
        }
    }

    #[test]
    fn dyck_counts_match_catalan() {
        for n in 0..=9 {
            assert_eq!(dyck_paths(n).unwrap().count() as u64, catalan(n), "n = {n}");
        }
    }

    #[test]
    fn composition_order() {
        let c3: Vec<String> = compositions(3)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(c3, vec!["(3)", "(1,2)", "(2,1)", "(1,1,1)"]);
        let c1: Vec<String> = compositions(1)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(c1, vec!["(1)"]);
        // index i has descent bitmask i
        for (i, c) in compositions(6).unwrap().iter().enumerate() {
            assert_eq!(c.descent_bitmask(), i);
        }
    }

    #[test]
    fn laguerre_counts() {
        for n in 0..=6 {
            assert_eq!(
                laguerre_histories(n, LaguerreKind::Laguerre).unwrap().len() as u64,
                factorial(n),
                "laguerre n = {n}"
            );
            assert_eq!(
                laguerre_histories(n, LaguerreKind::Large).unwrap().len() as u64,
                factorial(n + 1),
                "large n = {n}"
            );
        }
    }

    #[test]
    fn streams_have_no_duplicates() {
        for n in 0..=6 {
            let perms: Vec<_> = permutations(n).unwrap().collect();
            assert_eq!(perms.iter().collect::<HashSet<_>>().len(), perms.len());
            let sfs: Vec<_> = subexcedent_functions(n).unwrap().collect();
            assert_eq!(sfs.iter().collect::<HashSet<_>>().len(), sfs.len());
            let dwsfs: Vec<_> = decreasing_weighted_sfs(n).unwrap().collect();
            assert_eq!(dwsfs.iter().collect::<HashSet<_>>().len(), dwsfs.len());
            let wdps: Vec<_> = weighted_dyck_paths(n).unwrap().collect();
            assert_eq!(wdps.iter().collect::<HashSet<_>>().len(), wdps.len());
        }
    }

    #[test]
    fn ranking_agrees_with_iteration_order() {
        let n = 5;
        for (rank, sigma) in permutations(n).unwrap().enumerate() {
            assert_eq!(
                permutation_word_from_rank(n, rank as u64),
                sigma.word(),
                "rank {rank}"
            );
        }
        for (rank, u) in subexcedent_functions(n).unwrap().enumerate() {
            assert_eq!(
                subexcedent_word_from_rank(n, rank as u64),
                u.entries(),
                "rank {rank}"
            );
        }
    }

    #[test]
    fn resource_guard_refuses_large_sizes() {
        assert!(matches!(
            permutations(13),
            Err(Error::ResourceLimit { requested: 13, limit: 12 })
        ));
        assert!(subexcedent_functions(13).is_err());
        assert!(dyck_paths(13).is_err());
        assert!(decreasing_subexcedent_functions(13).is_err());
    }
}
