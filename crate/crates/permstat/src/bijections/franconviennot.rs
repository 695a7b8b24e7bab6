use crate::dyck::{DyckPath, Step, WeightedDyckPath};
use crate::perm::Permutation;

/// The Françon-Viennot bijection from permutations to weighted Dyck
/// paths, with the boundary convention `σ0 = 0`, `σ_{n+1} = n+1`.
///
/// For the value `k` at position `j`: step `2k-1` is Up iff
/// `σ_j < σ_{j+1}`, step `2k` is Down iff `σ_{j-1} < σ_j`, and the
/// weight `w_k` is `tot_k(σ)`, the number of 31-2 patterns where `k`
/// stands for the 2.
pub fn psi_fv(sigma: &Permutation) -> WeightedDyckPath {
    let n = sigma.size();
    let word = sigma.word();
    let pos = sigma.positions();
    let mut steps = vec![Step::Up; 2 * n];
    for k in 1..=n {
        let j = pos[k - 1];
        let right = if j + 1 < n { word[j + 1] } else { n + 1 };
        let left = if j > 0 { word[j - 1] } else { 0 };
        steps[2 * k - 2] = if k < right { Step::Up } else { Step::Down };
        steps[2 * k - 1] = if left < k { Step::Down } else { Step::Up };
    }
    let path = DyckPath::new(steps).expect("Françon-Viennot steps form a Dyck path");
    WeightedDyckPath::new(path, sigma.tot_table())
        .expect("pattern counts satisfy the height bounds")
}

/// Inverse of [`psi_fv`]: rebuild the permutation by substituting
/// placeholders.
///
/// Starting from a single placeholder, the `k`-th step replaces the
/// `(w_k+1)`-st placeholder with `◦k◦`, `k◦`, `◦k` or `k` according to
/// the step pair `(D_{2k-1}, D_{2k})`; the one placeholder left at the
/// end sits in final position and is removed.
///
/// # Panics
///
/// Panics if the required placeholder does not exist or the final
/// placeholder is not last. Both are impossible for a validated
/// weighted Dyck path.
pub fn psi_fv_inv(x: &WeightedDyckPath) -> Permutation {
    let n = x.size();
    let mut slots = run_placeholder_substitution(x, n);
    let last = slots.pop().expect("slot word is never empty");
    assert!(
        last.is_none(),
        "psi_fv_inv: the remaining placeholder must sit in final position"
    );
    let word: Vec<usize> = slots
        .into_iter()
        .map(|s| s.expect("psi_fv_inv: exactly one placeholder may remain"))
        .collect();
    Permutation::new(word).expect("placeholder substitution yields a permutation")
}

/// The type-0 Françon-Viennot map, using the convention
/// `σ0 = σ_{n+1} = 0`.
///
/// The step rules of [`psi_fv`] are applied to the values `1..n-1`
/// only (producing `2(n-1)` steps), an Up step is prepended, a Down
/// step appended, and a trailing 0 added to the weight.
pub fn psi_fv0(sigma: &Permutation) -> WeightedDyckPath {
    let n = sigma.size();
    if n == 0 {
        return WeightedDyckPath::new(DyckPath::new(vec![]).unwrap(), vec![]).unwrap();
    }
    let word = sigma.word();
    let pos = sigma.positions();
    let mut steps = vec![Step::Up; 2 * n];
    steps[0] = Step::Up;
    steps[2 * n - 1] = Step::Down;
    for k in 1..n {
        let j = pos[k - 1];
        let right = if j + 1 < n { word[j + 1] } else { 0 };
        let left = if j > 0 { word[j - 1] } else { 0 };
        // the pair for value k sits at steps (2k, 2k+1) of the framed path
        steps[2 * k - 1] = if k < right { Step::Up } else { Step::Down };
        steps[2 * k] = if left < k { Step::Down } else { Step::Up };
    }
    let mut weight = sigma.tot_table();
    weight[n - 1] = 0;
    let path = DyckPath::new(steps).expect("type-0 Françon-Viennot steps form a Dyck path");
    WeightedDyckPath::new(path, weight).expect("pattern counts satisfy the height bounds")
}

/// Inverse of [`psi_fv0`]: strip the frame steps and the trailing
/// weight entry, run the placeholder substitution for values `1..n-1`,
/// and write `n` into the one remaining placeholder (which may sit
/// anywhere).
///
/// # Panics
///
/// Panics when the placeholder bookkeeping fails; impossible for a
/// validated weighted Dyck path (whose last weight entry is forced
/// to 0).
pub fn psi_fv0_inv(x: &WeightedDyckPath) -> Permutation {
    let n = x.size();
    if n == 0 {
        return Permutation::identity(0);
    }
    assert!(
        x.weight()[n - 1] == 0,
        "psi_fv0_inv: the last weight entry is forced to 0"
    );
    let mut slots = run_placeholder_substitution_framed(x, n - 1);
    let hole = slots
        .iter()
        .position(|s| s.is_none())
        .expect("psi_fv0_inv: exactly one placeholder remains");
    slots[hole] = Some(n);
    let word: Vec<usize> = slots
        .into_iter()
        .map(|s| s.expect("psi_fv0_inv: exactly one placeholder may remain"))
        .collect();
    Permutation::new(word).expect("placeholder substitution yields a permutation")
}

/// Runs the placeholder substitution for values `1..=count`, reading
/// the pair of value `k` at steps `(2k-1, 2k)`.
fn run_placeholder_substitution(x: &WeightedDyckPath, count: usize) -> Vec<Option<usize>> {
    substitute(x, count, |k| (2 * k - 1, 2 * k))
}

/// Same, but reading the pair of value `k` at steps `(2k, 2k+1)` of
/// the framed path.
fn run_placeholder_substitution_framed(x: &WeightedDyckPath, count: usize) -> Vec<Option<usize>> {
    substitute(x, count, |k| (2 * k, 2 * k + 1))
}

fn substitute(
    x: &WeightedDyckPath,
    count: usize,
    pair_at: impl Fn(usize) -> (usize, usize),
) -> Vec<Option<usize>> {
    let mut slots: Vec<Option<usize>> = vec![None];
    for k in 1..=count {
        let (a, b) = pair_at(k);
        let pattern: Vec<Option<usize>> = match (x.path().step(a), x.path().step(b)) {
            (Step::Up, Step::Up) => vec![None, Some(k), None],
            (Step::Up, Step::Down) => vec![Some(k), None],
            (Step::Down, Step::Up) => vec![None, Some(k)],
            (Step::Down, Step::Down) => vec![Some(k)],
        };
        let target = x.weight()[k - 1] + 1;
        let mut seen = 0;
        let idx = slots
            .iter()
            .position(|s| {
                if s.is_none() {
                    seen += 1;
                }
                seen == target
            })
            .unwrap_or_else(|| {
                panic!("placeholder {target} for value {k} does not exist")
            });
        slots.splice(idx..=idx, pattern);
    }
    slots
}
