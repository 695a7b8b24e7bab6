//! The verification suites: exhaustive round-trips, statistic
//! transport, tree preservation, left-to-right maxima, counting
//! identities, and the matrix equidistribution itself.
//!
//! Each suite returns one [`Check`] per verified statement with a
//! deterministic detail string, so reports are byte-identical across
//! runs and worker counts.

use crate::bijections::{
    big_phi, big_psi, dsf_to_parking, laguerre_to_wdp, phi1, phi1_inv, phi2, phi2_inv, psi,
    psi_fv, psi_fv0, psi_fv0_inv, psi_fv_inv, wdp_to_laguerre,
};
use crate::dyck::{Convention, DyckPath, Step, WeightedDyckPath};
use crate::enumeration::{
    self, catalan, decreasing_weighted_sfs, dyck_paths, enumeration_limit, factorial,
    laguerre_histories, matrix_limit, permutations, subexcedent_functions, weighted_dyck_paths,
};
use crate::laguerre::{LaguerreHistory, LaguerreKind, LaguerreStep};
use crate::matrix::verify_equidistribution;
use crate::perm::Permutation;
use crate::subexcedent::{DecreasingWeightedSf, SubexcedentFunction};
use crate::sylvester::{bst_from_perm, bst_from_wdp, BstMode};

/// Outcome of one verified statement.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl Check {
    fn pass(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            details: details.into(),
        }
    }

    fn fail(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            details: details.into(),
        }
    }

    fn from_failures(name: impl Into<String>, cases: u64, failures: Vec<String>) -> Self {
        if failures.is_empty() {
            Check::pass(name, format!("{cases} cases"))
        } else {
            Check::fail(
                name,
                format!(
                    "{} of {cases} cases failed; first: {}",
                    failures.len(),
                    failures[0]
                ),
            )
        }
    }
}

/// One of the selectable verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Theorem,
    Roundtrip,
    Transport,
    Sylvester,
    Lrm,
    Counts,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Theorem,
        CheckKind::Roundtrip,
        CheckKind::Transport,
        CheckKind::Sylvester,
        CheckKind::Lrm,
        CheckKind::Counts,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Theorem => "theorem",
            CheckKind::Roundtrip => "roundtrip",
            CheckKind::Transport => "transport",
            CheckKind::Sylvester => "sylvester",
            CheckKind::Lrm => "lrm",
            CheckKind::Counts => "counts",
        }
    }
}

/// Runs one suite with sizes capped at `n_max` (each statement also
/// clamps to its own bound). `jobs` only affects matrix tabulation.
pub fn run_check(kind: CheckKind, n_max: usize, jobs: usize) -> Vec<Check> {
    match kind {
        CheckKind::Theorem => check_theorem(n_max, jobs),
        CheckKind::Roundtrip => check_roundtrip(n_max),
        CheckKind::Transport => check_transport(n_max),
        CheckKind::Sylvester => check_sylvester(n_max),
        CheckKind::Lrm => check_lrm(n_max),
        CheckKind::Counts => check_counts(n_max, jobs),
    }
}

/// Runs every suite in order.
pub fn run_all(n_max: usize, jobs: usize) -> Vec<Check> {
    CheckKind::ALL
        .iter()
        .flat_map(|&k| run_check(k, n_max, jobs))
        .collect()
}

/// Matrix equidistribution: the `sf` and `perm0` matrices equal the
/// `perm` matrix cell-wise for every size up to `n_max`, and all grand
/// totals at `q = 1` are `n!`.
pub fn check_theorem(n_max: usize, jobs: usize) -> Vec<Check> {
    let bound = n_max.min(matrix_limit());
    (1..=bound)
        .map(|n| {
            let report = verify_equidistribution(n, jobs).expect("size passed the guard");
            let name = format!("theorem: matrices agree at n={n}");
            if report.passed() {
                Check::pass(
                    name,
                    format!("sf == perm, perm0 == perm, totals {}", factorial(n)),
                )
            } else {
                Check::fail(
                    name,
                    format!(
                        "sf vs perm first difference {:?}, perm0 vs perm {:?}, totals {:?}",
                        report.sf_vs_perm, report.perm0_vs_perm, report.totals
                    ),
                )
            }
        })
        .collect()
}

/// Every bijection composed with its inverse is the identity:
/// exhaustively for sizes up to `min(n_max, 7)`, on 1000 random
/// size-12 objects per map, and the involution (with its preserved
/// meeting heights) on all Dyck paths of size up to `min(n_max+1, 9)`.
pub fn check_roundtrip(n_max: usize) -> Vec<Check> {
    let bound = n_max.min(7).min(enumeration_limit());
    let mut checks = Vec::new();

    // Françon-Viennot, both conventions
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=bound {
        for sigma in permutations(n).expect("guarded") {
            cases += 2;
            if psi_fv_inv(&psi_fv(&sigma)) != sigma {
                failures.push(format!("psi_fv on {sigma}"));
            }
            if psi_fv0_inv(&psi_fv0(&sigma)) != sigma {
                failures.push(format!("psi_fv0 on {sigma}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("roundtrip: psi_fv and psi_fv0 invert, exhaustive n<={bound}"),
        cases,
        failures,
    ));

    // phi1 from the subexcedent side, phi1/phi2 from the weighted side
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=bound {
        for u in subexcedent_functions(n).expect("guarded") {
            cases += 1;
            if phi1_inv(&phi1(&u)) != u {
                failures.push(format!("phi1 on {u}"));
            }
        }
        for x in decreasing_weighted_sfs(n).expect("guarded") {
            cases += 2;
            if phi1(&phi1_inv(&x)) != x {
                failures.push(format!("phi1_inv on {x}"));
            }
            if phi2_inv(&phi2(&x)) != x {
                failures.push(format!("phi2 on {x}"));
            }
        }
        for x in weighted_dyck_paths(n).expect("guarded") {
            cases += 1;
            if phi2(&phi2_inv(&x)) != x {
                failures.push(format!("phi2_inv on {x}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("roundtrip: phi1 and phi2 invert, exhaustive n<={bound}"),
        cases,
        failures,
    ));

    // Laguerre conversions, both kinds, both directions
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=bound {
        for kind in [LaguerreKind::Laguerre, LaguerreKind::Large] {
            for history in laguerre_histories(n, kind).expect("guarded") {
                cases += 1;
                let back = wdp_to_laguerre(&laguerre_to_wdp(&history), kind)
                    .expect("conversion stays in range");
                if back != history {
                    failures.push(format!("laguerre {history}"));
                }
            }
        }
        for x in weighted_dyck_paths(n).expect("guarded") {
            cases += 1;
            if laguerre_to_wdp(&wdp_to_laguerre(&x, LaguerreKind::Laguerre).unwrap()) != x {
                failures.push(format!("wdp {x} via laguerre"));
            }
            if n >= 1 {
                cases += 1;
                if laguerre_to_wdp(&wdp_to_laguerre(&x, LaguerreKind::Large).unwrap()) != x {
                    failures.push(format!("wdp {x} via large"));
                }
            }
        }
    }
    checks.push(Check::from_failures(
        format!("roundtrip: Laguerre conversions invert, exhaustive n<={bound}"),
        cases,
        failures,
    ));

    // the involution: self-inverse and meeting heights preserved
    let psi_bound = (n_max + 1).min(9).min(enumeration_limit());
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=psi_bound {
        for path in dyck_paths(n).expect("guarded") {
            cases += 1;
            let x = WeightedDyckPath::new(path.clone(), vec![0; n]).expect("zero weight fits");
            let y = psi(&x);
            if psi(&y) != x {
                failures.push(format!("psi not involutive on {path}"));
            }
            if y.path().meeting_heights() != path.meeting_heights() {
                failures.push(format!("psi changed heights of {path}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("roundtrip: psi is an involution preserving heights, n<={psi_bound}"),
        cases,
        failures,
    ));

    // big_phi is injective (hence bijective by counting)
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=bound {
        let mut images = std::collections::HashSet::new();
        let mut count = 0u64;
        for u in subexcedent_functions(n).expect("guarded") {
            count += 1;
            images.insert(big_phi(&u));
        }
        cases += count;
        if images.len() as u64 != count {
            failures.push(format!("big_phi not injective at n={n}"));
        }
    }
    checks.push(Check::from_failures(
        format!("roundtrip: big_phi is a bijection, exhaustive n<={bound}"),
        cases,
        failures,
    ));

    // the parking map is injective on decreasing subexcedent functions
    let parking_bound = n_max.min(8).min(enumeration_limit());
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=parking_bound {
        let mut images = std::collections::HashSet::new();
        let mut count = 0u64;
        for u in enumeration::decreasing_subexcedent_functions(n).expect("guarded") {
            count += 1;
            images.insert(dsf_to_parking(&u).expect("input is decreasing"));
        }
        cases += count;
        if images.len() as u64 != count {
            failures.push(format!("parking map not injective at n={n}"));
        }
    }
    checks.push(Check::from_failures(
        format!("roundtrip: parking map is injective, exhaustive n<={parking_bound}"),
        cases,
        failures,
    ));

    checks.push(random_roundtrips(12.min(enumeration_limit()), 1000));
    checks
}

/// 1000 random objects of size 12 through every map and back.
fn random_roundtrips(size: usize, rounds: usize) -> Check {
    let mut rng = SplitMix64::new(0x5EED_CA7A_1A9);
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for _ in 0..rounds {
        let sigma = random_permutation(size, &mut rng);
        cases += 2;
        if psi_fv_inv(&psi_fv(&sigma)) != sigma {
            failures.push(format!("psi_fv on {sigma}"));
        }
        if psi_fv0_inv(&psi_fv0(&sigma)) != sigma {
            failures.push(format!("psi_fv0 on {sigma}"));
        }

        let u = random_subexcedent(size, &mut rng);
        cases += 1;
        if phi1_inv(&phi1(&u)) != u {
            failures.push(format!("phi1 on {u}"));
        }

        let d = random_dwsf(size, &mut rng);
        cases += 2;
        if phi2_inv(&phi2(&d)) != d {
            failures.push(format!("phi2 on {d}"));
        }
        if phi1(&phi1_inv(&d)) != d {
            failures.push(format!("phi1_inv on {d}"));
        }

        let x = random_wdp(size, &mut rng);
        cases += 4;
        if phi2(&phi2_inv(&x)) != x {
            failures.push(format!("phi2_inv on {x}"));
        }
        if psi(&psi(&x)) != x {
            failures.push(format!("psi on {x}"));
        }
        for kind in [LaguerreKind::Laguerre, LaguerreKind::Large] {
            if laguerre_to_wdp(&wdp_to_laguerre(&x, kind).unwrap()) != x {
                failures.push(format!("wdp {x} via {kind}"));
            }
        }

        for kind in [LaguerreKind::Laguerre, LaguerreKind::Large] {
            let history = random_laguerre(size, kind, &mut rng);
            cases += 1;
            if wdp_to_laguerre(&laguerre_to_wdp(&history), kind).unwrap() != history {
                failures.push(format!("laguerre {history}"));
            }
        }
    }
    Check::from_failures(
        format!("roundtrip: {rounds} random size-{size} objects per map"),
        cases,
        failures,
    )
}

/// The five statistic-transport identities, exhaustively up to
/// `min(n_max, 7)`, plus the composed maps' triples.
pub fn check_transport(n_max: usize) -> Vec<Check> {
    let bound = n_max.min(7).min(enumeration_limit());
    let mut checks = Vec::new();

    // (a) through psi_fv: tw = tot, GC = GC, DC = Rec
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=bound {
        for sigma in permutations(n).expect("guarded") {
            cases += 1;
            let x = psi_fv(&sigma);
            if x.total_weight() != sigma.tot()
                || x.gc(Convention::Standard) != sigma.gc()
                || x.dc(Convention::Standard) != sigma.rec()
            {
                failures.push(format!("psi_fv on {sigma}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("transport: (tot, GC, Rec) through psi_fv, n<={bound}"),
        cases,
        failures,
    ));

    // (b) through psi: tw = tw, GC0 of image = GC, DC0 of image = DC
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=bound {
        for x in weighted_dyck_paths(n).expect("guarded") {
            cases += 1;
            let y = psi(&x);
            if y.total_weight() != x.total_weight()
                || y.gc(Convention::Type0) != x.gc(Convention::Standard)
                || y.dc(Convention::Type0) != x.dc(Convention::Standard)
            {
                failures.push(format!("psi on {x}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("transport: (tw, GC->GC0, DC->DC0) through psi, n<={bound}"),
        cases,
        failures,
    ));

    // (c) through phi1: tw = inv - maj(mirror(LC)), DC = DC, LC = LC
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=bound {
        for u in subexcedent_functions(n).expect("guarded") {
            cases += 1;
            let y = phi1(&u);
            let alpha = u.inv() - u.lc().mirror().maj();
            if y.total_weight() != alpha || y.dc() != u.dc() || y.lc() != u.lc() {
                failures.push(format!("phi1 on {u}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("transport: (inv-maj, DC, LC) through phi1, n<={bound}"),
        cases,
        failures,
    ));

    // (d) through phi2: tw = tw, GC0 of image = LC, DC0 of image = DC
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=bound {
        for x in decreasing_weighted_sfs(n).expect("guarded") {
            cases += 1;
            let y = phi2(&x);
            if y.total_weight() != x.total_weight()
                || y.gc(Convention::Type0) != x.lc()
                || y.dc(Convention::Type0) != x.dc()
            {
                failures.push(format!("phi2 on {x}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("transport: (tw, LC->GC0, DC->DC0) through phi2, n<={bound}"),
        cases,
        failures,
    ));

    // (e) through psi_fv0: GC0 = GC0, DC0 of image = Rec, tw = tot
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=bound {
        for sigma in permutations(n).expect("guarded") {
            cases += 1;
            let y = psi_fv0(&sigma);
            if y.total_weight() != sigma.tot()
                || y.gc(Convention::Type0) != sigma.gc0()
                || y.dc(Convention::Type0) != sigma.rec()
            {
                failures.push(format!("psi_fv0 on {sigma}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("transport: (tot, GC0, Rec) through psi_fv0, n<={bound}"),
        cases,
        failures,
    ));

    // composed maps carry the full triples
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=bound {
        for u in subexcedent_functions(n).expect("guarded") {
            cases += 1;
            let sigma = big_phi(&u);
            let alpha = u.inv() - u.lc().mirror().maj();
            if sigma.gc() != u.lc() || sigma.rec() != u.dc() || sigma.tot() != alpha {
                failures.push(format!("big_phi on {u}"));
            }
        }
        for sigma in permutations(n).expect("guarded") {
            cases += 1;
            let tau = big_psi(&sigma);
            if tau.rec() != sigma.rec() || tau.tot() != sigma.tot() || tau.gc0() != sigma.gc()
            {
                failures.push(format!("big_psi on {sigma}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("transport: big_phi and big_psi carry their triples, n<={bound}"),
        cases,
        failures,
    ));

    // tot splits into the per-value counts
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=bound {
        for sigma in permutations(n).expect("guarded") {
            cases += 1;
            if sigma.tot_table().iter().sum::<usize>() != sigma.tot() {
                failures.push(format!("tot_k sum on {sigma}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("transport: sum of tot_k equals tot, n<={bound}"),
        cases,
        failures,
    ));

    checks
}

/// Tree preservation: the permutation bijection keeps the binary
/// search tree, and both weighted-Dyck-path constructions agree with
/// the permutation one.
pub fn check_sylvester(n_max: usize) -> Vec<Check> {
    let psi_bound = n_max.min(8).min(enumeration_limit());
    let mut checks = Vec::new();

    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=psi_bound {
        for sigma in permutations(n).expect("guarded") {
            cases += 1;
            if bst_from_perm(&sigma) != bst_from_perm(&big_psi(&sigma)) {
                failures.push(format!("big_psi changed the tree of {sigma}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("sylvester: big_psi preserves the binary search tree, n<={psi_bound}"),
        cases,
        failures,
    ));

    let bound = n_max.min(7).min(enumeration_limit());
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=bound {
        for sigma in permutations(n).expect("guarded") {
            cases += 2;
            let tree = bst_from_perm(&sigma);
            if bst_from_wdp(&psi_fv(&sigma), BstMode::Direct) != tree {
                failures.push(format!("direct tree of psi_fv({sigma})"));
            }
            if bst_from_wdp(&psi_fv0(&sigma), BstMode::Shifted) != tree {
                failures.push(format!("shifted tree of psi_fv0({sigma})"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("sylvester: path trees match permutation trees, n<={bound}"),
        cases,
        failures,
    ));

    checks
}

/// Zero positions of a subexcedent function are the left-to-right
/// maxima of its image under the full chain.
pub fn check_lrm(n_max: usize) -> Vec<Check> {
    let bound = n_max.min(7).min(enumeration_limit());
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=bound {
        for u in subexcedent_functions(n).expect("guarded") {
            cases += 1;
            if u.zero_positions() != big_phi(&u).ltr_maxima() {
                failures.push(format!("zero positions of {u}"));
            }
        }
    }
    vec![Check::from_failures(
        format!("lrm: zero positions map to left-to-right maxima, n<={bound}"),
        cases,
        failures,
    )]
}

/// Counting identities: Catalan counts for decreasing subexcedent
/// functions, factorial counts for the weighted families, and matrix
/// grand totals.
pub fn check_counts(n_max: usize, jobs: usize) -> Vec<Check> {
    let mut checks = Vec::new();

    let catalan_bound = 12.min(enumeration_limit());
    let mut failures = Vec::new();
    for n in 0..=catalan_bound {
        let count = enumeration::decreasing_subexcedent_functions(n)
            .expect("guarded")
            .count() as u64;
        if count != catalan(n) {
            failures.push(format!("n={n}: {count} != {}", catalan(n)));
        }
    }
    checks.push(Check::from_failures(
        format!("counts: decreasing subexcedent functions are Catalan, n<={catalan_bound}"),
        (catalan_bound + 1) as u64,
        failures,
    ));

    let bound = n_max.min(8).min(enumeration_limit());
    let mut failures = Vec::new();
    for n in 0..=bound {
        let expected = factorial(n);
        let counts = [
            permutations(n).expect("guarded").count() as u64,
            subexcedent_functions(n).expect("guarded").count() as u64,
            decreasing_weighted_sfs(n).expect("guarded").count() as u64,
            weighted_dyck_paths(n).expect("guarded").count() as u64,
        ];
        if counts.iter().any(|&c| c != expected) {
            failures.push(format!("n={n}: {counts:?} != {expected}"));
        }
    }
    checks.push(Check::from_failures(
        format!("counts: all four object families are factorial, n<={bound}"),
        (bound + 1) as u64,
        failures,
    ));

    let matrix_bound = n_max.min(matrix_limit());
    let mut failures = Vec::new();
    for n in 1..=matrix_bound {
        let report = verify_equidistribution(n, jobs).expect("size passed the guard");
        if report.totals.iter().any(|&t| t != factorial(n)) {
            failures.push(format!("n={n}: totals {:?}", report.totals));
        }
    }
    checks.push(Check::from_failures(
        format!("counts: matrix grand totals at q=1 are factorial, n<={matrix_bound}"),
        matrix_bound as u64,
        failures,
    ));

    checks
}

// ---------------------------------------------------------------------------
// deterministic random objects
// ---------------------------------------------------------------------------

/// SplitMix64; deterministic sampling for the randomized round-trips.
struct SplitMix64(u64);

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..n` (`n > 0`).
    fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

fn random_permutation(n: usize, rng: &mut SplitMix64) -> Permutation {
    let mut word: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        word.swap(i, rng.below(i + 1));
    }
    Permutation::new(word).expect("shuffle yields a permutation")
}

fn random_subexcedent(n: usize, rng: &mut SplitMix64) -> SubexcedentFunction {
    let entries = (0..n).map(|i| rng.below(n - i)).collect();
    SubexcedentFunction::new(entries).expect("bounded digits are subexcedent")
}

fn random_dyck_path(n: usize, rng: &mut SplitMix64) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * n);
    let (mut ups, mut height) = (0usize, 0usize);
    for pos in 0..2 * n {
        let remaining = 2 * n - pos;
        let up_ok = ups < n && height + 1 <= remaining - 1;
        let down_ok = height > 0;
        let up = up_ok && (!down_ok || rng.coin());
        if up {
            ups += 1;
            height += 1;
            steps.push(Step::Up);
        } else {
            height -= 1;
            steps.push(Step::Down);
        }
    }
    DyckPath::new(steps).expect("feasibility-guided walk yields a Dyck path")
}

fn random_wdp(n: usize, rng: &mut SplitMix64) -> WeightedDyckPath {
    let path = random_dyck_path(n, rng);
    let weight = path
        .weight_bounds()
        .into_iter()
        .map(|b| rng.below(b + 1))
        .collect();
    WeightedDyckPath::new(path, weight).expect("weights drawn within bounds")
}

fn random_dwsf(n: usize, rng: &mut SplitMix64) -> DecreasingWeightedSf {
    let mut entries = vec![0usize; n];
    let mut prev = usize::MAX;
    for (i, slot) in entries.iter_mut().enumerate() {
        let cap = (n - 1 - i).min(prev.saturating_sub(1));
        if cap > 0 && rng.coin() {
            *slot = 1 + rng.below(cap);
            prev = *slot;
        }
    }
    let sf = SubexcedentFunction::new(entries).expect("bounded digits are subexcedent");
    let weight = sf
        .max_weight()
        .expect("construction is decreasing")
        .into_iter()
        .map(|b| rng.below(b + 1))
        .collect();
    DecreasingWeightedSf::new(sf, weight).expect("weights drawn within bounds")
}

fn random_laguerre(n: usize, kind: LaguerreKind, rng: &mut SplitMix64) -> LaguerreHistory {
    let mut steps = Vec::with_capacity(n);
    let mut weight = Vec::with_capacity(n);
    let mut height = 0usize;
    for pos in 0..n {
        let remaining = n - pos;
        let mut options = Vec::with_capacity(4);
        if height + 1 <= remaining - 1 {
            options.push(LaguerreStep::Up);
        }
        if height >= 1 {
            options.push(LaguerreStep::Down);
        }
        if height <= remaining - 1 {
            options.push(LaguerreStep::HorizSolid);
            // in the laguerre regime a dashed step needs height >= 1
            if kind == LaguerreKind::Large || height >= 1 {
                options.push(LaguerreStep::HorizDashed);
            }
        }
        let step = options[rng.below(options.len())];
        let bound = match (kind, step) {
            (LaguerreKind::Large, _)
            | (LaguerreKind::Laguerre, LaguerreStep::Up | LaguerreStep::HorizSolid) => height,
            (LaguerreKind::Laguerre, _) => height - 1,
        };
        weight.push(rng.below(bound + 1));
        steps.push(step);
        height = match step {
            LaguerreStep::Up => height + 1,
            LaguerreStep::Down => height - 1,
            _ => height,
        };
    }
    LaguerreHistory::new(steps, weight, kind).expect("feasibility-guided walk yields a history")
}
