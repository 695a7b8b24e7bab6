//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see
//! the report.

use std::time::Instant;

use permstat::bijections::{big_phi, big_psi, phi1, phi2, psi, psi_fv_inv};
use permstat::enumeration::{catalan, decreasing_subexcedent_functions};
use permstat::harness::{check_counts, check_lrm, check_roundtrip, check_sylvester, check_transport};
use permstat::matrix::{transition_matrix, MatrixFamily};
use permstat::{DecreasingWeightedSf, Permutation, SubexcedentFunction, WeightedDyckPath};

fn report(criterion: &str, passed: bool, details: &str) {
    println!(
        "acceptance {criterion}: {} — {details}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "{criterion} failed: {details}");
}

fn assert_all(criterion: &str, checks: Vec<permstat::harness::Check>) {
    for check in &checks {
        println!(
            "  {}: {} — {}",
            check.name,
            if check.passed { "pass" } else { "FAIL" },
            check.details
        );
    }
    let passed = checks.iter().all(|c| c.passed);
    let summary = format!("{} statements", checks.len());
    report(criterion, passed, &summary);
}

/// Criterion 1: the worked chain on u = 315503200, exact and fast.
#[test]
fn criterion_1_golden_chain() {
    let u: SubexcedentFunction = "315503200".parse().unwrap();

    // warm-up run, then the timed one
    let _ = big_phi(&u);
    let started = Instant::now();
    let dwsf = phi1(&u);
    let wdp_swapped = phi2(&dwsf);
    let wdp = psi(&wdp_swapped);
    let sigma = psi_fv_inv(&wdp);
    let elapsed = started.elapsed();

    let expected_dwsf: DecreasingWeightedSf = "540300200;002201000".parse().unwrap();
    let expected_swapped: WeightedDyckPath =
        "UUUUUUDDUDDDDDUUDD;0 0 2 2 0 1 0 0 0".parse().unwrap();
    let expected_wdp: WeightedDyckPath = "UUUUUDUUDDDDDUDDUD;0 0 2 2 0 1 0 0 0".parse().unwrap();
    let expected_sigma: Permutation = "528713649".parse().unwrap();
    let expected_psi_image: Permutation = "528971364".parse().unwrap();

    let chain_ok = dwsf == expected_dwsf
        && wdp_swapped == expected_swapped
        && wdp == expected_wdp
        && sigma == expected_sigma
        && big_phi(&u) == expected_sigma
        && big_psi(&expected_sigma) == expected_psi_image;
    let fast = elapsed.as_micros() < 1000;
    report(
        "criterion 1 (golden chain)",
        chain_ok && fast,
        &format!("exact match, {} µs", elapsed.as_micros()),
    );
}

/// Criterion 2: the sf matrices equal the perm matrices for n = 1..8.
#[test]
fn criterion_2_equidistribution_theorem() {
    let started = Instant::now();
    let mut all_equal = true;
    let mut first_diff = String::new();
    for n in 1..=8 {
        let perm = transition_matrix(n, MatrixFamily::Perm, 1).unwrap();
        let sf = transition_matrix(n, MatrixFamily::Sf, 1).unwrap();
        if let Some((r, c)) = sf.first_difference(&perm) {
            all_equal = false;
            first_diff = format!(
                "n={n} cell ({r},{c}): sf {} vs perm {}",
                sf.entry(r, c),
                perm.entry(r, c)
            );
            break;
        }
    }
    let elapsed = started.elapsed();
    let in_budget = elapsed.as_secs() <= 60;
    report(
        "criterion 2 (equidistribution, n<=8)",
        all_equal && in_budget,
        &if all_equal {
            format!("exact polynomial equality, {:.2?} single-threaded", elapsed)
        } else {
            first_diff
        },
    );
}

/// Optional extension of criterion 2 to n = 9 (budget 10 minutes).
#[test]
#[ignore = "optional n = 9 run; enable with --ignored"]
fn criterion_2_optional_n9() {
    let started = Instant::now();
    let perm = transition_matrix(9, MatrixFamily::Perm, 1).unwrap();
    let sf = transition_matrix(9, MatrixFamily::Sf, 1).unwrap();
    let perm0 = transition_matrix(9, MatrixFamily::Perm0, 1).unwrap();
    let elapsed = started.elapsed();

    // the running example contributes q^5 to its cell
    let gc: permstat::Composition = "(4,1,1,1,2)".parse().unwrap();
    let rec: permstat::Composition = "(1,3,2,1,2)".parse().unwrap();
    let cell = perm.entry_for(&gc, &rec);
    let has_q5 = cell.coeffs().len() > 5 && cell.coeffs()[5] >= 1;

    report(
        "criterion 2 (optional n=9)",
        sf.same_entries(&perm)
            && perm0.same_entries(&perm)
            && has_q5
            && elapsed.as_secs() <= 600,
        &format!("equal at n=9 in {elapsed:.2?}; cell (GC,Rec) of 528713649 is {cell}"),
    );
}

/// Criterion 3: the perm0 matrices equal the perm matrices for n = 1..8.
#[test]
fn criterion_3_type0_corollary() {
    let mut all_equal = true;
    let mut first_diff = String::new();
    for n in 1..=8 {
        let perm = transition_matrix(n, MatrixFamily::Perm, 1).unwrap();
        let perm0 = transition_matrix(n, MatrixFamily::Perm0, 1).unwrap();
        if let Some((r, c)) = perm0.first_difference(&perm) {
            all_equal = false;
            first_diff = format!(
                "n={n} cell ({r},{c}): perm0 {} vs perm {}",
                perm0.entry(r, c),
                perm.entry(r, c)
            );
            break;
        }
    }
    report(
        "criterion 3 (type-0 interpretation, n<=8)",
        all_equal,
        &if all_equal {
            "exact polynomial equality".to_string()
        } else {
            first_diff
        },
    );
}

/// Criterion 4: the five statistic-transport identities, exhaustive to
/// size 7.
#[test]
fn criterion_4_statistic_transport() {
    assert_all("criterion 4 (statistic transport, n<=7)", check_transport(7));
}

/// Criterion 5: all round-trips, exhaustive to size 7 plus 1000 random
/// size-12 cases, and the involution on all Dyck paths to size 9.
#[test]
fn criterion_5_round_trips() {
    assert_all("criterion 5 (round-trips)", check_roundtrip(8));
}

/// Criterion 6: tree preservation for n <= 8 and both path-tree
/// constructions for n <= 7.
#[test]
fn criterion_6_cosylvester_preservation() {
    assert_all("criterion 6 (co-sylvester preservation)", check_sylvester(8));
}

/// Criterion 7: zero positions map to left-to-right maxima, n <= 7.
#[test]
fn criterion_7_left_to_right_maxima() {
    assert_all("criterion 7 (left-to-right maxima)", check_lrm(7));
}

/// Criterion 8: Catalan and factorial counting identities, matrix
/// totals included.
#[test]
fn criterion_8_counting_identities() {
    // the spot value C_12 = 208012 via the recurrence oracle
    let c12 = catalan(12);
    let enumerated = decreasing_subexcedent_functions(12).unwrap().count() as u64;
    report(
        "criterion 8a (C_12 spot value)",
        c12 == 208_012 && enumerated == c12,
        &format!("recurrence {c12}, enumerated {enumerated}"),
    );
    assert_all("criterion 8 (counting identities)", check_counts(8, 1));
}

/// Criterion 9: parallel and sequential tabulation emit byte-identical
/// JSON matrices.
#[test]
fn criterion_9_determinism() {
    let mut all_equal = true;
    for family in [MatrixFamily::Perm, MatrixFamily::Perm0, MatrixFamily::Sf] {
        for n in [6, 7] {
            let sequential = transition_matrix(n, family, 1).unwrap().to_json();
            for jobs in [2, 4, 7] {
                let parallel = transition_matrix(n, family, jobs).unwrap().to_json();
                all_equal &= sequential == parallel;
            }
        }
    }
    report(
        "criterion 9 (determinism across --jobs)",
        all_equal,
        "byte-identical JSON for jobs in {1,2,4,7}, families perm/perm0/sf, n in {6,7}",
    );
}
