use crate::dyck::{DyckPath, Step, WeightedDyckPath};
use crate::subexcedent::{DecreasingWeightedSf, SubexcedentFunction};

/// Sorts a subexcedent function into a decreasing weighted one by
/// repeatedly moving the greatest movable value to the left.
///
/// Each round picks the pivot: the greatest value having an occurrence
/// with a nonzero value `<=` it strictly to its left. With `k` the
/// rightmost occurrence of the pivot and `i` the rightmost occurrence
/// of the largest value `<=` pivot among positions `< k`, the round
/// decrements `u_i`, swaps `u_i` with `u_k`, and increments `w_k`. The
/// algorithm stops when no pivot exists.
pub fn phi1(u: &SubexcedentFunction) -> DecreasingWeightedSf {
    let n = u.size();
    let mut u = u.entries().to_vec();
    let mut w = vec![0usize; n];
    loop {
        let mut pivot: Option<usize> = None;
        for p in 0..n {
            let v = u[p];
            if v > 0 && u[..p].iter().any(|&x| x > 0 && x <= v) {
                pivot = Some(pivot.map_or(v, |cur| cur.max(v)));
            }
        }
        let Some(pivot) = pivot else { break };
        let k = (0..n).rev().find(|&i| u[i] == pivot).unwrap();
        let target = u[..k]
            .iter()
            .copied()
            .filter(|&x| x > 0 && x <= pivot)
            .max()
            .expect("pivot selection guarantees a nonzero value on the left");
        let i = (0..k).rev().find(|&j| u[j] == target).unwrap();
        u[i] -= 1;
        u.swap(i, k);
        w[k] += 1;
    }
    let sf = SubexcedentFunction::new(u).expect("exchanges keep the word subexcedent");
    DecreasingWeightedSf::new(sf, w).expect("the sorted word is decreasing with admissible weight")
}

/// Inverse of [`phi1`]: undo the exchanges, last first.
///
/// While the weight is nonzero, the previous pivot sits at the
/// rightmost position `p` having a weighted strictly smaller value to
/// its right, and it swapped with the nearest weighted position
/// `q > p`. Undoing sets `(u_p, u_q) <- (u_q + 1, u_p)` and decrements
/// `w_q`.
///
/// # Panics
///
/// Panics if no such `p` exists while the weight is nonzero; impossible
/// for a validated decreasing weighted subexcedent function.
pub fn phi1_inv(x: &DecreasingWeightedSf) -> SubexcedentFunction {
    let n = x.size();
    let mut u = x.sf().entries().to_vec();
    let mut w = x.weight().to_vec();
    while w.iter().any(|&c| c > 0) {
        let p = (0..n)
            .rev()
            .find(|&p| (p + 1..n).any(|q| w[q] > 0 && u[q] < u[p]))
            .expect("phi1_inv: nonzero weight must be reachable by an exchange");
        let q = (p + 1..n).find(|&q| w[q] > 0).unwrap();
        debug_assert!(u[q] < u[p], "the nearest weighted value is strictly smaller");
        w[q] -= 1;
        let (a, b) = (u[p], u[q]);
        u[p] = b + 1;
        u[q] = a;
    }
    SubexcedentFunction::new(u).expect("undoing exchanges keeps the word subexcedent")
}

/// The Catalan bijection from decreasing weighted subexcedent
/// functions to weighted Dyck paths.
///
/// `D_1 = Up`, `D_{2n} = Down`; for `1 <= i <= n-1`, step `2i` is Down
/// iff `n-i` occurs among the entries of `u`, and step `2i+1` is Down
/// iff `u_i = 0`. The weight is carried unchanged.
pub fn phi2(x: &DecreasingWeightedSf) -> WeightedDyckPath {
    let n = x.size();
    if n == 0 {
        return WeightedDyckPath::new(DyckPath::new(vec![]).unwrap(), vec![]).unwrap();
    }
    let u = x.sf().entries();
    let mut present = vec![false; n];
    for &v in u {
        if v > 0 {
            present[v] = true;
        }
    }
    let mut steps = vec![Step::Up; 2 * n];
    steps[2 * n - 1] = Step::Down;
    for i in 1..n {
        steps[2 * i - 1] = if present[n - i] { Step::Down } else { Step::Up };
        steps[2 * i] = if u[i - 1] == 0 { Step::Down } else { Step::Up };
    }
    let path = DyckPath::new(steps).expect("the construction yields a Dyck path");
    WeightedDyckPath::new(path, x.weight().to_vec())
        .expect("weight bounds transfer from the subexcedent side")
}

/// Inverse of [`phi2`]: recover the values from the even Down steps
/// and the zero positions from the odd Down steps, then place the
/// values in decreasing order left to right.
///
/// # Panics
///
/// Panics if the number of values differs from the number of nonzero
/// positions; impossible on a valid Dyck path.
pub fn phi2_inv(x: &WeightedDyckPath) -> DecreasingWeightedSf {
    let n = x.size();
    if n == 0 {
        return DecreasingWeightedSf::new(SubexcedentFunction::zero(0), vec![]).unwrap();
    }
    let path = x.path();
    // i ascending gives n-i descending, the required assignment order
    let values: Vec<usize> = (1..n)
        .filter(|&i| path.step(2 * i) == Step::Down)
        .map(|i| n - i)
        .collect();
    let slots: Vec<usize> = (1..n)
        .filter(|&i| path.step(2 * i + 1) == Step::Up)
        .collect();
    assert_eq!(
        values.len(),
        slots.len(),
        "phi2_inv: value and position counts must agree"
    );
    let mut u = vec![0usize; n];
    for (&pos, &v) in slots.iter().zip(&values) {
        u[pos - 1] = v;
    }
    let sf = SubexcedentFunction::new(u).expect("recovered word is subexcedent");
    DecreasingWeightedSf::new(sf, x.weight().to_vec())
        .expect("weight bounds transfer from the path side")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(s: &str) -> SubexcedentFunction {
        s.parse().unwrap()
    }

    fn dwsf(s: &str) -> DecreasingWeightedSf {
        s.parse().unwrap()
    }

    #[test]
    fn phi1_worked_example() {
        let image = phi1(&sf("315503200"));
        assert_eq!(image.to_string(), "5 4 0 3 0 0 2 0 0;0 0 2 2 0 1 0 0 0");
    }

    #[test]
    fn phi1_trivial_cases() {
        let z = SubexcedentFunction::zero(7);
        let image = phi1(&z);
        assert_eq!(image.sf(), &z);
        assert_eq!(image.weight(), &[0; 7]);

        // an already-decreasing word stops immediately
        let u = sf("540300200");
        let image = phi1(&u);
        assert_eq!(image.sf(), &u);
        assert_eq!(image.weight(), &[0; 9]);
    }

    #[test]
    fn phi1_inverse_worked_example() {
        assert_eq!(phi1_inv(&dwsf("540300200;002201000")), sf("315503200"));
        let u = sf("540300200");
        assert_eq!(phi1_inv(&DecreasingWeightedSf::new(u.clone(), vec![0; 9]).unwrap()), u);
    }

    #[test]
    fn phi2_worked_example() {
        let image = phi2(&dwsf("540300200;002201000"));
        assert_eq!(image.to_string(), "UUUUUUDDUDDDDDUUDD;0 0 2 2 0 1 0 0 0");
    }

    #[test]
    fn phi2_small_cases() {
        // the zero function maps to the sawtooth-after-peak pattern
        let z3 = DecreasingWeightedSf::new(SubexcedentFunction::zero(3), vec![0; 3]).unwrap();
        assert_eq!(phi2(&z3).path().to_string(), "UUDUDD");
        let one = dwsf("0;0");
        assert_eq!(phi2(&one).to_string(), "UD;0");
    }

    #[test]
    fn phi2_inverse_worked_example() {
        let x: WeightedDyckPath = "UUUUUUDDUDDDDDUUDD;0 0 2 2 0 1 0 0 0".parse().unwrap();
        assert_eq!(phi2_inv(&x), dwsf("540300200;002201000"));
        let ud: WeightedDyckPath = "UD;0".parse().unwrap();
        assert_eq!(phi2_inv(&ud), dwsf("0;0"));
    }
}
