use crate::error::{Error, Result};
use crate::subexcedent::SubexcedentFunction;

/// Sends a decreasing subexcedent function to its nondecreasing
/// parking function: mirror the word, replace each zero by the nearest
/// nonzero value on its left (leading zeroes stay), and add one to
/// every entry.
///
/// The result `p` is nondecreasing with `p_i <= i` and `p_1 = 1`.
pub fn dsf_to_parking(u: &SubexcedentFunction) -> Result<Vec<usize>> {
    if !u.is_decreasing() {
        return Err(Error::invalid(
            "subexcedent function",
            "the parking map is only defined for decreasing subexcedent functions",
        ));
    }
    let mut last = 0;
    Ok(u.entries()
        .iter()
        .rev()
        .map(|&v| {
            if v != 0 {
                last = v;
            }
            last + 1
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let u: SubexcedentFunction = "540300200".parse().unwrap();
        assert_eq!(
            dsf_to_parking(&u).unwrap(),
            vec![1, 1, 3, 3, 3, 4, 4, 5, 6]
        );
    }

    #[test]
    fn zero_function_parks_at_one() {
        let z = SubexcedentFunction::zero(6);
        assert_eq!(dsf_to_parking(&z).unwrap(), vec![1; 6]);
    }

    #[test]
    fn rejects_non_decreasing_input() {
        let u: SubexcedentFunction = "315503200".parse().unwrap();
        assert!(dsf_to_parking(&u).is_err());
    }

    #[test]
    fn output_is_a_nondecreasing_parking_function() {
        for s in ["540300200", "210", "43210", "0000"] {
            let u: SubexcedentFunction = s.parse().unwrap();
            let p = dsf_to_parking(&u).unwrap();
            assert_eq!(p[0], 1);
            for i in 0..p.len() {
                assert!(p[i] <= i + 1);
                if i > 0 {
                    assert!(p[i - 1] <= p[i]);
                }
            }
        }
    }
}
