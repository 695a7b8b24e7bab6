use crate::dyck::{DyckPath, WeightedDyckPath};

/// The step-swapping involution on weighted Dyck paths: steps at
/// positions `2i` and `2i+1` trade places for `1 <= i <= n-1`, the
/// first and last steps stay put, and the weight is carried.
///
/// Meeting-point heights are unchanged, so the weight stays admissible
/// and `psi(psi(x)) = x`.
pub fn psi(x: &WeightedDyckPath) -> WeightedDyckPath {
    let n = x.size();
    let mut steps = x.path().steps().to_vec();
    for i in 1..n {
        steps.swap(2 * i - 1, 2 * i);
    }
    let path = DyckPath::new(steps).expect("swapping inner pairs preserves the Dyck property");
    WeightedDyckPath::new(path, x.weight().to_vec())
        .expect("swapping inner pairs preserves meeting heights")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wdp(s: &str) -> WeightedDyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let x = wdp("UUUUUDUUDDDDDUDDUD;0 0 2 2 0 1 0 0 0");
        let y = psi(&x);
        assert_eq!(y.to_string(), "UUUUUUDDUDDDDDUUDD;0 0 2 2 0 1 0 0 0");
        assert_eq!(psi(&y), x);
    }

    #[test]
    fn fixed_point_and_small_swap() {
        let ud = wdp("UD;0");
        assert_eq!(psi(&ud), ud);
        // UUDD swaps its inner UD pair
        assert_eq!(psi(&wdp("UUDD;0 0")).to_string(), "UDUD;0 0");
        assert_eq!(psi(&wdp("UDUD;0 0")).to_string(), "UUDD;0 0");
    }

    #[test]
    fn preserves_meeting_heights() {
        let x = wdp("UUUUUDUUDDDDDUDDUD;0 0 2 2 0 1 0 0 0");
        assert_eq!(
            psi(&x).path().meeting_heights(),
            x.path().meeting_heights()
        );
    }
}
