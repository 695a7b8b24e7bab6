//! The bijection chain connecting subexcedent functions to
//! permutations, together with its Laguerre-history and type-0
//! variants:
//!
//! ```text
//!   SF --phi1--> DWSF --phi2--> WDP --psi--> WDP --psi_fv_inv--> P
//! ```
//!
//! Every map here is a bijection with an explicit inverse. Composing
//! the chain gives [`big_phi`], which transports the statistic triple
//! `(LC, DC, inv - maj(mirror(LC)))` on subexcedent functions to
//! `(GC, Rec, tot)` on permutations. Replacing the final leg by the
//! type-0 Françon-Viennot map gives [`big_psi`], a bijection on
//! permutations preserving co-sylvester classes.

mod franconviennot;
mod involution;
mod laguerre;
mod parking;
mod phi;

pub use franconviennot::{psi_fv, psi_fv0, psi_fv0_inv, psi_fv_inv};
pub use involution::psi;
pub use laguerre::{laguerre_to_wdp, wdp_to_laguerre};
pub use parking::dsf_to_parking;
pub use phi::{phi1, phi1_inv, phi2, phi2_inv};

use crate::perm::Permutation;
use crate::subexcedent::SubexcedentFunction;

/// The full chain `Φ = psi_fv⁻¹ ∘ psi ∘ phi2 ∘ phi1` from subexcedent
/// functions to permutations (`psi` is its own inverse).
///
/// Sends `LC` to `GC`, `DC` to `Rec`, `inv - maj(mirror(LC))` to `tot`,
/// and zero positions to left-to-right maxima.
pub fn big_phi(u: &SubexcedentFunction) -> Permutation {
    psi_fv_inv(&psi(&phi2(&phi1(u))))
}

/// Inverse of [`big_phi`].
pub fn big_phi_inv(sigma: &Permutation) -> SubexcedentFunction {
    phi1_inv(&phi2_inv(&psi(&psi_fv(sigma))))
}

/// The bijection `Ψ = psi_fv0⁻¹ ∘ psi ∘ psi_fv` on permutations.
///
/// Preserves `Rec` and `tot`, sends `GC` to `GC⁰`, and keeps the
/// binary search tree (co-sylvester class) fixed.
pub fn big_psi(sigma: &Permutation) -> Permutation {
    psi_fv0_inv(&psi(&psi_fv(sigma)))
}

/// Inverse of [`big_psi`].
pub fn big_psi_inv(sigma: &Permutation) -> Permutation {
    psi_fv_inv(&psi(&psi_fv0(sigma)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_phi_worked_example() {
        let u: SubexcedentFunction = "315503200".parse().unwrap();
        assert_eq!(big_phi(&u).to_string(), "5 2 8 7 1 3 6 4 9");
        assert_eq!(big_phi_inv(&big_phi(&u)), u);
    }

    #[test]
    fn big_phi_zero_is_identity() {
        for n in 1..=8 {
            let u = SubexcedentFunction::zero(n);
            assert_eq!(big_phi(&u), Permutation::identity(n));
        }
    }

    #[test]
    fn big_psi_worked_example() {
        let sigma: Permutation = "528713649".parse().unwrap();
        let image = big_psi(&sigma);
        assert_eq!(image.to_string(), "5 2 8 9 7 1 3 6 4");
        assert_eq!(big_psi_inv(&image), sigma);
    }

    #[test]
    fn big_psi_fixes_singleton() {
        let one: Permutation = "1".parse().unwrap();
        assert_eq!(big_psi(&one), one);
    }

    #[test]
    fn big_phi_preserves_zero_positions_as_ltr_maxima() {
        let u: SubexcedentFunction = "315503200".parse().unwrap();
        assert_eq!(u.zero_positions(), big_phi(&u).ltr_maxima());
    }
}
