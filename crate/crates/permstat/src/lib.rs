//! Permutation statistics, Catalan structures, and the bijections
//! connecting them.
//!
//! The crate revolves around one chain of bijections,
//!
//! ```text
//!   SF --phi1--> DWSF --phi2--> WDP --psi--> WDP --psi_fv_inv--> P
//! ```
//!
//! between subexcedent functions, decreasing weighted subexcedent
//! functions, weighted Dyck paths, and permutations. The composed map
//! [`bijections::big_phi`] carries the statistic triple
//! `(LC, DC, inv - maj(mirror(LC)))` to `(GC, Rec, tot)`, which makes
//! the composition-indexed q-polynomial transition matrices of the two
//! triples equal cell by cell — the equidistribution that
//! [`matrix::verify_equidistribution`] checks exhaustively. A variant
//! composition, [`bijections::big_psi`], is a bijection on
//! permutations preserving binary search trees (co-sylvester classes).
//!
//! Quick tour:
//!
//! ```
//! use permstat::{Permutation, SubexcedentFunction, bijections};
//!
//! let u: SubexcedentFunction = "315503200".parse().unwrap();
//! let sigma = bijections::big_phi(&u);
//! assert_eq!(sigma.to_string(), "5 2 8 7 1 3 6 4 9");
//!
//! // the triple is carried across the chain
//! assert_eq!(sigma.gc(), u.lc());
//! assert_eq!(sigma.rec(), u.dc());
//! assert_eq!(sigma.tot(), u.inv() - u.lc().mirror().maj());
//! ```
//!
//! The statistics live on the domain types ([`Permutation`],
//! [`SubexcedentFunction`], [`WeightedDyckPath`], ...), the maps in
//! [`bijections`], exhaustive generators in [`enumeration`], the
//! q-polynomial matrices in [`matrix`], binary search trees in
//! [`sylvester`], and the full verification suites in [`harness`].

pub mod bijections;
mod composition;
mod dyck;
mod error;
pub mod enumeration;
pub mod harness;
mod laguerre;
pub mod matrix;
mod perm;
mod qpoly;
mod subexcedent;
pub mod sylvester;
mod text;

pub use composition::Composition;
pub use dyck::{Convention, DyckPath, Step, WeightedDyckPath};
pub use error::{Error, ParseError, Result};
pub use laguerre::{LaguerreHistory, LaguerreKind, LaguerreStep};
pub use perm::Permutation;
pub use qpoly::QPolynomial;
pub use subexcedent::{DecreasingWeightedSf, SubexcedentFunction};
