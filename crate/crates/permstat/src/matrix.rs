//! Composition-indexed transition matrices of exact q-polynomials.
//!
//! For compositions `I` (row) and `J` (column) of `n`, the three
//! families tabulate:
//!
//! * `perm`:  sum of `q^tot(σ)` over `{σ : GC(σ) = I, Rec(σ) = J}`;
//! * `perm0`: sum of `q^tot(σ)` over `{σ : GC⁰(σ) = I, Rec(σ) = J}`;
//! * `sf`:    sum of `q^(inv(u) - maj(mirror(LC(u))))` over
//!   `{u : LC(u) = I, DC(u) = J}`.
//!
//! All three are cell-wise equal; [`verify_equidistribution`] checks
//! that exactly.

use std::fmt;

use serde::Serialize;

use crate::composition::Composition;
use crate::enumeration::{
    compositions, factorial, matrix_limit, next_permutation_word, next_subexcedent_word,
    permutation_word_from_rank, subexcedent_word_from_rank,
};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::qpoly::QPolynomial;
use crate::subexcedent::SubexcedentFunction;

/// Which statistic triple a transition matrix tabulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixFamily {
    /// rows `GC`, columns `Rec`, exponent `tot`
    Perm,
    /// rows `GC⁰`, columns `Rec`, exponent `tot`
    Perm0,
    /// rows `LC`, columns `DC`, exponent `inv - maj(mirror(LC))`
    Sf,
}

impl MatrixFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            MatrixFamily::Perm => "perm",
            MatrixFamily::Perm0 => "perm0",
            MatrixFamily::Sf => "sf",
        }
    }
}

impl fmt::Display for MatrixFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A `2^(n-1) x 2^(n-1)` matrix of q-polynomials, rows and columns
/// indexed by the compositions of `n` in canonical (descent-bitmask)
/// order.
#[derive(Debug, Clone)]
pub struct TransitionMatrix {
    n: usize,
    family: MatrixFamily,
    dim: usize,
    entries: Vec<QPolynomial>,
}

impl TransitionMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> MatrixFamily {
        self.family
    }

    /// Row/column count `2^(n-1)`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &QPolynomial {
        &self.entries[row * self.dim + col]
    }

    pub fn entry_for(&self, row: &Composition, col: &Composition) -> &QPolynomial {
        self.entry(row.descent_bitmask(), col.descent_bitmask())
    }

    /// The compositions indexing rows and columns, in order.
    pub fn index(&self) -> Vec<Composition> {
        compositions(self.n).expect("matrix size passed the guard")
    }

    /// Sum of a row at `q = 1`: the number of objects with the row's
    /// first statistic.
    pub fn row_total_at_one(&self, row: usize) -> u64 {
        (0..self.dim)
            .map(|col| self.entry(row, col).eval_at_one())
            .sum()
    }

    /// Sum of every cell at `q = 1`; equals `n!`.
    pub fn grand_total_at_one(&self) -> u64 {
        self.entries.iter().map(|p| p.eval_at_one()).sum()
    }

    /// Largest exponent appearing anywhere in the matrix.
    pub fn max_exponent(&self) -> usize {
        self.entries
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0)
    }

    /// First cell (row, col) where the two matrices differ, if any.
    /// Families are not compared; cell-wise equality across families
    /// is exactly the equidistribution statement.
    pub fn first_difference(&self, other: &TransitionMatrix) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((0, 0));
        }
        (0..self.dim)
            .flat_map(|r| (0..self.dim).map(move |c| (r, c)))
            .find(|&(r, c)| self.entry(r, c) != other.entry(r, c))
    }

    pub fn same_entries(&self, other: &TransitionMatrix) -> bool {
        self.first_difference(other).is_none()
    }

    /// Canonical JSON export: `n`, `family`, the composition index and
    /// the coefficient arrays (ascending in `q`), bit-exact across
    /// platforms and worker counts.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct MatrixJson<'a> {
            n: usize,
            family: &'a str,
            index: Vec<&'a [usize]>,
            entries: Vec<Vec<&'a [u64]>>,
        }
        let index_compositions = self.index();
        let json = MatrixJson {
            n: self.n,
            family: self.family.as_str(),
            index: index_compositions.iter().map(|c| c.parts()).collect(),
            entries: (0..self.dim)
                .map(|r| (0..self.dim).map(|c| self.entry(r, c).coeffs()).collect())
                .collect(),
        };
        serde_json::to_string(&json).expect("matrix serialization cannot fail")
    }
}

/// Tabulates the transition matrix of a family by a streaming pass
/// over the `n!` underlying objects.
///
/// With `jobs > 1` the rank space is split into contiguous chunks
/// processed on separate threads; per-cell accumulation is commutative,
/// so the result is identical to the sequential one.
pub fn transition_matrix(n: usize, family: MatrixFamily, jobs: usize) -> Result<TransitionMatrix> {
    let limit = matrix_limit();
    if n == 0 || n > limit {
        return Err(Error::ResourceLimit {
            requested: n,
            limit,
        });
    }
    let dim = 1usize << (n - 1);
    let total = factorial(n);
    let jobs = jobs.max(1).min(total as usize);
    let entries = if jobs == 1 {
        accumulate_range(n, family, dim, 0, total)
    } else {
        let mut chunks: Vec<Vec<QPolynomial>> = Vec::with_capacity(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs as u64)
                .map(|t| {
                    let start = total * t / jobs as u64;
                    let end = total * (t + 1) / jobs as u64;
                    scope.spawn(move || accumulate_range(n, family, dim, start, end - start))
                })
                .collect();
            for handle in handles {
                chunks.push(handle.join().expect("matrix worker panicked"));
            }
        });
        let mut merged = vec![QPolynomial::zero(); dim * dim];
        for chunk in chunks {
            for (cell, part) in merged.iter_mut().zip(&chunk) {
                *cell += part;
            }
        }
        merged
    };
    Ok(TransitionMatrix {
        n,
        family,
        dim,
        entries,
    })
}

fn accumulate_range(
    n: usize,
    family: MatrixFamily,
    dim: usize,
    start: u64,
    len: u64,
) -> Vec<QPolynomial> {
    let mut entries = vec![QPolynomial::zero(); dim * dim];
    match family {
        MatrixFamily::Perm | MatrixFamily::Perm0 => {
            let mut word = permutation_word_from_rank(n, start);
            for _ in 0..len {
                let sigma =
                    Permutation::new(word.clone()).expect("rank enumeration yields permutations");
                let row = match family {
                    MatrixFamily::Perm => sigma.gc().descent_bitmask(),
                    _ => sigma.gc0().descent_bitmask(),
                };
                let col = sigma.rec().descent_bitmask();
                entries[row * dim + col].add_term(sigma.tot(), 1);
                next_permutation_word(&mut word);
            }
        }
        MatrixFamily::Sf => {
            let mut word = subexcedent_word_from_rank(n, start);
            for _ in 0..len {
                let u = SubexcedentFunction::new(word.clone())
                    .expect("rank enumeration yields subexcedent functions");
                let lc = u.lc();
                let row = lc.descent_bitmask();
                let col = u.dc().descent_bitmask();
                let exp = u
                    .inv()
                    .checked_sub(lc.mirror().maj())
                    .expect("inv dominates maj(mirror(LC))");
                entries[row * dim + col].add_term(exp, 1);
                next_subexcedent_word(&mut word);
            }
        }
    }
    entries
}

/// Outcome of comparing the three matrix families for one size.
#[derive(Debug, Clone)]
pub struct EquidistributionReport {
    pub n: usize,
    /// First differing cell between the `sf` and `perm` matrices.
    pub sf_vs_perm: Option<(usize, usize)>,
    /// First differing cell between the `perm0` and `perm` matrices.
    pub perm0_vs_perm: Option<(usize, usize)>,
    /// Grand totals at `q = 1` for (perm, perm0, sf).
    pub totals: [u64; 3],
}

impl EquidistributionReport {
    pub fn passed(&self) -> bool {
        self.sf_vs_perm.is_none()
            && self.perm0_vs_perm.is_none()
            && self.totals.iter().all(|&t| t == factorial(self.n))
    }
}

/// Builds all three matrices for size `n` and compares them cell-wise,
/// also checking that every grand total at `q = 1` equals `n!`.
pub fn verify_equidistribution(n: usize, jobs: usize) -> Result<EquidistributionReport> {
    let perm = transition_matrix(n, MatrixFamily::Perm, jobs)?;
    let perm0 = transition_matrix(n, MatrixFamily::Perm0, jobs)?;
    let sf = transition_matrix(n, MatrixFamily::Sf, jobs)?;
    Ok(EquidistributionReport {
        n,
        sf_vs_perm: sf.first_difference(&perm),
        perm0_vs_perm: perm0.first_difference(&perm),
        totals: [
            perm.grand_total_at_one(),
            perm0.grand_total_at_one(),
            sf.grand_total_at_one(),
        ],
    })
}
