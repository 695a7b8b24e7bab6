use std::fmt;
use std::ops::AddAssign;

/// A polynomial in `q` with nonnegative integer coefficients, stored
/// densely by exponent with no trailing zero.
///
/// Addition is component-wise and checked: the counting code never
/// wraps silently.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<u64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// Adds `count * q^exp`.
    pub fn add_term(&mut self, exp: usize, count: u64) {
        if count == 0 {
            return;
        }
        if self.coeffs.len() <= exp {
            self.coeffs.resize(exp + 1, 0);
        }
        self.coeffs[exp] = self.coeffs[exp]
            .checked_add(count)
            .expect("q-polynomial coefficient overflow");
    }

    /// Coefficients by ascending exponent, without trailing zeros.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The value at `q = 1`: the plain object count.
    pub fn eval_at_one(&self) -> u64 {
        self.coeffs
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .expect("q-polynomial evaluation overflow")
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, other: &QPolynomial) {
        for (exp, &c) in other.coeffs.iter().enumerate() {
            self.add_term(exp, c);
        }
    }
}

/// Human form with descending powers: `2q^2+q`, `q+3`, `0`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match exp {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "q")?,
                1 => write!(f, "{c}q")?,
                _ if c == 1 => write!(f, "q^{exp}")?,
                _ => write!(f, "{c}q^{exp}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accumulates_terms() {
        let mut p = QPolynomial::zero();
        p.add_term(2, 1);
        p.add_term(0, 3);
        p.add_term(2, 1);
        assert_eq!(p.coeffs(), &[3, 0, 2]);
        assert_eq!(p.eval_at_one(), 5);
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn addition_is_componentwise() {
        let mut a = QPolynomial::from_coeffs(vec![1, 2]);
        let b = QPolynomial::from_coeffs(vec![0, 1, 4]);
        a += &b;
        assert_eq!(a.coeffs(), &[1, 3, 4]);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = QPolynomial::from_coeffs(vec![0, 1, 0, 0]);
        assert_eq!(p.coeffs(), &[0, 1]);
        assert!(QPolynomial::from_coeffs(vec![0, 0]).is_zero());
    }

    #[test]
    fn display_descending() {
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(QPolynomial::from_coeffs(vec![3]).to_string(), "3");
        assert_eq!(QPolynomial::from_coeffs(vec![0, 1, 2]).to_string(), "2q^2+q");
        assert_eq!(QPolynomial::from_coeffs(vec![2, 0, 1]).to_string(), "q^2+2");
        assert_eq!(QPolynomial::from_coeffs(vec![0, 1]).to_string(), "q");
    }
}
