//! Integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Exact Laurent polynomial with `i64` coefficients; no zero coefficients
/// are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        LaurentPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Sorted `(exponent, coefficient)` pairs.
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        self.terms.iter().map(|(&e, &c)| (e, c)).collect()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute the variable by its inverse (exponent negation).
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Substitute the variable by a signed power: `A -> sign * A^k`.
    pub fn scale_exponents(&self, k: i64) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e * k, c)).collect() }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.terms {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            let a = c.abs();
            match (a, e) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "A")?,
                (1, _) => write!(f, "A^{e}")?,
                (_, 1) => write!(f, "{a}*A")?,
                (_, _) => write!(f, "{a}*A^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let a = LaurentPolynomial::monomial(2, 1);
        let b = LaurentPolynomial::monomial(-2, 1);
        let s = &a + &b;
        assert_eq!(s.pairs(), vec![(-2, 1), (2, 1)]);
        let p = &s * &s;
        assert_eq!(p.pairs(), vec![(-4, 1), (0, 2), (4, 1)]);
        assert!((&s - &s).is_zero());
        assert_eq!(s.invert_variable(), s);
    }

    #[test]
    fn display_is_readable() {
        let mut p = LaurentPolynomial::monomial(-4, -1);
        p.add_term(0, 3);
        assert_eq!(p.to_string(), "-A^-4 + 3");
    }
}
