//! Laurent polynomials in the auxiliary symbol `a` over arbitrary-precision
//! integers. These are the coefficients of every [`crate::QSeries`].
//!
//! Invariants:
//! - no stored coefficient is zero
//! - exponent keys are unique (BTreeMap)
//! - the zero polynomial is the empty map

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum_e c_e * a^e` with `c_e` in Z, sparse in `e`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `c * a^e`, dropping the term when `c = 0`.
    pub fn monomial(e: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, BigInt::from(c))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate `(exponent, coefficient)` in ascending exponent order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Largest `|e|` over stored exponents (0 for the zero polynomial).
    pub fn max_abs_exp(&self) -> i64 {
        self.terms.keys().map(|e| e.abs()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// If the polynomial is a single term `±a^e`, return `(e, sign)`.
    pub fn as_unit_monomial(&self) -> Option<(i64, i8)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next().unwrap();
        if c.magnitude().is_one() {
            Some((e, if c.is_negative() { -1 } else { 1 }))
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            let negc = -c;
            out.add_term(e, &negc);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in other.iter() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    /// Multiply by a single term `c * a^e` in place.
    pub fn mul_term(&self, e: i64, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&f, d)| (f + e, d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_term(0, c)
    }

    /// Map exponents `e -> e mod n` (valid modulo `a^n - 1`).
    pub fn fold_exponents_mod(&self, n: i64) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.iter() {
            out.add_term(e.rem_euclid(n), c);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.iter() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "a")?,
                (1, false) => write!(f, "{}*a", mag)?,
                (_, true) => write!(f, "a^{}", e)?,
                (_, false) => write!(f, "{}*a^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn zero_has_no_terms() {
        assert!(LaurentPoly::zero().is_zero());
        assert!(lp(&[(2, 3), (2, -3)]).is_zero());
    }

    #[test]
    fn mul_difference_of_squares() {
        // (1 + a)(1 - a) = 1 - a^2
        let p = lp(&[(0, 1), (1, 1)]);
        let q = lp(&[(0, 1), (1, -1)]);
        assert_eq!(p.mul(&q), lp(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn unit_monomial_detection() {
        assert_eq!(lp(&[(3, -1)]).as_unit_monomial(), Some((3, -1)));
        assert_eq!(lp(&[(-2, 1)]).as_unit_monomial(), Some((-2, 1)));
        assert_eq!(lp(&[(0, 2)]).as_unit_monomial(), None);
        assert_eq!(lp(&[(0, 1), (1, 1)]).as_unit_monomial(), None);
    }

    #[test]
    fn display_ordering() {
        assert_eq!(lp(&[(1, 1), (-1, 1), (0, -2)]).to_string(), "a^-1 - 2 + a");
        assert_eq!(lp(&[(2, -1)]).to_string(), "-a^2");
    }

    #[test]
    fn fold_exponents() {
        // a^3 + a with n = 4 stays a^3 + a; a^-1 becomes a^3
        assert_eq!(lp(&[(-1, 1)]).fold_exponents_mod(4), lp(&[(3, 1)]));
        assert_eq!(lp(&[(5, 1), (1, 1)]).fold_exponents_mod(4), lp(&[(1, 2)]));
    }
}
