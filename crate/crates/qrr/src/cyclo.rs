//! Exact cyclotomic reduction: series whose Laurent coefficients are taken
//! modulo the n-th cyclotomic polynomial, i.e. `a` specialized to a primitive
//! n-th root of unity without any floating point.
//!
//! Reduction first rewrites `a^e` as `a^{e mod n}` (valid since `a^n = 1`
//! modulo the n-th cyclotomic polynomial) and then takes the polynomial
//! remainder modulo `Phi_n`, leaving a tuple of `phi(n)` integers per series
//! coefficient.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;
use crate::series::QSeries;

/// Dense integer polynomial, ascending powers; used only for `Phi_n`.
fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials (remainder must be zero; the
/// divisor must be monic). Used to build cyclotomic polynomials.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, d) in den.iter().enumerate() {
            let idx = i + j;
            rem[idx] -= &c * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// Coefficients of the n-th cyclotomic polynomial, ascending powers.
///
/// Computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d` by exact integer
/// polynomial division.
pub fn cyclotomic_poly(n: i64) -> Vec<BigInt> {
    assert!(n >= 1);
    if n == 1 {
        return vec![-BigInt::one(), BigInt::one()]; // x - 1
    }
    let mut num = vec![BigInt::zero(); (n + 1) as usize];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..n {
        if n % d == 0 {
            den = poly_mul(&den, &cyclotomic_poly(d));
        }
    }
    poly_div_exact(&num, &den)
}

/// Euler's totient, the degree of `Phi_n`.
pub fn totient(n: i64) -> i64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Reduce a Laurent polynomial modulo `Phi_n` into a residue tuple of
/// length `phi(n)`.
pub fn reduce_laurent(c: &LaurentPoly, n: i64, phi: &[BigInt]) -> Vec<BigInt> {
    let deg = phi.len() - 1; // = totient(n)
    let folded = c.fold_exponents_mod(n);
    let mut rem = vec![BigInt::zero(); n.max(deg as i64) as usize];
    for (e, coef) in folded.iter() {
        rem[e as usize] += coef;
    }
    // Polynomial remainder modulo the monic Phi_n.
    for i in (deg..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        rem[i] = BigInt::zero();
        for (j, d) in phi.iter().enumerate().take(deg) {
            rem[i - deg + j] -= &c * d;
        }
    }
    rem.truncate(deg);
    rem
}

/// A truncated series whose coefficients are residues modulo `Phi_n`:
/// the exact value of a [`QSeries`] at `a = ` primitive n-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloSeries {
    /// Root-of-unity order.
    pub n: i64,
    pub scale: i64,
    pub v_min: i64,
    pub order: i64,
    /// One residue tuple (length `phi(n)`) per scaled exponent in
    /// `v_min ..= order`.
    pub coeffs: Vec<Vec<BigInt>>,
}

impl CycloSeries {
    pub fn reduce(x: &QSeries, n: i64) -> Self {
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        let (v_min, order) = (x.v_min(), x.order());
        let mut coeffs = Vec::with_capacity((order - v_min + 1).max(0) as usize);
        for v in v_min..=order {
            let c = x.coefficient(v).expect("within window");
            coeffs.push(reduce_laurent(&c, n, &phi));
        }
        let mut s = Self { n, scale: x.scale(), v_min, order, coeffs };
        s.trim(deg);
        s
    }

    fn trim(&mut self, deg: usize) {
        let zero = vec![BigInt::zero(); deg];
        let lead = self.coeffs.iter().take_while(|c| **c == zero).count();
        self.coeffs.drain(..lead);
        self.v_min += lead as i64;
        if self.coeffs.is_empty() {
            self.v_min = self.order + 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.iter().all(|x| x.is_zero()))
    }

    fn tuple(&self, v: i64, deg: usize) -> Vec<BigInt> {
        if v < self.v_min || v > self.order {
            return vec![BigInt::zero(); deg];
        }
        self.coeffs[(v - self.v_min) as usize].clone()
    }

    /// Compare over the common guaranteed window; requires equal `n`.
    /// Returns `(pass, compared order, first differing exponent)`.
    pub fn agree(&self, other: &Self) -> (bool, i64, Option<i64>) {
        assert_eq!(self.n, other.n, "cyclotomic orders differ");
        assert_eq!(self.scale, other.scale, "scales differ");
        let deg = totient(self.n) as usize;
        let order = self.order.min(other.order);
        let lo = self.v_min.min(other.v_min);
        for v in lo..=order {
            if self.tuple(v, deg) != other.tuple(v, deg) {
                return (false, order, Some(v));
            }
        }
        (true, order, None)
    }

    /// Product in the residue ring (independent modular arithmetic used by
    /// the morphism property tests).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        assert_eq!(self.scale, other.scale);
        let phi = cyclotomic_poly(self.n);
        let deg = phi.len() - 1;
        let order = (self.order + other.v_min).min(other.order + self.v_min);
        let v_min = self.v_min + other.v_min;
        if order < v_min {
            return Self { n: self.n, scale: self.scale, v_min: order + 1, order, coeffs: Vec::new() };
        }
        let mut coeffs = vec![vec![BigInt::zero(); deg]; (order - v_min + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            let va = self.v_min + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let v = va + other.v_min + j as i64;
                if v > order {
                    break;
                }
                let prod = poly_mul(a, b);
                let red = reduce_dense(&prod, &phi);
                let slot = &mut coeffs[(v - v_min) as usize];
                for (k, c) in red.into_iter().enumerate() {
                    slot[k] += c;
                }
            }
        }
        let mut s = Self { n: self.n, scale: self.scale, v_min, order, coeffs };
        s.trim(deg);
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        assert_eq!(self.scale, other.scale);
        let deg = totient(self.n) as usize;
        let order = self.order.min(other.order);
        let v_min = self.v_min.min(other.v_min).min(order + 1);
        if order < v_min {
            return Self { n: self.n, scale: self.scale, v_min: order + 1, order, coeffs: Vec::new() };
        }
        let mut coeffs = vec![vec![BigInt::zero(); deg]; (order - v_min + 1) as usize];
        for s in [self, other] {
            for (i, a) in s.coeffs.iter().enumerate() {
                let v = s.v_min + i as i64;
                if v > order {
                    break;
                }
                let slot = &mut coeffs[(v - v_min) as usize];
                for (k, c) in a.iter().enumerate() {
                    slot[k] += c;
                }
            }
        }
        let mut s = Self { n: self.n, scale: self.scale, v_min, order, coeffs };
        s.trim(deg);
        s
    }
}

fn reduce_dense(p: &[BigInt], phi: &[BigInt]) -> Vec<BigInt> {
    let deg = phi.len() - 1;
    let mut rem = p.to_vec();
    if rem.len() < deg {
        rem.resize(deg, BigInt::zero());
    }
    for i in (deg..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        rem[i] = BigInt::zero();
        for (j, d) in phi.iter().enumerate().take(deg) {
            rem[i - deg + j] -= &c * d;
        }
    }
    rem.truncate(deg);
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::SignedMonomial;

    fn c(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![c(-1), c(1)]);
        assert_eq!(cyclotomic_poly(2), vec![c(1), c(1)]);
        assert_eq!(cyclotomic_poly(3), vec![c(1), c(1), c(1)]);
        assert_eq!(cyclotomic_poly(4), vec![c(1), c(0), c(1)]);
        assert_eq!(cyclotomic_poly(6), vec![c(1), c(-1), c(1)]);
        assert_eq!(cyclotomic_poly(12), vec![c(1), c(0), c(-1), c(0), c(1)]);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn reduce_i_cubed_plus_i() {
        // a^3 + a == 0 at a = i (n = 4)
        let p = LaurentPoly::from_terms([(3, c(1)), (1, c(1))]);
        let phi = cyclotomic_poly(4);
        assert_eq!(reduce_laurent(&p, 4, &phi), vec![c(0), c(0)]);
    }

    #[test]
    fn reduce_omega_squared() {
        // a^2 == -1 - a mod a^2 + a + 1 (n = 3)
        let p = LaurentPoly::monomial(2, c(1));
        let phi = cyclotomic_poly(3);
        assert_eq!(reduce_laurent(&p, 3, &phi), vec![c(-1), c(-1)]);
    }

    #[test]
    fn reduce_inverse_exponent() {
        // a^-1 == a^3 == -a mod a^2 + 1 (n = 4)
        let p = LaurentPoly::monomial(-1, c(1));
        let phi = cyclotomic_poly(4);
        assert_eq!(reduce_laurent(&p, 4, &phi), vec![c(0), c(-1)]);
    }

    #[test]
    fn series_reduction_zeroes_vanishing_coeffs() {
        // (a^3 + a) * q reduces to zero at n = 4
        let x = QSeries::from_monomial(SignedMonomial::a_pow(3).mul(SignedMonomial::q_pow(1)), 1, 8)
            .add(&QSeries::from_monomial(SignedMonomial::a().mul(SignedMonomial::q_pow(1)), 1, 8));
        let r = x.cyclotomic_reduce(4);
        assert!(r.is_zero());
    }

    #[test]
    fn mul_is_morphism_spot_check() {
        let x = QSeries::one(1, 10).mul_binomial(SignedMonomial::a().mul(SignedMonomial::q_pow(1)).neg());
        let y = QSeries::one(1, 10).mul_binomial(SignedMonomial::a_pow(2).mul(SignedMonomial::q_pow(2)));
        let lhs = x.mul(&y).cyclotomic_reduce(3);
        let rhs = x.cyclotomic_reduce(3).mul(&y.cyclotomic_reduce(3));
        assert!(lhs.agree(&rhs).0);
    }
}
