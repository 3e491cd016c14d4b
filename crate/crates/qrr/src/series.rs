//! Truncated formal series in `t = q^(1/scale)` with [`LaurentPoly`]
//! coefficients.
//!
//! A `QSeries` asserts: the coefficient of `t^v` equals the stored value for
//! every `v <= order` (zero below `v_min`), and nothing is known above
//! `order`. The empty window `v_min = order + 1` is the zero series known
//! only to be `O(t^{order+1})`.
//!
//! Order propagation is pessimistic and explicit:
//! - `add`: order = min of the two orders (after rescaling to the lcm scale)
//! - `mul`: order = min(order_x + v_min_y, order_y + v_min_x)
//! - `invert`: order = order_x - 2 * v_min_x
//! - `div_binomial` (division by `1 - m` with val(m) > 0): order unchanged
//!
//! Storage is dense over the exponent window; the Laurent coefficients are
//! sparse. A hard cap on the absolute a-exponent (default `4 * |order|`)
//! turns runaway symbolic exponents from builder bugs into a loud panic
//! instead of memory exhaustion.

use std::sync::atomic::{AtomicI64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cyclo::CycloSeries;
use crate::laurent::LaurentPoly;
use crate::monomial::SignedMonomial;
use crate::{Error, Rat};

static A_EXP_CAP_FACTOR: AtomicI64 = AtomicI64::new(4);

/// Override the a-exponent cap factor (cap = factor * max(|order|, 16)).
pub fn set_a_exp_cap_factor(factor: i64) {
    A_EXP_CAP_FACTOR.store(factor.max(1), Ordering::Relaxed);
}

fn a_exp_cap(order: i64) -> i64 {
    A_EXP_CAP_FACTOR.load(Ordering::Relaxed) * order.abs().max(16)
}

/// Exact truncated series: coefficients of `t^v` for `v_min <= v <= order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    scale: i64,
    v_min: i64,
    order: i64,
    coeffs: Vec<LaurentPoly>,
}

/// Outcome of comparing two series over their common guaranteed window.
#[derive(Clone, Debug)]
pub struct Agreement {
    /// Scale the comparison was performed at (lcm of the inputs).
    pub scale: i64,
    /// Highest scaled exponent certified equal.
    pub order: i64,
    pub pass: bool,
    /// On failure: first differing scaled exponent with both coefficients.
    pub first_diff: Option<(i64, LaurentPoly, LaurentPoly)>,
}

impl Agreement {
    /// Certified order as a q-exponent.
    pub fn q_order(&self) -> Rat {
        Rat::new(self.order, self.scale)
    }
}

impl QSeries {
    /// The zero series `O(t^{order+1})` at the given scale.
    pub fn zero(scale: i64, order: i64) -> Self {
        assert!(scale >= 1);
        Self { scale, v_min: order + 1, order, coeffs: Vec::new() }
    }

    pub fn one(scale: i64, order: i64) -> Self {
        Self::term(scale, 0, LaurentPoly::one(), order)
    }

    /// Single exact term `c(a) * t^v`, truncated to `order`.
    pub fn term(scale: i64, v: i64, c: LaurentPoly, order: i64) -> Self {
        assert!(scale >= 1);
        if c.is_zero() || v > order {
            return Self::zero(scale, order);
        }
        Self { scale, v_min: v, order, coeffs: vec![c] }
    }

    /// Exact series for a signed monomial; its q-exponent times the scale
    /// must be an integer.
    pub fn from_monomial(m: SignedMonomial, scale: i64, order: i64) -> Self {
        let v = scaled_exp(m.q_exp, scale);
        let c = LaurentPoly::monomial(m.a_exp, if m.sign < 0 { -BigInt::one() } else { BigInt::one() });
        Self::term(scale, v, c, order)
    }

    fn from_parts(scale: i64, v_min: i64, order: i64, coeffs: Vec<LaurentPoly>) -> Self {
        let mut s = Self { scale, v_min, order, coeffs };
        s.normalize();
        s
    }

    /// Drop leading zero coefficients (raising `v_min` to the true
    /// valuation) and verify the a-exponent cap.
    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.v_min += lead as i64;
        }
        let window = (self.order - self.v_min + 1).max(0) as usize;
        self.coeffs.truncate(window);
        if self.coeffs.is_empty() {
            self.v_min = self.order + 1;
        }
        let cap = a_exp_cap(self.order);
        for c in &self.coeffs {
            let m = c.max_abs_exp();
            assert!(
                m <= cap,
                "a-exponent {} exceeds cap {} (order {}): runaway symbolic exponent in a builder",
                m,
                cap,
                self.order
            );
        }
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn v_min(&self) -> i64 {
        self.v_min
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact Laurent coefficient of `t^k`; zero below the window,
    /// `OutOfRange` above the guaranteed order.
    pub fn coefficient(&self, k: i64) -> Result<LaurentPoly, Error> {
        if k > self.order {
            return Err(Error::OutOfRange { k, order: self.order });
        }
        Ok(self.coeff_ref(k).cloned().unwrap_or_default())
    }

    /// Stored coefficient of `t^k`; `None` means known-zero (outside the
    /// stored window) — trailing zeros need not be materialized.
    fn coeff_ref(&self, k: i64) -> Option<&LaurentPoly> {
        if k < self.v_min || k > self.order {
            None
        } else {
            self.coeffs.get((k - self.v_min) as usize)
        }
    }

    /// Iterate stored `(scaled exponent, coefficient)` pairs ascending,
    /// skipping zero coefficients.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.v_min + i as i64, c))
    }

    /// Re-express at a scale that is a positive multiple of the current one.
    /// Exponents (including the order bound) multiply by the factor, so the
    /// guaranteed window is preserved exactly.
    pub fn rescale(&self, new_scale: i64) -> Self {
        assert!(new_scale >= self.scale && new_scale % self.scale == 0, "rescale target must be a multiple");
        let k = new_scale / self.scale;
        if k == 1 {
            return self.clone();
        }
        // Order k*order + (k-1): everything strictly between stretched
        // exponents is known zero.
        let order = self.order * k + (k - 1);
        if self.is_zero() {
            return Self::zero(new_scale, order);
        }
        let v_min = self.v_min * k;
        let mut coeffs = vec![LaurentPoly::zero(); (order - v_min + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        Self::from_parts(new_scale, v_min, order, coeffs)
    }

    /// Tighten the guaranteed order (no-op if already lower).
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        let mut s = self.clone();
        s.order = order;
        s.coeffs.truncate((order - s.v_min + 1).max(0) as usize);
        s.normalize();
        s
    }

    fn common_scale(&self, other: &Self) -> (Self, Self) {
        let l = self.scale.lcm(&other.scale);
        (self.rescale(l), other.rescale(l))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (x, y) = self.common_scale(other);
        let order = x.order.min(y.order);
        let v_min = x.v_min.min(y.v_min).min(order + 1);
        let mut coeffs = vec![LaurentPoly::zero(); (order - v_min + 1).max(0) as usize];
        for s in [&x, &y] {
            for (v, c) in s.iter() {
                if v <= order {
                    let idx = (v - v_min) as usize;
                    coeffs[idx] = coeffs[idx].add(c);
                }
            }
        }
        Self::from_parts(x.scale, v_min, order, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            scale: self.scale,
            v_min: self.v_min,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Cauchy product; order = min(order_x + v_min_y, order_y + v_min_x).
    pub fn mul(&self, other: &Self) -> Self {
        let (x, y) = self.common_scale(other);
        let order = (x.order + y.v_min).min(y.order + x.v_min);
        if x.is_zero() || y.is_zero() {
            return Self::zero(x.scale, order);
        }
        let v_min = x.v_min + y.v_min;
        if order < v_min {
            return Self::zero(x.scale, order);
        }
        let mut coeffs = vec![LaurentPoly::zero(); (order - v_min + 1) as usize];
        for (vx, cx) in x.iter() {
            if vx + y.v_min > order {
                break;
            }
            for (vy, cy) in y.iter() {
                let v = vx + vy;
                if v > order {
                    break;
                }
                let idx = (v - v_min) as usize;
                coeffs[idx] = coeffs[idx].add(&cx.mul(cy));
            }
        }
        Self::from_parts(x.scale, v_min, order, coeffs)
    }

    /// Multiply by the exact term `c(a) * t^v`: order shifts by `v`.
    pub fn mul_term(&self, v: i64, c: &LaurentPoly) -> Self {
        let order = self.order + v;
        if c.is_zero() || self.is_zero() {
            return Self::zero(self.scale, order);
        }
        Self {
            scale: self.scale,
            v_min: self.v_min + v,
            order,
            coeffs: self.coeffs.iter().map(|d| d.mul(c)).collect(),
        }
    }

    /// Multiply by an exact signed monomial (a q-shift plus a-shift).
    pub fn mul_monomial(&self, m: SignedMonomial) -> Self {
        let v = scaled_exp(m.q_exp, self.scale);
        let c = LaurentPoly::monomial(m.a_exp, if m.sign < 0 { -BigInt::one() } else { BigInt::one() });
        self.mul_term(v, &c)
    }

    /// Multiply by the exact binomial `1 - m`.
    pub fn mul_binomial(&self, m: SignedMonomial) -> Self {
        self.sub(&self.mul_monomial(m))
    }

    /// Divide exactly by the binomial `1 - m`, where `m` must have strictly
    /// positive q-valuation. Forward recurrence: y[v] = x[v] + (m*y)[v].
    pub fn div_binomial(&self, m: SignedMonomial) -> Self {
        let p = scaled_exp(m.q_exp, self.scale);
        assert!(p > 0, "div_binomial requires positive q-valuation, got {}", m.q_exp);
        if self.is_zero() {
            return self.clone();
        }
        let shift_c = LaurentPoly::monomial(m.a_exp, if m.sign < 0 { -BigInt::one() } else { BigInt::one() });
        let v_min = self.v_min;
        let order = self.order;
        let mut coeffs = vec![LaurentPoly::zero(); (order - v_min + 1) as usize];
        for v in v_min..=order {
            let mut c = self.coeff_ref(v).cloned().unwrap_or_default();
            if v - p >= v_min {
                let prev = &coeffs[(v - p - v_min) as usize];
                if !prev.is_zero() {
                    c = c.add(&prev.mul(&shift_c));
                }
            }
            coeffs[(v - v_min) as usize] = c;
        }
        Self::from_parts(self.scale, v_min, order, coeffs)
    }

    /// Invert a series whose lowest coefficient is a unit monomial `±a^e`.
    /// Result: v_min = -v_min_x, order = order_x - 2*v_min_x.
    pub fn invert(&self) -> Result<Self, Error> {
        let lead = self
            .coeff_ref(self.v_min)
            .ok_or_else(|| Error::NotAUnit("zero series".into()))?;
        let (e, sign) = lead
            .as_unit_monomial()
            .ok_or_else(|| Error::NotAUnit(lead.to_string()))?;
        let lead_inv = LaurentPoly::monomial(-e, if sign < 0 { -BigInt::one() } else { BigInt::one() });
        let n = (self.order - self.v_min) as usize; // window length - 1
        // Invert u = series / (lead * t^v_min), a unit power series.
        let mut inv = vec![LaurentPoly::zero(); n + 1];
        inv[0] = lead_inv.clone();
        for w in 1..=n {
            let mut acc = LaurentPoly::zero();
            for k in 1..=w.min(self.coeffs.len() - 1) {
                let xk = &self.coeffs[k];
                if xk.is_zero() || inv[w - k].is_zero() {
                    continue;
                }
                acc = acc.add(&xk.mul(&inv[w - k]));
            }
            if !acc.is_zero() {
                inv[w] = acc.mul(&lead_inv).neg();
            }
        }
        let v_min = -self.v_min;
        let order = self.order - 2 * self.v_min;
        Ok(Self::from_parts(self.scale, v_min, order, inv))
    }

    /// Substitute `a -> m` (which may itself carry an a-part, so this also
    /// covers `a -> -a` or `a -> a*q^p`).
    ///
    /// Order bookkeeping: stored terms `c a^e t^v` move to q-exponent
    /// `v/scale + e*p`. Terms in the unknown tail can be pulled below the old
    /// order when `e*p < 0`, so the certified order is reduced by
    /// `(max |a-exponent present|) * |p|` for `p < 0`, and by
    /// `(-min a-exponent present) * p` for `p > 0` (tail a-exponents of the
    /// series handled here grow no faster than the stored ones).
    pub fn substitute_a(&self, m: SignedMonomial) -> Self {
        let new_scale = self.scale.lcm(&m.scale_den());
        let x = self.rescale(new_scale);
        // Reduction of the certified order, as a scaled exponent.
        let p_scaled = m.q_exp * Rat::from_integer(new_scale);
        let mut e_min: i64 = 0;
        let mut e_absmax: i64 = 0;
        for (_, c) in x.iter() {
            e_absmax = e_absmax.max(c.max_abs_exp());
            e_min = e_min.min(c.min_exp().unwrap_or(0));
        }
        let red_rat = if p_scaled < Rat::zero() {
            -p_scaled * Rat::from_integer(e_absmax)
        } else {
            p_scaled * Rat::from_integer(-e_min)
        };
        let red = red_rat.max(Rat::zero()).ceil().to_integer();
        let order = x.order - red;
        let mut terms: Vec<(i64, LaurentPoly)> = Vec::new();
        for (v, c) in x.iter() {
            for (e, coef) in c.iter() {
                let shift = p_scaled * Rat::from_integer(e);
                debug_assert!(shift.is_integer());
                let w = v + shift.to_integer();
                if w > order {
                    continue;
                }
                let signed = if m.sign < 0 && e.rem_euclid(2) == 1 { -coef } else { coef.clone() };
                terms.push((w, LaurentPoly::monomial(m.a_exp * e, signed)));
            }
        }
        let v_min = terms.iter().map(|&(w, _)| w).min().unwrap_or(order + 1);
        if order < v_min {
            return Self::zero(new_scale, order);
        }
        let mut coeffs = vec![LaurentPoly::zero(); (order - v_min + 1) as usize];
        for (w, c) in terms {
            let idx = (w - v_min) as usize;
            coeffs[idx] = coeffs[idx].add(&c);
        }
        Self::from_parts(new_scale, v_min, order, coeffs)
    }

    /// Reduce every coefficient modulo the n-th cyclotomic polynomial,
    /// specializing `a` to a primitive n-th root of unity.
    pub fn cyclotomic_reduce(&self, n: i64) -> CycloSeries {
        CycloSeries::reduce(self, n)
    }

    /// Compare over the common guaranteed window.
    pub fn agree(&self, other: &Self) -> Result<Agreement, Error> {
        let (x, y) = self.common_scale(other);
        let order = x.order.min(y.order);
        let lo = x.v_min.min(y.v_min);
        if order < lo {
            return Err(Error::EmptyOverlap(x.order, y.order));
        }
        for v in lo..=order {
            let zero = LaurentPoly::zero();
            let cx = x.coeff_ref(v).unwrap_or(&zero);
            let cy = y.coeff_ref(v).unwrap_or(&zero);
            if cx != cy {
                return Ok(Agreement {
                    scale: x.scale,
                    order,
                    pass: false,
                    first_diff: Some((v, cx.clone(), cy.clone())),
                });
            }
        }
        Ok(Agreement { scale: x.scale, order, pass: true, first_diff: None })
    }

    /// Deterministic plain-text rendering: terms ascending in exponent,
    /// a-exponents ascending within each coefficient.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut first = true;
        for (v, c) in self.iter() {
            let (sign, body) = render_coeff_term(c, v, self.scale);
            if first {
                if sign < 0 {
                    out.push('-');
                }
                out.push_str(&body);
                first = false;
            } else {
                out.push_str(if sign < 0 { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if first {
            out.push('0');
        }
        out
    }
}

/// Render one `c(a) * t^v` term; returns (pulled-out sign, body).
fn render_coeff_term(c: &LaurentPoly, v: i64, scale: i64) -> (i8, String) {
    let qpart = render_q_power(v, scale);
    if let Some((e, coefs)) = single_term(c) {
        let sign = if coefs.is_negative() { -1 } else { 1 };
        let mag = coefs.magnitude();
        let apart = match e {
            0 => None,
            1 => Some("a".to_string()),
            _ => Some(format!("a^{}", e)),
        };
        let mut pieces: Vec<String> = Vec::new();
        if !mag.is_one() || (apart.is_none() && qpart.is_none()) {
            pieces.push(mag.to_string());
        }
        if let Some(a) = apart {
            pieces.push(a);
        }
        if let Some(q) = qpart {
            pieces.push(q);
        }
        (sign, pieces.join("*"))
    } else {
        let body = match qpart {
            Some(q) => format!("({})*{}", c, q),
            None => format!("({})", c),
        };
        (1, body)
    }
}

fn single_term(c: &LaurentPoly) -> Option<(i64, BigInt)> {
    if c.num_terms() == 1 {
        c.iter().next().map(|(e, v)| (e, v.clone()))
    } else {
        None
    }
}

fn render_q_power(v: i64, scale: i64) -> Option<String> {
    if v == 0 {
        return None;
    }
    if v % scale == 0 {
        let e = v / scale;
        if e == 1 {
            Some("q".into())
        } else if e > 1 {
            Some(format!("q^{}", e))
        } else {
            Some(format!("q^({})", e))
        }
    } else {
        Some(format!("q^({})", Rat::new(v, scale)))
    }
}

/// Exact scaled exponent `p * scale`, asserting integrality.
pub fn scaled_exp(p: Rat, scale: i64) -> i64 {
    let s = p * Rat::from_integer(scale);
    assert!(s.is_integer(), "exponent {} not representable at scale {}", p, scale);
    s.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom(order: i64) -> QSeries {
        // 1/(1-q) = 1 + q + q^2 + ...
        QSeries::one(1, order).div_binomial(SignedMonomial::q_pow(1))
    }

    #[test]
    fn add_cancellation() {
        let one_minus_q = QSeries::one(1, 10).mul_binomial(SignedMonomial::q_pow(1));
        let q = QSeries::from_monomial(SignedMonomial::q_pow(1), 1, 10);
        let sum = one_minus_q.add(&q);
        assert!(sum.agree(&QSeries::one(1, 10)).unwrap().pass);
        assert_eq!(sum.v_min(), 0);
    }

    #[test]
    fn add_zero_takes_min_order() {
        let x = QSeries::one(1, 10);
        let z = QSeries::zero(1, 4);
        assert_eq!(x.add(&z).order(), 4);
    }

    #[test]
    fn add_across_scales() {
        // (1 + q^(1/2)) + (1 + q) = 2 + t + t^2 at scale 2
        let a = QSeries::one(2, 20).add(&QSeries::from_monomial(SignedMonomial::q_pow_frac(1, 2), 2, 20));
        let b = QSeries::one(1, 10).add(&QSeries::from_monomial(SignedMonomial::q_pow(1), 1, 10));
        let sum = a.add(&b);
        assert_eq!(sum.scale(), 2);
        assert_eq!(sum.coefficient(0).unwrap(), LaurentPoly::constant(2));
        assert_eq!(sum.coefficient(1).unwrap(), LaurentPoly::constant(1));
        assert_eq!(sum.coefficient(2).unwrap(), LaurentPoly::constant(1));
    }

    #[test]
    fn telescoping_product() {
        // (1 - q) * (1 + q + q^2 + ...) = 1
        let g = geom(30);
        let p = g.mul_binomial(SignedMonomial::q_pow(1));
        assert!(p.agree(&QSeries::one(1, 30)).unwrap().pass);
    }

    #[test]
    fn laurent_difference_of_squares() {
        // (1 + a q)(1 - a q) = 1 - a^2 q^2
        let aq = SignedMonomial::a().mul(SignedMonomial::q_pow(1));
        let x = QSeries::one(1, 10).mul_binomial(aq.neg()); // 1 + a q
        let y = x.mul_binomial(aq); // times (1 - a q)
        assert_eq!(y.coefficient(0).unwrap(), LaurentPoly::one());
        assert_eq!(y.coefficient(1).unwrap(), LaurentPoly::zero());
        assert_eq!(y.coefficient(2).unwrap(), LaurentPoly::monomial(2, BigInt::from(-1)));
    }

    #[test]
    fn poch2_expansion() {
        // (1-q)(1-q^2) = 1 - q - q^2 + q^3
        let p = QSeries::one(1, 10)
            .mul_binomial(SignedMonomial::q_pow(1))
            .mul_binomial(SignedMonomial::q_pow(2));
        let want = [1i64, -1, -1, 1, 0, 0];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(p.coefficient(k as i64).unwrap(), LaurentPoly::constant(*w));
        }
    }

    #[test]
    fn invert_geometric() {
        let x = QSeries::one(1, 12).mul_binomial(SignedMonomial::q_pow(1)); // 1 - q
        let inv = x.invert().unwrap();
        assert!(inv.agree(&geom(12)).unwrap().pass);
        assert!(x.mul(&inv).agree(&QSeries::one(1, 12)).unwrap().pass);
    }

    #[test]
    fn invert_non_unit_lead_fails() {
        // 1 + a has a non-monomial constant coefficient
        let x = QSeries::one(1, 8).mul_binomial(SignedMonomial::a().neg());
        assert!(matches!(x.invert(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn invert_laurent_lead() {
        // x = a^-1 q^-2 + q: lead is a unit monomial at v_min = -2
        let m = SignedMonomial::new(1, -1, Rat::from_integer(-2));
        let x = QSeries::from_monomial(m, 1, 6).add(&QSeries::from_monomial(SignedMonomial::q_pow(1), 1, 6));
        let inv = x.invert().unwrap();
        assert_eq!(inv.v_min(), 2);
        assert!(x.mul(&inv).agree(&QSeries::one(1, 8)).unwrap().pass);
    }

    #[test]
    fn coefficient_out_of_range() {
        let x = QSeries::one(1, 5);
        assert!(matches!(x.coefficient(6), Err(Error::OutOfRange { .. })));
        assert_eq!(x.coefficient(-3).unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn agree_detects_first_difference() {
        let x = QSeries::one(1, 10).add(&QSeries::from_monomial(SignedMonomial::q_pow(1), 1, 10));
        let y = QSeries::one(1, 10).add(&QSeries::from_monomial(SignedMonomial::q_pow(1), 1, 10).mul_term(0, &LaurentPoly::constant(2)));
        let r = x.agree(&y).unwrap();
        assert!(!r.pass);
        let (v, cx, cy) = r.first_diff.unwrap();
        assert_eq!(v, 1);
        assert_eq!(cx, LaurentPoly::constant(1));
        assert_eq!(cy, LaurentPoly::constant(2));
    }

    #[test]
    fn agree_beyond_order_passes() {
        let x = QSeries::one(1, 10).add(&QSeries::from_monomial(SignedMonomial::q_pow(1), 1, 10));
        let y = x.add(&QSeries::from_monomial(SignedMonomial::q_pow(50), 1, 60));
        let r = x.agree(&y).unwrap();
        assert!(r.pass);
        assert_eq!(r.order, 10);
    }

    #[test]
    fn substitute_simple() {
        // a q + a^-1 q^2 at a -> -q: -q^2 - q  ... wait: a q -> -q^2; a^-1 q^2 -> -q^{2-1} = -q
        let x = QSeries::from_monomial(SignedMonomial::a().mul(SignedMonomial::q_pow(1)), 1, 10)
            .add(&QSeries::from_monomial(SignedMonomial::a_pow(-1).mul(SignedMonomial::q_pow(2)), 1, 10));
        let y = x.substitute_a(SignedMonomial::parse("-q").unwrap());
        assert_eq!(y.coefficient(1).unwrap(), LaurentPoly::constant(-1));
        assert_eq!(y.coefficient(2).unwrap(), LaurentPoly::constant(-1));
        // order reduced by 1: the a^-1 term pulls down by one
        assert_eq!(y.order(), 9);
    }

    #[test]
    fn substitute_identity_value() {
        // substitute a -> 1 in 1 + a q
        let x = QSeries::one(1, 10).mul_binomial(SignedMonomial::a().mul(SignedMonomial::q_pow(1)).neg());
        let y = x.substitute_a(SignedMonomial::one());
        assert_eq!(y.coefficient(1).unwrap(), LaurentPoly::constant(1));
        assert_eq!(y.order(), 10);
    }

    #[test]
    fn rescale_roundtrip_window() {
        let x = geom(9);
        let y = x.rescale(3);
        assert_eq!(y.order(), 29);
        for k in 0..=9 {
            assert_eq!(y.coefficient(3 * k).unwrap(), x.coefficient(k).unwrap());
        }
        let r = y.agree(&x).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn text_rendering() {
        let x = QSeries::one(1, 10)
            .mul_binomial(SignedMonomial::q_pow(1))
            .mul_binomial(SignedMonomial::q_pow(2));
        assert_eq!(x.to_text(), "1 - q - q^2 + q^3");
    }
}
