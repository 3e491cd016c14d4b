//! Builders for q-Pochhammer products, Ramanujan theta functions, the
//! m-dissection of the Jacobi triple product, and the quintuple product.
//!
//! Notation (ascending-factor convention):
//!
//!   (A;Q)_n   = (1-A)(1-AQ)...(1-AQ^{n-1})
//!   (A;Q)_inf = (1-A)(1-AQ)(1-AQ^2)...
//!   f(a,b)    = sum_{j in Z} a^{j(j+1)/2} b^{j(j-1)/2} = (-a,-b,ab;ab)_inf
//!
//! Bilateral sums compute their index windows from the exact quadratic
//! exponent formula, never by trial-and-stop.

use num_integer::Integer;
use num_traits::Zero;

use crate::monomial::SignedMonomial;
use crate::series::{scaled_exp, QSeries};
use crate::{Error, Rat};

/// Length of a Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLength {
    Finite(i64),
    Infinite,
}

/// Specification of `(A; Q)_len` with monomial base `A` and modulus `Q`.
///
/// `Q` must be a pure q-power with strictly positive exponent so that
/// truncation terminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochSpec {
    pub base: SignedMonomial,
    pub modulus: SignedMonomial,
    pub length: PochLength,
}

impl PochSpec {
    pub fn new(base: SignedMonomial, modulus: SignedMonomial, length: PochLength) -> Self {
        Self { base, modulus, length }
    }

    pub fn finite(base: SignedMonomial, modulus: SignedMonomial, n: i64) -> Self {
        Self::new(base, modulus, PochLength::Finite(n))
    }

    pub fn infinite(base: SignedMonomial, modulus: SignedMonomial) -> Self {
        Self::new(base, modulus, PochLength::Infinite)
    }

    /// Smallest scale at which every factor's exponent is integral.
    pub fn scale_den(&self) -> i64 {
        self.base.scale_den().lcm(&self.modulus.scale_den())
    }

    /// Exact minimal q-valuation of the truncated product: the sum of
    /// `min(0, val(A*Q^k))` over the factors that matter. Zero for finite
    /// products with nonnegative-valuation factors.
    pub fn min_val(&self) -> Rat {
        let p0 = self.base.q_exp;
        let step = self.modulus.q_exp;
        if p0 >= Rat::zero() || step <= Rat::zero() {
            return Rat::zero();
        }
        // factors with p0 + k*step < 0
        let mut v = Rat::zero();
        let mut k = 0i64;
        loop {
            let p = p0 + step * Rat::from_integer(k);
            if p >= Rat::zero() {
                break;
            }
            if let PochLength::Finite(n) = self.length {
                if k >= n {
                    break;
                }
            }
            v += p;
            k += 1;
        }
        v
    }
}

/// Exact truncated `(A;Q)_len` at the given scale and scaled order.
///
/// Negative-valuation leading factors are handled by building with internal
/// slack so the returned series is certified to `order`.
pub fn pochhammer(spec: &PochSpec, scale: i64, order: i64) -> Result<QSeries, Error> {
    assert!(spec.modulus.a_exp == 0, "modulus must have no a-part");
    assert!(scale % spec.scale_den() == 0, "scale {} incompatible with {:?}", scale, spec);
    if spec.modulus.q_exp <= Rat::zero() {
        if let PochLength::Infinite = spec.length {
            return Err(Error::NonTerminating(spec.modulus.q_exp));
        }
    }
    let slack = -scaled_exp(spec.min_val(), scale);
    let work = order + slack;
    let mut acc = QSeries::one(scale, work);
    let mut k = 0i64;
    loop {
        match spec.length {
            PochLength::Finite(n) => {
                if k >= n {
                    break;
                }
            }
            PochLength::Infinite => {
                let val = spec.base.q_exp + spec.modulus.q_exp * Rat::from_integer(k);
                if val * Rat::from_integer(scale) > Rat::from_integer(work) {
                    break;
                }
            }
        }
        let factor = spec.base.mul(spec.modulus.pow(k));
        acc = acc.mul_binomial(factor);
        k += 1;
    }
    debug_assert!(acc.order() >= order, "slack arithmetic failed for {:?}", spec);
    Ok(acc.truncate(order))
}

/// Product of Pochhammer factors: `(A_1, ..., A_r; Q)_len`.
pub fn multi_pochhammer(specs: &[PochSpec], scale: i64, order: i64) -> Result<QSeries, Error> {
    let mut total_slack = 0i64;
    for s in specs {
        total_slack += -scaled_exp(s.min_val(), scale);
    }
    let work = order + total_slack;
    let mut acc = QSeries::one(scale, work);
    for s in specs {
        acc = acc.mul(&pochhammer(s, scale, work)?);
    }
    debug_assert!(acc.order() >= order, "slack arithmetic failed for {:?}", specs);
    Ok(acc.truncate(order))
}

/// Divide by `(A;Q)_len` using exact binomial divisions. Every factor must
/// have strictly positive q-valuation (true whenever `val(A) > 0`).
pub fn poch_div(x: &QSeries, spec: &PochSpec) -> Result<QSeries, Error> {
    assert!(spec.modulus.a_exp == 0, "modulus must have no a-part");
    let scale = x.scale().lcm(&spec.scale_den());
    let mut acc = x.rescale(scale);
    let mut k = 0i64;
    loop {
        match spec.length {
            PochLength::Finite(n) => {
                if k >= n {
                    break;
                }
            }
            PochLength::Infinite => {
                if spec.modulus.q_exp <= Rat::zero() {
                    return Err(Error::NonTerminating(spec.modulus.q_exp));
                }
                let val = spec.base.q_exp + spec.modulus.q_exp * Rat::from_integer(k);
                if val * Rat::from_integer(scale) > Rat::from_integer(acc.order()) {
                    break;
                }
            }
        }
        let factor = spec.base.mul(spec.modulus.pow(k));
        if factor.q_exp <= Rat::zero() {
            return Err(Error::NotAUnit(format!("cannot divide by (1 - {})", factor)));
        }
        acc = acc.div_binomial(factor);
        k += 1;
    }
    Ok(acc)
}

/// Arguments of Ramanujan's theta function `f(A, B)`.
///
/// Invariants: `e_A + e_B = 0` (so the base `AB` is a pure q-power) and
/// `p_A + p_B > 0` (positive valuation of the base).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaSpec {
    pub a: SignedMonomial,
    pub b: SignedMonomial,
}

impl ThetaSpec {
    pub fn new(a: SignedMonomial, b: SignedMonomial) -> Result<Self, Error> {
        if a.a_exp + b.a_exp != 0 {
            return Err(Error::InvalidTheta(format!("a-exponents {} + {} != 0", a.a_exp, b.a_exp)));
        }
        if a.q_exp + b.q_exp <= Rat::zero() {
            return Err(Error::InvalidTheta(format!("base valuation {} <= 0", a.q_exp + b.q_exp)));
        }
        Ok(Self { a, b })
    }

    pub fn scale_den(&self) -> i64 {
        // Term exponents are p_A j(j+1)/2 + p_B j(j-1)/2; both triangular
        // numbers are integers, so the denominators of p_A, p_B suffice.
        self.a.scale_den().lcm(&self.b.scale_den())
    }
}

/// Bilateral theta sum `f(A,B) = sum_j A^{j(j+1)/2} B^{j(j-1)/2}`.
///
/// The term q-exponent is quadratic in `j` with positive leading coefficient
/// `(p_A + p_B)/2`, so the index window `{j : exponent <= order}` is a finite
/// interval computed exactly by walking outward from the vertex.
pub fn theta_sum(spec: &ThetaSpec, scale: i64, order: i64) -> Result<QSeries, Error> {
    assert!(scale % spec.scale_den() == 0);
    let pa = spec.a.q_exp;
    let pb = spec.b.q_exp;
    let exponent = |j: i64| -> Rat {
        let t1 = Rat::from_integer(j * (j + 1) / 2);
        let t2 = Rat::from_integer(j * (j - 1) / 2);
        pa * t1 + pb * t2
    };
    let bound = Rat::new(order, scale);
    // Vertex of the parabola (p_A+p_B)/2 j^2 + (p_A-p_B)/2 j.
    let vertex = -(pa - pb) / (Rat::from_integer(2) * (pa + pb));
    let j0 = vertex.floor().to_integer();
    let mut acc = QSeries::zero(scale, order);
    for dir in [0i64, 1] {
        // dir 0: walk down from j0; dir 1: walk up from j0+1. The exponent
        // is monotone along each walk, so stopping at the first exceedance
        // is exact.
        let mut j = j0 + dir;
        loop {
            if exponent(j) > bound {
                break;
            }
            let term = spec.a.pow(j * (j + 1) / 2).mul(spec.b.pow(j * (j - 1) / 2));
            acc = acc.add(&QSeries::from_monomial(term, scale, order));
            j += if dir == 0 { -1 } else { 1 };
        }
    }
    Ok(acc)
}

/// Triple-product form `f(A,B) = (-A, -B, AB; AB)_inf`.
pub fn theta_product(spec: &ThetaSpec, scale: i64, order: i64) -> Result<QSeries, Error> {
    let base = spec.a.mul(spec.b);
    multi_pochhammer(
        &[
            PochSpec::infinite(spec.a.neg(), base),
            PochSpec::infinite(spec.b.neg(), base),
            PochSpec::infinite(base, base),
        ],
        scale,
        order,
    )
}

/// Divide by the triple product `(-A,-B,AB;AB)_inf`; requires both
/// arguments to have strictly positive valuation.
pub fn theta_div(x: &QSeries, spec: &ThetaSpec) -> Result<QSeries, Error> {
    let base = spec.a.mul(spec.b);
    let mut acc = poch_div(x, &PochSpec::infinite(spec.a.neg(), base))?;
    acc = poch_div(&acc, &PochSpec::infinite(spec.b.neg(), base))?;
    poch_div(&acc, &PochSpec::infinite(base, base))
}

/// Euler-type product `f(-q^s) = (q^s; q^s)_inf`.
pub fn euler_f(s: Rat, scale: i64, order: i64) -> QSeries {
    assert!(s > Rat::zero());
    let m = SignedMonomial::new(1, 0, s);
    pochhammer(&PochSpec::infinite(m, m), scale, order).expect("positive modulus")
}

/// `psi` at a signed monomial argument `m`: `psi(m) = f(m, m^3)`, equal to
/// the product `(m^2;m^2)_inf / (m;m^2)_inf` (signs tracked on monomials).
pub fn psi(m: SignedMonomial, scale: i64, order: i64) -> QSeries {
    assert!(m.a_exp == 0 && m.q_exp > Rat::zero());
    let m2 = m.pow(2);
    let num = pochhammer(&PochSpec::infinite(m2, m2), scale, order).expect("positive modulus");
    poch_div(&num, &PochSpec::infinite(m, m2)).expect("positive valuation")
}

/// Divide by `psi(m)`: multiply by `(m;m^2)_inf` and divide by
/// `(m^2;m^2)_inf`.
pub fn psi_div(x: &QSeries, m: SignedMonomial) -> QSeries {
    assert!(m.a_exp == 0 && m.q_exp > Rat::zero());
    let m2 = m.pow(2);
    let scale = x.scale().lcm(&m.scale_den());
    let num = pochhammer(&PochSpec::infinite(m, m2), scale, x.order()).expect("positive modulus");
    let y = x.mul(&num);
    poch_div(&y, &PochSpec::infinite(m2, m2)).expect("positive valuation")
}

/// `phi` at a signed monomial argument: `phi(m) = f(m, m)`, equal to the
/// product `(-m, -m, m^2; m^2)_inf`.
pub fn phi(m: SignedMonomial, scale: i64, order: i64) -> QSeries {
    assert!(m.a_exp == 0 && m.q_exp > Rat::zero());
    let spec = ThetaSpec::new(m, m).expect("valid phi spec");
    theta_product(&spec, scale, order).expect("positive modulus")
}

/// Divide by `phi(m) = (-m,-m,m^2;m^2)_inf`.
pub fn phi_div(x: &QSeries, m: SignedMonomial) -> QSeries {
    let spec = ThetaSpec::new(m, m).expect("valid phi spec");
    theta_div(x, &spec).expect("positive valuation")
}

/// Both sides of the m-dissection of the triple product:
///
///   lhs = (-z, -q/z, q; q)_inf
///   rhs = sum_{r=0}^{m-1} q^{r(r-1)/2} z^r f(z^m q^{m(m-1)/2 + mr},
///                                            z^-m q^{m(m+1)/2 - mr})
///
/// with the theta factors in triple-product form. `z` is the symbolic
/// coefficient symbol.
pub fn jtp_dissect(m: i64, order: i64) -> (QSeries, QSeries) {
    assert!(m >= 1);
    let scale = 1;
    let z = SignedMonomial::a();
    let q = SignedMonomial::q_pow(1);
    let lhs = multi_pochhammer(
        &[
            PochSpec::infinite(z.neg(), q),
            PochSpec::infinite(q.div(z).neg(), q),
            PochSpec::infinite(q, q),
        ],
        scale,
        order,
    )
    .expect("positive modulus");

    let mut rhs = QSeries::zero(scale, order);
    for r in 0..m {
        let a_arg = z.pow(m).mul(SignedMonomial::q_pow(m * (m - 1) / 2 + m * r));
        let b_arg = z.pow(-m).mul(SignedMonomial::q_pow(m * (m + 1) / 2 - m * r));
        let spec = ThetaSpec::new(a_arg, b_arg).expect("base q^{m^2}");
        let f = theta_product(&spec, scale, order).expect("positive modulus");
        let pre = z.pow(r).mul(SignedMonomial::q_pow(r * (r - 1) / 2));
        rhs = rhs.add(&f.mul_monomial(pre).truncate(order));
    }
    (lhs, rhs)
}

/// The three sides of the quintuple product identity:
///
///   sum_side   = sum_n q^{n(3n+1)/2} (z^{3n} - z^{-3n-1})
///   theta_comb = (-q^2 z^3, -q/z^3, q^3; q^3)_inf
///                  - z^{-1} (-q^2/z^3, -q z^3, q^3; q^3)_inf
///   product    = (q, zq, 1/z; q)_inf (z^2 q, q/z^2; q^2)_inf
pub fn quintuple(order: i64) -> (QSeries, QSeries, QSeries) {
    let scale = 1;
    let z = SignedMonomial::a();
    let q = SignedMonomial::q_pow(1);

    // Bilateral sum; exponent n(3n+1)/2 is quadratic with vertex near
    // n = -1/6, so walk outward from n in {-1, 0}.
    let mut sum_side = QSeries::zero(scale, order);
    for dir in [0i64, 1] {
        let mut n = -1 + dir;
        loop {
            let e = n * (3 * n + 1) / 2;
            if e > order {
                break;
            }
            let t1 = z.pow(3 * n).mul(SignedMonomial::q_pow(e));
            let t2 = z.pow(-3 * n - 1).mul(SignedMonomial::q_pow(e)).neg();
            sum_side = sum_side
                .add(&QSeries::from_monomial(t1, scale, order))
                .add(&QSeries::from_monomial(t2, scale, order));
            n += if dir == 0 { -1 } else { 1 };
        }
    }

    let q3 = SignedMonomial::q_pow(3);
    let p1 = multi_pochhammer(
        &[
            PochSpec::infinite(SignedMonomial::q_pow(2).mul(z.pow(3)).neg(), q3),
            PochSpec::infinite(q.div(z.pow(3)).neg(), q3),
            PochSpec::infinite(q3, q3),
        ],
        scale,
        order,
    )
    .expect("positive modulus");
    let p2 = multi_pochhammer(
        &[
            PochSpec::infinite(SignedMonomial::q_pow(2).div(z.pow(3)).neg(), q3),
            PochSpec::infinite(q.mul(z.pow(3)).neg(), q3),
            PochSpec::infinite(q3, q3),
        ],
        scale,
        order,
    )
    .expect("positive modulus");
    let theta_comb = p1.sub(&p2.mul_monomial(z.pow(-1)).truncate(order));

    let q2 = SignedMonomial::q_pow(2);
    let product_side = multi_pochhammer(
        &[
            PochSpec::infinite(q, q),
            PochSpec::infinite(z.mul(q), q),
            PochSpec::infinite(z.pow(-1), q),
        ],
        scale,
        order,
    )
    .expect("positive modulus")
    .mul(
        &multi_pochhammer(
            &[
                PochSpec::infinite(z.pow(2).mul(q), q2),
                PochSpec::infinite(q.div(z.pow(2)), q2),
            ],
            scale,
            order,
        )
        .expect("positive modulus"),
    )
    .truncate(order);

    (sum_side, theta_comb, product_side)
}

/// Helper for summation windows: exact minimal q-valuation of `(A;Q)_n`
/// (sum of the negative parts of the factor valuations).
pub fn poch_min_val(base: SignedMonomial, modulus: SignedMonomial, n: i64) -> Rat {
    PochSpec::finite(base, modulus, n).min_val()
}

/// Build one series per coefficient of `1` shifted by a monomial, used by
/// sum builders: the exact series `1 + m`.
pub fn one_plus(m: SignedMonomial, scale: i64, order: i64) -> QSeries {
    QSeries::one(scale, order).add(&QSeries::from_monomial(m, scale, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn q() -> SignedMonomial {
        SignedMonomial::q_pow(1)
    }

    fn int_coeffs(x: &QSeries, upto: i64) -> Vec<i64> {
        (0..=upto)
            .map(|k| {
                let c = x.coefficient(k).unwrap();
                assert!(c.num_terms() <= 1 && c.min_exp().unwrap_or(0) == 0, "non-constant coeff");
                c.coeff(0).try_into().unwrap()
            })
            .collect()
    }

    #[test]
    fn empty_product_is_one() {
        let p = pochhammer(&PochSpec::finite(q(), q(), 0), 1, 10).unwrap();
        assert!(p.agree(&QSeries::one(1, 10)).unwrap().pass);
        let mp = multi_pochhammer(&[], 1, 10).unwrap();
        assert!(mp.agree(&QSeries::one(1, 10)).unwrap().pass);
    }

    #[test]
    fn qq3_expansion() {
        // (q;q)_3 = 1 - q - q^2 + q^4 + q^5 - q^6
        let p = pochhammer(&PochSpec::finite(q(), q(), 3), 1, 10).unwrap();
        assert_eq!(int_coeffs(&p, 6), vec![1, -1, -1, 0, 1, 1, -1]);
    }

    #[test]
    fn symbolic_poch() {
        // (-a; q)_2 = (1+a)(1+aq) = 1 + a + a q + a^2 q
        let p = pochhammer(&PochSpec::finite(SignedMonomial::a().neg(), q(), 2), 1, 10).unwrap();
        let c0 = p.coefficient(0).unwrap();
        let c1 = p.coefficient(1).unwrap();
        assert_eq!(c0, LaurentPoly::from_terms([(0, 1.into()), (1, 1.into())]));
        assert_eq!(c1, LaurentPoly::from_terms([(1, 1.into()), (2, 1.into())]));
    }

    #[test]
    fn multi_poch_rr2_numerator() {
        // (-aq, -q/a; q^2)_1 = 1 + aq + q/a + q^2
        let a = SignedMonomial::a();
        let q2 = SignedMonomial::q_pow(2);
        let p = multi_pochhammer(
            &[
                PochSpec::finite(a.mul(q()).neg(), q2, 1),
                PochSpec::finite(q().div(a).neg(), q2, 1),
            ],
            1,
            10,
        )
        .unwrap();
        assert_eq!(p.coefficient(1).unwrap(), LaurentPoly::from_terms([(-1, 1.into()), (1, 1.into())]));
        assert_eq!(p.coefficient(2).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn double_poch_squared() {
        // (q, q; q)_1 = (1-q)^2 = 1 - 2q + q^2
        let p = multi_pochhammer(&[PochSpec::finite(q(), q(), 1), PochSpec::finite(q(), q(), 1)], 1, 10).unwrap();
        assert_eq!(int_coeffs(&p, 2), vec![1, -2, 1]);
    }

    #[test]
    fn pentagonal_numbers() {
        // (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
        let p = euler_f(Rat::from_integer(1), 1, 16);
        assert_eq!(int_coeffs(&p, 16), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0]);
    }

    #[test]
    fn partition_generating_function() {
        // 1/(q;q)_inf: partition numbers
        let inv = euler_f(Rat::from_integer(1), 1, 12).invert().unwrap();
        assert_eq!(int_coeffs(&inv, 10), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn theta_sum_pentagonal() {
        // f(-q, -q^2) = (q;q)_inf
        let spec = ThetaSpec::new(q().neg(), SignedMonomial::q_pow(2).neg()).unwrap();
        let s = theta_sum(&spec, 1, 30).unwrap();
        let p = euler_f(Rat::from_integer(1), 1, 30);
        assert!(s.agree(&p).unwrap().pass);
    }

    #[test]
    fn theta_psi_head() {
        // psi(q) = f(q, q^3) = 1 + q + q^3 + q^6 + q^10 + ...
        let spec = ThetaSpec::new(q(), SignedMonomial::q_pow(3)).unwrap();
        let s = theta_sum(&spec, 1, 12).unwrap();
        assert_eq!(int_coeffs(&s, 12), vec![1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0]);
        assert!(s.agree(&psi(q(), 1, 12)).unwrap().pass);
    }

    #[test]
    fn theta_phi_heads() {
        // phi(q) = 1 + 2q + 2q^4 + 2q^9 + ...
        let s = phi(q(), 1, 10);
        assert_eq!(int_coeffs(&s, 10), vec![1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0]);
        // phi(-q) = 1 - 2q + 2q^4 - 2q^9 + ...
        let s = phi(q().neg(), 1, 10);
        assert_eq!(int_coeffs(&s, 10), vec![1, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0]);
    }

    #[test]
    fn psi_neg_q_head() {
        // psi(-q) = 1 - q - q^3 + q^6 + q^10 - q^15 ...
        let s = psi(q().neg(), 1, 16);
        assert_eq!(int_coeffs(&s, 16), vec![1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0]);
        // cross-check against f(u, u^3) at u = -q
        let spec = ThetaSpec::new(q().neg(), SignedMonomial::q_pow(3).neg()).unwrap();
        assert!(s.agree(&theta_sum(&spec, 1, 16).unwrap()).unwrap().pass);
    }

    #[test]
    fn theta_sum_vs_product_symbolic() {
        // f(a q^3, q^3/a): head a^-1 q^3 + 1 + a q^3 ...
        let a = SignedMonomial::a();
        let spec = ThetaSpec::new(a.mul(SignedMonomial::q_pow(3)), SignedMonomial::q_pow(3).div(a)).unwrap();
        let s = theta_sum(&spec, 1, 40).unwrap();
        assert_eq!(s.coefficient(0).unwrap(), LaurentPoly::one());
        assert_eq!(s.coefficient(3).unwrap(), LaurentPoly::from_terms([(-1, 1.into()), (1, 1.into())]));
        let p = theta_product(&spec, 1, 40).unwrap();
        assert!(s.agree(&p).unwrap().pass);
    }

    #[test]
    fn theta_invalid_spec() {
        let a = SignedMonomial::a();
        assert!(ThetaSpec::new(a.mul(q()), q()).is_err()); // e_A + e_B = 1
        assert!(ThetaSpec::new(a, a.inv()).is_err()); // base valuation 0
    }

    #[test]
    fn poch_finite_infinite_consistency() {
        // (A;q)_n (A q^n;q)_inf = (A;q)_inf, symbolic A = -a q
        let base = SignedMonomial::a().mul(q()).neg();
        let n = 4;
        let lhs = pochhammer(&PochSpec::finite(base, q(), n), 1, 30)
            .unwrap()
            .mul(&pochhammer(&PochSpec::infinite(base.mul(q().pow(n)), q()), 1, 30).unwrap());
        let rhs = pochhammer(&PochSpec::infinite(base, q()), 1, 30).unwrap();
        assert!(lhs.agree(&rhs).unwrap().pass);
    }

    #[test]
    fn negative_valuation_factor() {
        // (-a/q; q)_2 = (1 + a/q)(1 + a) = 1 + a + (a + a^2)/q: v_min = -1,
        // certified to the requested order.
        let base = SignedMonomial::a().mul(SignedMonomial::q_pow(-1)).neg();
        let p = pochhammer(&PochSpec::finite(base, q(), 2), 1, 10).unwrap();
        assert_eq!(p.v_min(), -1);
        assert_eq!(p.order(), 10);
        assert_eq!(p.coefficient(-1).unwrap(), LaurentPoly::from_terms([(1, 1.into()), (2, 1.into())]));
    }

    #[test]
    fn jtp_dissect_m1_trivial() {
        let (lhs, rhs) = jtp_dissect(1, 40);
        assert!(lhs.agree(&rhs).unwrap().pass);
    }

    #[test]
    fn jtp_dissect_small_m() {
        for m in 2..=3 {
            let (lhs, rhs) = jtp_dissect(m, 50);
            let r = lhs.agree(&rhs).unwrap();
            assert!(r.pass, "m = {} first diff {:?}", m, r.first_diff);
            assert!(r.order >= 50);
        }
    }

    #[test]
    fn quintuple_three_way() {
        let (s, t, p) = quintuple(50);
        assert!(s.agree(&t).unwrap().pass);
        assert!(t.agree(&p).unwrap().pass);
        // constant term of the product side is 1 - z^-1
        assert_eq!(p.coefficient(0).unwrap(), LaurentPoly::from_terms([(0, 1.into()), (-1, (-1).into())]));
        // sum side at order 0: z^0 - z^-1
        let s0 = quintuple(0).0;
        assert_eq!(s0.coefficient(0).unwrap(), LaurentPoly::from_terms([(0, 1.into()), (-1, (-1).into())]));
    }

    #[test]
    fn infinite_poch_nonterminating() {
        let spec = PochSpec::infinite(q(), SignedMonomial::q_pow(0));
        assert!(matches!(pochhammer(&spec, 1, 10), Err(Error::NonTerminating(_))));
    }
}
