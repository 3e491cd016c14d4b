//! Bailey pairs as first-class values.
//!
//! A pair of sequences (alpha_n, beta_n) is a Bailey pair relative to `z`
//! when
//!
//!   beta_n = sum_{r=0}^{n} alpha_r / [(q;q)_{n-r} (zq;q)_{n+r}].
//!
//! Verification is cross-multiplied, so it is exact and never divides by a
//! non-unit:
//!
//!   beta_n (q;q)_n (zq;q)_{2n}
//!     = sum_{r=0}^{n} alpha_r (q^{n-r+1};q)_r (zq^{n+r+1};q)_{n-r}.
//!
//! The two lemma pairs used throughout carry the free symbol `a` in their
//! terms, with the pair's own `q` instantiated at an arbitrary positive
//! q-power base, and the module also exposes the Slater-style transform of a
//! pair (both the two-parameter form and its y = q*sqrt(a), z -> infinity
//! limit).

use std::sync::Arc;

use num_traits::Zero;

use crate::monomial::SignedMonomial;
use crate::qfunctions::{poch_div, pochhammer, PochSpec};
use crate::series::{Agreement, QSeries};
use crate::{Error, Rat};

type TermFn = Arc<dyn Fn(i64, i64, i64) -> QSeries + Send + Sync>;
type ValFn = Arc<dyn Fn(i64) -> Rat + Send + Sync>;

/// A Bailey pair with evaluable term rules.
///
/// `alpha`/`beta` map `(n, scale, order)` to the exact term series;
/// `alpha_val`/`beta_val` give each term's exact minimal q-valuation, used
/// to certify summation windows.
#[derive(Clone)]
pub struct BaileyPair {
    pub name: &'static str,
    /// The `z` of "relative to z" (a pure q-power or 1).
    pub relative: SignedMonomial,
    /// The pair's `q` (a pure positive q-power).
    pub base: SignedMonomial,
    alpha: TermFn,
    beta: TermFn,
    alpha_val: ValFn,
    beta_val: ValFn,
}

impl std::fmt::Debug for BaileyPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BaileyPair")
            .field("name", &self.name)
            .field("relative", &self.relative)
            .field("base", &self.base)
            .finish()
    }
}

impl BaileyPair {
    pub fn alpha(&self, n: i64, scale: i64, order: i64) -> QSeries {
        (self.alpha)(n, scale, order)
    }

    pub fn beta(&self, n: i64, scale: i64, order: i64) -> QSeries {
        (self.beta)(n, scale, order)
    }

    pub fn alpha_val(&self, n: i64) -> Rat {
        (self.alpha_val)(n)
    }

    pub fn beta_val(&self, n: i64) -> Rat {
        (self.beta_val)(n)
    }

    /// Smallest scale representing the pair's exponents.
    pub fn scale_den(&self) -> i64 {
        num_integer::lcm(self.base.scale_den(), self.relative.scale_den())
    }
}

/// The Andrews-Berndt pair, relative to `q`:
///
///   alpha_n = (a^{-n} + a^{n+1}) q^{n(n+1)/2}
///   beta_n  = (-a;q)_{n+1} (-q/a;q)_n / (q^2;q)_{2n}
///
/// with the symbol `a` free and `q` instantiated at `base`.
pub fn abbp_pair(base: SignedMonomial) -> BaileyPair {
    assert!(base.is_pure_q_power() && base.q_exp > Rat::zero());
    let a = SignedMonomial::a();
    let alpha = move |n: i64, scale: i64, order: i64| {
        let qpow = base.pow(n * (n + 1) / 2);
        QSeries::from_monomial(a.pow(-n).mul(qpow), scale, order)
            .add(&QSeries::from_monomial(a.pow(n + 1).mul(qpow), scale, order))
    };
    let beta = move |n: i64, scale: i64, order: i64| {
        let num = pochhammer(&PochSpec::finite(a.neg(), base, n + 1), scale, order)
            .expect("finite product")
            .mul(
                &pochhammer(&PochSpec::finite(base.div(a).neg(), base, n), scale, order)
                    .expect("finite product"),
            );
        poch_div(&num, &PochSpec::finite(base.pow(2), base, 2 * n)).expect("unit denominators")
    };
    let bval = base.q_exp;
    BaileyPair {
        name: "ABBP",
        relative: base,
        base,
        alpha: Arc::new(alpha),
        beta: Arc::new(beta),
        alpha_val: Arc::new(move |n| bval * Rat::from_integer(n * (n + 1) / 2)),
        beta_val: Arc::new(|_| Rat::zero()),
    }
}

/// The pair relative to `1`:
///
///   alpha_0 = 1
///   alpha_n = a^{-n} q^{n(n-1)/2} + a^n q^{n(n+1)/2}   (n > 0)
///   beta_n  = (-aq;q)_n (-1/a;q)_n / (q;q)_{2n}
pub fn newbp_pair(base: SignedMonomial) -> BaileyPair {
    assert!(base.is_pure_q_power() && base.q_exp > Rat::zero());
    let a = SignedMonomial::a();
    let alpha = move |n: i64, scale: i64, order: i64| {
        if n == 0 {
            return QSeries::one(scale, order);
        }
        QSeries::from_monomial(a.pow(-n).mul(base.pow(n * (n - 1) / 2)), scale, order)
            .add(&QSeries::from_monomial(a.pow(n).mul(base.pow(n * (n + 1) / 2)), scale, order))
    };
    let beta = move |n: i64, scale: i64, order: i64| {
        let num = pochhammer(&PochSpec::finite(a.mul(base).neg(), base, n), scale, order)
            .expect("finite product")
            .mul(
                &pochhammer(&PochSpec::finite(a.inv().neg(), base, n), scale, order)
                    .expect("finite product"),
            );
        poch_div(&num, &PochSpec::finite(base, base, 2 * n)).expect("unit denominators")
    };
    let bval = base.q_exp;
    BaileyPair {
        name: "NewBP",
        relative: SignedMonomial::one(),
        base,
        alpha: Arc::new(alpha),
        beta: Arc::new(beta),
        alpha_val: Arc::new(move |n| bval * Rat::from_integer(n * (n - 1) / 2)),
        beta_val: Arc::new(|_| Rat::zero()),
    }
}

/// Check the defining relation for `0 <= n <= n_max` in cross-multiplied
/// form at the given scaled order. Returns one agreement per index.
pub fn verify_bailey_pair(pair: &BaileyPair, n_max: i64, order: i64) -> Vec<Agreement> {
    let scale = pair.scale_den();
    let q = pair.base;
    let zq = pair.relative.mul(q);
    let mut out = Vec::with_capacity((n_max + 1) as usize);
    for n in 0..=n_max {
        let lhs = pair
            .beta(n, scale, order)
            .mul(&pochhammer(&PochSpec::finite(q, q, n), scale, order).expect("finite"))
            .mul(&pochhammer(&PochSpec::finite(zq, q, 2 * n), scale, order).expect("finite"));
        let mut rhs = QSeries::zero(scale, order);
        for r in 0..=n {
            let t = pair
                .alpha(r, scale, order)
                .mul(&pochhammer(&PochSpec::finite(q.pow(n - r + 1), q, r), scale, order).expect("finite"))
                .mul(
                    &pochhammer(&PochSpec::finite(zq.mul(q.pow(n + r)), q, n - r), scale, order)
                        .expect("finite"),
                );
            rhs = rhs.add(&t);
        }
        out.push(lhs.truncate(order).agree(&rhs).expect("common window"));
    }
    out
}

/// Both sides of the Slater transform of a Bailey pair:
///
///   sum_n (y,z;q)_n (aq/yz)^n beta_n
///     = [(aq/y, aq/z;q)_inf / (aq, aq/yz;q)_inf]
///       * sum_n [(y,z;q)_n / ((aq/y, aq/z;q)_n)] (aq/yz)^n alpha_n
///
/// with `a` the pair's relative parameter and `q` its base. `y`, `z` are
/// monomials; `aq/yz` must have strictly positive q-valuation so the beta
/// side converges formally (its terms gain only linear valuation), and
/// `aq/y`, `aq/z` must have positive valuation so the denominators are
/// exact binomial chains.
pub fn slater_transform_sides(
    pair: &BaileyPair,
    y: SignedMonomial,
    z: SignedMonomial,
    n_max_override: Option<i64>,
    order: i64,
) -> Result<(QSeries, QSeries), Error> {
    let q = pair.base;
    let aq = pair.relative.mul(q);
    let w = aq.div(y.mul(z));
    let scale = [q, y, z, w]
        .iter()
        .fold(pair.scale_den(), |s, m| num_integer::lcm(s, m.scale_den()));
    if w.q_exp <= Rat::zero() {
        return Err(Error::BadParams(format!(
            "aq/yz = {} has nonpositive valuation; beta side diverges",
            w
        )));
    }
    for (name, m) in [("aq/y", aq.div(y)), ("aq/z", aq.div(z))] {
        if m.q_exp <= Rat::zero() {
            return Err(Error::BadParams(format!("{} = {} has nonpositive valuation", name, m)));
        }
    }
    let order_q = Rat::new(order, scale);

    // beta-side terms gain n*val(w) plus a bounded constant from the
    // (y,z;q)_n factors.
    let const_val = PochSpec::infinite(y, q).min_val() + PochSpec::infinite(z, q).min_val();
    let needed = {
        let mut n = 0i64;
        while Rat::from_integer(n) * w.q_exp + const_val <= order_q {
            n += 1;
        }
        n
    };
    let n_max = match n_max_override {
        Some(nm) => {
            if nm < needed {
                return Err(Error::TailNotCertified { n_max: nm, order });
            }
            nm
        }
        None => needed,
    };

    let mut lhs = QSeries::zero(scale, order);
    let mut rhs_sum = QSeries::zero(scale, order);
    for n in 0..=n_max {
        let yz_n = pochhammer(&PochSpec::finite(y, q, n), scale, order)?
            .mul(&pochhammer(&PochSpec::finite(z, q, n), scale, order)?);
        let beta_t = yz_n.mul(&pair.beta(n, scale, order)).mul_monomial(w.pow(n));
        lhs = lhs.add(&beta_t.truncate(order));

        let mut alpha_t = yz_n.mul(&pair.alpha(n, scale, order)).mul_monomial(w.pow(n));
        alpha_t = poch_div(&alpha_t, &PochSpec::finite(aq.div(y), q, n))?;
        alpha_t = poch_div(&alpha_t, &PochSpec::finite(aq.div(z), q, n))?;
        rhs_sum = rhs_sum.add(&alpha_t.truncate(order));
    }

    let prefactor_num = pochhammer(&PochSpec::infinite(aq.div(y), q), scale, order)?
        .mul(&pochhammer(&PochSpec::infinite(aq.div(z), q), scale, order)?);
    let mut rhs = rhs_sum.mul(&prefactor_num).truncate(order);
    rhs = poch_div(&rhs, &PochSpec::infinite(aq, q))?;
    rhs = poch_div(&rhs, &PochSpec::infinite(w, q))?;
    Ok((lhs.truncate(order), rhs.truncate(order)))
}

/// Both sides of the y = q*sqrt(a), z -> infinity limit of the transform:
///
///   sum_n (q sqrt(a);q)_n (-sqrt(a))^n q^{n(n-1)/2} beta_n
///     = [(q sqrt(a);q)_inf / (aq;q)_inf]
///       * sum_n (1 - sqrt(a) q^n) (-sqrt(a))^n q^{n(n-1)/2} alpha_n
///
/// `sqrt_a` is supplied directly as a monomial whose square must equal the
/// pair's relative parameter.
pub fn seq1aqf_sides(
    pair: &BaileyPair,
    sqrt_a: SignedMonomial,
    n_max_override: Option<i64>,
    order: i64,
) -> Result<(QSeries, QSeries), Error> {
    if sqrt_a.pow(2) != pair.relative {
        return Err(Error::BadParams(format!(
            "sqrt_a^2 = {} does not match relative parameter {}",
            sqrt_a.pow(2),
            pair.relative
        )));
    }
    let q = pair.base;
    let scale = num_integer::lcm(pair.scale_den(), sqrt_a.scale_den());
    let order_q = Rat::new(order, scale);
    let qs = q.mul(sqrt_a); // q * sqrt(a)

    // Term valuations: n*val(sqrt_a) + T(n-1)*val(q) plus the term's own
    // valuation; both sides grow at least quadratically via q^{n(n-1)/2}.
    let val_at = |n: i64, side_val: Rat| -> Rat {
        sqrt_a.q_exp * Rat::from_integer(n) + q.q_exp * Rat::from_integer(n * (n - 1) / 2) + side_val
    };
    let needed = {
        let mut n = 0i64;
        while val_at(n, pair.beta_val(n).min(pair.alpha_val(n))) <= order_q {
            n += 1;
        }
        n
    };
    let n_max = match n_max_override {
        Some(nm) => {
            if nm < needed {
                return Err(Error::TailNotCertified { n_max: nm, order });
            }
            nm
        }
        None => needed,
    };

    let mut lhs = QSeries::zero(scale, order);
    let mut rhs_sum = QSeries::zero(scale, order);
    for n in 0..=n_max {
        let weight = sqrt_a.neg().pow(n).mul(q.pow(n * (n - 1) / 2));
        let qs_n = pochhammer(&PochSpec::finite(qs, q, n), scale, order)?;
        lhs = lhs.add(&qs_n.mul(&pair.beta(n, scale, order)).mul_monomial(weight).truncate(order));

        let alpha_t = pair
            .alpha(n, scale, order)
            .mul_binomial(sqrt_a.mul(q.pow(n)))
            .mul_monomial(weight);
        rhs_sum = rhs_sum.add(&alpha_t.truncate(order));
    }
    let pre = pochhammer(&PochSpec::infinite(qs, q), scale, order)?;
    let mut rhs = rhs_sum.mul(&pre).truncate(order);
    rhs = poch_div(&rhs, &PochSpec::infinite(pair.relative.mul(q), q))?;
    Ok((lhs.truncate(order), rhs.truncate(order)))
}
