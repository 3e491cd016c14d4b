//! Signed monomials `c * a^e * q^p` with `c` in {+1, -1}, integer `e`, and
//! rational `p`. These are the argument form for Pochhammer and theta
//! builders and the value form for substitutions.

use std::fmt;

use num_traits::Zero;

use crate::Rat;

/// `sign * a^{a_exp} * q^{q_exp}` with `sign` in {+1, -1}.
///
/// `q_exp` is kept reduced with positive denominator (num-rational does
/// this automatically).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    pub sign: i8,
    pub a_exp: i64,
    pub q_exp: Rat,
}

impl SignedMonomial {
    pub fn new(sign: i8, a_exp: i64, q_exp: Rat) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        Self { sign, a_exp, q_exp }
    }

    /// The constant `1`.
    pub fn one() -> Self {
        Self::new(1, 0, Rat::zero())
    }

    /// `q^p` for integer `p`.
    pub fn q_pow(p: i64) -> Self {
        Self::new(1, 0, Rat::from_integer(p))
    }

    /// `q^{num/den}`.
    pub fn q_pow_frac(num: i64, den: i64) -> Self {
        Self::new(1, 0, Rat::new(num, den))
    }

    /// The symbol `a` itself.
    pub fn a() -> Self {
        Self::new(1, 1, Rat::zero())
    }

    /// `a^e`.
    pub fn a_pow(e: i64) -> Self {
        Self::new(1, e, Rat::zero())
    }

    pub fn neg(self) -> Self {
        Self { sign: -self.sign, ..self }
    }

    pub fn mul(self, other: Self) -> Self {
        Self {
            sign: self.sign * other.sign,
            a_exp: self.a_exp + other.a_exp,
            q_exp: self.q_exp + other.q_exp,
        }
    }

    pub fn div(self, other: Self) -> Self {
        self.mul(other.inv())
    }

    pub fn inv(self) -> Self {
        Self {
            sign: self.sign,
            a_exp: -self.a_exp,
            q_exp: -self.q_exp,
        }
    }

    /// `self^n` for any integer `n` (sign follows parity, also for `n < 0`).
    pub fn pow(self, n: i64) -> Self {
        Self {
            sign: if self.sign < 0 && n.rem_euclid(2) == 1 { -1 } else { 1 },
            a_exp: self.a_exp * n,
            q_exp: self.q_exp * Rat::from_integer(n),
        }
    }

    pub fn is_negative(self) -> bool {
        self.sign < 0
    }

    /// True when the monomial involves neither `a` nor a sign, i.e. is a
    /// plain q-power.
    pub fn is_pure_q_power(self) -> bool {
        self.sign == 1 && self.a_exp == 0
    }

    /// Denominator of the q-exponent; the scale of any series containing
    /// this monomial must be a multiple of it.
    pub fn scale_den(self) -> i64 {
        *self.q_exp.denom()
    }

    /// Parse the tiny CLI grammar: optional `-`, then `1`, `q`,
    /// `q^k`, or `q^p/r` (also written `q^{p/r}`).
    pub fn parse(text: &str) -> Result<Self, String> {
        let t = text.trim();
        let (sign, rest) = match t.strip_prefix('-') {
            Some(r) => (-1i8, r.trim()),
            None => (1i8, t),
        };
        if rest == "1" {
            return Ok(Self::new(sign, 0, Rat::zero()));
        }
        if rest == "q" {
            return Ok(Self::new(sign, 0, Rat::from_integer(1)));
        }
        if let Some(expstr) = rest.strip_prefix("q^") {
            let expstr = expstr.trim_start_matches('{').trim_end_matches('}');
            let rat = if let Some((n, d)) = expstr.split_once('/') {
                let num: i64 = n.trim().parse().map_err(|_| format!("bad exponent in '{}'", text))?;
                let den: i64 = d.trim().parse().map_err(|_| format!("bad exponent in '{}'", text))?;
                if den == 0 {
                    return Err(format!("zero denominator in '{}'", text));
                }
                Rat::new(num, den)
            } else {
                let num: i64 = expstr.trim().parse().map_err(|_| format!("bad exponent in '{}'", text))?;
                Rat::from_integer(num)
            };
            return Ok(Self::new(sign, 0, rat));
        }
        Err(format!("cannot parse monomial '{}'", text))
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        let mut wrote = false;
        match self.a_exp {
            0 => {}
            1 => {
                write!(f, "a")?;
                wrote = true;
            }
            e => {
                write!(f, "a^{}", e)?;
                wrote = true;
            }
        }
        if !self.q_exp.is_zero() {
            if wrote {
                write!(f, "*")?;
            }
            if self.q_exp == Rat::from_integer(1) {
                write!(f, "q")?;
            } else if self.q_exp.denom() == &1 {
                write!(f, "q^{}", self.q_exp.numer())?;
            } else {
                write!(f, "q^({})", self.q_exp)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_grammar() {
        assert_eq!(SignedMonomial::parse("q").unwrap(), SignedMonomial::q_pow(1));
        assert_eq!(SignedMonomial::parse("-q^3/2").unwrap(), SignedMonomial::q_pow_frac(3, 2).neg());
        assert_eq!(SignedMonomial::parse("-1").unwrap(), SignedMonomial::one().neg());
        assert_eq!(SignedMonomial::parse("q^{5}").unwrap(), SignedMonomial::q_pow(5));
        assert!(SignedMonomial::parse("z^2").is_err());
    }

    #[test]
    fn pow_tracks_sign_parity() {
        let m = SignedMonomial::parse("-q").unwrap();
        assert_eq!(m.pow(2), SignedMonomial::q_pow(2));
        assert_eq!(m.pow(3), SignedMonomial::q_pow(3).neg());
        assert_eq!(m.pow(-1), SignedMonomial::q_pow(-1).neg());
    }

    #[test]
    fn display_roundtrip() {
        assert_eq!(SignedMonomial::parse("-q^3/2").unwrap().to_string(), "-q^(3/2)");
        assert_eq!(SignedMonomial::a_pow(-2).mul(SignedMonomial::q_pow(3)).to_string(), "a^-2*q^3");
    }
}
