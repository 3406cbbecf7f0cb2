//! Laurent polynomials in one variable `t` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use crate::error::Error;

/// `Σ coeffs[k] t^(valuation + k)`.
///
/// The first and last coefficients are nonzero; zero is `valuation = 0` with
/// no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    valuation: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c t^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    /// Builds from coefficients starting at exponent `valuation`, trimming zeros.
    pub fn from_coeffs(valuation: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { valuation: valuation + lead as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.valuation)
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.valuation + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `t^e`.
    pub fn coeff(&self, e: i64) -> Rational {
        let k = e - self.valuation;
        if k < 0 || k >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.valuation + k as i64, c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { valuation: self.valuation + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { valuation: self.valuation, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Value at `t = x`; `x` must be nonzero when the valuation is negative.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.valuation >= 0 {
            acc * pow(x, self.valuation as u64)
        } else {
            acc / pow(x, (-self.valuation) as u64)
        }
    }

    /// `self + c * other`, the inner loop of the limit algorithm.
    pub fn add_scaled(&self, c: &Rational, other: &Self) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.scale(c);
        }
        let lo = self.valuation.min(other.valuation);
        let hi = self.degree().unwrap().max(other.degree().unwrap());
        let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (k, a) in self.coeffs.iter().enumerate() {
            out[(self.valuation - lo) as usize + k] += a;
        }
        for (k, b) in other.coeffs.iter().enumerate() {
            out[(other.valuation - lo) as usize + k] += b * c;
        }
        Self::from_coeffs(lo, out)
    }

    /// Serialization form: `(exponent, "p/q")` in increasing exponent order.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.terms().map(|(e, c)| (e, format_rational(c))).collect()
    }
}

fn pow(x: &Rational, e: u64) -> Rational {
    let mut r = Rational::one();
    for _ in 0..e {
        r *= x;
    }
    r
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_scaled(&Rational::one(), rhs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_scaled(&-Rational::one(), rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.valuation + rhs.valuation, out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| match e {
                0 => format_rational(c),
                _ => format!("{}*t^{}", format_rational(c), e),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Divides a vector by `t^shift` where `shift` is the minimal valuation, so
/// that some entry has valuation 0.
pub fn laurent_normalize(v: &[LaurentPoly]) -> Result<(i64, Vec<LaurentPoly>), Error> {
    let shift = v.iter().filter_map(LaurentPoly::valuation).min().ok_or(Error::ZeroGenerator)?;
    Ok((shift, v.iter().map(|p| p.shift(-shift)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn t(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(rat(1), e)
    }

    #[test]
    fn normalize_monomials() {
        let (s, v) = laurent_normalize(&[t(2), t(3)]).unwrap();
        assert_eq!(s, 2);
        assert_eq!(v, vec![t(0), t(1)]);
    }

    #[test]
    fn normalize_negative_valuation() {
        let (s, v) = laurent_normalize(&[&t(-1) + &t(0), t(0)]).unwrap();
        assert_eq!(s, -1);
        assert_eq!(v, vec![&t(0) + &t(1), t(1)]);
    }

    #[test]
    fn normalize_zero_fails() {
        let err = laurent_normalize(&[LaurentPoly::zero(), LaurentPoly::zero()]).unwrap_err();
        assert_eq!(err.to_string(), "zero generator");
    }

    #[test]
    fn cancellation_trims() {
        let p = &(&t(-2) + &t(1)) - &t(-2);
        assert_eq!(p, t(1));
        assert_eq!((&t(3) - &t(3)).valuation(), None);
    }

    #[test]
    fn eval_and_product() {
        let p = &t(-1) + &LaurentPoly::monomial(rat(2), 2);
        let q = &p * &p;
        let x = rat(3);
        assert_eq!(q.eval(&x), p.eval(&x) * p.eval(&x));
        assert_eq!(q.valuation(), Some(-2));
        assert_eq!(q.degree(), Some(4));
    }
}
