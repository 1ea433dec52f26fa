//! Rational functions `num/den` over `ExactRational` in canonical form:
//! `gcd(num, den) = 1` and `den` monic, so structural equality is equality.

use super::{ExactRational, RationalPoly};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: RationalPoly,
    den: RationalPoly,
}

impl RationalFunction {
    pub fn new(num: RationalPoly, den: RationalPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc = den.leading().recip();
        Ok(RationalFunction { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn zero() -> Self {
        RationalFunction { num: RationalPoly::zero(), den: RationalPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(RationalPoly::one())
    }

    pub fn from_poly(p: RationalPoly) -> Self {
        RationalFunction { num: p, den: RationalPoly::one() }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_poly(RationalPoly::constant(c))
    }

    pub fn num(&self) -> &RationalPoly {
        &self.num
    }

    pub fn den(&self) -> &RationalPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i32) -> Result<Self> {
        let p = RationalFunction { num: self.num.pow(e.unsigned_abs()), den: self.den.pow(e.unsigned_abs()) };
        if e < 0 {
            p.recip()
        } else {
            Ok(p)
        }
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn eval(&self, x: &ExactRational) -> Result<ExactRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> Result<f64> {
        let d = self.den.eval_f64(x);
        if d == 0.0 {
            return Err(Error::Pole(x.to_string()));
        }
        Ok(self.num.eval_f64(x) / d)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero("rational function".into()));
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl From<RationalPoly> for RationalFunction {
    fn from(p: RationalPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(n, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by the zero function; see [`RationalFunction::checked_div`].
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.leading().is_one() {
            write!(f, "{}", self.num)
        } else if self.num.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::super::int;
    use super::*;

    #[test]
    fn canonical_form() {
        let n = RationalPoly::from_i64(&[-1, 0, 1]);
        let d = RationalPoly::from_i64(&[2, 2]);
        let f = RationalFunction::new(n, d).unwrap();
        assert_eq!(f.num(), &RationalPoly::from_coeffs(vec![super::super::rat(-1, 2), super::super::rat(1, 2)]));
        assert_eq!(f.den(), &RationalPoly::one());
        assert!(f.is_polynomial());
    }

    #[test]
    fn derivative_quotient_rule() {
        let f = RationalFunction::new(RationalPoly::one(), RationalPoly::from_i64(&[1, -1])).unwrap();
        let d = f.derivative();
        assert_eq!(d.eval(&int(0)).unwrap(), int(1));
        assert_eq!(d.eval(&int(2)).unwrap(), int(1));
    }
}
