//! Dense univariate polynomials over `ExactRational`.
//!
//! Invariant: `coeffs` is empty for the zero polynomial, otherwise the last
//! entry is nonzero.

use super::{to_f64, ExactRational};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<ExactRational>,
}

impl RationalPoly {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        RationalPoly { coeffs: vec![c] }.normalize()
    }

    /// The indeterminate `u`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `c * u^k`.
    pub fn monomial(c: ExactRational, k: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); k + 1];
        coeffs[k] = c;
        RationalPoly { coeffs }.normalize()
    }

    /// Coefficients in ascending degree order; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<ExactRational>) -> Self {
        RationalPoly { coeffs }.normalize()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `u^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> ExactRational {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> ExactRational {
        self.coeffs.last().cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RationalPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * super::int(k as i64))
                .collect(),
        )
    }

    /// `u^deg * p(1/u)`; `deg` must be at least the degree of `p`.
    pub fn reversed(&self, deg: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= deg), "reversal degree below polynomial degree");
        let mut coeffs = vec![ExactRational::zero(); deg + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[deg - k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Polynomial long division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or_else(|| Error::DivisionByZero("zero polynomial divisor".into()))?;
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![ExactRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient when `d` divides `self` exactly; a nonzero remainder is a
    /// consistency error.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Consistency(format!("inexact polynomial division by {d}")))
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// Coefficients rounded to doubles, for repeated floating evaluation.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }
}

/// Horner evaluation of ascending-order float coefficients.
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalPoly {
            type Output = RationalPoly;
            fn $m(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript(k: usize) -> String {
    k.to_string().chars().map(|c| SUPERSCRIPTS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Renders as `1 + 175u − 150u² + …` in ascending powers of `u`.
impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "−")?;
                }
            } else {
                write!(f, " {} ", if neg { '−' } else { '+' })?;
            }
            first = false;
            let mag = if a.is_integer() { a.to_string() } else { format!("({a})") };
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "u")?;
                    if k > 1 {
                        write!(f, "{}", superscript(k))?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    #[test]
    fn division_and_gcd() {
        let a = RationalPoly::from_i64(&[1, 14, 1]);
        let b = RationalPoly::from_i64(&[1, -1]);
        let p = &a * &b;
        assert_eq!(p.exact_div(&b).unwrap(), a);
        assert_eq!(p.gcd(&a), a.monic());
        assert!(p.exact_div(&RationalPoly::from_i64(&[1, 1])).is_err());
    }

    #[test]
    fn reversal_and_derivative() {
        let p = RationalPoly::from_i64(&[1, -26, -39]);
        assert_eq!(p.reversed(2), RationalPoly::from_i64(&[-39, -26, 1]));
        assert_eq!(p.derivative(), RationalPoly::from_i64(&[-26, -78]));
        assert_eq!(p.eval(&int(1)), int(-64));
    }

    #[test]
    fn display() {
        let p = RationalPoly::from_coeffs(vec![int(1), rat(1, 7)]);
        assert_eq!(p.to_string(), "1 + (1/7)u");
        let q = RationalPoly::from_i64(&[1, 175, -150, 3550, 325, 195]);
        assert_eq!(q.to_string(), "1 + 175u − 150u² + 3550u³ + 325u⁴ + 195u⁵");
    }
}
