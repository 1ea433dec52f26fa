//! Arithmetic on `numer(u) * (1-u)^(-a) * p_f(u)^(-b)`, the only
//! denominators the octahedral recurrences can produce.

use crate::error::{Error, Result};
use crate::exact::{invariant_polys, ExactRational, RationalFunction, RationalPoly};
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Form {
    pub numer: RationalPoly,
    pub a: u32,
    pub b: u32,
}

fn one_minus_u() -> RationalPoly {
    RationalPoly::from_i64(&[1, -1])
}

impl Form {
    pub fn poly(p: RationalPoly) -> Self {
        Form { numer: p, a: 0, b: 0 }
    }

    /// Numerator after raising the denominator exponents to `(a, b)`.
    fn lifted(&self, a: u32, b: u32) -> RationalPoly {
        let inv = invariant_polys();
        &(&self.numer * &one_minus_u().pow(a - self.a)) * &inv.pf.pow(b - self.b)
    }

    /// `sum c_i * f_i` over a common denominator, reduced.
    pub fn lin_comb(terms: &[(RationalPoly, &Form)]) -> Form {
        let a = terms.iter().map(|(_, f)| f.a).max().unwrap_or(0);
        let b = terms.iter().map(|(_, f)| f.b).max().unwrap_or(0);
        let mut numer = RationalPoly::zero();
        for (c, f) in terms {
            numer = &numer + &(c * &f.lifted(a, b));
        }
        Form { numer, a, b }.reduced()
    }

    /// Divide by `c * u^ku * (1-u)^ka * p_f^kb`; division by `u` must be exact.
    pub fn divide(&self, c: &ExactRational, ku: usize, ka: u32, kb: u32) -> Result<Form> {
        if c.is_zero() {
            return Err(Error::DivisionByZero("recurrence pivot".into()));
        }
        let mut numer = self.numer.scale(&c.recip());
        for _ in 0..ku {
            if !numer.coeff(0).is_zero() {
                return Err(Error::Consistency("numerator not divisible by u".into()));
            }
            numer = RationalPoly::from_coeffs(numer.coeffs()[1..].to_vec());
        }
        Ok(Form { numer, a: self.a + ka, b: self.b + kb }.reduced())
    }

    /// Cancel common factors of `(1-u)` and `p_f` between numerator and
    /// denominator.
    pub fn reduced(mut self) -> Form {
        if self.numer.is_zero() {
            return Form { numer: self.numer, a: 0, b: 0 };
        }
        let omu = one_minus_u();
        while self.a > 0 && self.numer.eval(&ExactRational::one()).is_zero() {
            self.numer = self.numer.exact_div(&omu).expect("root at u = 1");
            self.a -= 1;
        }
        let pf = &invariant_polys().pf;
        while self.b > 0 {
            match self.numer.div_rem(pf) {
                Ok((q, r)) if r.is_zero() => {
                    self.numer = q;
                    self.b -= 1;
                }
                _ => break,
            }
        }
        self
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        let den = &one_minus_u().pow(self.a) * &invariant_polys().pf.pow(self.b);
        RationalFunction::new(self.numer.clone(), den).expect("nonzero denominator")
    }

    /// Recover the structured form from a canonical rational function whose
    /// denominator must be a product of `(1-u)` and `p_f` powers.
    pub fn from_rational_function(f: &RationalFunction) -> Result<Form> {
        let mut den = f.den().clone();
        let mut a = 0;
        let mut b = 0;
        let u_minus_1 = RationalPoly::from_i64(&[-1, 1]);
        let pf = &invariant_polys().pf;
        loop {
            match den.div_rem(&u_minus_1) {
                Ok((q, r)) if r.is_zero() && den.degree() > Some(0) => {
                    den = q;
                    a += 1;
                }
                _ => break,
            }
        }
        loop {
            match den.div_rem(pf) {
                Ok((q, r)) if r.is_zero() && den.degree() > Some(0) => {
                    den = q;
                    b += 1;
                }
                _ => break,
            }
        }
        if den.degree() != Some(0) {
            return Err(Error::Consistency(format!("denominator factor {den} outside (1-u), p_f")));
        }
        // den is the monic product (u-1)^a p_f^b times a leftover constant
        let mut numer = f.num().scale(&den.leading().recip());
        if a % 2 == 1 {
            numer = -&numer;
        }
        Ok(Form { numer, a, b })
    }
}
