//! Exact arithmetic substrate: big rationals, dense polynomials, rational
//! functions, Pochhammer symbols and the octahedral invariants.

mod invariants;
mod poly;
mod ratfunc;

pub use invariants::{invariant_polys, map_r, map_r_f64, map_s, map_s_f64, map_t, map_t_f64, Invariants};
pub use poly::{horner as horner_f64, RationalPoly};
pub use ratfunc::RationalFunction;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type ExactRational = num_rational::BigRational;

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> ExactRational {
    ExactRational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `p` as an exact rational.
pub fn int(p: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(p))
}

/// Nearest double to an exact rational.
pub fn to_f64(x: &ExactRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Pochhammer symbol `(d)_k`.
///
/// For `k < 0`, `(d)_k = 1/[(d+k)(d+k+1)...(d-1)]`.
pub fn pochhammer(d: &ExactRational, k: i64) -> Result<ExactRational> {
    let mut acc = ExactRational::one();
    if k >= 0 {
        let mut x = d.clone();
        for _ in 0..k {
            acc *= &x;
            x += ExactRational::one();
        }
        Ok(acc)
    } else {
        let mut x = d - ExactRational::one();
        for _ in 0..(-k) {
            if x.is_zero() {
                return Err(Error::DivisionByZero(format!("({d})_{k}")));
            }
            acc *= &x;
            x -= ExactRational::one();
        }
        Ok(acc.recip())
    }
}

/// Floating-point Pochhammer symbol with the same negative-`k` extension.
pub fn pochhammer_f64(d: f64, k: i64) -> f64 {
    if k >= 0 {
        (0..k).fold(1.0, |acc, j| acc * (d + j as f64))
    } else {
        1.0 / (1..=(-k)).fold(1.0, |acc, j| acc * (d - j as f64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(5, 12), 0).unwrap(), int(1));
        assert_eq!(pochhammer(&rat(5, 12), -1).unwrap(), rat(-12, 7));
        assert_eq!(pochhammer(&rat(1, 4), 2).unwrap(), rat(5, 16));
    }

    #[test]
    fn pochhammer_negative_pole() {
        assert!(matches!(pochhammer(&int(1), -1), Err(Error::DivisionByZero(_))));
        assert!(matches!(pochhammer(&int(3), -4), Err(Error::DivisionByZero(_))));
        assert!(pochhammer(&int(3), -2).is_ok());
    }

    #[test]
    fn pochhammer_float_matches_exact() {
        for k in -4..=4 {
            let e = to_f64(&pochhammer(&rat(13, 12), k).unwrap());
            assert!((pochhammer_f64(13.0 / 12.0, k) - e).abs() <= 1e-14 * e.abs());
        }
    }
}
