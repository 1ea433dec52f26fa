//! The `n = 0` row as a terminating Gauss series:
//! `r_0^m = 2F1(-2m, -1/4-3m; 3/4-m | u)` for `m ≥ 0`, and after Euler's
//! transformation `r_0^{-m'-1} = (1-u)^(-3-4m') 2F1(-1-2m', -1/4-m'; 7/4+m' | u)`.

use super::form::Form;
use super::{OctIndex, OctahedralFunction};
use crate::error::Result;
use crate::exact::{int, rat, ExactRational, RationalPoly};
use num_traits::{One, Zero};

/// Terminating `2F1(-N, b; c | u)` as an exact polynomial.
fn terminating_2f1(big_n: i64, b: ExactRational, c: ExactRational) -> RationalPoly {
    let mut coeffs = vec![ExactRational::one()];
    let mut t = ExactRational::one();
    for k in 0..big_n {
        t = t * int(k - big_n) * (&b + int(k)) / ((&c + int(k)) * int(k + 1));
        if t.is_zero() {
            break;
        }
        coeffs.push(t.clone());
    }
    RationalPoly::from_coeffs(coeffs)
}

pub fn hypergeometric_row(m: i64) -> Result<OctahedralFunction> {
    let idx = OctIndex::new(0, m);
    let form = if m >= 0 {
        Form::poly(terminating_2f1(2 * m, rat(-1, 4) - int(3 * m), rat(3, 4) - int(m)))
    } else {
        let mp = -m - 1;
        let p = terminating_2f1(1 + 2 * mp, rat(-1, 4) - int(mp), rat(7, 4) + int(mp));
        Form { numer: p, a: (3 + 4 * mp) as u32, b: 0 }
    };
    OctahedralFunction::from_form(idx, form)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        assert_eq!(hypergeometric_row(0).unwrap().numer, RationalPoly::one());
        assert_eq!(hypergeometric_row(1).unwrap().numer, RationalPoly::from_i64(&[1, -26, -39]));
        let r = hypergeometric_row(-1).unwrap();
        assert_eq!(r.pow_one_minus_u, 3);
        assert_eq!(r.numer, RationalPoly::from_coeffs(vec![int(1), rat(1, 7)]));
    }
}
