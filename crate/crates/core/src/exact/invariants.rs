//! The octahedral invariant polynomials `p_v`, `p_e`, `p_f` and the rational
//! maps `R`, `T`, `S` built from them.

use super::{int, ExactRational, RationalPoly};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::sync::OnceLock;

/// `p_v = u(1-u)^4`, `p_e = (1+u)(1-34u+u^2)`, `p_f = 1+14u+u^2`.
#[derive(Clone, Debug)]
pub struct Invariants {
    pub pv: RationalPoly,
    pub pe: RationalPoly,
    pub pf: RationalPoly,
}

pub fn invariant_polys() -> &'static Invariants {
    static INV: OnceLock<Invariants> = OnceLock::new();
    INV.get_or_init(|| {
        let one_minus_u = RationalPoly::from_i64(&[1, -1]);
        Invariants {
            pv: RationalPoly::x() * one_minus_u.pow(4),
            pe: RationalPoly::from_i64(&[1, 1]) * RationalPoly::from_i64(&[1, -34, 1]),
            pf: RationalPoly::from_i64(&[1, 14, 1]),
        }
    })
}

/// `R(u) = -108 p_v / p_e^2`.
pub fn map_r(u: &ExactRational) -> Result<ExactRational> {
    let inv = invariant_polys();
    let pe = inv.pe.eval(u);
    if pe.is_zero() {
        return Err(Error::Pole(format!("R at u = {u}")));
    }
    Ok(-int(108) * inv.pv.eval(u) / (&pe * &pe))
}

/// `T(u) = -12u/(1+u)^2`.
pub fn map_t(u: &ExactRational) -> Result<ExactRational> {
    let d = u + ExactRational::one();
    if d.is_zero() {
        return Err(Error::Pole("T at u = -1".into()));
    }
    Ok(-int(12) * u / (&d * &d))
}

/// `S(t) = 36t(1+3t^2)^2 / (1+6t-3t^2)^3`.
pub fn map_s(t: &ExactRational) -> Result<ExactRational> {
    let t2 = t * t;
    let d = ExactRational::one() + int(6) * t - int(3) * &t2;
    if d.is_zero() {
        return Err(Error::Pole(format!("S at t = {t}")));
    }
    let a = ExactRational::one() + int(3) * &t2;
    Ok(int(36) * t * &a * &a / (&d * &d * &d))
}

fn finite(v: f64, what: &str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Pole(what.into()))
    }
}

pub fn map_r_f64(u: f64) -> Result<f64> {
    let pv = u * (1.0 - u).powi(4);
    let pe = (1.0 + u) * (1.0 - 34.0 * u + u * u);
    if pe == 0.0 {
        return Err(Error::Pole(format!("R at u = {u}")));
    }
    finite(-108.0 * pv / (pe * pe), "R")
}

pub fn map_t_f64(u: f64) -> Result<f64> {
    if u == -1.0 {
        return Err(Error::Pole("T at u = -1".into()));
    }
    finite(-12.0 * u / ((1.0 + u) * (1.0 + u)), "T")
}

pub fn map_s_f64(t: f64) -> Result<f64> {
    let d = 1.0 + 6.0 * t - 3.0 * t * t;
    if d == 0.0 {
        return Err(Error::Pole(format!("S at t = {t}")));
    }
    let a = 1.0 + 3.0 * t * t;
    finite(36.0 * t * a * a / (d * d * d), "S")
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn coefficients() {
        let inv = invariant_polys();
        assert_eq!(inv.pf, RationalPoly::from_i64(&[1, 14, 1]));
        assert_eq!(inv.pe, RationalPoly::from_i64(&[1, -33, -33, 1]));
        assert_eq!(inv.pv.degree(), Some(5));
    }

    #[test]
    fn syzygy() {
        let inv = invariant_polys();
        let s = &(&inv.pe.pow(2) - &inv.pf.pow(3)) + &inv.pv.scale(&int(108));
        assert!(s.is_zero());
    }

    #[test]
    fn r_alternative_form() {
        let u = rat(1, 3);
        let inv = invariant_polys();
        let alt = ExactRational::one() - inv.pf.eval(&u).pow(3) / inv.pe.eval(&u).pow(2);
        assert_eq!(map_r(&u).unwrap(), alt);
        assert_eq!(map_r(&int(0)).unwrap(), int(0));
    }

    #[test]
    fn triple_angle() {
        // T(u) = tanh²(1/3) has the root u in (-1, 0) from the quadratic
        // -12u = t(1+u)^2.
        let t = (1.0f64 / 3.0).tanh().powi(2);
        let (a, b) = (t, 2.0 * t + 12.0);
        let u = 2.0 * t / (-b - (b * b - 4.0 * a * t).sqrt());
        assert!((map_t_f64(u).unwrap() - t).abs() < 1e-14);
        assert!((map_r_f64(u).unwrap() - 1.0f64.tanh().powi(2)).abs() < 1e-12);
        let tt = map_t_f64(u).unwrap();
        let via_t = tt * (3.0 + tt).powi(2) / (1.0 + 3.0 * tt).powi(2);
        assert!((via_t - map_r_f64(u).unwrap()).abs() < 1e-13);
    }

    #[test]
    fn poles() {
        assert!(map_r(&int(-1)).is_err());
        assert!(map_t(&int(-1)).is_err());
        assert!(map_t_f64(-1.0).is_err());
    }
}
