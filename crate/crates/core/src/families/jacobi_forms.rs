//! Cyclic (integer degree) and dihedral (half-odd-integer order) Legendre
//! and Ferrers functions as Jacobi polynomials.

use super::{OrderSign, Variable};
use crate::error::{Error, Result};
use crate::oracle::{jacobi_p, near_integer, rgamma, LegendreFn};
use num_complex::Complex64;
use std::f64::consts::PI;

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `P_n^μ = P_{-n-1}^μ` at `cosh ξ` (Legendre) or `cos θ` (Ferrers):
/// `n!/Γ(n-μ+1) · [coth(ξ/2) | cot(θ/2)]^μ · P_n^{(-μ,μ)}`.
pub fn cyclic_p(n: u32, mu: f64, var: Variable) -> Result<f64> {
    if near_integer(mu - n as f64).is_some_and(|k| k >= 1) {
        return Ok(0.0);
    }
    let (half_cot, z) = match var {
        Variable::Xi(xi) => {
            if !(xi > 0.0 && xi.is_finite()) {
                return Err(Error::Domain(format!("cyclic Legendre P needs ξ > 0, got {xi}")));
            }
            (1.0 / (xi / 2.0).tanh(), xi.cosh())
        }
        Variable::Theta(th) => {
            if !(th > 0.0 && th < PI) {
                return Err(Error::Domain(format!("cyclic Ferrers P needs 0 < θ < π, got {th}")));
            }
            (1.0 / (th / 2.0).tan(), th.cos())
        }
    };
    let jac = crate::oracle::jacobi_p_real(n, -mu, mu, z);
    Ok(factorial(n) * rgamma(n as f64 - mu + 1.0) * half_cot.powf(mu) * jac)
}

/// `α ∈ {-m, …, m}`, where the minus-order formulas divide by zero.
fn alpha_degenerate(m: u32, alpha: f64) -> bool {
    near_integer(alpha).is_some_and(|k| k.unsigned_abs() <= m as u64)
}

/// `(α-m)_{2m+1} = (α-m)(α-m+1)…(α+m)`.
fn centered_pochhammer(m: u32, alpha: f64) -> f64 {
    (0..=2 * m).map(|j| alpha - m as f64 + j as f64).product()
}

fn parity(c: impl Fn(f64) -> Complex64, alpha: f64, even: bool) -> Complex64 {
    if even {
        (c(alpha) + c(-alpha)) / 2.0
    } else {
        (c(alpha) - c(-alpha)) / 2.0
    }
}

fn real_part(z: Complex64) -> Result<f64> {
    if z.im.abs() > 1e-12 * z.re.abs().max(1.0) {
        return Err(Error::Consistency(format!("dihedral value {z} is not real")));
    }
    Ok(z.re)
}

/// Dihedral functions of degree `-1/2+α` and order `±(1/2+m)`:
/// `Q̂` and `P` at `cosh ξ`, Ferrers `P` and `Q` at `cos θ`.
pub fn dihedral_eval(m: u32, alpha: f64, var: Variable, function: LegendreFn, sign: OrderSign) -> Result<f64> {
    let mf = factorial(m);
    let minus = sign == OrderSign::Minus;
    if minus && alpha_degenerate(m, alpha) {
        let what = format!("order -(1/2+{m}), α = {alpha}");
        return Err(match function {
            LegendreFn::LegendreQhat | LegendreFn::FerrersQ => Error::Undefined(what),
            LegendreFn::LegendreP | LegendreFn::FerrersP => Error::LimitNotImplemented(what),
        });
    }
    let inv_poch = if minus { 1.0 / centered_pochhammer(m, alpha) } else { 1.0 };
    let one = Complex64::new(1.0, 0.0);
    let jac = |a: f64, z: Complex64| jacobi_p(m, one * a, -one * a, z);
    match (function, var) {
        (LegendreFn::LegendreQhat | LegendreFn::LegendreP, Variable::Xi(xi)) => {
            if !(xi > 0.0 && xi.is_finite()) {
                return Err(Error::Domain(format!("dihedral Legendre needs ξ > 0, got {xi}")));
            }
            let coth = one / xi.tanh();
            let c = |a: f64| (-a * xi).exp() * jac(a, coth);
            let s = xi.sinh().powf(-0.5);
            if function == LegendreFn::LegendreQhat {
                return real_part((PI / 2.0).sqrt() * mf * inv_poch * s * c(alpha));
            }
            let sgn = if (m + minus as u32) % 2 == 0 { 1.0 } else { -1.0 };
            real_part((2.0 / PI).sqrt() * mf * sgn * inv_poch * s * parity(c, alpha, !minus))
        }
        (LegendreFn::FerrersP | LegendreFn::FerrersQ, Variable::Theta(th)) => {
            if !(th > 0.0 && th < PI) {
                return Err(Error::Domain(format!("dihedral Ferrers needs 0 < θ < π, got {th}")));
            }
            let icot = Complex64::new(0.0, 1.0 / th.tan());
            let d = |a: f64| Complex64::from_polar(1.0, a * th) * jac(a, icot);
            let s = th.sin().powf(-0.5);
            let i = Complex64::i();
            if function == LegendreFn::FerrersP {
                let k = if minus { i.powi(-(m as i32) - 1) } else { i.powi(m as i32) };
                real_part((2.0 / PI).sqrt() * mf * k * inv_poch * s * parity(d, alpha, !minus))
            } else {
                let k = if minus { i.powi(-(m as i32)) } else { i.powi(m as i32 + 1) };
                real_part((PI / 2.0).sqrt() * mf * k * inv_poch * s * parity(d, alpha, minus))
            }
        }
        (f, v) => Err(Error::Domain(format!("dihedral {f:?} is not parametrized by {v:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_order_closed_forms() {
        let (a, th) = (0.7, 1.3);
        let p = dihedral_eval(0, a, Variable::Theta(th), LegendreFn::FerrersP, OrderSign::Plus).unwrap();
        assert!((p - (2.0 / PI).sqrt() * (a * th).cos() / th.sin().sqrt()).abs() < 1e-12);
        let p = dihedral_eval(0, 1.0, Variable::Theta(PI / 2.0), LegendreFn::FerrersP, OrderSign::Minus).unwrap();
        assert!((p - (2.0 / PI).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn degeneracies() {
        let v = Variable::Theta(1.0);
        assert!(matches!(dihedral_eval(2, 1.0, v, LegendreFn::FerrersQ, OrderSign::Minus), Err(Error::Undefined(_))));
        assert!(matches!(dihedral_eval(2, -2.0, v, LegendreFn::FerrersP, OrderSign::Minus), Err(Error::LimitNotImplemented(_))));
        let q = dihedral_eval(2, 1.0, v, LegendreFn::FerrersQ, OrderSign::Plus).unwrap();
        assert!(q.abs() < 1e-12);
        assert_eq!(cyclic_p(1, 3.0, Variable::Xi(0.5)).unwrap(), 0.0);
        assert!((cyclic_p(0, 0.0, Variable::Theta(0.4)).unwrap() - 1.0).abs() < 1e-15);
    }
}
