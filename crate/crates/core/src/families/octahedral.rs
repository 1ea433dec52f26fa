//! Octahedral Legendre and Ferrers functions of degree `-1/6+n` and order
//! `±(1/4+m)`, and the Mehler–Dirichlet integrals they evaluate.

use super::trig::{trig_pair, TrigKind};
use super::OrderSign;
use crate::error::{Error, Result};
use crate::expansions::quad::de_quad;
use crate::octahedral::{eval_f64, eval_hat_f64, OctIndex};
use crate::oracle::{gamma, rgamma};
use std::f64::consts::PI;

fn exponent(n: i64, m: i64) -> f64 {
    0.25 + 3.0 * (m + n) as f64
}

fn sign_pow(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `P_{-1/6+n}^{±(1/4+m)}(cosh ξ)`, `ξ > 0`.
pub fn oct_legendre_p(n: i64, m: i64, xi: f64, sign: OrderSign) -> Result<f64> {
    if !(xi > 0.0) {
        return Err(Error::Domain(format!("octahedral Legendre P needs ξ > 0, got {xi}")));
    }
    let a = trig_pair(TrigKind::A, xi)?;
    let idx = OctIndex::new(n, m);
    let scale = 2f64.powi((-2 * m - 3 * n) as i32) * xi.sinh().powf(-0.25 - m as f64);
    let e = exponent(n, m);
    Ok(match sign {
        OrderSign::Plus => scale * rgamma(0.75 - m as f64) * a.plus.powf(e) * eval_f64(idx, -a.minus / a.plus)?,
        OrderSign::Minus => {
            sign_pow(n)
                * scale
                * 3f64.powf(0.75 + 3.0 * m as f64)
                * rgamma(1.25 + m as f64)
                * a.minus.powf(e)
                * eval_hat_f64(idx, -a.plus / a.minus)?
        }
    })
}

/// Ferrers `P_{-1/6+n}^{±(1/4+m)}(cos θ)`, `0 < θ < π`.
pub fn oct_ferrers_p(n: i64, m: i64, theta: f64, sign: OrderSign) -> Result<f64> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::Domain(format!("octahedral Ferrers P needs 0 < θ < π, got {theta}")));
    }
    let b = trig_pair(TrigKind::B, theta)?;
    let idx = OctIndex::new(n, m);
    let scale = 2f64.powi((-2 * m - 3 * n) as i32) * theta.sin().powf(-0.25 - m as f64);
    let e = exponent(n, m);
    Ok(match sign {
        OrderSign::Plus => scale * rgamma(0.75 - m as f64) * b.plus.powf(e) * eval_f64(idx, b.minus / b.plus)?,
        OrderSign::Minus => {
            scale
                * 3f64.powf(0.75 + 3.0 * m as f64)
                * rgamma(1.25 + m as f64)
                * b.minus.powf(e)
                * eval_hat_f64(idx, b.plus / b.minus)?
        }
    })
}

/// Variable of a Mehler–Dirichlet integral.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MehlerVar {
    /// `∫_0^ξ cosh[(1/3+n)t] (cosh ξ - cosh t)^{m-1/4} dt`.
    Hyperbolic(f64),
    /// `∫_0^θ cos[(1/3+n)φ] (cos φ - cos θ)^{m-1/4} dφ`.
    Circular(f64),
}

/// `K_n^m = √(π/2) 2^{-2m-3n} 3^{3/4+3m} Γ(3/4+m)/Γ(5/4+m)`.
pub fn mehler_constant(n: i64, m: i64) -> f64 {
    let mf = m as f64;
    (PI / 2.0).sqrt() * 2f64.powi((-2 * m - 3 * n) as i32) * 3f64.powf(0.75 + 3.0 * mf) * gamma(0.75 + mf) * rgamma(1.25 + mf)
}

fn check_mehler(m: i64, var: MehlerVar) -> Result<()> {
    if m < 0 {
        return Err(Error::Domain(format!("Mehler–Dirichlet closed form needs m ≥ 0, got {m}")));
    }
    match var {
        MehlerVar::Hyperbolic(xi) if !(xi > 0.0 && xi.is_finite()) => Err(Error::Domain(format!("ξ = {xi}"))),
        MehlerVar::Circular(th) if !(th > 0.0 && th < PI) => Err(Error::Domain(format!("θ = {th}"))),
        _ => Ok(()),
    }
}

/// Closed form of the Mehler–Dirichlet integral, `m ≥ 0`.
pub fn mehler_integral(n: i64, m: i64, var: MehlerVar) -> Result<f64> {
    check_mehler(m, var)?;
    let idx = OctIndex::new(n, m);
    let k = mehler_constant(n, m);
    let e = exponent(n, m);
    match var {
        MehlerVar::Hyperbolic(xi) => {
            let a = trig_pair(TrigKind::A, xi)?;
            Ok(sign_pow(n) * k * a.minus.powf(e) * eval_hat_f64(idx, -a.plus / a.minus)?)
        }
        MehlerVar::Circular(theta) => {
            let b = trig_pair(TrigKind::B, theta)?;
            Ok(k * b.minus.powf(e) * eval_hat_f64(idx, b.plus / b.minus)?)
        }
    }
}

/// The same integral by tanh-sinh quadrature. The kernel difference is
/// formed as a product of half-angle sines so it stays accurate at the
/// singular endpoint.
pub fn mehler_quadrature(n: i64, m: i64, var: MehlerVar) -> Result<f64> {
    check_mehler(m, var)?;
    let freq = 1.0 / 3.0 + n as f64;
    let p = m as f64 - 0.25;
    let r = match var {
        MehlerVar::Hyperbolic(xi) => de_quad(
            |t, _, db| (freq * t).cosh() * (2.0 * ((xi + t) / 2.0).sinh() * (db / 2.0).sinh()).powf(p),
            0.0,
            xi,
            1e-14,
        )?,
        MehlerVar::Circular(theta) => de_quad(
            |phi, _, db| (freq * phi).cos() * (2.0 * ((theta + phi) / 2.0).sin() * (db / 2.0).sin()).powf(p),
            0.0,
            theta,
            1e-14,
        )?,
    };
    Ok(r.value)
}
