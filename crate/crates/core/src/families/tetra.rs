//! Tetrahedral families. Class II: `Q̂` and `P` of degree `-3/4-m` (or
//! `-1/4+m`) and order `±(1/3+n)`. Class III: degree `-1/6+n` with order
//! `-1/3-n`, and `-5/6-n` with `1/3+n`, obtained by reparametrizing the
//! class II functions at `m = 0`.

use super::trig::{trig_pair, TrigKind, TrigPair};
use super::OrderSign;
use crate::error::{Error, Result};
use crate::exact::pochhammer_f64;
use crate::octahedral::{eval_f64, OctIndex};
use crate::oracle::{gamma, rgamma};
use std::f64::consts::PI;

fn sign_pow(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

fn sqrt3p1() -> f64 {
    (3f64.sqrt() + 1.0).sqrt()
}

fn sqrt3m1() -> f64 {
    (3f64.sqrt() - 1.0).sqrt()
}

/// `(T₊^e r(-T₋/T₊), T₋^e r(-T₊/T₋))` with `e = 1/4+3m+3n`.
fn branch_terms(n: i64, m: i64, p: &TrigPair) -> Result<(f64, f64)> {
    let idx = OctIndex::new(n, m);
    let e = 0.25 + 3.0 * (m + n) as f64;
    let plus = p.plus.powf(e) * eval_f64(idx, -p.minus / p.plus)?;
    let minus = p.minus.powf(e) * eval_f64(idx, -p.plus / p.minus)?;
    Ok((plus, minus))
}

/// `2^{c-2m-3n} 3^{-3/8} (1/4)_m / (13/12)_{m+n} / Γ(4/3)`, the minus-order
/// prefactor with `c = 11/4` or `5/4`.
fn minus_prefactor(n: i64, m: i64, c: f64) -> f64 {
    2f64.powf(c - (2 * m + 3 * n) as f64) * 3f64.powf(-0.375) * pochhammer_f64(0.25, m)
        / pochhammer_f64(13.0 / 12.0, m + n)
        * rgamma(4.0 / 3.0)
}

/// `(-1)^n 2^{-1/4-2m-3n} 3^{-3/8} (1/4)_m / (5/12)_{m-n} / Γ(2/3)`.
fn plus_prefactor(n: i64, m: i64) -> f64 {
    sign_pow(n) * 2f64.powf(-0.25 - (2 * m + 3 * n) as f64) * 3f64.powf(-0.375) * pochhammer_f64(0.25, m)
        / pochhammer_f64(5.0 / 12.0, m - n)
        * rgamma(2.0 / 3.0)
}

fn check_xi_positive(xi: f64) -> Result<()> {
    if xi > 0.0 && xi.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("needs ξ > 0, got {xi}")))
    }
}

/// `(2/π) Q̂_ν^{-1/3-n}(coth ξ)` with `ν = -1/2 ∓ (1/4+m)`: the `Minus`
/// row is degree `-3/4-m`, the `Plus` row degree `-1/4+m`.
pub fn tetra2_qhat(n: i64, m: i64, xi: f64, row: OrderSign) -> Result<f64> {
    check_xi_positive(xi)?;
    let a = trig_pair(TrigKind::A, xi)?;
    let pre = minus_prefactor(n, m, 2.75) * xi.sinh().powf(0.25 - m as f64);
    let (tp, tm) = branch_terms(n, m, &a)?;
    Ok(match row {
        OrderSign::Minus => -pre * sign_pow(n) * sqrt3p1() * tp,
        OrderSign::Plus => pre * sign_pow(m) * sqrt3m1() * tm,
    })
}

/// `P_{-3/4-m}^{±(1/3+n)}(coth ξ)`, `ξ > 0`.
pub fn tetra2_p_legendre(n: i64, m: i64, xi: f64, sign: OrderSign) -> Result<f64> {
    check_xi_positive(xi)?;
    let a = trig_pair(TrigKind::A, xi)?;
    let (tp, tm) = branch_terms(n, m, &a)?;
    let s = xi.sinh().powf(0.25 - m as f64);
    Ok(match sign {
        OrderSign::Minus => {
            sign_pow(n) * minus_prefactor(n, m, 1.25) * s * (sign_pow(n) * sqrt3m1() * tp - sign_pow(m) * sqrt3p1() * tm)
        }
        OrderSign::Plus => plus_prefactor(n, m) * s * (sign_pow(n) * sqrt3p1() * tp + sign_pow(m) * sqrt3m1() * tm),
    })
}

/// Ferrers `P_{-3/4-m}^{±(1/3+n)}(tanh ξ)`, any real `ξ`.
pub fn tetra2_p_ferrers(n: i64, m: i64, xi: f64, sign: OrderSign) -> Result<f64> {
    let c = trig_pair(TrigKind::C, xi)?;
    let (tp, tm) = branch_terms(n, m, &c)?;
    let s = xi.cosh().powf(0.25 - m as f64);
    Ok(match sign {
        OrderSign::Minus => minus_prefactor(n, m, 1.25) * s * (-sign_pow(n) * sqrt3m1() * tp + sign_pow(m) * sqrt3p1() * tm),
        OrderSign::Plus => plus_prefactor(n, m) * s * (sign_pow(n) * sqrt3p1() * tp + sign_pow(m) * sqrt3m1() * tm),
    })
}

/// Which class III function `tetra3_eval` returns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tetra3Kind {
    /// Ferrers `P` at `√(1-e^{-2ξ})`, `ξ > 0`.
    FerrersP,
    /// Legendre `P` at `√(1+e^{-2ξ})`.
    LegendreP,
    /// `(2/π) Q̂` at `√(1+e^{2ξ})`.
    LegendreQhat,
}

/// Class III functions: `Minus` gives degree `-1/6+n`, order `-1/3-n`;
/// `Plus` gives degree `-5/6-n`, order `1/3+n`.
pub fn tetra3_eval(n: i64, xi: f64, which: Tetra3Kind, sign: OrderSign) -> Result<f64> {
    if !xi.is_finite() {
        return Err(Error::Domain(format!("ξ = {xi}")));
    }
    let k = match sign {
        OrderSign::Minus => 2f64.powf(-1.0 / 3.0 - n as f64),
        OrderSign::Plus => 2f64.powf(1.0 / 3.0 + n as f64),
    };
    match which {
        Tetra3Kind::FerrersP => {
            check_xi_positive(xi)?;
            let w = -(-2.0 * xi).exp_m1();
            Ok(k * w.powf(-0.25) * tetra2_p_legendre(n, 0, xi, sign)?)
        }
        Tetra3Kind::LegendreP => {
            let w = 1.0 + (-2.0 * xi).exp();
            Ok(k * w.powf(-0.25) * tetra2_p_ferrers(n, 0, xi, sign)?)
        }
        Tetra3Kind::LegendreQhat => {
            let w = 1.0 + (2.0 * xi).exp();
            Ok(k * w.powf(-0.25) * 2f64.sqrt() * tetra2_p_ferrers(n, 0, xi, sign)?)
        }
    }
}

/// The four gamma-function expressions for `√(√3+1)` (first two) and
/// `√(√3-1)` (last two), each paired with the direct value.
pub fn gamma_identities() -> [(f64, f64); 4] {
    let (p, two, three) = (PI, 2f64, 3f64);
    let g = gamma;
    [
        (sqrt3p1(), p.sqrt() * two.powf(0.25) * three.powf(-0.375) * g(1.0 / 12.0) / g(0.25) / g(1.0 / 3.0)),
        (sqrt3p1(), p.powf(-1.5) * two.powf(-0.75) * three.powf(0.375) * g(11.0 / 12.0) * g(0.25) * g(1.0 / 3.0)),
        (sqrt3m1(), p.powf(-0.5) * two.powf(-0.25) * three.powf(0.125) * g(5.0 / 12.0) / g(0.25) * g(1.0 / 3.0)),
        (sqrt3m1(), p.powf(-0.5) * two.powf(-0.25) * three.powf(-0.125) * g(7.0 / 12.0) * g(0.25) / g(1.0 / 3.0)),
    ]
}
