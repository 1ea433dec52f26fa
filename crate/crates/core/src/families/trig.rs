//! The trigonometric pairs `A±(ξ)`, `B±(θ)`, `C±(ξ)` that parametrize the
//! octahedral and tetrahedral families.
//!
//! The branch with no cancellation is evaluated directly and its partner is
//! recovered from the product identity, so both stay accurate near the
//! endpoints where one of them vanishes.

use crate::error::{Error, Result};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigKind {
    /// `A± = ±cosh(ξ/3) + √((4cosh²(ξ/3)-1)/3)`, `ξ ≥ 0`.
    A,
    /// `B± = cos(θ/3) ± √((4cos²(θ/3)-1)/3)`, `0 ≤ θ ≤ π`.
    B,
    /// `C± = ±sinh(ξ/3) + √((4sinh²(ξ/3)+1)/3)`, any real `ξ`.
    C,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrigPair {
    pub kind: TrigKind,
    pub var: f64,
    pub plus: f64,
    pub minus: f64,
}

impl TrigPair {
    /// `sinh²(ξ/3)/3`, `sin²(θ/3)/3` or `cosh²(ξ/3)/3`.
    pub fn product_target(&self) -> f64 {
        let t = self.var / 3.0;
        match self.kind {
            TrigKind::A => t.sinh().powi(2) / 3.0,
            TrigKind::B => t.sin().powi(2) / 3.0,
            TrigKind::C => t.cosh().powi(2) / 3.0,
        }
    }

    /// `minus/plus`, the octahedral argument up to sign.
    pub fn ratio(&self) -> f64 {
        self.minus / self.plus
    }
}

pub fn trig_pair(kind: TrigKind, var: f64) -> Result<TrigPair> {
    if !var.is_finite() {
        return Err(Error::Domain(format!("trig pair {kind:?} at non-finite {var}")));
    }
    let t = var / 3.0;
    let (plus, minus) = match kind {
        TrigKind::A => {
            if var < 0.0 {
                return Err(Error::Domain(format!("A± needs ξ ≥ 0, got {var}")));
            }
            let c = t.cosh();
            let plus = c + ((4.0 * c * c - 1.0) / 3.0).sqrt();
            (plus, t.sinh().powi(2) / (3.0 * plus))
        }
        TrigKind::B => {
            if !(0.0..=PI).contains(&var) {
                return Err(Error::Domain(format!("B± needs 0 ≤ θ ≤ π, got {var}")));
            }
            let c = t.cos();
            let plus = c + ((4.0 * c * c - 1.0).max(0.0) / 3.0).sqrt();
            (plus, t.sin().powi(2) / (3.0 * plus))
        }
        TrigKind::C => {
            let s = t.sinh();
            let root = ((4.0 * s * s + 1.0) / 3.0).sqrt();
            let c2 = t.cosh().powi(2) / 3.0;
            if s >= 0.0 {
                let plus = s + root;
                (plus, c2 / plus)
            } else {
                let minus = -s + root;
                (c2 / minus, minus)
            }
        }
    };
    Ok(TrigPair { kind, var, plus, minus })
}
