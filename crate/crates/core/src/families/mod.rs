//! Closed-form trigonometric evaluators for the parametrized families of
//! algebraic (and, for the Jacobi families, transcendental) Legendre and
//! Ferrers functions.
//!
//! [`FamilyPoint`] names one member of a family at one point and knows both
//! how to evaluate it in closed form and which `(ν, μ, z)` it corresponds to,
//! so that the hypergeometric oracle can be used as an independent route.

mod grid;
mod jacobi_forms;
mod octahedral;
mod tetra;
mod trig;

pub use grid::{oracle_grid, CYCLIC_ORDERS, DIHEDRAL_ALPHAS};
pub use jacobi_forms::{cyclic_p, dihedral_eval};
pub use octahedral::{mehler_constant, mehler_integral, mehler_quadrature, oct_ferrers_p, oct_legendre_p, MehlerVar};
pub use tetra::{gamma_identities, tetra2_p_ferrers, tetra2_p_legendre, tetra2_qhat, tetra3_eval, Tetra3Kind};
pub use trig::{trig_pair, TrigKind, TrigPair};

use crate::error::{Error, Result};
use crate::oracle::{LegendreFn, LegendreKind};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderSign {
    Plus,
    Minus,
}

impl OrderSign {
    pub fn factor(self) -> f64 {
        match self {
            OrderSign::Plus => 1.0,
            OrderSign::Minus => -1.0,
        }
    }
}

/// Hyperbolic (`ξ`) or circular (`θ`) parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Variable {
    Xi(f64),
    Theta(f64),
}

impl Variable {
    pub fn value(self) -> f64 {
        match self {
            Variable::Xi(x) | Variable::Theta(x) => x,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Octahedral,
    /// Degree `-3/4-m` or `-1/4+m`, order `±(1/3+n)`.
    TetraII,
    /// Degree `-1/6+n` with order `-1/3-n`, or `-5/6-n` with `1/3+n`.
    TetraIII,
    /// Degree `-1/2+α`, order `±(1/2+m)`.
    Dihedral,
    /// Integer degree `n`, order `α`.
    Cyclic,
}

/// One family member at one point.
///
/// `function` selects among the Legendre-type functions the family
/// provides; `sign` is the sign of the order, except for the class II `Q̂`
/// where it selects the degree `-1/2 ± (1/4+m)`. `alpha` is used only by
/// the dihedral and cyclic families (for the latter it is the order).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyPoint {
    pub family: Family,
    pub function: LegendreFn,
    pub n: i64,
    pub m: i64,
    pub alpha: f64,
    pub sign: OrderSign,
    pub var: Variable,
}

/// `value = factor · F_ν^μ(z)` for the oracle function `kind`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleTarget {
    pub kind: LegendreKind,
    pub z: f64,
    pub factor: f64,
}

impl OracleTarget {
    pub fn eval(&self) -> Result<f64> {
        Ok(self.factor * self.kind.eval(self.z)?)
    }
}

impl FamilyPoint {
    fn unsupported(&self) -> Error {
        Error::Domain(format!("{:?} family has no {:?} form in {:?}", self.family, self.function, self.var))
    }

    fn nonneg(&self, k: i64) -> Result<u32> {
        u32::try_from(k).map_err(|_| Error::Domain(format!("{:?} family needs a non-negative index, got {k}", self.family)))
    }

    pub fn eval(&self) -> Result<f64> {
        use LegendreFn::*;
        let (n, m, s) = (self.n, self.m, self.sign);
        match (self.family, self.function, self.var) {
            (Family::Octahedral, LegendreP, Variable::Xi(x)) => oct_legendre_p(n, m, x, s),
            (Family::Octahedral, FerrersP, Variable::Theta(t)) => oct_ferrers_p(n, m, t, s),
            (Family::TetraII, LegendreQhat, Variable::Xi(x)) => tetra2_qhat(n, m, x, s),
            (Family::TetraII, LegendreP, Variable::Xi(x)) => tetra2_p_legendre(n, m, x, s),
            (Family::TetraII, FerrersP, Variable::Xi(x)) => tetra2_p_ferrers(n, m, x, s),
            (Family::TetraIII, FerrersP, Variable::Xi(x)) => tetra3_eval(n, x, Tetra3Kind::FerrersP, s),
            (Family::TetraIII, LegendreP, Variable::Xi(x)) => tetra3_eval(n, x, Tetra3Kind::LegendreP, s),
            (Family::TetraIII, LegendreQhat, Variable::Xi(x)) => tetra3_eval(n, x, Tetra3Kind::LegendreQhat, s),
            (Family::Dihedral, f, v) => dihedral_eval(self.nonneg(m)?, self.alpha, v, f, s),
            (Family::Cyclic, LegendreP, v @ Variable::Xi(_)) | (Family::Cyclic, FerrersP, v @ Variable::Theta(_)) => {
                cyclic_p(self.nonneg(n)?, self.alpha, v)
            }
            _ => Err(self.unsupported()),
        }
    }

    /// The oracle function, argument and scale this point evaluates.
    pub fn oracle_target(&self) -> Result<OracleTarget> {
        use LegendreFn::*;
        let (n, m, sf) = (self.n as f64, self.m as f64, self.sign.factor());
        let x = self.var.value();
        let minus = self.sign == OrderSign::Minus;
        let (nu, mu, z, factor) = match (self.family, self.function, self.var) {
            (Family::Octahedral, LegendreP, Variable::Xi(_)) => (-1.0 / 6.0 + n, sf * (0.25 + m), x.cosh(), 1.0),
            (Family::Octahedral, FerrersP, Variable::Theta(_)) => (-1.0 / 6.0 + n, sf * (0.25 + m), x.cos(), 1.0),
            (Family::TetraII, LegendreQhat, Variable::Xi(_)) => (-0.5 + sf * (0.25 + m), -1.0 / 3.0 - n, 1.0 / x.tanh(), 2.0 / PI),
            (Family::TetraII, LegendreP, Variable::Xi(_)) => (-0.75 - m, sf * (1.0 / 3.0 + n), 1.0 / x.tanh(), 1.0),
            (Family::TetraII, FerrersP, Variable::Xi(_)) => (-0.75 - m, sf * (1.0 / 3.0 + n), x.tanh(), 1.0),
            (Family::TetraIII, f, Variable::Xi(_)) => {
                let (nu, mu) = if minus { (-1.0 / 6.0 + n, -1.0 / 3.0 - n) } else { (-5.0 / 6.0 - n, 1.0 / 3.0 + n) };
                match f {
                    FerrersP => (nu, mu, (-(-2.0 * x).exp_m1()).sqrt(), 1.0),
                    LegendreP => (nu, mu, (1.0 + (-2.0 * x).exp()).sqrt(), 1.0),
                    LegendreQhat => (nu, mu, (1.0 + (2.0 * x).exp()).sqrt(), 2.0 / PI),
                    FerrersQ => return Err(self.unsupported()),
                }
            }
            (Family::Dihedral, LegendreQhat | LegendreP, Variable::Xi(_)) => (-0.5 + self.alpha, sf * (0.5 + m), x.cosh(), 1.0),
            (Family::Dihedral, FerrersP | FerrersQ, Variable::Theta(_)) => (-0.5 + self.alpha, sf * (0.5 + m), x.cos(), 1.0),
            (Family::Cyclic, LegendreP, Variable::Xi(_)) => (n, self.alpha, x.cosh(), 1.0),
            (Family::Cyclic, FerrersP, Variable::Theta(_)) => (n, self.alpha, x.cos(), 1.0),
            _ => return Err(self.unsupported()),
        };
        Ok(OracleTarget { kind: LegendreKind::new(self.function, nu, mu), z, factor })
    }
}
