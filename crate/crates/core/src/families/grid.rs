//! The standard comparison grid: every family member the closed forms cover,
//! at four interior points inside the oracle's convergence guard.

use super::{Family, FamilyPoint, OrderSign, Variable};
use crate::oracle::LegendreFn::{self, *};

const XI_LEGENDRE: [f64; 4] = [0.3, 0.8, 1.3, 2.0];
const THETA: [f64; 4] = [0.4, 1.0, 1.8, 2.6];
/// `tanh²ξ ≤ 0.8` keeps the `Q̂` series at `coth ξ` inside the guard.
const XI_QHAT: [f64; 4] = [0.3, 0.7, 1.0, 1.4];
const XI_COTH: [f64; 4] = [0.3, 0.7, 1.2, 2.0];
const XI_TANH: [f64; 4] = [-1.5, -0.4, 0.5, 1.5];
const XI_CLASS3_FERRERS: [f64; 4] = [0.2, 0.6, 1.0, 2.0];
const XI_CLASS3_LEGENDRE: [f64; 4] = [-1.0, -0.2, 0.5, 1.5];
const XI_CLASS3_QHAT: [f64; 4] = [-1.0, -0.2, 0.3, 1.0];

pub const DIHEDRAL_ALPHAS: [f64; 3] = [0.3, 0.7, 1.6];
pub const CYCLIC_ORDERS: [f64; 4] = [0.25, -0.6, 1.5, 2.0];

fn point(family: Family, function: LegendreFn, n: i64, m: i64, alpha: f64, sign: OrderSign, var: Variable) -> FamilyPoint {
    FamilyPoint { family, function, n, m, alpha, sign, var }
}

/// `(n, m) ∈ [-2, 2]²` for the octahedral and tetrahedral families (class III
/// has no `m`), `m ∈ [0, 3]` with `α ∈ {0.3, 0.7, 1.6}` for the dihedral one,
/// and `n ∈ [0, 3]` with four orders for the cyclic one.
pub fn oracle_grid() -> Vec<FamilyPoint> {
    let mut out = Vec::new();
    let signs = [OrderSign::Plus, OrderSign::Minus];
    for n in -2..=2 {
        for s in signs {
            for m in -2..=2 {
                let mut add = |f: Family, g: LegendreFn, xs: &[f64], circ: bool| {
                    for &x in xs {
                        let v = if circ { Variable::Theta(x) } else { Variable::Xi(x) };
                        out.push(point(f, g, n, m, 0.0, s, v));
                    }
                };
                add(Family::Octahedral, LegendreP, &XI_LEGENDRE, false);
                add(Family::Octahedral, FerrersP, &THETA, true);
                add(Family::TetraII, LegendreQhat, &XI_QHAT, false);
                add(Family::TetraII, LegendreP, &XI_COTH, false);
                add(Family::TetraII, FerrersP, &XI_TANH, false);
            }
            for (g, xs) in [(FerrersP, XI_CLASS3_FERRERS), (LegendreP, XI_CLASS3_LEGENDRE), (LegendreQhat, XI_CLASS3_QHAT)] {
                for x in xs {
                    out.push(point(Family::TetraIII, g, n, 0, 0.0, s, Variable::Xi(x)));
                }
            }
        }
    }
    for m in 0..=3 {
        for a in DIHEDRAL_ALPHAS {
            for s in signs {
                for x in XI_LEGENDRE {
                    for g in [LegendreQhat, LegendreP] {
                        out.push(point(Family::Dihedral, g, 0, m, a, s, Variable::Xi(x)));
                    }
                }
                for x in THETA {
                    for g in [FerrersP, FerrersQ] {
                        out.push(point(Family::Dihedral, g, 0, m, a, s, Variable::Theta(x)));
                    }
                }
            }
        }
    }
    for n in 0..=3 {
        for a in CYCLIC_ORDERS {
            for x in XI_LEGENDRE {
                out.push(point(Family::Cyclic, LegendreP, n, 0, a, OrderSign::Plus, Variable::Xi(x)));
            }
            for x in THETA {
                out.push(point(Family::Cyclic, FerrersP, n, 0, a, OrderSign::Plus, Variable::Theta(x)));
            }
        }
    }
    out
}
