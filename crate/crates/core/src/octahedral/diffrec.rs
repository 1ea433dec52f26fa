//! The eight first-order differential recurrences linking `r_n^m` to its
//! neighbours `r_{n+Δn}^{m+Δm}`:
//!
//! `K r' = p_v^((-σv+εv)/4) p_e^(-σe+εe) p_f^(-σf+εf) (4u^{3/4}) d/du[p_v^(σv/4) p_e^σe p_f^σf r]`.
//!
//! Expanding the derivative logarithmically, the `σ` powers cancel and the
//! operator reduces to
//! `4 u^((3+εv)/4) (1-u)^εv p_e^εe p_f^εf [r' + r (σv p_v'/(4p_v) + σe p_e'/p_e + σf p_f'/p_f)]`,
//! which is rational exactly when `εv ≡ 1 (mod 4)`.

use super::form::Form;
use super::{generate, OctIndex, OctahedralFunction};
use crate::error::{Error, Result};
use crate::exact::{int, invariant_polys, rat, ExactRational, RationalPoly};
use num_traits::Zero;

/// The eight shifts `Δ(n, m)`, in table order.
pub const DIFF_DELTAS: [(i64, i64); 8] = [(0, 1), (0, -1), (1, 0), (-1, 0), (1, 1), (-1, -1), (-1, 1), (1, -1)];

/// One row of the differential-recurrence table evaluated at `(n, m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffStep {
    pub delta: (i64, i64),
    pub sigma: [ExactRational; 3],
    pub eps: [i32; 3],
    pub k: ExactRational,
}

pub fn diff_step(delta: (i64, i64), idx: OctIndex) -> Result<DiffStep> {
    let (n, m) = (idx.n, idx.m);
    let z = || int(0);
    let (sigma, eps, k) = match delta {
        (0, 1) => ([int(-1 - 4 * m), z(), rat(5, 8) + rat(3 * m - 3 * n, 2)], [1, 0, 1], int(-(1 + 4 * m))),
        (0, -1) => (
            [z(), z(), rat(-1, 8) - rat(3 * m + 3 * n, 2)],
            [-3, 0, 1],
            rat(3 * (1 + 12 * m + 12 * n) * (7 - 12 * m + 12 * n), 4 * m - 3),
        ),
        (1, 0) => ([rat(7, 6) + int(2 * n - 2 * m), z(), int(-1 - 3 * n)], [1, 0, 1], rat(7 - 12 * m + 12 * n, 6)),
        (-1, 0) => ([rat(-1, 6) - int(2 * m + 2 * n), z(), z()], [1, 0, -2], rat(-(1 + 12 * m + 12 * n), 6)),
        (1, 1) => ([int(-1 - 4 * m), rat(13, 12) + int(m + n), int(-1 - 3 * n)], [1, 1, 1], int(-(1 + 4 * m))),
        (-1, -1) => (
            [z(), rat(-1, 12) - int(m + n), z()],
            [-3, 1, -2],
            rat(3 * (1 + 12 * m + 12 * n) * (-11 + 12 * m + 12 * n), 4 * m - 3),
        ),
        (-1, 1) => ([int(-1 - 4 * m), rat(5, 12) + int(m - n), z()], [1, 1, -2], int(-(1 + 4 * m))),
        (1, -1) => (
            [z(), rat(7, 12) + int(n - m), int(-1 - 3 * n)],
            [-3, 1, 1],
            rat(3 * (-7 + 12 * m - 12 * n) * (-19 + 12 * m - 12 * n), 4 * m - 3),
        ),
        _ => return Err(Error::Domain(format!("Δ(n, m) = {delta:?} is not a recurrence shift"))),
    };
    Ok(DiffStep { delta, sigma, eps, k })
}

/// `r_{n+Δn}^{m+Δm}` obtained from `r_n^m` by the differential recurrence.
pub fn apply_diff_recurrence(idx: OctIndex, delta: (i64, i64)) -> Result<OctahedralFunction> {
    let r = generate(idx)?;
    let target = OctIndex::new(idx.n + delta.0, idx.m + delta.1);
    OctahedralFunction::from_form(target, diff_operator(&r.form(), &diff_step(delta, idx)?)?)
}

/// Apply the recurrence operator of `step` to `N (1-u)^(-a) p_f^(-b)`.
///
/// Over the common denominator `4u (1-u)^(a+1) p_e p_f^(b+1)` the bracket
/// `r' + r·(log-derivative)` has numerator
/// `4u p_e [N'(1-u) p_f + aN p_f - bN p_f'(1-u)] + σv N p_e p_f (1-5u)
///  + 4σe u(1-u) N p_f p_e' + 4σf u(1-u) N p_e p_f'`.
fn diff_operator(r: &Form, step: &DiffStep) -> Result<Form> {
    let inv = invariant_polys();
    let [sv, se, sf] = &step.sigma;
    let [ev, ee, ef] = step.eps;
    if (3 + ev).rem_euclid(4) != 0 {
        return Err(Error::Consistency(format!("u^(3/4) p_v^({ev}/4) is not rational")));
    }
    let upow = (3 + ev) / 4;
    let c = |k: i64| RationalPoly::constant(int(k));
    let u = RationalPoly::x();
    let omu = RationalPoly::from_i64(&[1, -1]);
    let (pe, pf) = (&inv.pe, &inv.pf);
    let (pe1, pf1) = (pe.derivative(), pf.derivative());
    let nn = &r.numer;
    let (a, b) = (r.a as i64, r.b as i64);
    let deriv = &(&(&(&nn.derivative() * &omu) * pf) + &(&c(a) * &(nn * pf))) - &(&c(b) * &(&(nn * &pf1) * &omu));
    let u_omu = &u * &omu;
    let q = &(&(&(&c(4) * &(&u * &(pe * &deriv))) + &(&(nn * &(pe * pf)) * &RationalPoly::from_i64(&[1, -5])).scale(sv))
        + &(&c(4) * &(&u_omu * &(nn * &(pf * &pe1)))).scale(se))
        + &(&c(4) * &(&u_omu * &(nn * &(pe * &pf1)))).scale(sf);
    // remaining factors: u^(upow-1) (1-u)^(ev-a-1) p_e^(ee-1) p_f^(ef-b-1), times 4/(4K)
    let mut numer = q;
    match upow - 1 {
        0 => {}
        -1 => {
            if !numer.coeff(0).is_zero() {
                return Err(Error::Consistency("u^(-1) factor does not cancel".into()));
            }
            numer = RationalPoly::from_coeffs(numer.coeffs()[1..].to_vec());
        }
        e => return Err(Error::Consistency(format!("unexpected u exponent {e}"))),
    }
    match ee - 1 {
        0 => {}
        -1 => numer = numer.exact_div(pe)?,
        e => return Err(Error::Consistency(format!("unexpected p_e exponent {e}"))),
    }
    let ea = ev as i64 - a - 1;
    let eb = ef as i64 - b - 1;
    if ea > 0 {
        numer = &numer * &omu.pow(ea as u32);
    }
    if eb > 0 {
        numer = &numer * &pf.pow(eb as u32);
    }
    let out = Form { numer: numer.scale(&step.k.recip()), a: (-ea).max(0) as u32, b: (-eb).max(0) as u32 };
    Ok(out.reduced())
}
