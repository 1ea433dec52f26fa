//! Residuals of the three-term recurrences; each is the zero function when
//! the generated family is consistent.

use super::form::Form;
use super::{generate, OctIndex};
use crate::error::Result;
use crate::exact::{int, invariant_polys, RationalFunction, RationalPoly};

fn r(n: i64, m: i64) -> Result<Form> {
    Ok(generate(OctIndex::new(n, m))?.form())
}

fn k(c: i64) -> RationalPoly {
    RationalPoly::constant(int(c))
}

fn combine(terms: [(RationalPoly, Form); 3]) -> RationalFunction {
    let refs: Vec<(RationalPoly, &Form)> = terms.iter().map(|(c, f)| (c.clone(), f)).collect();
    Form::lin_comb(&refs).to_rational_function()
}

/// `[m-recurrence, n-recurrence]` residuals centred at `idx`.
pub fn three_term_residuals(idx: OctIndex) -> Result<[RationalFunction; 2]> {
    let (n, m) = (idx.n, idx.m);
    let inv = invariant_polys();
    let pf3 = inv.pf.pow(3);
    let c = (4 * m - 3) * (4 * m + 1);
    let m_rec = combine([
        (k(c), r(n, m + 1)?),
        (&k(-c) * &inv.pe, r(n, m)?),
        (&k(-3 * (12 * m - 12 * n - 7) * (12 * m + 12 * n + 1)) * &inv.pv, r(n, m - 1)?),
    ]);
    let n_rec = combine([
        (k(12 * n - 12 * m + 7), r(n + 1, m)?),
        (&k(-8 * (3 * n + 1)) * &inv.pe, r(n, m)?),
        (&k(12 * n + 12 * m + 1) * &pf3, r(n - 1, m)?),
    ]);
    Ok([m_rec, n_rec])
}

/// Residuals of the two diagonal recurrences centred at `idx`.
pub fn diagonal_residuals(idx: OctIndex) -> Result<[RationalFunction; 2]> {
    let (n, m) = (idx.n, idx.m);
    let inv = invariant_polys();
    let (pf3, pe2) = (inv.pf.pow(3), inv.pe.pow(2));
    let c = 3 * (4 * m - 3) * (4 * m + 1);
    let mid1 = &(&k(12 * m + 12 * n + 7) * &pf3) - &(&k(4 * (3 * n + 1)) * &pe2);
    let d1 = combine([
        (k(c), r(n + 1, m + 1)?),
        (&k(-(4 * m - 3)) * &mid1, r(n, m)?),
        (&k(9 * (12 * m + 12 * n + 1) * (12 * m + 12 * n - 11)) * &(&inv.pv * &pf3), r(n - 1, m - 1)?),
    ]);
    let mid2 = &(&k(12 * m - 12 * n - 1) * &pf3) + &(&k(4 * (3 * n + 1)) * &pe2);
    let d2 = combine([
        (&k(c) * &pf3, r(n - 1, m + 1)?),
        (&k(-(4 * m - 3)) * &mid2, r(n, m)?),
        (&k(9 * (12 * m - 12 * n - 7) * (12 * m - 12 * n - 19)) * &inv.pv, r(n + 1, m - 1)?),
    ]);
    Ok([d1, d2])
}
