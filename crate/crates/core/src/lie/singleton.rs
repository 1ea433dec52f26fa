use super::forms::Elements;
use super::ladder_ops::build_ladders;
use super::matrix::OpMatrix;
use super::window::{Idx, Window};
use crate::error::Result;
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SingletonCase {
    /// `(ν₀, μ₀) = (0, 0)`.
    Rac,
    /// `(ν₀, μ₀) = (1/2, 1/2)`.
    Di,
    /// Any other base offset, expected to fail.
    Offset(f64, f64),
}

impl SingletonCase {
    pub fn offset(self) -> (f64, f64) {
        match self {
            SingletonCase::Rac => (0.0, 0.0),
            SingletonCase::Di => (0.5, 0.5),
            SingletonCase::Offset(nu0, mu0) => (nu0, mu0),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SingletonReport {
    pub case: SingletonCase,
    /// The span of `Ŝ_ν^μ` with `n ≥ 0`, `|μ| ≤ ν` is mapped into itself.
    pub triangle_invariant: bool,
    /// Columns on which skew-Hermiticity was tested: the triangle when it
    /// is invariant, otherwise the whole window interior.
    pub columns_checked: usize,
    /// `max |X + X†|` for each basis element.
    pub defects: Vec<(String, f64)>,
    pub max_defect: f64,
    pub skew_hermitian: bool,
    /// `ρ(X₊)` real with `ρ(X₋) = ρ(X₊)ᵀ` for `X = J, K, R, S` on the
    /// checked columns.
    pub ladders_real_transposed: bool,
}

pub const SKEW_TOL: f64 = 1e-12;

fn skew_defect(x: &OpMatrix, region: &BTreeSet<Idx>) -> f64 {
    let mut worst = 0.0f64;
    for &c in region {
        for &r in region {
            worst = worst.max((x.get(r, c) + x.get(c, r).conj()).norm());
        }
    }
    worst
}

fn transpose_defect(plus: &OpMatrix, minus: &OpMatrix, region: &BTreeSet<Idx>) -> f64 {
    let mut worst = 0.0f64;
    for &c in region {
        for &r in region {
            let (p, m) = (plus.get(r, c), minus.get(c, r));
            worst = worst.max(p.im.abs()).max(m.im.abs()).max((p - m).norm());
        }
    }
    worst
}

/// Skew-Hermiticity of the twisted representation of so(3,2) in the basis
/// `iJ_i, iPC⁺_i, PC⁻_i, iD`, on `n ∈ [0, n_max]`.
pub fn singleton_check(case: SingletonCase, n_max: i64) -> Result<SingletonReport> {
    let (nu0, mu0) = case.offset();
    let w = Window::new(nu0, mu0, (-2, n_max + 2), (-n_max - 4, n_max + 4), 2)?;
    let l = build_ladders(w, true);
    let e = Elements::new(&l)?;
    let mut basis: Vec<OpMatrix> = Vec::new();
    for k in 0..3 {
        basis.push(e.j[k].times_i());
        basis.push(e.pc_plus[k].times_i());
        basis.push(e.pc_minus[k].clone());
    }
    basis.push(e.d.times_i());

    let interior = w.interior();
    let triangle: BTreeSet<Idx> = w.indices().filter(|&(n, m)| n >= 0 && w.mu(m).abs() <= w.nu(n) + 1e-12).collect();
    let inside: BTreeSet<Idx> = triangle.intersection(&interior).copied().collect();
    let mut triangle_invariant = true;
    for x in &basis {
        x.max_abs_on(&inside)?;
        for &c in &inside {
            if x.column(c).any(|(r, v)| !triangle.contains(&r) && v.norm() > 0.0) {
                triangle_invariant = false;
            }
        }
    }
    let region = if triangle_invariant { inside } else { interior };

    let defects: Vec<(String, f64)> = basis.iter().map(|x| (x.label.clone(), skew_defect(x, &region))).collect();
    let max_defect = defects.iter().map(|d| d.1).fold(0.0, f64::max);
    let pairs = [(&l.j_plus, &l.j_minus), (&l.k_plus, &l.k_minus), (&l.r_plus, &l.r_minus), (&l.s_plus, &l.s_minus)];
    let ladders_real_transposed = pairs.iter().all(|(p, m)| transpose_defect(p, m, &region) <= SKEW_TOL);
    Ok(SingletonReport {
        case,
        triangle_invariant,
        columns_checked: region.len(),
        defects,
        max_defect,
        skew_hermitian: max_defect <= SKEW_TOL,
        ladders_real_transposed,
    })
}
