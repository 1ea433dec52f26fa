use super::matrix::OpMatrix;
use super::window::{Idx, Window};
use num_complex::Complex64;
use std::collections::BTreeMap;

/// The ten ladder and labeling operators on one window.
#[derive(Clone, Debug)]
pub struct Ladders {
    pub j_plus: OpMatrix,
    pub j_minus: OpMatrix,
    pub k_plus: OpMatrix,
    pub k_minus: OpMatrix,
    pub r_plus: OpMatrix,
    pub r_minus: OpMatrix,
    pub s_plus: OpMatrix,
    pub s_minus: OpMatrix,
    pub j3: OpMatrix,
    pub k3: OpMatrix,
}

/// Label, root `Δ(ν, μ)` and the matrix entry in the plain basis `S_ν^μ`.
type Entry = (&'static str, Idx, fn(f64, f64) -> f64);

const PLAIN: [Entry; 10] = [
    ("J+", (0, 1), |_, _| 1.0),
    ("J-", (0, -1), |nu, mu| (nu + mu) * (nu - mu + 1.0)),
    ("K+", (1, 0), |nu, mu| nu - mu + 1.0),
    ("K-", (-1, 0), |nu, mu| nu + mu),
    ("R+", (1, 1), |_, _| 1.0),
    ("R-", (-1, -1), |nu, mu| (nu + mu) * (nu + mu - 1.0)),
    ("S+", (1, -1), |nu, mu| (nu - mu + 1.0) * (nu - mu + 2.0)),
    ("S-", (-1, 1), |_, _| 1.0),
    ("J3", (0, 0), |_, mu| mu),
    ("K3", (0, 0), |nu, _| nu + 0.5),
];

/// Radicands in the twisted basis `Ŝ_ν^μ`; the labeling operators keep
/// their plain entries.
const TWISTED: [Entry; 8] = [
    ("J+", (0, 1), |nu, mu| (nu - mu) * (nu + mu + 1.0)),
    ("J-", (0, -1), |nu, mu| (nu - mu + 1.0) * (nu + mu)),
    ("K+", (1, 0), |nu, mu| (nu - mu + 1.0) * (nu + mu + 1.0)),
    ("K-", (-1, 0), |nu, mu| (nu - mu) * (nu + mu)),
    ("R+", (1, 1), |nu, mu| (nu + mu + 1.0) * (nu + mu + 2.0)),
    ("R-", (-1, -1), |nu, mu| (nu + mu) * (nu + mu - 1.0)),
    ("S+", (1, -1), |nu, mu| (nu - mu + 1.0) * (nu - mu + 2.0)),
    ("S-", (-1, 1), |nu, mu| (nu - mu) * (nu - mu - 1.0)),
];

/// Principal square root; a negative radicand gives a positive imaginary
/// value.
fn principal_sqrt(x: f64) -> Complex64 {
    if x >= 0.0 {
        Complex64::new(x.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-x).sqrt())
    }
}

/// Matrices of `J±, K±, R±, S±, J₃, K₃` on the plain solid harmonics, or
/// on the twisted ones `Ŝ = √(Γ(ν-μ+1)/Γ(ν+μ+1)) S` when `twisted`.
pub fn build_ladders(w: Window, twisted: bool) -> Ladders {
    let mut built: Vec<OpMatrix> = PLAIN
        .iter()
        .map(|&(label, delta, f)| OpMatrix::ladder(w, label, delta, |nu, mu| Complex64::new(f(nu, mu), 0.0)))
        .collect();
    if twisted {
        for (slot, &(label, delta, f)) in built.iter_mut().zip(TWISTED.iter()) {
            *slot = OpMatrix::ladder(w, label, delta, |nu, mu| principal_sqrt(f(nu, mu)));
        }
    }
    let mut it = built.into_iter();
    let mut next = || it.next().expect("ten operators");
    Ladders {
        j_plus: next(),
        j_minus: next(),
        k_plus: next(),
        k_minus: next(),
        r_plus: next(),
        r_minus: next(),
        s_plus: next(),
        s_minus: next(),
        j3: next(),
        k3: next(),
    }
}

impl Ladders {
    pub fn window(&self) -> &Window {
        self.j3.window()
    }

    /// The eight root vectors with their roots `Δ(ν, μ)`.
    pub fn roots(&self) -> [(&OpMatrix, Idx); 8] {
        [
            (&self.j_plus, (0, 1)),
            (&self.j_minus, (0, -1)),
            (&self.k_plus, (1, 0)),
            (&self.k_minus, (-1, 0)),
            (&self.r_plus, (1, 1)),
            (&self.r_minus, (-1, -1)),
            (&self.s_plus, (1, -1)),
            (&self.s_minus, (-1, 1)),
        ]
    }

    pub fn by_label(&self) -> BTreeMap<String, OpMatrix> {
        let mut out: BTreeMap<String, OpMatrix> = self.roots().iter().map(|(m, _)| (m.label.clone(), (*m).clone())).collect();
        out.insert("J3".into(), self.j3.clone());
        out.insert("K3".into(), self.k3.clone());
        out
    }
}
