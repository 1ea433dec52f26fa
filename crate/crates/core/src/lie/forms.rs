use super::ladder_ops::{build_ladders, Ladders};
use super::matrix::OpMatrix;
use super::window::{Idx, Window};
use crate::error::Result;
use num_complex::Complex64;
use std::collections::BTreeMap;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Three components of a vector-like family of operators.
pub type Triple = [OpMatrix; 3];

/// `J`, `PC^±` in Cartesian (`X₂ = -i(X₊-X₋)/2`) and skew-Cartesian
/// (`𝒳₂ = (X₊-X₋)/2`) components, and `D = K₃`.
#[derive(Clone, Debug)]
pub struct Elements {
    pub j: Triple,
    pub j_skew: Triple,
    pub pc_plus: Triple,
    pub pc_plus_skew: Triple,
    pub pc_minus: Triple,
    pub pc_minus_skew: Triple,
    pub d: OpMatrix,
}

fn skew_cartesian(plus: &OpMatrix, minus: &OpMatrix, third: &OpMatrix, name: &str) -> Result<Triple> {
    let h = c(0.5);
    Ok([
        plus.lin(h, minus, h)?.with_label(format!("{name}1")),
        plus.lin(h, minus, -h)?.with_label(format!("{name}2")),
        third.clone().with_label(format!("{name}3")),
    ])
}

fn cartesian(skew: &Triple) -> Triple {
    let [x1, x2, x3] = skew.clone();
    let x2 = x2.scale(-Complex64::i()).with_label(x2.label.clone());
    [x1, x2, x3]
}

impl Elements {
    pub fn new(l: &Ladders) -> Result<Self> {
        let h = c(0.5);
        let pc = |s: f64, tag: &str| -> Result<Triple> {
            let plus = l.s_minus.lin(h, &l.r_plus, -h * s)?;
            let minus = l.r_minus.lin(-h, &l.s_plus, h * s)?;
            let third = l.k_minus.lin(h, &l.k_plus, h * s)?;
            skew_cartesian(&plus, &minus, &third, tag)
        };
        let j_skew = skew_cartesian(&l.j_plus, &l.j_minus, &l.j3, "J")?;
        let pc_plus_skew = pc(1.0, "PC+")?;
        let pc_minus_skew = pc(-1.0, "PC-")?;
        Ok(Elements {
            j: cartesian(&j_skew),
            pc_plus: cartesian(&pc_plus_skew),
            pc_minus: cartesian(&pc_minus_skew),
            j_skew,
            pc_plus_skew,
            pc_minus_skew,
            d: l.k3.clone().with_label("D"),
        })
    }

    /// `P_i = PC⁺_i + PC⁻_i` (translations).
    pub fn p(&self) -> Result<Triple> {
        self.combine(1.0, "P")
    }

    /// `C_i = PC⁺_i - PC⁻_i` (special conformal transformations).
    pub fn conformal(&self) -> Result<Triple> {
        self.combine(-1.0, "C")
    }

    fn combine(&self, s: f64, name: &str) -> Result<Triple> {
        let one = c(1.0);
        let f = |i: usize| -> Result<OpMatrix> { Ok(self.pc_plus[i].lin(one, &self.pc_minus[i], c(s))?.with_label(format!("{name}{}", i + 1))) };
        Ok([f(0)?, f(1)?, f(2)?])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealForm {
    /// Skew-Cartesian `𝒥, 𝒫𝒞^±, D`, `Γ = diag(+,+,-,-,-)`.
    So32A,
    /// `iJ, PC^±, D`, `Γ = diag(+,-,-,-,-)`.
    So41,
    /// `iJ, iPC⁺, PC⁻, iD`, `Γ = diag(+,-,-,-,+)`.
    So32B,
    /// `iJ, PC⁺, iPC⁻, iD`, `Γ = diag(-,-,-,-,-)`.
    So5R,
}

impl RealForm {
    pub const ALL: [RealForm; 4] = [RealForm::So32A, RealForm::So41, RealForm::So32B, RealForm::So5R];

    pub fn metric(self) -> [f64; 5] {
        match self {
            RealForm::So32A => [1.0, 1.0, -1.0, -1.0, -1.0],
            RealForm::So41 => [1.0, -1.0, -1.0, -1.0, -1.0],
            RealForm::So32B => [1.0, -1.0, -1.0, -1.0, 1.0],
            RealForm::So5R => [-1.0; 5],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RealForm::So32A => "so(3,2)",
            RealForm::So41 => "so(4,1)",
            RealForm::So32B => "so(3,2)'",
            RealForm::So5R => "so(5,R)",
        }
    }
}

/// Skew-symmetric `5×5` array `M_ab` of operators with metric `Γ`.
#[derive(Clone, Debug)]
pub struct TensorOperator {
    pub form: RealForm,
    pub m: Vec<Vec<OpMatrix>>,
    pub gamma: [f64; 5],
}

impl TensorOperator {
    /// Zero-based `M_ab`.
    pub fn get(&self, a: usize, b: usize) -> &OpMatrix {
        &self.m[a][b]
    }

    pub fn window(&self) -> &Window {
        self.m[0][0].window()
    }

    /// The ten `M_ab`, `a < b`, which form a basis of the real form.
    pub fn basis(&self) -> Vec<((usize, usize), &OpMatrix)> {
        (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).map(|(a, b)| ((a, b), &self.m[a][b])).collect()
    }
}

/// Tensor operator for `form` built on the plain solid harmonics.
pub fn build_real_form(w: Window, form: RealForm) -> Result<TensorOperator> {
    build_real_form_from(&build_ladders(w, false), form)
}

pub fn build_real_form_from(l: &Ladders, form: RealForm) -> Result<TensorOperator> {
    let e = Elements::new(l)?;
    let neg = |x: &OpMatrix| x.scale_re(-1.0).with_label(format!("-{}", x.label));
    let i = |x: &OpMatrix| x.times_i();
    let neg_i = |x: &OpMatrix| neg(&x.times_i());
    let upper: [OpMatrix; 10] = match form {
        RealForm::So32A => {
            let (j, pp, pm) = (&e.j_skew, &e.pc_plus_skew, &e.pc_minus_skew);
            [
                pm[1].clone(), neg(&pm[0]), neg(&pm[2]), neg(&e.d),
                j[2].clone(), neg(&j[0]), pp[1].clone(),
                j[1].clone(), neg(&pp[0]),
                neg(&pp[2]),
            ]
        }
        RealForm::So41 | RealForm::So32B | RealForm::So5R => {
            let (j, pp, pm) = (&e.j, &e.pc_plus, &e.pc_minus);
            let first = |k: usize| if form == RealForm::So5R { neg_i(&pm[k]) } else { neg(&pm[k]) };
            let d = if form == RealForm::So41 { neg(&e.d) } else { neg_i(&e.d) };
            let last = |k: usize| if form == RealForm::So32B { neg_i(&pp[k]) } else { neg(&pp[k]) };
            [
                first(0), first(1), first(2), d,
                neg_i(&j[2]), i(&j[1]), last(0),
                neg_i(&j[0]), last(1),
                last(2),
            ]
        }
    };
    let w = *l.window();
    let mut m: Vec<Vec<OpMatrix>> = (0..5).map(|a| (0..5).map(|b| OpMatrix::zero(w, format!("M{}{}", a + 1, b + 1))).collect()).collect();
    let pairs = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)));
    for ((a, b), op) in pairs.zip(upper) {
        m[b][a] = neg(&op).with_label(format!("M{}{}", b + 1, a + 1));
        m[a][b] = op.with_label(format!("M{}{}", a + 1, b + 1));
    }
    Ok(TensorOperator { form, m, gamma: form.metric() })
}

/// Largest interior residual of
/// `[M_ab, M_cd] = g_ad M_bc + g_bc M_ad - g_ac M_bd - g_bd M_ac`.
pub fn check_structure(t: &TensorOperator) -> Result<f64> {
    t.window().require_margin(2)?;
    let g = |a: usize, b: usize| if a == b { t.gamma[a] } else { 0.0 };
    let mut worst = 0.0f64;
    for ((a, b), mab) in t.basis() {
        for ((cc, d), mcd) in t.basis() {
            let lhs = mab.commutator(mcd)?;
            let mut rhs = OpMatrix::zero(*t.window(), "rhs");
            for (k, x, y) in [(g(a, d), b, cc), (g(b, cc), a, d), (-g(a, cc), b, d), (-g(b, d), a, cc)] {
                if k != 0.0 {
                    rhs = rhs.lin(c(1.0), t.get(x, y), c(k))?;
                }
            }
            worst = worst.max(lhs.interior_distance(&rhs)?);
        }
    }
    Ok(worst)
}

/// `c₂ = -½ M_ab M^ab` as a matrix.
pub fn casimir2_matrix(t: &TensorOperator) -> Result<OpMatrix> {
    let mut acc = OpMatrix::zero(*t.window(), "c2");
    for a in 0..5 {
        for b in 0..5 {
            if a != b {
                let k = -0.5 / (t.gamma[a] * t.gamma[b]);
                acc = acc.lin(c(1.0), &t.get(a, b).mul(t.get(a, b))?, c(k))?;
            }
        }
    }
    Ok(acc)
}

/// Interior values of `c₂`.
#[derive(Clone, Debug)]
pub struct Casimir2 {
    pub diagonal: BTreeMap<Idx, Complex64>,
    /// Largest off-diagonal interior entry.
    pub off_diagonal: f64,
}

impl Casimir2 {
    /// `max |c₂(ν,μ) - target|` over the interior diagonal.
    pub fn deviation_from(&self, target: f64) -> f64 {
        self.diagonal.values().map(|v| (v - target).norm()).fold(self.off_diagonal, f64::max)
    }
}

fn diagonal_part(m: &OpMatrix) -> Result<Casimir2> {
    m.window().require_margin(2)?;
    let interior = m.window().interior();
    m.max_abs_on(&interior)?;
    let mut diagonal = BTreeMap::new();
    let mut off = 0.0f64;
    for &col in &interior {
        diagonal.insert(col, m.get(col, col));
        for (r, v) in m.column(col) {
            if r != col {
                off = off.max(v.norm());
            }
        }
    }
    Ok(Casimir2 { diagonal, off_diagonal: off })
}

pub fn casimir2(t: &TensorOperator) -> Result<Casimir2> {
    diagonal_part(&casimir2_matrix(t)?)
}

/// `c₂ = J₃² + K₃² + ½{J₊,J₋} - ½{K₊,K₋} - ¼{R₊,R₋} - ¼{S₊,S₋}` assembled
/// from the ladders alone.
pub fn casimir2_ladder_matrix(l: &Ladders) -> Result<OpMatrix> {
    let terms = [
        (l.j3.mul(&l.j3)?, 1.0),
        (l.k3.mul(&l.k3)?, 1.0),
        (l.j_plus.anticommutator(&l.j_minus)?, 0.5),
        (l.k_plus.anticommutator(&l.k_minus)?, -0.5),
        (l.r_plus.anticommutator(&l.r_minus)?, -0.25),
        (l.s_plus.anticommutator(&l.s_minus)?, -0.25),
    ];
    let mut acc = OpMatrix::zero(*l.window(), "c2");
    for (m, k) in terms {
        acc = acc.lin(c(1.0), &m, c(k))?;
    }
    Ok(acc)
}

pub fn casimir2_ladder(l: &Ladders) -> Result<Casimir2> {
    diagonal_part(&casimir2_ladder_matrix(l)?)
}

/// Sign of the permutation `p` of `0..5`.
fn perm_sign(p: [usize; 5]) -> f64 {
    let mut s = 1.0;
    for i in 0..5 {
        for j in i + 1..5 {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// `w^a = ⅛ ε^{abcde} M_bc M_de`, unsymmetrized.
pub fn w_components(t: &TensorOperator) -> Result<Vec<OpMatrix>> {
    let det: f64 = t.gamma.iter().product();
    let mut out = Vec::with_capacity(5);
    for a in 0..5 {
        let mut acc = OpMatrix::zero(*t.window(), format!("w{}", a + 1));
        let rest: Vec<usize> = (0..5).filter(|&x| x != a).collect();
        for &b in &rest {
            for &cc in &rest {
                for &d in &rest {
                    let e: Vec<usize> = rest.iter().copied().filter(|&x| x != b && x != cc && x != d).collect();
                    if b == cc || b == d || cc == d || e.len() != 1 {
                        continue;
                    }
                    let s = perm_sign([a, b, cc, d, e[0]]) / det / 8.0;
                    acc = acc.lin(c(1.0), &t.get(b, cc).mul(t.get(d, e[0]))?, c(s))?;
                }
            }
        }
        out.push(acc.with_label(format!("w{}", a + 1)));
    }
    Ok(out)
}

/// Largest interior entry over the five `w^a`.
pub fn w_max(t: &TensorOperator) -> Result<f64> {
    t.window().require_margin(2)?;
    let interior = t.window().interior();
    w_components(t)?.iter().try_fold(0.0f64, |acc, w| Ok(acc.max(w.max_abs_on(&interior)?)))
}

/// `c₄ = -w_a w^a`; largest interior entry.
pub fn casimir4(t: &TensorOperator) -> Result<f64> {
    t.window().require_margin(4)?;
    let w = w_components(t)?;
    let mut acc = OpMatrix::zero(*t.window(), "c4");
    for (a, wa) in w.iter().enumerate() {
        acc = acc.lin(c(1.0), &wa.mul(wa)?, c(-t.gamma[a]))?;
    }
    acc.max_abs_on(&t.window().interior())
}

/// `[H_i, E_α] = α_i E_α` with `H = (J₃, K₃)` and `α = (Δμ, Δν)`, plus
/// `[J₃, K₃] = 0`; largest interior residual.
pub fn cartan_weyl_check(l: &Ladders) -> Result<f64> {
    let mut worst = l.j3.commutator(&l.k3)?.max_abs_on(&l.window().interior())?;
    for (e, (dn, dm)) in l.roots() {
        for (h, alpha) in [(&l.j3, dm), (&l.k3, dn)] {
            worst = worst.max(h.commutator(e)?.interior_distance(&e.scale_re(alpha as f64))?);
        }
    }
    Ok(worst)
}

/// The closure relations among the ladders: each named relation with its
/// largest interior residual.
pub fn ladder_relations(l: &Ladders) -> Result<Vec<(&'static str, f64)>> {
    let r3 = l.k3.add(&l.j3)?;
    let s3 = l.k3.sub(&l.j3)?;
    let d = |a: &OpMatrix, b: &OpMatrix| a.interior_distance(b);
    let k = |m: &OpMatrix, x: f64| m.scale_re(x);
    Ok(vec![
        ("[J3,J+] = J+", d(&l.j3.commutator(&l.j_plus)?, &l.j_plus)?),
        ("[J3,J-] = -J-", d(&l.j3.commutator(&l.j_minus)?, &k(&l.j_minus, -1.0))?),
        ("[J+,J-] = 2J3", d(&l.j_plus.commutator(&l.j_minus)?, &k(&l.j3, 2.0))?),
        ("[K3,K+] = K+", d(&l.k3.commutator(&l.k_plus)?, &l.k_plus)?),
        ("[K3,K-] = -K-", d(&l.k3.commutator(&l.k_minus)?, &k(&l.k_minus, -1.0))?),
        ("[K+,K-] = -2K3", d(&l.k_plus.commutator(&l.k_minus)?, &k(&l.k3, -2.0))?),
        ("[R3,R+] = 2R+", d(&r3.commutator(&l.r_plus)?, &k(&l.r_plus, 2.0))?),
        ("[R3,R-] = -2R-", d(&r3.commutator(&l.r_minus)?, &k(&l.r_minus, -2.0))?),
        ("[R+,R-] = -4R3", d(&l.r_plus.commutator(&l.r_minus)?, &k(&r3, -4.0))?),
        ("[S3,S+] = 2S+", d(&s3.commutator(&l.s_plus)?, &k(&l.s_plus, 2.0))?),
        ("[S3,S-] = -2S-", d(&s3.commutator(&l.s_minus)?, &k(&l.s_minus, -2.0))?),
        ("[S+,S-] = -4S3", d(&l.s_plus.commutator(&l.s_minus)?, &k(&s3, -4.0))?),
        ("R+ = [J+,K+]", d(&l.j_plus.commutator(&l.k_plus)?, &l.r_plus)?),
        ("R- = -[J-,K-]", d(&l.j_minus.commutator(&l.k_minus)?, &k(&l.r_minus, -1.0))?),
        ("S+ = [J-,K+]", d(&l.j_minus.commutator(&l.k_plus)?, &l.s_plus)?),
        ("S- = -[J+,K-]", d(&l.j_plus.commutator(&l.k_minus)?, &k(&l.s_minus, -1.0))?),
        ("[R+,S+] = 0", l.r_plus.commutator(&l.s_plus)?.max_abs_on(&l.window().interior())?),
        ("[R+,S-] = 0", l.r_plus.commutator(&l.s_minus)?.max_abs_on(&l.window().interior())?),
        ("[R-,S+] = 0", l.r_minus.commutator(&l.s_plus)?.max_abs_on(&l.window().interior())?),
        ("[R-,S-] = 0", l.r_minus.commutator(&l.s_minus)?.max_abs_on(&l.window().interior())?),
        ("[R3,S3] = 0", r3.commutator(&s3)?.max_abs_on(&l.window().interior())?),
    ])
}
