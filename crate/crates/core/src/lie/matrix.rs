use super::window::{Idx, Window};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::collections::{BTreeMap, BTreeSet};

type Column = BTreeMap<Idx, Complex64>;

/// Sparse complex matrix on a window; column `c` is the image of the basis
/// element `c`.
///
/// `valid` holds the columns that agree with the infinite matrix: a ladder
/// column is valid when its image lies in the window, and a product column
/// is valid when every nonzero intermediate index is a valid column of the
/// left factor. Entries outside `valid` are truncation artifacts.
#[derive(Clone, Debug)]
pub struct OpMatrix {
    window: Window,
    pub label: String,
    cols: BTreeMap<Idx, Column>,
    valid: BTreeSet<Idx>,
}

impl OpMatrix {
    pub fn zero(window: Window, label: impl Into<String>) -> Self {
        OpMatrix { window, label: label.into(), cols: BTreeMap::new(), valid: window.indices().collect() }
    }

    /// The matrix of `S_ν^μ ↦ coef(ν, μ) S_{ν+Δν}^{μ+Δμ}`.
    pub fn ladder(window: Window, label: impl Into<String>, delta: Idx, coef: impl Fn(f64, f64) -> Complex64) -> Self {
        let mut out = OpMatrix::zero(window, label);
        out.valid.clear();
        for c in window.indices() {
            let r = (c.0 + delta.0, c.1 + delta.1);
            let v = coef(window.nu(c.0), window.mu(c.1));
            if window.contains(r) {
                out.valid.insert(c);
                if v != Complex64::new(0.0, 0.0) {
                    out.cols.entry(c).or_default().insert(r, v);
                }
            } else if v == Complex64::new(0.0, 0.0) {
                out.valid.insert(c);
            }
        }
        out
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn valid(&self) -> &BTreeSet<Idx> {
        &self.valid
    }

    pub fn get(&self, row: Idx, col: Idx) -> Complex64 {
        self.cols.get(&col).and_then(|c| c.get(&row)).copied().unwrap_or_default()
    }

    pub fn column(&self, col: Idx) -> impl Iterator<Item = (Idx, Complex64)> + '_ {
        self.cols.get(&col).into_iter().flat_map(|c| c.iter().map(|(&r, &v)| (r, v)))
    }

    /// Every `(row - col)` displacement carrying a nonzero entry.
    pub fn displacements(&self) -> BTreeSet<Idx> {
        self.cols
            .iter()
            .flat_map(|(c, col)| col.keys().map(move |r| (r.0 - c.0, r.1 - c.1)))
            .collect()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    fn check_window(&self, other: &OpMatrix) -> Result<()> {
        if self.window.same_as(&other.window) {
            Ok(())
        } else {
            Err(Error::WindowMismatch(format!("{} on {:?} vs {} on {:?}", self.label, self.window, other.label, other.window)))
        }
    }

    pub fn scale(&self, k: Complex64) -> OpMatrix {
        let mut out = self.clone();
        for col in out.cols.values_mut() {
            for v in col.values_mut() {
                *v *= k;
            }
        }
        out.label = format!("({k})·{}", self.label);
        out
    }

    pub fn scale_re(&self, k: f64) -> OpMatrix {
        self.scale(Complex64::new(k, 0.0))
    }

    /// `i·self`.
    pub fn times_i(&self) -> OpMatrix {
        self.scale(Complex64::i()).with_label(format!("i{}", self.label))
    }

    /// `a·self + b·other`.
    pub fn lin(&self, a: Complex64, other: &OpMatrix, b: Complex64) -> Result<OpMatrix> {
        self.check_window(other)?;
        let mut cols = BTreeMap::<Idx, Column>::new();
        for (m, k) in [(self, a), (other, b)] {
            for (&c, col) in &m.cols {
                let dst = cols.entry(c).or_default();
                for (&r, &v) in col {
                    *dst.entry(r).or_default() += k * v;
                }
            }
        }
        let valid = self.valid.intersection(&other.valid).copied().collect();
        Ok(OpMatrix { window: self.window, label: format!("{}+{}", self.label, other.label), cols, valid })
    }

    pub fn add(&self, other: &OpMatrix) -> Result<OpMatrix> {
        let one = Complex64::new(1.0, 0.0);
        self.lin(one, other, one)
    }

    pub fn sub(&self, other: &OpMatrix) -> Result<OpMatrix> {
        let one = Complex64::new(1.0, 0.0);
        self.lin(one, other, -one)
    }

    /// Matrix product `self · other`, i.e. `other` acts first.
    pub fn mul(&self, other: &OpMatrix) -> Result<OpMatrix> {
        self.check_window(other)?;
        let mut cols = BTreeMap::<Idx, Column>::new();
        let mut valid = BTreeSet::new();
        for c in self.window.indices() {
            let inner: Vec<(Idx, Complex64)> = other.column(c).filter(|(_, v)| v.norm() != 0.0).collect();
            if other.valid.contains(&c) && inner.iter().all(|(k, _)| self.valid.contains(k)) {
                valid.insert(c);
            }
            for (k, b) in inner {
                for (r, a) in self.column(k) {
                    *cols.entry(c).or_default().entry(r).or_default() += a * b;
                }
            }
        }
        Ok(OpMatrix { window: self.window, label: format!("{}·{}", self.label, other.label), cols, valid })
    }

    pub fn commutator(&self, other: &OpMatrix) -> Result<OpMatrix> {
        Ok(self.mul(other)?.sub(&other.mul(self)?)?.with_label(format!("[{},{}]", self.label, other.label)))
    }

    pub fn anticommutator(&self, other: &OpMatrix) -> Result<OpMatrix> {
        Ok(self.mul(other)?.add(&other.mul(self)?)?.with_label(format!("{{{},{}}}", self.label, other.label)))
    }

    /// Largest `|entry|` over the columns in `region`, all of which must be
    /// valid.
    pub fn max_abs_on(&self, region: &BTreeSet<Idx>) -> Result<f64> {
        if let Some(c) = region.iter().find(|c| !self.valid.contains(c)) {
            return Err(Error::Config(format!("column {c:?} of {} is reached by the window edge", self.label)));
        }
        Ok(region.iter().flat_map(|c| self.column(*c)).map(|(_, v)| v.norm()).fold(0.0, f64::max))
    }

    /// `max |self - other|` over the interior of the window.
    pub fn interior_distance(&self, other: &OpMatrix) -> Result<f64> {
        self.sub(other)?.max_abs_on(&self.window.interior())
    }
}
