use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Lattice index `(n, m)` of `S_{ν₀+n}^{μ₀+m}`.
pub type Idx = (i64, i64);

/// Finite rectangle of the lattice `(ν₀, μ₀) + ℤ²`.
///
/// `margin` is the width of the buffer between the window edge and the
/// interior on which products of operators are trusted.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub nu0: f64,
    pub mu0: f64,
    pub n_range: (i64, i64),
    pub m_range: (i64, i64),
    pub margin: i64,
}

impl Window {
    pub fn new(nu0: f64, mu0: f64, n_range: (i64, i64), m_range: (i64, i64), margin: i64) -> Result<Self> {
        if !(nu0.is_finite() && mu0.is_finite()) {
            return Err(Error::Config(format!("base offset ({nu0}, {mu0}) is not finite")));
        }
        if n_range.0 > n_range.1 || m_range.0 > m_range.1 {
            return Err(Error::Config(format!("empty window n {n_range:?}, m {m_range:?}")));
        }
        if margin < 2 {
            return Err(Error::Config(format!("margin must be at least 2, got {margin}")));
        }
        if n_range.1 - n_range.0 < 2 * margin || m_range.1 - m_range.0 < 2 * margin {
            return Err(Error::Config(format!("window n {n_range:?}, m {m_range:?} has no interior at margin {margin}")));
        }
        Ok(Window { nu0, mu0, n_range, m_range, margin })
    }

    /// `[-k, k]²`.
    pub fn square(nu0: f64, mu0: f64, k: i64, margin: i64) -> Result<Self> {
        Self::new(nu0, mu0, (-k, k), (-k, k), margin)
    }

    pub fn nu(&self, n: i64) -> f64 {
        self.nu0 + n as f64
    }

    pub fn mu(&self, m: i64) -> f64 {
        self.mu0 + m as f64
    }

    pub fn contains(&self, (n, m): Idx) -> bool {
        (self.n_range.0..=self.n_range.1).contains(&n) && (self.m_range.0..=self.m_range.1).contains(&m)
    }

    pub fn indices(&self) -> impl Iterator<Item = Idx> + '_ {
        (self.n_range.0..=self.n_range.1).flat_map(move |n| (self.m_range.0..=self.m_range.1).map(move |m| (n, m)))
    }

    /// Indices at distance at least `margin` from every edge.
    pub fn interior(&self) -> BTreeSet<Idx> {
        let k = self.margin;
        self.indices()
            .filter(|&(n, m)| {
                n - k >= self.n_range.0 && n + k <= self.n_range.1 && m - k >= self.m_range.0 && m + k <= self.m_range.1
            })
            .collect()
    }

    pub fn require_margin(&self, needed: i64) -> Result<()> {
        if self.margin < needed {
            return Err(Error::Config(format!("window margin {} is below the required {needed}", self.margin)));
        }
        Ok(())
    }

    pub(crate) fn same_as(&self, other: &Window) -> bool {
        self.nu0.to_bits() == other.nu0.to_bits()
            && self.mu0.to_bits() == other.mu0.to_bits()
            && self.n_range == other.n_range
            && self.m_range == other.m_range
    }
}
