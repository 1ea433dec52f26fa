//! Algebraic associated Legendre and Ferrers functions.
//!
//! The octahedral functions `r_n^m(u)` are generated exactly over the
//! rationals and feed closed-form evaluators for the octahedral,
//! tetrahedral, dihedral and cyclic families. Every closed form is checked
//! against an independent hypergeometric-series oracle. The ladder-operator
//! representations of so(3,2), so(4,1) and so(5,R) are realized as banded
//! matrices on finite index windows.

pub mod error;
pub mod exact;
pub mod expansions;
pub mod families;
pub mod ladders;
pub mod lie;
pub mod octahedral;
pub mod oracle;

pub use error::{Error, Result};
