//! Ladder operators on generalized solid harmonics `S_ν^μ = r^ν P_ν^μ(cos θ)
//! e^{iμφ}`, `(ν, μ) ∈ (ν₀, μ₀) + ℤ²`, as banded matrices on finite
//! windows, and the real forms so(3,2), so(4,1), so(5,R) they generate.
//!
//! Every matrix tracks which of its columns are unaffected by the window
//! edge, so assertions about the infinite matrices are made only where the
//! truncation cannot reach.

mod conformal;
mod forms;
mod ladder_ops;
mod matrix;
mod singleton;
mod window;

pub use conformal::{apply_differential, apply_matrix, conformal_ops_check, laplacian_residual, solid_harmonic, ConformalOp, ConformalResidual};
pub use forms::{
    build_real_form, build_real_form_from, cartan_weyl_check, casimir2, casimir2_ladder, casimir2_ladder_matrix, casimir2_matrix, casimir4,
    check_structure, ladder_relations, w_components, w_max, Casimir2, Elements, RealForm, TensorOperator, Triple,
};
pub use ladder_ops::{build_ladders, Ladders};
pub use matrix::OpMatrix;
pub use singleton::{singleton_check, SingletonCase, SingletonReport, SKEW_TOL};
pub use window::{Idx, Window};
