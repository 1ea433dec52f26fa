//! Love–Hunter biorthogonality, octahedral biorthogonality on the
//! `s`-interval, and expansions in fourth-kind Chebyshev polynomials.

pub mod biorthog;
pub mod chebyshev;
pub mod love_hunter;
pub mod quad;

pub use biorthog::octahedral_biorthog;
pub use chebyshev::{
    chebyshev_w, dihedral_inner_exact, dihedral_inner_quad, pinsky_basis, pinsky_denominator, w_expansion, w_index, WExpansion,
};
pub use love_hunter::{lh_coefficients, lh_denominator, lh_partial_sum, love_hunter_inner, relative_size, ExpansionSpec};
pub use quad::{de_quad, de_rule, singular_quad, Node, QuadResult};
