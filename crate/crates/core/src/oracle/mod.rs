//! Independent floating-point reference: Gauss `2F1` by its Maclaurin series,
//! the gamma function, Legendre/Ferrers functions of both kinds from their
//! hypergeometric representations, and Jacobi polynomials.

mod gamma;
mod hyp2f1;
mod jacobi;
mod legendre;

pub use gamma::{gamma, gamma_ratio, is_nonpositive_integer, near_integer, rgamma};
pub use hyp2f1::{gauss_2f1, gauss_2f1_regularized, Hyp2F1Params, SERIES_GUARD};
pub use jacobi::{jacobi_p, jacobi_p_real};
pub use legendre::{ferrers_p, ferrers_p_split, ferrers_q, legendre_p, legendre_qhat, whipple, LegendreFn, LegendreKind};
