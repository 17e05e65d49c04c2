//! Exact computations with the composite map
//! `PB_{n+1} → CPB_n → VCB_n → GL_n(Z[t^{±1}, s^{±1}])` on braid words.
//!
//! * [`word`]: braid words for classical, cylindrical and virtual-cylindrical braids
//! * [`laurent`]: Laurent polynomials in `t, s` and matrices over them
//! * [`rep`]: the representation ρ and the unreduced Burau representation ψ
//! * [`artin`], [`handle`]: two independent solutions of the classical word problem
//! * [`maps`]: the projection `p_k`, the stabilization `f_d` and their composite with ρ
//! * [`kernel`]: kernel witnesses, end-to-end checks and exhaustive search
//!
//! Polynomial and matrix types are generic over the coefficient ring;
//! [`Poly`] and [`Matrix`] fix it to arbitrary-precision integers, which is
//! what every non-generic function here returns.

pub mod artin;
pub mod error;
pub mod handle;
pub mod kernel;
pub mod laurent;
pub mod maps;
pub mod rep;
pub mod word;

pub use error::{Error, Result};
pub use laurent::{Coeff, LaurentPoly, Monomial, PolyMatrix};
pub use word::{delta_c, delta_v, Flavor, Kind, Letter, Permutation, Sign, Word};

/// Integer Laurent polynomial in `t, s`.
pub type Poly = LaurentPoly<num_bigint::BigInt>;
/// Square matrix over [`Poly`].
pub type Matrix = PolyMatrix<num_bigint::BigInt>;
