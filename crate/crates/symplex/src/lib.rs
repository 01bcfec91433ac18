//! Exact computations with symplectic Lie algebras that have a degenerate center,
//! presented as quadratic extensions `𝔩* ⊕ 𝔞 ⊕ 𝔩` of a smaller symplectic algebra.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exactlin;
pub mod group_action;
pub mod catalog;
pub mod cli;
pub mod lie;
pub mod quad_ext;
pub mod symplectic;

pub use error::{Error, Result};
pub use exactlin::{Matrix, Scalar, Subspace};
pub use lie::LieAlgebra;
pub use quad_ext::CocycleTriple;
pub use symplectic::SymplecticLieAlgebra;
