//! Quadratic cocycles: derived maps, cochain calculus, predicates and the standard model.

pub mod cochain;
mod derived;
mod model;
mod predicates;
mod triple;

pub use cochain::{d_xi, d_xihat, wedge, Cochain, Pairing, ValueSpace};
pub use derived::{derived_maps, gamma0, gamma_matrix, xi0, xihat, DerivedMaps};
pub use model::{build_standard_model, l_dual_block};
pub use predicates::{
    is_balanced, is_cocycle, is_factor_system, is_nilpotent_cocycle, xi_algebra_nilpotency,
    BalancedReport, CocycleReport, ConditionFailure, NilpotentReport,
};
pub use triple::{eps_matrix, set_eps_from_matrix, CocycleTriple};
