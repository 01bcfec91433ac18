//! Symmetries of cocycle triples: the τ-shift and the `(S, U)` pullback,
//! plus the equivalence solver and orbit invariants.

mod eps_key;
mod equiv;
mod invariants;
mod pullback;
mod tau;

pub use eps_key::{certify_scalar_conjugacy, char_coeffs, eps_orbit_key, EpsOrbitKey};
pub use equiv::{are_equivalent, Verdict};
pub use invariants::{invariant_kappa7, invariant_l, invariant_sign_xi2, xi_nil_index};
pub use pullback::{pull_tau, pullback, PairIso};
pub use tau::{act_tau, composition_sigma, equivalence_iso, tau_star, TauShift};
