//! Conjugation, norms and inverses, commutator/associator identities,
//! classification, and seeded identity sweeps.

mod check;
mod classify;
pub(crate) mod conjugation;
mod identities;
mod norm;

pub use check::{
    check_identity, check_identity_with_workers, Counterexample, Identity, IdentityReport,
};
pub use classify::{
    classify, classify_in, leading_minors, norms_equivalent, signature, ClassKind, Classification,
    Signature, CLASSIFY_TOL,
};
pub use conjugation::{conjugate, conjugate_pair};
pub use identities::{associator, associator_formula, bracket, Bracket};
pub use norm::{inverse, norm, norm_form, solve, NormForm, Side};
