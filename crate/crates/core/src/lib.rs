//! Hypercomplex algebras over ℝ or ℂ parameterized by a pair `(p, q)`.
//!
//! Every imaginary unit satisfies `e_i² = −q·e₀ − p·e_i`. From that rule and
//! the octonion triple set the crate builds dense structure tables for the
//! quadratic `C(p,q)`, quaternion `Q(p,q)` and octonion `O(p,q)` families,
//! and obtains the 16-dimensional `S(p,q)` algebra by a generalized
//! Cayley-Dickson doubling of `O(p,q)`.
//!
//! Modules:
//! - [`algebra`]: specs, elements, structure tables, the doubling product and
//!   the pair/unit coordinate transforms.
//! - [`analysis`]: conjugation, norms, inverses, commutators, associators,
//!   classification and seeded identity checks.
//! - [`representation`]: 2×2 matrix representations with the nonstandard
//!   product for noncommutative, nonassociative entries.
//! - [`periodic`]: periodic algebras, the continuous power law of `e₁`, and
//!   the Hamilton/Pauli unit sets.
//! - [`cli`]: parsing and rendering shared by the `hypercomplex` binary.

pub mod algebra;
pub mod analysis;
pub mod cli;
mod error;
pub mod periodic;
pub mod representation;
pub mod sampling;
pub mod scalar;

pub use algebra::{
    basis_product, cd_product, make_spec, multiply, pair_to_units, units_to_pair, AlgebraSpec,
    Branch, Element, Family, PairView, Roots, StructureTable,
};
pub use error::{AlgebraError, Result};
pub use scalar::Scalar;
