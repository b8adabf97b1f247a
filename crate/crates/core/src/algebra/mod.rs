//! Specs, elements and the two multiplication routes: the structure table
//! and the generalized Cayley-Dickson doubling.

mod element;
mod product;
mod spec;
mod table;
mod transform;

pub use element::{Element, PairView};
pub use product::{basis_product, cd_product, multiply};
pub(crate) use product::{expect_dim, mul_unchecked};
pub use spec::{make_spec, AlgebraSpec, Branch, Family, Roots};
pub use table::{levi_civita, unit_product_formula, StructureTable, OCTONION_TRIPLES};
pub use transform::{pair_to_units, units_to_pair};
