//! 2×2 matrix representations acting on Cayley-Dickson pairs from the right.

mod mat2;
mod reps;
mod verify;

pub use mat2::{act_row, mat_mul_nonstandard, Mat2};
pub use reps::{
    coefficient_unit_name, quaternion_rep_for, rep_octonion, rep_quadratic_quaternion,
    rep_sedenion, Embedding, RepSet,
};
pub use verify::{verify_rep, RepReport};
