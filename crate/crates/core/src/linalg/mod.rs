//! Exact integer linear algebra.

mod diophantine;
mod integer;
mod matrix;
mod normal_form;

pub use diophantine::{kernel_basis, row_lattice_basis, saturation, solve_diophantine, AffineLattice, Congruences};
pub use integer::{content, dot, ivec, make_primitive, Integer};
pub use matrix::Matrix;
pub use normal_form::{hermite_normal_form, smith_normal_form, HermiteForm, SmithForm};
