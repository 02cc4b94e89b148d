//! Cones, their duals and the coordinate changes between lattices.

mod computed;
mod dd;
mod input;
mod map;

pub use computed::{extreme_ray_indices, preprocess, ComputedCone};
pub use dd::{dualize, generators_of_inequalities, Dual, Generators};
pub use input::{homogenize, ConeSystem, InputSystem};
pub use map::CoordinateMap;
