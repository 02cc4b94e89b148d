pub mod cone;
pub mod error;
pub mod inhom;
pub mod io;
pub mod linalg;
pub mod monoid;
pub mod series;
pub mod simplicial;
pub mod triangulation;

pub use error::{Error, Result};
