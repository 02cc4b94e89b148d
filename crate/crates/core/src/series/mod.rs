//! Hilbert series: accumulation, the standard and hsop presentations, and
//! the Hilbert quasipolynomial.

mod hilbert;
mod hsop;
pub mod poly;
mod quasi;

pub use hilbert::HilbertSeries;
pub use hsop::{hsop_degrees, hsop_heights};
pub use quasi::{quasipolynomial, Quasipolynomial};
