//! Exact octonions built as the group algebra of the additive group of F8,
//! twisted by the sign `(-1)^phi(x,y)` with `phi(x,y) = tr(y x^6)`.
//!
//! The crate is layered bottom-up:
//!
//! * [`gf8`]: the field F8 (and F4) in bit representation;
//! * [`cocycle`]: `phi`, its sign, the independence indicator `ind`, and the
//!   coboundary identity;
//! * [`algebra`]: octonions over any exact coefficient ring, the named basis and
//!   multiplication table;
//! * [`codes`]: subsets of F8 as binary words, translation orbits and self-dual
//!   codes;
//! * [`orders`]: the sixteen orders of integral octonions containing `O(Z)` with
//!   lattice certificates;
//! * [`verify`]: the full check battery used by the CLI and the acceptance tests.

pub mod algebra;
pub mod cocycle;
pub mod codes;
mod error;
pub mod gf8;
pub mod orders;
pub mod verify;

pub use algebra::{BasisLabel, Dyadic, DyadicOctonion, Octonion};
pub use cocycle::{CocycleTable, Sign};
pub use codes::{Code, Orbit, OrbitKind, SubsetF8};
pub use error::Error;
pub use gf8::{F2, F4, F8};
pub use orders::{GramCertificate, IntegralOrder};
