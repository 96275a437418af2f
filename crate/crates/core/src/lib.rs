//! Decision procedures and constructive Kähler-form witnesses for unions of
//! totally real n-planes in Cⁿ, together with the local machinery (exterior
//! calculus with exact polynomial coefficients, truncated jet arithmetic)
//! needed to build and certify local Kähler potentials near transverse
//! double points and to glue them into a global form.
//!
//! The crate is organized around exact rational arithmetic: every
//! classification verdict (eigenvalue realness, diagonalizability, positive
//! definiteness) is decided symbolically, with float64 paths available where
//! the inputs themselves are floating point.

pub mod scalar;
pub mod linalg;
pub mod poly;
pub mod forms;
pub mod jets;
pub mod planepair;
pub mod oracle;
pub mod localpotential;
pub mod gluing;

pub use scalar::{CRat, Rat};
