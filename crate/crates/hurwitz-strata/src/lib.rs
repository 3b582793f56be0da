//! Exact computation of degrees of discriminant strata in genus-0 Hurwitz
//! spaces and of the double Hurwitz numbers they determine, cross-checked
//! against an independent permutation-factorization counting oracle.
//!
//! All arithmetic is exact (arbitrary-precision integers and reduced
//! rationals). The crate evaluates the closed degree formulas for the
//! caustic and Maxwell strata, the codimension-2 degree polynomials, the
//! basic moduli-space class degrees, and the node-class degree via both its
//! closed form and its subdiagram split sum; verifies the combinatorial
//! identities behind them symbolically and at seeded random points; and
//! counts transitive permutation factorizations through exact symmetric
//! group character tables to validate (or flag) the printed formulas.

pub mod cli;
pub mod error;
pub mod exact;
pub mod hurwitz;
pub mod identities;
pub mod moduli;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod report;
pub mod strata;

pub use error::{Error, Result};
pub use exact::{Int, Rat};
pub use partition::Partition;
