//! Exact homological algebra for Nakayama algebras.
//!
//! A Nakayama algebra is given by its admissible sequence
//! ([`AdmissibleSequence`]); every indecomposable module is uniserial
//! ([`Uniserial`]). On top of the uniserial calculus the crate computes
//! Hom/Ext dimensions, projective/injective/dominant/global dimensions,
//! the tilting and cotilting modules generated and cogenerated by the
//! projective-injectives, and exact structure-constant models of
//! endomorphism algebras.

pub mod algebra;
pub mod dim;
pub mod endo;
mod error;
pub mod hom_ext;
pub mod linalg;
pub mod module;
pub mod suites;
pub mod sweep;
pub mod tilting;

pub use algebra::{AdmissibleSequence, Kind};
pub use dim::ExtendedNat;
pub use error::{Error, Result};
pub use module::{ModuleSum, Uniserial};
