//! Wronskians, ramification profiles, standard forms and subfield descent
//! for univariate rational functions over finite fields, together with the
//! explicit constructions and exhaustive checks built on them.

pub mod construct;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod gf;
pub mod poly;
pub mod ratfunc;

pub use error::{Error, Result};
pub use exec::Exec;
pub use gf::{Field, FieldElement};
pub use poly::{Factorization, Poly};
pub use ratfunc::{
    MobiusTransformation, ProjectivePoint, RamificationProfile, RationalFunction, StandardForm,
};
