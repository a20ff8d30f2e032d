//! Exact-arithmetic checks for the classification of codimension-two
//! smooth subvarieties of quadrics, with the conic-bundle enumeration.

pub mod cases;
pub mod conic_bundle;
pub mod dpf;
pub mod enumeration;
pub mod error;
pub mod genus;
pub mod invariants;
pub mod rational;
pub mod report;
pub mod screens;

pub use error::{Error, Result};
pub use rational::{Rational, RationalMatrix, RationalPoly};
