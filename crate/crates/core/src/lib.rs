//! Exact decision engine for whether the complex nilpotent orbit through the
//! minimal real nilpotent orbits of a non-compact simple real Lie algebra `g`
//! meets the dual real form `g^d` of a symmetric pair `(g, h)`.
//!
//! Everything is exact integer combinatorics on root systems, Satake
//! diagrams and weighted Dynkin diagrams.

pub mod classify;
pub mod error;
pub mod orbits;
pub mod pairs;
pub mod realform;
pub mod rootsys;
pub mod scalar;

pub use error::{Error, Result};
pub use realform::{RealForm, RealReductive};
pub use rootsys::{CartanType, ComplexReductiveType, WeightedDynkinDiagram};
pub use scalar::Scalar;

/// Rational scalar with machine-word numerator and denominator.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary-precision rational scalar.
pub type BigRational = num_rational::BigRational;
/// Characteristic in coweight coordinates over [`Rational`].
pub type Characteristic = Vec<Rational>;
