//! Exact classification of quotients `X / G_a` for invariant hypersurfaces
//! `X` in linear representations of the additive group.
//!
//! The arithmetic core is generic over an exact [`Scalar`]; the rest of the
//! crate is written against the concrete [`Rational`] and [`Poly`] aliases.

pub mod catalog;
pub mod classify;
pub mod derivation;
pub mod error;
pub mod linalg;
pub mod ratpoly;
pub mod scalar;
pub mod sl2rep;
pub mod transfer;

pub use derivation::Derivation;
pub use error::{Error, Result};
pub use ratpoly::{parse, parse_with, Monomial, MultiPoly, VarTable, VariablePolicy};
pub use scalar::Scalar;
pub use sl2rep::{Block, Normalization, RepSpec, Sl2Triple};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

/// Polynomials over [`Rational`].
pub type Poly = MultiPoly<Rational>;
