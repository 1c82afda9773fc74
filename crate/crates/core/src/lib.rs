//! Exact combinatorics of restricted critical-level blocks.
//!
//! This crate computes, in exact rational arithmetic, the combinatorial
//! shadow of the restricted category O at the critical level over an affine
//! Kac-Moody algebra:
//!
//! * finite root data of types A-G with a normalized invariant form
//!   ([`rootdata`]),
//! * affine weights on the critical hyperplane, the dot action, the partial
//!   order and the `alpha-down` / `alpha-up` moves that link weights of a
//!   block ([`weights`]),
//! * sparse multivariate polynomials over the rationals in simple-coroot
//!   variables, with quotients by linear forms ([`polyring`]),
//! * moment graphs of block windows and their structure algebras, i.e.
//!   tuples of polynomials subject to coroot congruences across edges
//!   ([`structalg`]),
//! * multiplicity and Hom-rank tables for generic and subgeneric blocks
//!   ([`mult`]).
//!
//! No floating point is used anywhere; every coefficient is a
//! `num_rational::BigRational`.

pub mod error;
pub mod json;
mod linalg;
pub mod mult;
pub mod polyring;
pub mod rootdata;
pub mod structalg;
pub mod weights;

pub use error::Error;
pub use polyring::{frac, rat, LinearForm, Monomial, Poly, Rat};
pub use rootdata::{CartanDatum, Family, FiniteWeight, Root, RootDatum};
pub use weights::{AffineWeight, BlockClass, DeformationPoint, WeightOrder, Window};
