//! Exact intersection theory on projectivized tangent bundles.
//!
//! The engine works over an intersection profile of a smooth projective
//! variety `X` and evaluates polynomial classes in the tautological class
//! `z` and pulled-back divisors on `P(T_X)`. On top of it sit closed-form
//! data for hypersurfaces, the Picard-lattice model of del Pezzo surfaces,
//! rank-one del Pezzo threefolds, and Schur-functor dimension calculus.
//!
//! No floating point is used anywhere.

pub mod catalog;
pub mod chow;
pub mod error;
pub mod expr;
pub mod hypersurface;
pub mod poly;
pub mod profile;
pub mod rational;
pub mod schur;
pub mod surface;
pub mod threefold;

pub use chow::{eval_product, eval_top, segre_omega, PtClass, SegreVector};
pub use error::{Error, Result};
pub use poly::Poly;
pub use profile::BaseProfile;
pub use rational::Rational;
