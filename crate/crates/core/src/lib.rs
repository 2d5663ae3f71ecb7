//! Tangles in small matroids.
//!
//! The crate covers exact matroid arithmetic ([`Matroid`], [`MatroidExpr`]),
//! the connectivity calculus, tangle enumeration and tangle matroids,
//! breadth, and the breadth-preserving reduction of a matroid with a tangle
//! to a weakly 4-connected minor.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod lab;
pub mod limits;
pub mod mask;
pub mod matroid;
mod par;
pub mod reduction;

pub use error::{Error, Result};
pub use mask::SubsetMask;
pub use matroid::{Matroid, MatroidExpr};
pub mod tangle;
