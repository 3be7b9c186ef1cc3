//! Computable point-set topology at finite scale.
//!
//! Finite topological spaces with their generators (bases, closure
//! operators, preorders, neighborhood systems), maps and constructions,
//! filter convergence, the locale of opens, pseudometric spaces with the
//! fixed-point solvers, the Weierstraß kernel construction and a
//! propositional Lindenbaum-algebra model builder.
//!
//! Subsets of a carrier are bitmasks over point indices ([`bits::Mask`]);
//! carriers hold at most [`bits::MAX_POINTS`] points so every subset table
//! stays enumerable.

pub mod approx;
pub mod bits;
pub mod construct;
pub mod error;
pub mod exec;
pub mod filters;
pub mod fintop;
pub mod locale;
pub mod logic;
pub mod pmetric;
mod text;

pub use error::{Error, Result};
pub use exec::Exec;
