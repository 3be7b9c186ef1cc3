//! Propositional formulas, theories and their Lindenbaum algebras.
//!
//! Provability is decided semantically by truth tables, which for
//! propositional logic gives the same consequence relation. A consistent
//! theory's algebra is finite, its ultrafilters are generated by atoms,
//! and each atom is one model of the theory.

pub mod algebra;
pub mod formula;
pub mod theory;

pub use algebra::{
    model_from_ultrafilter, stone_representation, AxiomReport, Class, LindenbaumAlgebra, ModelReport,
    StoneRepresentation,
};
pub use formula::{parse_formula, Formula};
pub use theory::{equivalence_mod_theory, is_consistent, Theory, Valuation};
