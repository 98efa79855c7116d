//! Exact computations on finite-dimensional coalgebras and Hopf algebras.
//!
//! - [`exactlin`]: fields (rationals, small cyclotomic fields), matrices, subspaces.
//! - [`coalgebra`]: structure-constant data, axiom checks, dual algebras, built-in examples.
//! - [`filtration`]: coradical filtration, simple subcoalgebras and block systems.
//! - [`rules`]: structural checks on the block system of a Hopf algebra.
//! - [`solver`]: dimension bounds and block-profile feasibility search.
//! - [`report`]: serializable summaries and text renderings.

pub mod coalgebra;
pub mod exactlin;
pub mod filtration;
pub mod report;
pub mod rules;
pub mod solver;
