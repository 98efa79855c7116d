//! Coalgebras and Hopf algebras by structure constants.

mod corpus;
mod data;
pub mod format;
pub mod samples;
mod group;
mod validate;

pub use corpus::{corpus, dual_group_algebra, group_algebra, sweedler, taft, CorpusItem, FieldChoice};
pub use data::{Algebra, CoalgebraData, DualAlgebra, HopfData};
pub use group::FiniteGroup;
pub use validate::{tensor_mul, validate_algebra, validate_coalgebra, validate_hopf, Axiom, ValidationReport, Violation};

use thiserror::Error;

use crate::exactlin::{Cyclotomic, Field, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unsupported corpus parameters: {0}")]
    UnsupportedParams(String),
}

/// A coalgebra, possibly with Hopf structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure<F: Field> {
    Coalgebra(CoalgebraData<F>),
    Hopf(HopfData<F>),
}

impl<F: Field> Structure<F> {
    pub fn coalgebra(&self) -> &CoalgebraData<F> {
        match self {
            Structure::Coalgebra(c) => c,
            Structure::Hopf(h) => &h.coalgebra,
        }
    }

    pub fn hopf(&self) -> Option<&HopfData<F>> {
        match self {
            Structure::Hopf(h) => Some(h),
            Structure::Coalgebra(_) => None,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        match self {
            Structure::Coalgebra(c) => validate_coalgebra(c),
            Structure::Hopf(h) => validate_hopf(h),
        }
    }
}

/// A structure over one of the supported scalar fields, chosen at runtime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyStructure {
    Rational(Structure<Rational>),
    Cyclotomic3(Structure<Cyclotomic<3>>),
    Cyclotomic4(Structure<Cyclotomic<4>>),
}

/// Runs `$body` with `$s` bound to the inner `Structure<F>` of an
/// [`AnyStructure`], whatever its field.
#[macro_export]
macro_rules! with_structure {
    ($any:expr, $s:ident => $body:expr) => {
        match $any {
            $crate::coalgebra::AnyStructure::Rational($s) => $body,
            $crate::coalgebra::AnyStructure::Cyclotomic3($s) => $body,
            $crate::coalgebra::AnyStructure::Cyclotomic4($s) => $body,
        }
    };
}

impl AnyStructure {
    pub fn dim(&self) -> usize {
        with_structure!(self, s => s.coalgebra().dim())
    }

    pub fn is_hopf(&self) -> bool {
        with_structure!(self, s => s.hopf().is_some())
    }

    pub fn validate(&self) -> ValidationReport {
        with_structure!(self, s => s.validate())
    }

    /// `(degree over Q, cyclotomic order)` of the scalar field.
    pub fn field_tag(&self) -> (usize, usize) {
        match self {
            AnyStructure::Rational(_) => (1, 1),
            AnyStructure::Cyclotomic3(_) => (Cyclotomic::<3>::degree(), 3),
            AnyStructure::Cyclotomic4(_) => (Cyclotomic::<4>::degree(), 4),
        }
    }
}
