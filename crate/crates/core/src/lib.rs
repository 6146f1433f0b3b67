//! Exact computations on graded Lie algebras: Lie algebra cohomology of the negative part,
//! Hodge theory for adapted metrics, admissibility of metrics, Tanaka prolongation and
//! normalization of formal curvatures.

#![allow(clippy::needless_range_loop)]

pub mod admissibility;
pub mod cli;
pub mod cochain;
pub mod ctg;
pub mod hodge;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod normalization;
pub mod prolongation;
pub mod registry;

pub use lie::{AlgebraElement, Axiom, GradedLieAlgebra, LieError, ValidationReport};
pub use linalg::{Matrix, Rational, Subspace};
