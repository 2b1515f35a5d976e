//! Multigraded Castelnuovo-Mumford regularity through coarsening: reduce a positively
//! multigraded module to a single grading along a vector `v`, compute regularity
//! there, and pull the answer back as explicit regions of multidegrees.

pub mod error;
pub mod field;
pub mod grading;
pub mod groebner;
pub mod linalg;
pub mod localcoh;
pub mod module;
pub mod points;
pub mod poly;
pub mod problem;
pub mod regularity;
pub mod resolution;
pub mod ring;
pub mod cli;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use grading::{
    check_positive_grading, find_positive_coarsening_vector, CoarseningVector, DegreeMatrix,
    DegreeRegion, FiniteRegion, Multidegree,
};
pub use module::{FreeModule, FreeModuleElement, ModulePresentation};
pub use poly::{Monomial, Polynomial, TermOrder};
pub use ring::MultigradedRing;
