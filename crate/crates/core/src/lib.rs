//! Exact combinatorics of tropical degenerations.
//!
//! The crate computes, in exact rational arithmetic, the combinatorial side
//! of degenerations attached to polyhedral data: fans over polyhedral
//! complexes and their slices, simplicial and unimodular refinements,
//! weighted tropical hypersurfaces with their balancing checks,
//! parameterizing complexes built from cover data, simplicial homology with
//! integral torsion, the extreme rows of the weight spectral sequence, the
//! monodromy operator and filtration, volume/length pairings, tropical
//! Jacobians, and the genus-one j-invariant valuation rule.
//!
//! No floating point is used anywhere; every quantity is an exact integer or
//! rational.

pub mod complex;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod polyhedron;
pub mod refine;
pub mod rat;

pub use error::{Error, Result};
