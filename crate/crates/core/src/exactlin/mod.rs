//! Exact linear algebra over ℤ, ℚ and ℤ/n: Smith normal form, ranks, lattices, and
//! homology of complexes of finitely generated modules.

pub mod field;
pub mod homology;
pub mod lattice;
pub mod matrix;
pub mod ring;
pub mod smith;

pub use homology::{
    complex_homology, module_homology, ChainComplexOfFree, DegreeHomology, HomologyError, HomologyReport,
    ModuleComplex,
};
pub use matrix::{ExactMatrix, Scalar};
pub use ring::{RingError, RingSpec};
pub use smith::{invariant_factors, smith_normal_form, smith_normal_form_mod, Smith};
