//! Exact Hochschild, cyclic, negative cyclic and periodic cyclic homology of finitely
//! presented dg categories over ℤ, ℚ and ℤ/n, with semi-free resolutions for the
//! non-flat case and Čech-side comparisons for small schemes.

use num_bigint::BigInt;
use num_rational::BigRational;

pub mod dgcat;
pub mod exactlin;
pub mod hochschild;
pub mod resolution;
pub mod scheme;

/// Exact coefficient type used throughout; ring-specific normalization is applied by
/// [`RingSpec`](exactlin::RingSpec).
pub type Coeff = BigRational;
pub type IntMatrix = exactlin::ExactMatrix<BigInt>;
pub type RatMatrix = exactlin::ExactMatrix<BigRational>;

pub use exactlin::{ChainComplexOfFree, DegreeHomology, HomologyReport, RingSpec};
