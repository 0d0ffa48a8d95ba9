//! Finite presentations of small dg categories, their validation, and the named
//! example categories.
//!
//! Degrees are homological (`d` lowers degree by one) and every morphism also carries
//! an auxiliary integer weight that all structure maps preserve. The Leibniz rule is
//! `d(g∘f) = dg∘f + (−1)^{|g|} g∘df`.

mod builtin;
mod functor;
mod lincomb;
mod path;
mod presentation;
mod validate;

pub use builtin::{builtin_presentation, Builtin};
pub use functor::{DgFunctorData, FunctorViolation};
pub use lincomb::LinComb;
pub use path::{path_algebra_presentation, Arrow, Path, Quiver};
pub use presentation::{BasisMorphism, DgError, DgPresentation};
pub use validate::{validate_presentation, ValidationReport, Violation};

use crate::Coeff;
use num_traits::One;

/// `(−1)^h`.
pub fn sign(h: i64) -> Coeff {
    if h.rem_euclid(2) == 0 {
        Coeff::one()
    } else {
        -Coeff::one()
    }
}

/// The Kronecker quiver: two vertices and two parallel arrows `a, b : P0 -> P1`.
pub fn kronecker_quiver() -> Quiver {
    let mut q = Quiver::new(&["P0", "P1"]);
    q.arrow("a", 0, 1);
    q.arrow("b", 0, 1);
    q
}

#[cfg(test)]
mod tests;
