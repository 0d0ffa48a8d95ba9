use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::lincomb::LinComb;
use super::presentation::{DgError, DgPresentation};
use crate::exactlin::RingSpec;
use crate::Coeff;

/// The named example categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// `R[x]`, `x` in degree 0 and weight 1.
    Polynomial,
    /// `R[x, x⁻¹]`, weights in ℤ.
    Laurent,
    /// `R[x]/(x^m)`.
    TruncatedPolynomial(u32),
    /// One object, `e` in degree 1, `de = n·1`, `e² = 0`.
    KoszulDga(i64),
    /// `k` objects, each with endomorphisms `R·1` and no other morphisms.
    Discrete(usize),
    /// One object whose endomorphisms are `R/(m)` in degree 0.
    CyclicQuotient(u64),
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Polynomial => write!(f, "Polynomial"),
            Builtin::Laurent => write!(f, "Laurent"),
            Builtin::TruncatedPolynomial(m) => write!(f, "TruncatedPolynomial({m})"),
            Builtin::KoszulDga(n) => write!(f, "KoszulDga({n})"),
            Builtin::Discrete(k) => write!(f, "Discrete({k})"),
            Builtin::CyclicQuotient(m) => write!(f, "CyclicQuotient({m})"),
        }
    }
}

impl FromStr for Builtin {
    type Err = DgError;

    fn from_str(s: &str) -> Result<Self, DgError> {
        let s = s.trim();
        let unknown = || DgError::UnknownName(s.to_string());
        let (head, arg) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], Some(&s[i + 1..s.len() - 1])),
            Some(_) => return Err(unknown()),
            None => (s, None),
        };
        match (head, arg) {
            ("Polynomial", None) => Ok(Builtin::Polynomial),
            ("Laurent", None) => Ok(Builtin::Laurent),
            ("TruncatedPolynomial", Some(a)) => a.trim().parse().map(Builtin::TruncatedPolynomial).map_err(|_| unknown()),
            ("KoszulDga", Some(a)) => a.trim().parse().map(Builtin::KoszulDga).map_err(|_| unknown()),
            ("Discrete", Some(a)) => a.trim().parse().map(Builtin::Discrete).map_err(|_| unknown()),
            ("CyclicQuotient", Some(a)) => a.trim().parse().map(Builtin::CyclicQuotient).map_err(|_| unknown()),
            _ => Err(unknown()),
        }
    }
}

/// Builds a named presentation, complete on `window`.
pub fn builtin_presentation(name: Builtin, ring: RingSpec, window: (i64, i64)) -> Result<DgPresentation, DgError> {
    let mut p = DgPresentation::new(ring, window)?;
    match name {
        Builtin::Polynomial => monomials(&mut p, window.0.max(0), window.1)?,
        Builtin::Laurent => monomials(&mut p, window.0, window.1)?,
        Builtin::TruncatedPolynomial(m) => monomials(&mut p, window.0.max(0), window.1.min(m as i64 - 1))?,
        Builtin::KoszulDga(n) => {
            let x = p.add_object("X")?;
            let e = p.add_morphism("e", x, x, 1, 0)?;
            p.set_differential(e, LinComb::term(p.unit(x), Coeff::from_integer(BigInt::from(n))))?;
        }
        Builtin::Discrete(k) => {
            for i in 0..k {
                p.add_object(&format!("X{i}"))?;
            }
        }
        Builtin::CyclicQuotient(m) => {
            let x = p.add_object("X")?;
            p.set_order(p.unit(x), BigInt::from(m))?;
        }
    }
    Ok(p)
}

/// `x^k` for `k` in `lo..=hi`, with `x^a x^b = x^{a+b}` whenever the exponent stays in range.
fn monomials(p: &mut DgPresentation, lo: i64, hi: i64) -> Result<(), DgError> {
    let x = p.add_object("X")?;
    let mut idx = Vec::new();
    for k in lo..=hi {
        let m = if k == 0 { p.unit(x) } else { p.add_morphism(&format!("x^{k}"), x, x, 0, k)? };
        idx.push((k, m));
    }
    for &(a, ma) in &idx {
        for &(b, mb) in &idx {
            if a == 0 || b == 0 || a + b < lo || a + b > hi {
                continue;
            }
            let mc = idx[(a + b - lo) as usize].1;
            p.set_product(ma, mb, LinComb::basis(mc))?;
        }
    }
    Ok(())
}
