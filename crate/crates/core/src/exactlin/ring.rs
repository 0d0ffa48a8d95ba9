use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Coeff;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("coefficient {0} is not an integer")]
    NotIntegral(Coeff),
    #[error("denominator of {0} is not invertible modulo {1}")]
    NotInvertible(Coeff, u64),
    #[error("unrecognised ring literal `{0}` (expected Z, Q or Z/n)")]
    BadLiteral(String),
}

/// The base commutative ring: one of ℤ, ℚ, ℤ/n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    Rationals,
    IntegersModN(u64),
}

impl RingSpec {
    pub fn modulo(n: u64) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::BadModulus(n));
        }
        Ok(RingSpec::IntegersModN(n))
    }

    pub fn modulus(&self) -> Option<BigInt> {
        match self {
            RingSpec::IntegersModN(n) => Some(BigInt::from(*n)),
            _ => None,
        }
    }

    /// ℚ or ℤ/p with p prime.
    pub fn is_field(&self) -> bool {
        match self {
            RingSpec::Integers => false,
            RingSpec::Rationals => true,
            RingSpec::IntegersModN(n) => is_prime(*n),
        }
    }

    /// Brings a coefficient into canonical form for this ring.
    pub fn normalize(&self, c: &Coeff) -> Result<Coeff, RingError> {
        match self {
            RingSpec::Rationals => Ok(c.clone()),
            RingSpec::Integers => {
                if c.is_integer() {
                    Ok(c.clone())
                } else {
                    Err(RingError::NotIntegral(c.clone()))
                }
            }
            RingSpec::IntegersModN(n) => {
                let m = BigInt::from(*n);
                let num = c.numer().mod_floor(&m);
                let den = c.denom().mod_floor(&m);
                let inv = mod_inverse(&den, &m).ok_or_else(|| RingError::NotInvertible(c.clone(), *n))?;
                Ok(Coeff::from_integer((num * inv).mod_floor(&m)))
            }
        }
    }

    /// Order of a cyclic summand `R/(order)` as seen by this ring. `0` means free,
    /// `1` means the summand vanishes.
    pub fn effective_order(&self, order: &BigInt) -> BigInt {
        match self {
            RingSpec::Integers => order.abs(),
            RingSpec::Rationals => {
                if order.is_zero() {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
            RingSpec::IntegersModN(n) => {
                let n = BigInt::from(*n);
                let g = order.gcd(&n);
                if g == n {
                    BigInt::zero()
                } else {
                    g
                }
            }
        }
    }

    /// Reduce a normalized coefficient modulo the order of its summand.
    pub fn reduce(&self, c: &Coeff, order: &BigInt) -> Coeff {
        let eff = self.effective_order(order);
        if eff.is_one() {
            return Coeff::zero();
        }
        match self {
            RingSpec::Rationals => c.clone(),
            RingSpec::Integers => {
                if eff.is_zero() {
                    c.clone()
                } else {
                    Coeff::from_integer(c.to_integer().mod_floor(&eff))
                }
            }
            RingSpec::IntegersModN(n) => {
                let m = if eff.is_zero() { BigInt::from(*n) } else { eff };
                Coeff::from_integer(c.to_integer().mod_floor(&m))
            }
        }
    }

    /// The order every free generator effectively carries in lattice computations.
    /// `0` for ℤ and ℚ, `n` for ℤ/n.
    pub fn lattice_order(&self) -> BigInt {
        match self {
            RingSpec::IntegersModN(n) => BigInt::from(*n),
            _ => BigInt::zero(),
        }
    }

    /// Whether `d` generates the unit ideal.
    pub fn is_unit(&self, d: &BigInt) -> bool {
        match self {
            RingSpec::Integers => d.abs().is_one(),
            RingSpec::Rationals => !d.is_zero(),
            RingSpec::IntegersModN(n) => d.gcd(&BigInt::from(*n)).is_one(),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::IntegersModN(n) => write!(f, "Z/{n}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            other => {
                let n = other
                    .strip_prefix("Z/")
                    .and_then(|n| n.trim().parse::<u64>().ok())
                    .ok_or_else(|| RingError::BadLiteral(other.to_string()))?;
                RingSpec::modulo(n)
            }
        }
    }
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.abs().is_one() {
        return None;
    }
    Some((e.x * e.gcd.signum()).mod_floor(m))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A unit `c` of ℤ/n with `d·c ≡ gcd(d, n) (mod n)`.
pub(crate) fn associate_unit(d: &BigInt, n: &BigInt) -> BigInt {
    let g = d.gcd(n);
    if g.is_zero() {
        return BigInt::one();
    }
    let n_red = n / &g;
    let d_red = (d / &g).mod_floor(&n_red);
    let base = if n_red.is_one() {
        BigInt::zero()
    } else {
        mod_inverse(&d_red, &n_red).expect("reduced quotient is coprime")
    };
    let mut c = base;
    loop {
        if c.gcd(n).is_one() {
            return c.mod_floor(n);
        }
        c += &n_red;
    }
}
