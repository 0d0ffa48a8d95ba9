//! Homology of bounded complexes of finitely generated modules.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field;
use super::lattice::{order_lattice, preimage, quotient_generators};
use super::matrix::ExactMatrix;
use super::ring::RingSpec;
use super::smith::invariant_factors;
use crate::{Coeff, IntMatrix, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("not a complex: the composite of the differentials out of degree {0} is nonzero")]
    NotAComplex(i64),
    #[error("window {lo}..{hi} needs degrees {need_lo}..{need_hi} but data is only known on {known_lo}..{known_hi}")]
    WindowTooSmall { lo: i64, hi: i64, need_lo: i64, need_hi: i64, known_lo: i64, known_hi: i64 },
    #[error("differential out of degree {0} has a non-integral entry over {1}")]
    NonIntegral(i64, RingSpec),
    #[error("differential out of degree {degree} has shape {got:?}, expected {expected:?}")]
    Shape { degree: i64, got: (usize, usize), expected: (usize, usize) },
}

/// Homology in one degree: `R^free_rank ⊕ ⊕ R/(d_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct DegreeHomology {
    pub free_rank: usize,
    /// Invariant factors `d_1 | d_2 | …`, each a non-unit. Empty over a field.
    pub torsion: Vec<BigInt>,
}

impl DegreeHomology {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &DegreeHomology) -> DegreeHomology {
        let mut all = self.torsion.clone();
        all.extend(other.torsion.iter().cloned());
        DegreeHomology { free_rank: self.free_rank + other.free_rank, torsion: normalize_torsion(&all) }
    }
}

impl fmt::Display for DegreeHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.free_rank)?;
        if !self.torsion.is_empty() {
            let t: Vec<String> = self.torsion.iter().map(|d| d.to_string()).collect();
            write!(f, " [{}]", t.join(","))?;
        }
        Ok(())
    }
}

/// Rewrites an arbitrary list of cyclic orders as an invariant-factor chain.
pub fn normalize_torsion(orders: &[BigInt]) -> Vec<BigInt> {
    if orders.is_empty() {
        return Vec::new();
    }
    let diag = ExactMatrix::diagonal(orders.len(), orders.len(), orders);
    invariant_factors(&diag).into_iter().filter(|d| !d.is_one()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyReport {
    pub ring: RingSpec,
    pub degrees: BTreeMap<i64, DegreeHomology>,
}

impl HomologyReport {
    pub fn new(ring: RingSpec) -> Self {
        HomologyReport { ring, degrees: BTreeMap::new() }
    }

    pub fn get(&self, t: i64) -> DegreeHomology {
        self.degrees.get(&t).cloned().unwrap_or_default()
    }

    pub fn free_ranks(&self) -> Vec<usize> {
        self.degrees.values().map(|d| d.free_rank).collect()
    }

    /// Degreewise direct sum; degrees missing on one side count as zero.
    pub fn direct_sum(&self, other: &HomologyReport) -> HomologyReport {
        let mut out = self.clone();
        for (t, h) in &other.degrees {
            let cur = out.get(*t);
            out.degrees.insert(*t, cur.direct_sum(h));
        }
        out
    }

    pub fn shifted(&self, by: i64) -> HomologyReport {
        HomologyReport {
            ring: self.ring.clone(),
            degrees: self.degrees.iter().map(|(t, h)| (t + by, h.clone())).collect(),
        }
    }
}

/// A complex of finitely generated free modules, `∂_t : C_t → C_{t-1}`.
/// Data is complete on `known`; outside that interval nothing is asserted.
#[derive(Debug, Clone)]
pub struct ChainComplexOfFree {
    pub ring: RingSpec,
    ranks: BTreeMap<i64, usize>,
    differentials: BTreeMap<i64, RatMatrix>,
    known: (i64, i64),
}

impl ChainComplexOfFree {
    /// A bounded complex: zero outside the degrees that are set.
    pub fn bounded(ring: RingSpec) -> Self {
        ChainComplexOfFree { ring, ranks: BTreeMap::new(), differentials: BTreeMap::new(), known: (i64::MIN, i64::MAX) }
    }

    /// A complex known only on `lo..=hi`.
    pub fn truncated(ring: RingSpec, lo: i64, hi: i64) -> Self {
        ChainComplexOfFree { ring, ranks: BTreeMap::new(), differentials: BTreeMap::new(), known: (lo, hi) }
    }

    pub fn set_rank(&mut self, t: i64, rank: usize) -> &mut Self {
        self.ranks.insert(t, rank);
        self
    }

    pub fn set_differential(&mut self, t: i64, d: RatMatrix) -> &mut Self {
        self.differentials.insert(t, d);
        self
    }

    pub fn rank(&self, t: i64) -> usize {
        self.ranks.get(&t).copied().unwrap_or(0)
    }

    pub fn known(&self) -> (i64, i64) {
        self.known
    }

    /// `∂_t`, zero if unset.
    pub fn differential(&self, t: i64) -> RatMatrix {
        self.differentials
            .get(&t)
            .cloned()
            .unwrap_or_else(|| ExactMatrix::zeros(self.rank(t - 1), self.rank(t)))
    }

    /// Shift degrees: `C'_t = C_{t - by}`.
    pub fn shifted(&self, by: i64) -> ChainComplexOfFree {
        ChainComplexOfFree {
            ring: self.ring.clone(),
            ranks: self.ranks.iter().map(|(t, r)| (t + by, *r)).collect(),
            differentials: self.differentials.iter().map(|(t, d)| (t + by, d.clone())).collect(),
            known: (self.known.0.saturating_add(by), self.known.1.saturating_add(by)),
        }
    }

    fn check(&self, window: &RangeInclusive<i64>) -> Result<(), HomologyError> {
        let (lo, hi) = (*window.start(), *window.end());
        let (need_lo, need_hi) = (lo - 1, hi + 1);
        if need_lo < self.known.0 || need_hi > self.known.1 {
            return Err(HomologyError::WindowTooSmall {
                lo,
                hi,
                need_lo,
                need_hi,
                known_lo: self.known.0,
                known_hi: self.known.1,
            });
        }
        for t in lo..=need_hi {
            let d = self.differential(t);
            let expected = (self.rank(t - 1), self.rank(t));
            if (d.nrows(), d.ncols()) != expected {
                return Err(HomologyError::Shape { degree: t, got: (d.nrows(), d.ncols()), expected });
            }
        }
        for t in lo..=hi {
            let comp = self.differential(t).mul(&self.differential(t + 1));
            let vanishes = match self.ring.modulus() {
                Some(n) => comp
                    .entries()
                    .all(|(_, _, v)| v.is_integer() && num_integer::Integer::is_multiple_of(&v.to_integer(), &n)),
                None => comp.is_zero(),
            };
            if !vanishes {
                return Err(HomologyError::NotAComplex(t + 1));
            }
        }
        Ok(())
    }
}

fn integral(d: &RatMatrix, t: i64, ring: &RingSpec) -> Result<IntMatrix, HomologyError> {
    if d.entries().any(|(_, _, v)| !v.is_integer()) {
        return Err(HomologyError::NonIntegral(t, ring.clone()));
    }
    Ok(d.map(|v| v.to_integer()))
}

/// Homology of a free complex on `window`: invariant factors over ℤ, ranks over ℚ and
/// over ℤ/p with p prime, and the lattice route over other ℤ/n.
pub fn complex_homology(
    c: &ChainComplexOfFree,
    window: RangeInclusive<i64>,
) -> Result<HomologyReport, HomologyError> {
    c.check(&window)?;
    let mut report = HomologyReport::new(c.ring.clone());
    match &c.ring {
        RingSpec::Rationals => {
            for t in window {
                let r_out = field::rank(&c.differential(t));
                let r_in = field::rank(&c.differential(t + 1));
                report
                    .degrees
                    .insert(t, DegreeHomology { free_rank: c.rank(t) - r_out - r_in, torsion: Vec::new() });
            }
        }
        RingSpec::Integers => {
            for t in window {
                let out = integral(&c.differential(t), t, &c.ring)?;
                let inc = integral(&c.differential(t + 1), t + 1, &c.ring)?;
                let r_out = invariant_factors(&out).len();
                let f_in = invariant_factors(&inc);
                let torsion: Vec<BigInt> = f_in.iter().filter(|d| !d.is_one()).cloned().collect();
                report
                    .degrees
                    .insert(t, DegreeHomology { free_rank: c.rank(t) - r_out - f_in.len(), torsion });
            }
        }
        RingSpec::IntegersModN(p) if c.ring.is_field() => {
            for t in window {
                let r_out = field::rank_mod_p(&integral(&c.differential(t), t, &c.ring)?, *p);
                let r_in = field::rank_mod_p(&integral(&c.differential(t + 1), t + 1, &c.ring)?, *p);
                report
                    .degrees
                    .insert(t, DegreeHomology { free_rank: c.rank(t) - r_out - r_in, torsion: Vec::new() });
            }
        }
        RingSpec::IntegersModN(_) => {
            let mc = ModuleComplex::from_free(c)?;
            for t in window {
                report.degrees.insert(t, mc.homology_at(t));
            }
        }
    }
    Ok(report)
}

/// A complex of modules `⊕ R/(c_i)` with integral differentials; the general
/// substrate for torsion-carrying hom complexes.
#[derive(Debug, Clone)]
pub struct ModuleComplex {
    pub ring: RingSpec,
    /// Effective orders per degree (`0` = free summand).
    pub orders: BTreeMap<i64, Vec<BigInt>>,
    pub differentials: BTreeMap<i64, IntMatrix>,
}

impl ModuleComplex {
    pub fn new(ring: RingSpec) -> Self {
        ModuleComplex { ring, orders: BTreeMap::new(), differentials: BTreeMap::new() }
    }

    /// Every summand gets the ring's own lattice order (`n` over ℤ/n).
    pub fn from_free(c: &ChainComplexOfFree) -> Result<Self, HomologyError> {
        let mut m = ModuleComplex::new(c.ring.clone());
        let o = c.ring.lattice_order();
        for (&t, &r) in &c.ranks {
            m.orders.insert(t, vec![o.clone(); r]);
        }
        for (&t, d) in &c.differentials {
            let di = match &c.ring {
                RingSpec::Rationals => {
                    let l = d.entries().fold(BigInt::one(), |acc, (_, _, v)| num_integer::Integer::lcm(&acc, v.denom()));
                    d.map(|v| (v * Coeff::from_integer(l.clone())).to_integer())
                }
                _ => integral(d, t, &c.ring)?,
            };
            m.differentials.insert(t, di);
        }
        Ok(m)
    }

    pub fn set_degree(&mut self, t: i64, orders: Vec<BigInt>) -> &mut Self {
        let eff = orders.iter().map(|o| self.ring.effective_order(o)).map(|o| {
            if o.is_zero() {
                self.ring.lattice_order()
            } else {
                o
            }
        });
        self.orders.insert(t, eff.collect());
        self
    }

    pub fn set_differential(&mut self, t: i64, d: IntMatrix) -> &mut Self {
        self.differentials.insert(t, d);
        self
    }

    pub fn size(&self, t: i64) -> usize {
        self.orders.get(&t).map_or(0, Vec::len)
    }

    fn orders_at(&self, t: i64) -> Vec<BigInt> {
        self.orders.get(&t).cloned().unwrap_or_default()
    }

    pub fn differential(&self, t: i64) -> IntMatrix {
        self.differentials
            .get(&t)
            .cloned()
            .unwrap_or_else(|| ExactMatrix::zeros(self.size(t - 1), self.size(t)))
    }

    /// `ker ∂_t / im ∂_{t+1}` computed as a quotient of lattices.
    pub fn homology_at(&self, t: i64) -> DegreeHomology {
        let k = self.size(t);
        if k == 0 {
            return DegreeHomology::default();
        }
        let target_rel = order_lattice(&self.orders_at(t - 1));
        let target_rel = if target_rel.ncols() == 0 {
            ExactMatrix::zeros(self.size(t - 1), 0)
        } else {
            target_rel
        };
        let cycles = preimage(&self.differential(t), &target_rel);
        let own_rel = order_lattice(&self.orders_at(t));
        let boundaries = self.differential(t + 1).hstack(&own_rel);
        let n = self.ring.modulus();
        let mut out = DegreeHomology::default();
        let mut torsion = Vec::new();
        for (_, d) in quotient_generators(&self.ring, &cycles, &boundaries) {
            if d.is_zero() || n.as_ref() == Some(&d) {
                out.free_rank += 1;
            } else {
                torsion.push(d);
            }
        }
        out.torsion = normalize_torsion(&torsion);
        out
    }

    /// Whether `∂_t ∘ ∂_{t+1}` vanishes modulo the relations of degree `t-1`.
    pub fn squares_to_zero_at(&self, t: i64) -> bool {
        let comp = self.differential(t).mul(&self.differential(t + 1));
        let orders = self.orders_at(t - 1);
        let ok = comp.entries().all(|(i, _, v)| {
            let o = &orders[i];
            if o.is_zero() {
                v.is_zero()
            } else {
                num_integer::Integer::is_multiple_of(v, o)
            }
        });
        ok
    }
}

/// Convenience: homology report of a module complex on a window.
pub fn module_homology(c: &ModuleComplex, window: RangeInclusive<i64>) -> Result<HomologyReport, HomologyError> {
    for t in window.clone() {
        if !c.squares_to_zero_at(t) {
            return Err(HomologyError::NotAComplex(t + 1));
        }
    }
    let mut report = HomologyReport::new(c.ring.clone());
    for t in window {
        report.degrees.insert(t, c.homology_at(t));
    }
    Ok(report)
}
