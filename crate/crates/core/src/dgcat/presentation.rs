use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::lincomb::LinComb;
use crate::exactlin::{RingError, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DgError {
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("empty weight window {lo}..{hi}")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("relation {0} is not homogeneous (mixed lengths or endpoints)")]
    RelationNotHomogeneous(usize),
    #[error("relations do not reduce consistently in weight {weight}: {detail}")]
    InconsistentRelations { weight: i64, detail: String },
    #[error("weight {weight} lies outside the presented window {lo}..{hi}")]
    OutsideWindow { weight: i64, lo: i64, hi: i64 },
    #[error("degree {degree} exceeds the presented degree cap {cap}")]
    OutsideDegreeCap { degree: i64, cap: i64 },
    #[error("`{g}` and `{f}` are not composable")]
    NotComposable { g: String, f: String },
    #[error("{0}")]
    Ring(#[from] RingError),
    #[error("invalid functor: {0}")]
    BadFunctor(String),
}

/// A basis morphism `source -> target`. `order` is the annihilator of the cyclic summand
/// it spans (`0` = free).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisMorphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub degree: i64,
    pub weight: i64,
    pub order: BigInt,
}

/// A small dg category given by based hom complexes and structure constants.
///
/// Hom complexes are direct sums of cyclic modules spanned by the basis morphisms.
/// Products are stored as `(g, f) ↦ g∘f` for non-unit pairs; products with units are
/// implicit and omitted pairs compose to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DgPresentation {
    ring: RingSpec,
    objects: Vec<String>,
    basis: Vec<BasisMorphism>,
    units: Vec<usize>,
    differential: Vec<LinComb>,
    composition: BTreeMap<(usize, usize), LinComb>,
    weight_window: (i64, i64),
    degree_cap: Option<i64>,
    names: HashMap<String, usize>,
}

impl DgPresentation {
    pub fn new(ring: RingSpec, weight_window: (i64, i64)) -> Result<Self, DgError> {
        if weight_window.0 > weight_window.1 {
            return Err(DgError::EmptyWindow { lo: weight_window.0, hi: weight_window.1 });
        }
        Ok(DgPresentation {
            ring,
            objects: Vec::new(),
            basis: Vec::new(),
            units: Vec::new(),
            differential: Vec::new(),
            composition: BTreeMap::new(),
            weight_window,
            degree_cap: None,
            names: HashMap::new(),
        })
    }

    /// Adds an object together with its unit `1_<name>`.
    pub fn add_object(&mut self, name: &str) -> Result<usize, DgError> {
        if self.objects.iter().any(|o| o == name) {
            return Err(DgError::DuplicateName(name.to_string()));
        }
        let x = self.objects.len();
        self.objects.push(name.to_string());
        let u = self.push_basis(format!("1_{name}"), x, x, 0, 0)?;
        self.units.push(u);
        Ok(x)
    }

    pub fn add_morphism(
        &mut self,
        name: &str,
        source: usize,
        target: usize,
        degree: i64,
        weight: i64,
    ) -> Result<usize, DgError> {
        if source >= self.objects.len() || target >= self.objects.len() {
            return Err(DgError::UnknownName(format!("object of `{name}`")));
        }
        self.push_basis(name.to_string(), source, target, degree, weight)
    }

    fn push_basis(&mut self, name: String, s: usize, t: usize, degree: i64, weight: i64) -> Result<usize, DgError> {
        if self.names.contains_key(&name) {
            return Err(DgError::DuplicateName(name));
        }
        self.names.insert(name.clone(), self.basis.len());
        self.basis.push(BasisMorphism { name, source: s, target: t, degree, weight, order: BigInt::zero() });
        self.differential.push(LinComb::zero());
        Ok(self.basis.len() - 1)
    }

    /// Declares `order · m = 0`. Existing structure constants touching `m` are re-reduced.
    pub fn set_order(&mut self, m: usize, order: BigInt) -> Result<(), DgError> {
        self.basis[m].order = order;
        for i in 0..self.differential.len() {
            self.differential[i] = self.normalize(&self.differential[i])?;
        }
        let keys: Vec<_> = self.composition.keys().copied().collect();
        for k in keys {
            let v = self.normalize(&self.composition[&k])?;
            self.store_product(k, v);
        }
        Ok(())
    }

    pub fn set_differential(&mut self, m: usize, value: LinComb) -> Result<(), DgError> {
        self.differential[m] = self.normalize(&value)?;
        Ok(())
    }

    /// Sets the structure constants of `g∘f`. Products with units are implicit and
    /// cannot be overridden.
    pub fn set_product(&mut self, g: usize, f: usize, value: LinComb) -> Result<(), DgError> {
        if self.basis[g].source != self.basis[f].target {
            return Err(DgError::NotComposable { g: self.basis[g].name.clone(), f: self.basis[f].name.clone() });
        }
        if self.is_unit(g) || self.is_unit(f) {
            return Ok(());
        }
        let v = self.normalize(&value)?;
        self.store_product((g, f), v);
        Ok(())
    }

    fn store_product(&mut self, k: (usize, usize), v: LinComb) {
        if v.is_zero() {
            self.composition.remove(&k);
        } else {
            self.composition.insert(k, v);
        }
    }

    pub fn set_degree_cap(&mut self, cap: Option<i64>) {
        self.degree_cap = cap;
    }

    pub fn set_weight_window(&mut self, window: (i64, i64)) -> Result<(), DgError> {
        if window.0 > window.1 {
            return Err(DgError::EmptyWindow { lo: window.0, hi: window.1 });
        }
        self.weight_window = window;
        Ok(())
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn basis(&self) -> &[BasisMorphism] {
        &self.basis
    }

    pub fn morphism(&self, i: usize) -> &BasisMorphism {
        &self.basis[i]
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.get(name).copied()
    }

    pub fn unit(&self, x: usize) -> usize {
        self.units[x]
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn is_unit(&self, m: usize) -> bool {
        self.units.get(self.basis[m].source) == Some(&m)
    }

    pub fn differential(&self, m: usize) -> &LinComb {
        &self.differential[m]
    }

    pub fn products(&self) -> &BTreeMap<(usize, usize), LinComb> {
        &self.composition
    }

    pub fn weight_window(&self) -> (i64, i64) {
        self.weight_window
    }

    pub fn degree_cap(&self) -> Option<i64> {
        self.degree_cap
    }

    /// Basis morphisms `x -> y`.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].source == x && self.basis[i].target == y).collect()
    }

    /// Effective order of a basis morphism over the base ring (`0` = free, `1` = zero).
    pub fn effective_order(&self, m: usize) -> BigInt {
        self.ring.effective_order(&self.basis[m].order)
    }

    /// Whether every basis morphism spans a free summand.
    pub fn is_free(&self) -> bool {
        (0..self.basis.len()).all(|m| self.effective_order(m).is_zero())
    }

    pub fn max_degree(&self) -> i64 {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    /// Whether `weight` lies in the window and `degree` under the cap.
    pub fn in_range(&self, degree: i64, weight: i64) -> bool {
        weight >= self.weight_window.0
            && weight <= self.weight_window.1
            && self.degree_cap.is_none_or(|c| degree <= c)
    }

    fn check_range(&self, degree: i64, weight: i64) -> Result<(), DgError> {
        let (lo, hi) = self.weight_window;
        if weight < lo || weight > hi {
            return Err(DgError::OutsideWindow { weight, lo, hi });
        }
        if let Some(cap) = self.degree_cap {
            if degree > cap {
                return Err(DgError::OutsideDegreeCap { degree, cap });
            }
        }
        Ok(())
    }

    /// Canonical form: ring-normalized coefficients reduced modulo each summand's order.
    pub fn normalize(&self, l: &LinComb) -> Result<LinComb, DgError> {
        let mut out = LinComb::zero();
        for (i, c) in l.iter() {
            let c = self.ring.normalize(c)?;
            out.add_term(i, self.ring.reduce(&c, &self.basis[i].order));
        }
        Ok(out)
    }

    pub(crate) fn normalize_unchecked(&self, l: &LinComb) -> LinComb {
        self.normalize(l).expect("coefficients already lie in the ring")
    }

    /// `g∘f` on basis morphisms. Fails when the product leaves the presented range.
    pub fn compose(&self, g: usize, f: usize) -> Result<LinComb, DgError> {
        let (bg, bf) = (&self.basis[g], &self.basis[f]);
        if bg.source != bf.target {
            return Err(DgError::NotComposable { g: bg.name.clone(), f: bf.name.clone() });
        }
        if self.is_unit(f) {
            return Ok(LinComb::basis(g));
        }
        if self.is_unit(g) {
            return Ok(LinComb::basis(f));
        }
        self.check_range(bg.degree + bf.degree, bg.weight + bf.weight)?;
        Ok(self.composition.get(&(g, f)).cloned().unwrap_or_default())
    }

    /// Bilinear extension of [`compose`](Self::compose); non-composable pairs contribute zero.
    pub fn compose_lin(&self, g: &LinComb, f: &LinComb) -> Result<LinComb, DgError> {
        let mut out = LinComb::zero();
        for (i, a) in g.iter() {
            for (j, b) in f.iter() {
                if self.basis[i].source != self.basis[j].target {
                    continue;
                }
                out.add_scaled(&self.compose(i, j)?, &(a * b));
            }
        }
        self.normalize(&out)
    }

    pub fn d_lin(&self, l: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (i, c) in l.iter() {
            out.add_scaled(&self.differential[i], c);
        }
        self.normalize_unchecked(&out)
    }

    /// Human-readable form using basis names.
    /// `2*f - g + 1/2*h`, or `0`.
    pub fn display_lin(&self, l: &LinComb) -> String {
        if l.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (i, c)) in l.iter().enumerate() {
            let neg = c.is_negative();
            out.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let a = c.abs();
            if a.is_one() {
                out.push_str(&self.basis[i].name);
            } else {
                out.push_str(&format!("{a}*{}", self.basis[i].name));
            }
        }
        out
    }

    /// Number of basis morphisms per weight.
    pub fn ranks_by_weight(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for b in &self.basis {
            *out.entry(b.weight).or_insert(0) += 1;
        }
        out
    }
}
