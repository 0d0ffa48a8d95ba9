use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::lincomb::LinComb;
use super::presentation::{DgError, DgPresentation};
use crate::Coeff;

/// A dg functor between presentations, given on objects and on basis morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DgFunctorData {
    pub source: Arc<DgPresentation>,
    pub target: Arc<DgPresentation>,
    pub object_map: Vec<usize>,
    pub images: Vec<LinComb>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctorViolation {
    Grading { morphism: String, term: String },
    Unit { object: String },
    NotWellDefined { morphism: String },
    Differential { morphism: String, defect: String },
    Composition { g: String, f: String, defect: String },
    OutOfRange { g: String, f: String, reason: String },
}

impl fmt::Display for FunctorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorViolation::Grading { morphism, term } => write!(f, "image of {morphism} has ill-graded term {term}"),
            FunctorViolation::Unit { object } => write!(f, "unit of {object} is not sent to a unit"),
            FunctorViolation::NotWellDefined { morphism } => write!(f, "image of {morphism} ignores its torsion"),
            FunctorViolation::Differential { morphism, defect } => {
                write!(f, "does not commute with d on {morphism}: defect {defect}")
            }
            FunctorViolation::Composition { g, f: ff, defect } => {
                write!(f, "does not preserve {g}*{ff}: defect {defect}")
            }
            FunctorViolation::OutOfRange { g, f: ff, reason } => write!(f, "image of {g}*{ff} unavailable: {reason}"),
        }
    }
}

impl DgFunctorData {
    pub fn new(
        source: Arc<DgPresentation>,
        target: Arc<DgPresentation>,
        object_map: Vec<usize>,
        images: Vec<LinComb>,
    ) -> Result<Self, DgError> {
        if object_map.len() != source.objects().len() || images.len() != source.basis().len() {
            return Err(DgError::BadFunctor("object map or image list has the wrong length".into()));
        }
        if object_map.iter().any(|&y| y >= target.objects().len()) {
            return Err(DgError::BadFunctor("object map leaves the target".into()));
        }
        let images = images.iter().map(|l| target.normalize(l)).collect::<Result<_, _>>()?;
        Ok(DgFunctorData { source, target, object_map, images })
    }

    pub fn identity(p: Arc<DgPresentation>) -> Self {
        let images = (0..p.basis().len()).map(LinComb::basis).collect();
        let object_map = (0..p.objects().len()).collect();
        DgFunctorData { source: p.clone(), target: p, object_map, images }
    }

    pub fn apply(&self, l: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (i, c) in l.iter() {
            out.add_scaled(&self.images[i], c);
        }
        self.target.normalize_unchecked(&out)
    }

    /// `g ∘ f`, defined when the target of `f` equals the source of `g`.
    pub fn then(&self, g: &DgFunctorData) -> Result<DgFunctorData, DgError> {
        if self.target != g.source {
            return Err(DgError::BadFunctor("target and source presentations differ".into()));
        }
        let object_map = self.object_map.iter().map(|&y| g.object_map[y]).collect();
        let images = self.images.iter().map(|l| g.apply(l)).collect();
        Ok(DgFunctorData { source: self.source.clone(), target: g.target.clone(), object_map, images })
    }

    /// Checks grading, units, torsion, differentials and products on all basis data that
    /// lies inside the source's presented range.
    pub fn validate(&self) -> Vec<FunctorViolation> {
        let (s, t) = (&*self.source, &*self.target);
        let mut v = Vec::new();
        for (i, b) in s.basis().iter().enumerate() {
            for term in self.images[i].indices() {
                let c = t.morphism(term);
                if c.degree != b.degree
                    || c.weight != b.weight
                    || c.source != self.object_map[b.source]
                    || c.target != self.object_map[b.target]
                {
                    v.push(FunctorViolation::Grading { morphism: b.name.clone(), term: c.name.clone() });
                }
            }
            let ord = s.effective_order(i);
            if !ord.is_zero() && !t.normalize_unchecked(&self.images[i].scaled(&Coeff::from_integer(ord))).is_zero() {
                v.push(FunctorViolation::NotWellDefined { morphism: b.name.clone() });
            }
            let lhs = self.apply(s.differential(i));
            let rhs = t.d_lin(&self.images[i]);
            let defect = lhs.sub(&rhs);
            if !defect.is_zero() {
                v.push(FunctorViolation::Differential { morphism: b.name.clone(), defect: t.display_lin(&defect) });
            }
        }
        for (x, &u) in s.units().iter().enumerate() {
            let want = t.normalize_unchecked(&LinComb::basis(t.unit(self.object_map[x])));
            if self.images[u] != want {
                v.push(FunctorViolation::Unit { object: s.objects()[x].clone() });
            }
        }
        let n = s.basis().len();
        for f in 0..n {
            for g in 0..n {
                let (mg, mf) = (s.morphism(g), s.morphism(f));
                if mg.source != mf.target || !s.in_range(mg.degree + mf.degree, mg.weight + mf.weight) {
                    continue;
                }
                let lhs = self.apply(&s.compose(g, f).expect("in range"));
                match t.compose_lin(&self.images[g], &self.images[f]) {
                    Ok(rhs) => {
                        let defect = lhs.sub(&rhs);
                        if !defect.is_zero() {
                            v.push(FunctorViolation::Composition {
                                g: mg.name.clone(),
                                f: mf.name.clone(),
                                defect: t.display_lin(&defect),
                            });
                        }
                    }
                    Err(e) => v.push(FunctorViolation::OutOfRange {
                        g: mg.name.clone(),
                        f: mf.name.clone(),
                        reason: e.to_string(),
                    }),
                }
            }
        }
        v
    }
}
