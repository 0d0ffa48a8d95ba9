use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::analysis::{CellAnalysis, Ctx};
use super::cells::{cell, cell_index, int_vec, lin_to_vec, vec_to_lin, CellKey};
use super::free::{free_category, FreeCategory, GeneratorSpec, PathElem};
use super::ResolveError;
use crate::dgcat::{DgFunctorData, DgPresentation, LinComb};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorKind {
    /// Closed generator hitting a cocycle of the target.
    Cocycle,
    /// Generator hitting a morphism outside the image, with a lifted differential.
    Lift,
    /// Generator whose differential kills a cycle mapped to a boundary.
    Killer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectKind {
    CocycleNotHit,
    MorphismNotHit,
    HomologyKernel,
}

#[derive(Debug, Clone)]
pub struct TowerGenerator {
    pub spec: GeneratorSpec,
    pub kind: GeneratorKind,
    pub stage: usize,
    /// Image in the target presentation.
    pub psi: LinComb,
}

/// One line of the construction ledger: the defect a generator was added for.
#[derive(Debug, Clone)]
pub struct LedgerEntry {
    pub stage: usize,
    pub generator: String,
    pub kind: DefectKind,
    pub cell: CellKey,
    /// Order of the defect class (`0` = infinite).
    pub order: BigInt,
    pub witness: String,
}

#[derive(Debug, Clone)]
pub struct Stage {
    pub cat: FreeCategory,
    /// The comparison functor to the target.
    pub psi: DgFunctorData,
}

impl Stage {
    pub fn pres(&self) -> &DgPresentation {
        &self.cat.pres
    }

    pub(crate) fn ctx<'a>(&'a self, a: &'a DgPresentation) -> Ctx<'a> {
        Ctx::new(&self.cat.pres, &self.psi.images, a)
    }
}

#[derive(Debug, Clone)]
pub struct SemiFreeStageTower {
    pub target: Arc<DgPresentation>,
    pub degree_cap: i64,
    pub weight_window: (i64, i64),
    pub generators: Vec<TowerGenerator>,
    /// `stages[s]` is stage `s`; stage 0 has only identities.
    pub stages: Vec<Stage>,
    pub ledger: Vec<LedgerEntry>,
    /// Whether construction stopped because a stage found nothing to add.
    pub stable: bool,
}

impl SemiFreeStageTower {
    pub fn top(&self) -> &Stage {
        self.stages.last().expect("stage 0 always exists")
    }

    /// Stage `s`; past the last built stage of a stable tower this is the last stage.
    pub fn stage(&self, s: usize) -> Option<&Stage> {
        match self.stages.get(s) {
            Some(st) => Some(st),
            None if self.stable => self.stages.last(),
            None => None,
        }
    }

    pub fn generators_up_to(&self, s: usize) -> impl Iterator<Item = &TowerGenerator> {
        self.generators.iter().filter(move |g| g.stage <= s)
    }
}

fn build_stage(a: &Arc<DgPresentation>, gens: &[TowerGenerator], cap: i64, window: (i64, i64)) -> Result<Stage, ResolveError> {
    let specs: Vec<GeneratorSpec> = gens.iter().map(|g| g.spec.clone()).collect();
    let cat = free_category(a.ring(), a.objects(), &specs, cap, window)?;
    let mut images = Vec::with_capacity(cat.paths.len());
    for (x, p) in &cat.paths {
        let img = match p.split_first() {
            None => LinComb::basis(a.unit(*x)),
            Some((first, rest)) => {
                let mut acc = gens[*first].psi.clone();
                for &g in rest {
                    acc = a.compose_lin(&gens[g].psi, &acc)?;
                }
                acc
            }
        };
        images.push(img);
    }
    let object_map = (0..a.objects().len()).collect();
    let psi = DgFunctorData::new(Arc::new(cat.pres.clone()), a.clone(), object_map, images)?;
    Ok(Stage { cat, psi })
}

fn check_input(a: &DgPresentation, cap: i64, window: (i64, i64)) -> Result<(), ResolveError> {
    if let Some(b) = a.basis().iter().find(|b| b.weight < 0) {
        return Err(ResolveError::NegativeWeight(b.name.clone()));
    }
    if cap < 0 {
        return Err(ResolveError::BadDegreeCap(cap));
    }
    let (lo, hi) = a.weight_window();
    if window.0 > 0 || window.1 < 0 || window.1 > hi || lo > 0 {
        return Err(ResolveError::WindowNotCovered { lo: window.0, hi: window.1, have_lo: lo, have_hi: hi });
    }
    if let Some(have) = a.degree_cap() {
        if have < cap {
            return Err(ResolveError::DegreeCapTooSmall { need: cap, have });
        }
    }
    Ok(())
}

struct Builder {
    a: Arc<DgPresentation>,
    cap: i64,
    window: (i64, i64),
    gens: Vec<TowerGenerator>,
    ledger: Vec<LedgerEntry>,
    counters: [usize; 3],
}

impl Builder {
    fn push(&mut self, kind: GeneratorKind, stage: usize, key: CellKey, d: PathElem, psi: LinComb, defect: (DefectKind, BigInt, String)) -> Result<(), ResolveError> {
        let (x, y, h, w) = key;
        if h == 0 && w == 0 {
            let (s, t) = (&self.a.objects()[x], &self.a.objects()[y]);
            return Err(ResolveError::ZeroGradedGenerator { from_object: s.clone(), to_object: t.clone(), witness: defect.2 });
        }
        let (prefix, slot) = match kind {
            GeneratorKind::Cocycle => ("f", 0),
            GeneratorKind::Lift => ("e", 1),
            GeneratorKind::Killer => ("a", 2),
        };
        self.counters[slot] += 1;
        let name = format!("{prefix}{}", self.counters[slot]);
        self.ledger.push(LedgerEntry { stage, generator: name.clone(), kind: defect.0, cell: key, order: defect.1, witness: defect.2 });
        let spec = GeneratorSpec { name, source: x, target: y, degree: h, weight: w, d };
        self.gens.push(TowerGenerator { spec, kind, stage, psi });
        Ok(())
    }

    fn in_scope(&self, k: &CellKey, top: i64) -> bool {
        k.2 >= 0 && k.2 <= top && k.3 >= self.window.0 && k.3 <= self.window.1
    }

    /// Stage 1: closed generators for cocycles, added in order of `degree + weight` so
    /// products of earlier ones are seen first.
    fn stage_one(&mut self) -> Result<(), ResolveError> {
        let mut keys: Vec<CellKey> = cell_index(&self.a).into_keys().collect();
        keys.retain(|k| self.in_scope(k, self.cap));
        keys.sort_by_key(|&(x, y, h, w)| (h + w, h, w, x, y));
        let mut cur = build_stage(&self.a, &self.gens, self.cap, self.window)?;
        for key in keys {
            let unhit = cur.ctx(&self.a).analyze(key).cocycles_unhit;
            if unhit.is_empty() {
                continue;
            }
            let basis = cur.ctx(&self.a).a_cell(key).to_vec();
            for (v, order) in unhit {
                let psi = self.a.normalize_unchecked(&vec_to_lin(&basis, &int_vec(&v)));
                let witness = self.a.display_lin(&psi);
                self.push(GeneratorKind::Cocycle, 1, key, PathElem::new(), psi, (DefectKind::CocycleNotHit, order, witness))?;
            }
            cur = build_stage(&self.a, &self.gens, self.cap, self.window)?;
        }
        Ok(())
    }

    /// Later stages: lifts of missing morphisms (stage 2 only) and killers for cycles
    /// that map to boundaries, all computed against the previous stage.
    fn stage_next(&mut self, s: usize, prev: &Stage) -> Result<(), ResolveError> {
        let a = self.a.clone();
        let ctx = prev.ctx(&a);
        let keys: BTreeSet<CellKey> = ctx.a_idx.keys().chain(ctx.c_idx.keys()).copied().filter(|k| self.in_scope(k, self.cap)).collect();
        let keys: Vec<CellKey> = keys.into_iter().collect();
        let found: Vec<(CellKey, CellAnalysis)> = keys.par_iter().map(|&k| (k, ctx.analyze(k))).collect();
        for (key, an) in found {
            let (x, y, h, w) = key;
            if s == 2 {
                let basis = ctx.a_cell(key).to_vec();
                for (v, order) in an.morphisms_unhit {
                    let m = int_vec(&v);
                    let z = ctx
                        .lift_differential(key, &m)
                        .ok_or_else(|| ResolveError::Internal(format!("no cycle lifts the differential in cell {key:?}")))?;
                    let psi = self.a.normalize_unchecked(&vec_to_lin(&basis, &m));
                    let witness = self.a.display_lin(&psi);
                    let d = prev.cat.lin_to_elem(&z);
                    self.push(GeneratorKind::Lift, s, key, d, psi, (DefectKind::MorphismNotHit, order, witness))?;
                }
            }
            if h < self.cap {
                let basis = ctx.c_cell(key).to_vec();
                for (v, order) in an.kernel {
                    let z = int_vec(&v);
                    let psi = ctx
                        .lift_boundary(key, &z)
                        .ok_or_else(|| ResolveError::Internal(format!("no boundary lift in cell {key:?}")))?;
                    let zl = prev.pres().normalize_unchecked(&vec_to_lin(&basis, &z));
                    let witness = prev.pres().display_lin(&zl);
                    let d = prev.cat.lin_to_elem(&zl);
                    self.push(GeneratorKind::Killer, s, (x, y, h + 1, w), d, psi, (DefectKind::HomologyKernel, order, witness))?;
                }
            }
        }
        Ok(())
    }
}

/// Builds the stages `0..=stage_cap` of a semi-free resolution of `a`, each a free
/// category truncated at `degree_cap` and the weight `window`. Construction stops early
/// once a stage (from stage 2 on) finds no defect.
pub fn semifree_resolve(
    a: Arc<DgPresentation>,
    stage_cap: usize,
    degree_cap: i64,
    window: (i64, i64),
) -> Result<SemiFreeStageTower, ResolveError> {
    check_input(&a, degree_cap, window)?;
    let mut b = Builder { a: a.clone(), cap: degree_cap, window, gens: Vec::new(), ledger: Vec::new(), counters: [0; 3] };
    let mut stages = vec![build_stage(&a, &[], degree_cap, window)?];
    let mut stable = false;
    for s in 1..=stage_cap {
        let before = b.gens.len();
        if s == 1 {
            b.stage_one()?;
        } else {
            let prev = stages.last().expect("nonempty").clone();
            b.stage_next(s, &prev)?;
        }
        if s >= 2 && b.gens.len() == before {
            stable = true;
            break;
        }
        stages.push(build_stage(&a, &b.gens, degree_cap, window)?);
    }
    Ok(SemiFreeStageTower { target: a, degree_cap, weight_window: window, generators: b.gens, stages, ledger: b.ledger, stable })
}

/// Coordinates of a path combination in one cell of a stage.
pub fn elem_coords(stage: &Stage, key: CellKey, e: &PathElem) -> Result<Vec<crate::Coeff>, ResolveError> {
    let l = stage.cat.elem_to_lin(e)?;
    Ok(lin_to_vec(cell(&cell_index(stage.pres()), key), &l))
}

