use num_traits::Zero;

use super::cells::{cell, cell_index, d_matrix, lin_to_vec, matrix_of, orders, solve, to_rat, vec_to_lin};
use super::free::PathElem;
use super::tower::SemiFreeStageTower;
use super::ResolveError;
use crate::dgcat::{DgFunctorData, DgPresentation, LinComb};
use crate::exactlin::{lattice, ExactMatrix};
use crate::Coeff;

fn map_path(sb: &DgPresentation, object_map: &[usize], gen_img: &[LinComb], key: &super::free::PathKey) -> Result<LinComb, ResolveError> {
    let (x, p) = key;
    match p.split_first() {
        None => Ok(LinComb::basis(sb.unit(object_map[*x]))),
        Some((first, rest)) => {
            let mut acc = gen_img[*first].clone();
            for &g in rest {
                acc = sb.compose_lin(&gen_img[g], &acc)?;
            }
            Ok(acc)
        }
    }
}

fn map_elem(sb: &DgPresentation, object_map: &[usize], gen_img: &[LinComb], e: &PathElem) -> Result<LinComb, ResolveError> {
    let mut out = LinComb::zero();
    for (k, c) in e {
        out.add_scaled(&map_path(sb, object_map, gen_img, k)?, c);
    }
    Ok(sb.normalize(&out)?)
}

/// Lifts `f: A → B` to the top stages of towers over `A` and `B`, generator by
/// generator, so that `Ψ_B ∘ F̃ = F ∘ Ψ_A` and `F̃` commutes with `d`. When a single
/// path already satisfies both equations it is used, so identities lift to identities.
pub fn lift_functor(f: &DgFunctorData, ta: &SemiFreeStageTower, tb: &SemiFreeStageTower) -> Result<DgFunctorData, ResolveError> {
    if f.source.objects() != ta.target.objects() || f.target.objects() != tb.target.objects() {
        return Err(ResolveError::Dg(crate::dgcat::DgError::BadFunctor("towers do not match the functor".into())));
    }
    let (sa, sb) = (ta.top(), tb.top());
    let (pb, b) = (sb.pres(), tb.target.as_ref());
    let (cidx, bidx) = (cell_index(pb), cell_index(b));
    let ring = pb.ring();
    let mut gen_img: Vec<LinComb> = Vec::with_capacity(ta.generators.len());
    for g in &ta.generators {
        let s = &g.spec;
        let key = (f.object_map[s.source], f.object_map[s.target], s.degree, s.weight);
        let below = (key.0, key.1, key.2 - 1, key.3);
        let (ch, cb, bh) = (cell(&cidx, key), cell(&cidx, below), cell(&bidx, key));
        let d_img = map_elem(pb, &f.object_map, &gen_img, &s.d)?;
        let psi_img = f.apply(&g.psi);
        let mut rhs = lin_to_vec(cb, &d_img);
        rhs.extend(lin_to_vec(bh, &psi_img));
        let sys = d_matrix(pb, ch, cb).vstack(&matrix_of(|j| sb.psi.images[j].clone(), ch, bh));
        let mut ords = orders(pb, cb);
        ords.extend(orders(b, bh));
        let rel = to_rat(&lattice::order_lattice(&ords));
        let rel = if rel.ncols() == 0 { ExactMatrix::zeros(ords.len(), 0) } else { rel };
        let single = (0..ch.len()).find(|&j| {
            let diff: Vec<Coeff> = sys.column_vector(j).iter().zip(&rhs).map(|(a, r)| a - r).collect();
            diff.iter().all(Zero::is_zero) || (rel.ncols() > 0 && solve(ring, &rel, &diff).is_some())
        });
        let img = match single {
            Some(j) => LinComb::basis(ch[j]),
            None => {
                let sol = solve(ring, &sys.hstack(&rel), &rhs).ok_or_else(|| ResolveError::CapExceeded {
                    stage_cap: tb.stages.len() - 1,
                    remaining: vec![format!("no lift for generator {} within the target tower's caps", s.name)],
                })?;
                vec_to_lin(ch, &sol[..ch.len()])
            }
        };
        gen_img.push(pb.normalize(&img)?);
    }
    let images = sa
        .cat
        .paths
        .iter()
        .map(|k| map_path(pb, &f.object_map, &gen_img, k))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DgFunctorData::new(sa.psi.source.clone(), sb.psi.source.clone(), f.object_map.clone(), images)?)
}

/// Every failure of `Ψ_B ∘ F̃ = F ∘ Ψ_A` and `d F̃ = F̃ d` on the basis of the source
/// stage, plus functor violations of `F̃`.
pub fn check_lift(f: &DgFunctorData, lifted: &DgFunctorData, ta: &SemiFreeStageTower, tb: &SemiFreeStageTower) -> Vec<String> {
    let (sa, sb) = (ta.top(), tb.top());
    let b = tb.target.as_ref();
    let mut out: Vec<String> = lifted.validate().iter().map(|v| v.to_string()).collect();
    for i in 0..sa.cat.paths.len() {
        let lhs = sb.psi.apply(&lifted.images[i]);
        let rhs = f.apply(&sa.psi.images[i]);
        if !b.normalize_unchecked(&lhs.sub(&rhs)).is_zero() {
            out.push(format!("square fails on {}", sa.pres().morphism(i).name));
        }
    }
    out
}

/// Whether a functor between stages kills every non-identity basis morphism.
pub fn vanishes_off_units(g: &DgFunctorData) -> bool {
    (0..g.source.basis().len()).filter(|&i| !g.source.is_unit(i)).all(|i| g.images[i].is_zero())
}

