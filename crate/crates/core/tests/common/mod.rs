#![allow(dead_code)]


use mixhom::dgcat::{path_algebra_presentation, DgPresentation, Quiver};
use mixhom::exactlin::RingSpec;
use mixhom::resolution::{free_category, GeneratorSpec, PathElem};
use mixhom::Coeff;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_WEIGHT: i64 = 3;

fn c(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

fn ring(rng: &mut ChaCha8Rng) -> RingSpec {
    match rng.gen_range(0..3) {
        0 => RingSpec::Rationals,
        1 => RingSpec::Integers,
        _ => RingSpec::IntegersModN(3),
    }
}

/// A free dg category on at most four generators. Each differential is zero, a
/// multiple of an earlier closed generator, or a multiple of a composite of two earlier
/// closed generators, so d² = 0 holds by construction.
fn free_dg(rng: &mut ChaCha8Rng, degree_cap: i64) -> DgPresentation {
    let n_obj = rng.gen_range(1..=3);
    let objects: Vec<String> = (0..n_obj).map(|i| format!("X{i}")).collect();
    let mut gens: Vec<GeneratorSpec> = Vec::new();
    let mut closed: Vec<bool> = Vec::new();
    for k in 0..rng.gen_range(0..=4) {
        let (source, target) = (rng.gen_range(0..n_obj), rng.gen_range(0..n_obj));
        let degree = rng.gen_range(0..=2);
        let weight = if degree == 0 { rng.gen_range(1..=MAX_WEIGHT) } else { rng.gen_range(0..=MAX_WEIGHT) };
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        if degree > 0 {
            for i in (0..gens.len()).filter(|&i| closed[i]) {
                let gi = &gens[i];
                if gi.source == source && gi.target == target && gi.degree == degree - 1 && gi.weight == weight {
                    candidates.push(vec![i]);
                }
                for j in (0..gens.len()).filter(|&j| closed[j]) {
                    let gj = &gens[j];
                    if gi.source == source
                        && gi.target == gj.source
                        && gj.target == target
                        && gi.degree + gj.degree == degree - 1
                        && gi.weight + gj.weight == weight
                    {
                        candidates.push(vec![i, j]);
                    }
                }
            }
        }
        let mut d = PathElem::new();
        if !candidates.is_empty() && rng.gen_bool(0.75) {
            let path = candidates[rng.gen_range(0..candidates.len())].clone();
            let coeff = [1, -1, 2, 3][rng.gen_range(0..4)];
            d.insert((source, path), c(coeff));
        }
        closed.push(d.is_empty());
        gens.push(GeneratorSpec { name: format!("g{k}"), source, target, degree, weight, d });
    }
    free_category(&ring(rng), &objects, &gens, degree_cap, (0, MAX_WEIGHT)).expect("random free category").pres
}

/// A path algebra on at most four arrows modulo random monomial relations of length two.
fn path_algebra(rng: &mut ChaCha8Rng) -> DgPresentation {
    let n_obj = rng.gen_range(1..=3);
    let names: Vec<String> = (0..n_obj).map(|i| format!("X{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut q = Quiver::new(&refs);
    for k in 0..rng.gen_range(0..=4) {
        q.arrow(&format!("a{k}"), rng.gen_range(0..n_obj), rng.gen_range(0..n_obj));
    }
    let n = q.arrows.len();
    for a in 0..n {
        for b in 0..n {
            if q.arrows[a].target == q.arrows[b].source && rng.gen_bool(0.3) {
                q.relation(vec![(c(1), vec![a, b])]);
            }
        }
    }
    path_algebra_presentation(ring(rng), &q, MAX_WEIGHT).expect("random path algebra")
}

/// A small valid presentation determined by `seed`: at most three objects, at most
/// four generators, degrees at most two, weights in `0..=3`.
pub fn random_presentation(seed: u64, degree_cap: i64) -> DgPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.gen_bool(0.6) {
        free_dg(&mut rng, degree_cap)
    } else {
        path_algebra(&mut rng)
    }
}

pub fn weights() -> std::collections::BTreeSet<i64> {
    (0..=MAX_WEIGHT).collect()
}

