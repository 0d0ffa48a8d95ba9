mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use mixhom::dgcat::{builtin_presentation, kronecker_quiver, path_algebra_presentation, Builtin, DgFunctorData, DgPresentation, LinComb, Quiver};
use mixhom::exactlin::{DegreeHomology, RingSpec};
use mixhom::hochschild::{build_mixed_complex, build_mixed_complex_with, hc, hh, hh_by_weight, BuildOptions};
use mixhom::resolution::{
    check_lift, check_resolution, flatness_probe, is_boundary_at, lift_functor, semifree_resolve, shukla_mixed_complex,
    short_exact_test_complex, vanishes_off_units, ShuklaCaps, ShuklaPath,
};
use mixhom::scheme::{affine_line, affine_line_bar, cech_homology, keller_compare, mayer_vietoris_check, projective_line, Mode};
use mixhom::Coeff;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ws(r: std::ops::RangeInclusive<i64>) -> BTreeSet<i64> {
    r.collect()
}

fn int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

fn dual_quiver(objects: &[&str]) -> Quiver {
    let mut q = Quiver::new(objects);
    q.arrow("x", 0, 0);
    q.relation(vec![(int(1), vec![0, 0])]);
    q
}

fn z2() -> Arc<DgPresentation> {
    Arc::new(builtin_presentation(Builtin::CyclicQuotient(2), RingSpec::Integers, (0, 0)).unwrap())
}

/// Dense unnormalized bar complex of a finite-dimensional commutative algebra given by
/// structure constants: `mult[i][j]` is the product of basis elements `i` and `j`.
struct DenseBar {
    mult: Vec<Vec<Vec<BigRational>>>,
}

impl DenseBar {
    fn dim(&self) -> usize {
        self.mult.len()
    }

    fn index(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &e| acc * self.dim() + e)
    }

    fn word(&self, mut k: usize, len: usize) -> Vec<usize> {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = k % self.dim();
            k /= self.dim();
        }
        w
    }

    /// Matrix of b from degree n to degree n - 1, as rows of the target.
    fn boundary(&self, n: usize) -> Vec<Vec<BigRational>> {
        let d = self.dim();
        let (src, tgt) = (d.pow(n as u32 + 1), d.pow(n as u32));
        let mut m = vec![vec![BigRational::zero(); src]; tgt];
        for col in 0..src {
            let a = self.word(col, n + 1);
            for i in 0..=n {
                let sign = if i % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                let (x, y) = if i < n { (a[i], a[i + 1]) } else { (a[n], a[0]) };
                for (e, c) in self.mult[x][y].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut out: Vec<usize> = if i < n {
                        a[..i].iter().chain([&e]).chain(&a[i + 2..]).copied().collect()
                    } else {
                        [e].iter().chain(&a[1..n]).copied().collect()
                    };
                    out.truncate(n);
                    let r = self.index(&out);
                    m[r][col] = &m[r][col] + &sign * c;
                }
            }
        }
        m
    }

    fn betti(&self, n: usize) -> usize {
        let dn = if n == 0 { 0 } else { rank(self.boundary(n)) };
        self.dim().pow(n as u32 + 1) - dn - rank(self.boundary(n + 1))
    }
}

fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for j in c..cols {
                let v = &f * &m[r][j];
                m[i][j] = &m[i][j] - v;
            }
        }
        r += 1;
    }
    r
}

fn dual_numbers_oracle(top: usize) -> Vec<usize> {
    let (o, l) = (BigRational::one(), BigRational::zero());
    let bar = DenseBar {
        mult: vec![vec![vec![o.clone(), l.clone()], vec![l.clone(), o.clone()]], vec![vec![l.clone(), o], vec![l.clone(), l]]],
    };
    (0..=top).map(|n| bar.betti(n)).collect()
}

fn identities_on_random_presentations() -> Check {
    let start = Instant::now();
    let n = 60u64;
    for seed in 0..n {
        let p = common::random_presentation(seed, 6);
        let m = build_mixed_complex(&p, 5, &common::weights()).map_err(|e| format!("seed {seed}: {e}"))?;
        m.check_identities().map_err(|e| format!("seed {seed}: {e}"))?;
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(60), "{n} presentations took {took:.1?}");
    Ok(format!("b² = B² = bB + Bb = 0 on [0,5] for {n} presentations in {took:.1?}"))
}

fn ground_field() -> Check {
    let p = builtin_presentation(Builtin::Discrete(1), RingSpec::Rationals, (0, 0)).unwrap();
    let m = build_mixed_complex(&p, 4, &ws(0..=0)).map_err(|e| e.to_string())?;
    let (h, c) = (hh(&m, 0..=4).unwrap().free_ranks(), hc(&m, 0..=4).unwrap().free_ranks());
    ensure!(h == [1, 0, 0, 0, 0], "HH = {h:?}");
    ensure!(c == [1, 0, 1, 0, 1], "HC = {c:?}");
    Ok(format!("HH = {h:?}, HC = {c:?}"))
}

fn dual_numbers() -> Check {
    let oracle = dual_numbers_oracle(5);
    ensure!(oracle == [2, 1, 1, 1, 1, 1], "dense bar oracle gives {oracle:?}");
    let p = path_algebra_presentation(RingSpec::Rationals, &dual_quiver(&["X"]), 6).unwrap();
    let m = build_mixed_complex(&p, 5, &ws(0..=6)).map_err(|e| e.to_string())?;
    let got = hh(&m, 0..=5).unwrap().free_ranks();
    ensure!(got == oracle, "engine {got:?}, oracle {oracle:?}");
    Ok(format!("HH ranks {got:?} match the dense bar complex"))
}

fn keller(ring: RingSpec) -> Check {
    let start = Instant::now();
    let c = projective_line(&ring, &ws(-3..=3), 4);
    let k = path_algebra_presentation(ring.clone(), &kronecker_quiver(), 2).unwrap();
    let m = build_mixed_complex(&k, 3, &ws(0..=2)).map_err(|e| e.to_string())?;
    let v = keller_compare(&m, &c, 0..=3, Mode::Hh).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let (a, b) = (v.categorical.free_ranks(), v.scheme.free_ranks());
    ensure!(v.pass, "verdict FAIL: categorical {a:?}, scheme {b:?}");
    ensure!(a == [2, 0, 0, 0] && b == a, "categorical {a:?}, scheme {b:?}");
    let torsion_free = |r: &mixhom::HomologyReport| r.degrees.values().all(|d| d.torsion.is_empty());
    ensure!(torsion_free(&v.categorical) && torsion_free(&v.scheme), "unexpected torsion");
    ensure!(took < Duration::from_secs(30), "took {took:.1?}");
    Ok(format!("PASS over {ring}, both sides {a:?} without torsion, {took:.1?}"))
}

fn shukla() -> Check {
    let caps = ShuklaCaps { max_degree: 4, weights: ws(0..=0), stage_cap: 8 };
    let s = shukla_mixed_complex(z2(), &caps).map_err(|e| e.to_string())?;
    ensure!(s.path == ShuklaPath::Resolved, "path {:?}", s.path);
    let k = builtin_presentation(Builtin::KoszulDga(2), RingSpec::Integers, (0, 0)).unwrap();
    let oracle = hh(&build_mixed_complex(&k, 4, &ws(0..=0)).unwrap(), 0..=4).unwrap();
    let got = hh(&s.complex, 0..=4).map_err(|e| e.to_string())?;
    ensure!(got == oracle, "resolved {got:?}, Koszul {oracle:?}");
    let two = DegreeHomology { free_rank: 0, torsion: vec![BigInt::from(2)] };
    for t in 0..=4 {
        let want = if t % 2 == 0 { two.clone() } else { DegreeHomology::default() };
        ensure!(got.get(t) == want, "degree {t}: {}", got.get(t));
    }
    Ok("resolved Z/2 equals the Koszul dga on 0..4, torsion Z/2 in even degrees".into())
}

fn flatness() -> Check {
    let n = short_exact_test_complex(&RingSpec::Integers, 2);
    let k = builtin_presentation(Builtin::KoszulDga(2), RingSpec::Integers, (0, 0)).unwrap();
    ensure!(flatness_probe(&k, &n, 0..=3).map_err(|e| e.to_string())?.all_acyclic(), "Koszul dga not flat");
    let r = flatness_probe(&z2(), &n, 0..=3).map_err(|e| e.to_string())?;
    ensure!(!r.all_acyclic(), "Z/2 reported flat");
    let h = &r.pairs[&("X".to_string(), "X".to_string())].homology;
    let witness = h.degrees.iter().find(|(_, d)| d.torsion == [BigInt::from(2)]);
    ensure!(witness.is_some(), "no Z/2 witness in {h:?}");
    Ok(format!("Koszul dga acyclic; Z/2 has H{} = Z/2", witness.unwrap().0))
}

fn tower_conditions() -> Check {
    let t = semifree_resolve(z2(), 4, 4, (0, 0)).map_err(|e| e.to_string())?;
    for s in 1..t.stages.len() {
        let r = check_resolution(&t, s, 0..=3).map_err(|e| e.to_string())?;
        ensure!(r.surjective_on_cocycles(), "condition iii fails at stage {s}");
    }
    let r1 = check_resolution(&t, 1, 0..=2).map_err(|e| e.to_string())?;
    let bad = r1.unresolved().find(|u| u.display == "2*1_X").ok_or("2*1_X not unresolved at stage 1")?;
    ensure!(!is_boundary_at(&t, 1, bad).unwrap(), "2*1_X already a boundary at stage 1");
    ensure!(is_boundary_at(&t, 2, bad).unwrap(), "2*1_X not a boundary at stage 2");
    Ok(format!("iii holds on stages 1..{}; 2*1_X unresolved at 1, a boundary at 2", t.stages.len() - 1))
}

fn functor(a: &Arc<DgPresentation>, b: &Arc<DgPresentation>, objects: Vec<usize>, named: &[(&str, &str)]) -> DgFunctorData {
    let mut images = vec![LinComb::zero(); a.basis().len()];
    for (x, &y) in objects.iter().enumerate() {
        images[a.unit(x)] = LinComb::basis(b.unit(y));
    }
    for (s, t) in named {
        images[a.find(s).unwrap()] = LinComb::basis(b.find(t).unwrap());
    }
    DgFunctorData::new(a.clone(), b.clone(), objects, images).unwrap()
}

fn lifts() -> Check {
    let d1 = Arc::new(builtin_presentation(Builtin::Discrete(1), RingSpec::Integers, (0, 2)).unwrap());
    let dual = Arc::new(path_algebra_presentation(RingSpec::Integers, &dual_quiver(&["X0"]), 2).unwrap());
    let (ta, tb) = (semifree_resolve(d1.clone(), 4, 3, (0, 2)).unwrap(), semifree_resolve(dual.clone(), 4, 3, (0, 2)).unwrap());
    let f = functor(&d1, &dual, vec![0], &[]);
    let ft = lift_functor(&f, &ta, &tb).map_err(|e| e.to_string())?;
    let bad = check_lift(&f, &ft, &ta, &tb);
    ensure!(bad.is_empty(), "unit inclusion: {bad:?}");
    let checked = ta.generators.len() + tb.generators.len();

    let a = Arc::new(path_algebra_presentation(RingSpec::Integers, &dual_quiver(&["X"]), 2).unwrap());
    let b = Arc::new(path_algebra_presentation(RingSpec::Integers, &dual_quiver(&["X", "Y"]), 2).unwrap());
    let mut c = DgPresentation::new(RingSpec::Integers, (0, 2)).unwrap();
    let z = c.add_object("Z").unwrap();
    c.add_object("W").unwrap();
    c.set_order(c.unit(z), BigInt::from(1)).unwrap();
    let c = Arc::new(c);
    let f = functor(&a, &b, vec![0], &[("x", "x")]);
    let g = functor(&b, &c, vec![0, 1], &[]);
    ensure!(vanishes_off_units(&f.then(&g).unwrap()), "GF does not vanish");
    let (ta, tb, tc) = (
        semifree_resolve(a, 4, 3, (0, 2)).unwrap(),
        semifree_resolve(b, 4, 3, (0, 2)).unwrap(),
        semifree_resolve(c, 4, 3, (0, 2)).unwrap(),
    );
    let (ft, gt) = (lift_functor(&f, &ta, &tb).map_err(|e| e.to_string())?, lift_functor(&g, &tb, &tc).map_err(|e| e.to_string())?);
    ensure!(check_lift(&f, &ft, &ta, &tb).is_empty() && check_lift(&g, &gt, &tb, &tc).is_empty(), "lift squares fail");
    ensure!(vanishes_off_units(&ft.then(&gt).unwrap()), "lifted composite does not vanish");
    Ok(format!("unit inclusion lift square holds over {checked} tower generators; lifted GF vanishes"))
}

fn mayer_vietoris() -> Check {
    let mut notes = Vec::new();
    for ring in [RingSpec::Rationals, RingSpec::Integers] {
        let c = projective_line(&ring, &ws(-3..=3), 4);
        let r = mayer_vietoris_check(&c, -1..=2, Mode::Hh).map_err(|e| e.to_string())?;
        ensure!(r.exact(), "not exact over {ring}: {r:?}");
        notes.push(ring.to_string());
    }
    Ok(format!("exact on -1..2 over {}", notes.join(" and ")))
}

fn hkr_backends() -> Check {
    let weights = ws(0..=4);
    let bar = affine_line_bar(&RingSpec::Rationals, &weights, 3).map_err(|e| e.to_string())?;
    let dr = affine_line(&RingSpec::Rationals, &weights, 3);
    let a = cech_homology(&bar, 0..=2, Mode::Hh).map_err(|e| e.to_string())?;
    let b = cech_homology(&dr, 0..=2, Mode::Hh).map_err(|e| e.to_string())?;
    for w in 0..=4 {
        ensure!(a.by_weight.get(&w) == b.by_weight.get(&w), "weight {w}: bar {:?}, de Rham {:?}", a.by_weight.get(&w), b.by_weight.get(&w));
    }
    let p = builtin_presentation(Builtin::Polynomial, RingSpec::Rationals, (0, 4)).unwrap();
    let m = build_mixed_complex(&p, 2, &weights).unwrap();
    ensure!(hh_by_weight(&m, 0..=2).unwrap() == b.by_weight, "polynomial category disagrees with de Rham");
    Ok("bar and de Rham patches agree in weights 0..4, degrees 0..2".into())
}

fn reduced_vs_unreduced() -> Check {
    let n = 10u64;
    for seed in 1000..1000 + n {
        let p = common::random_presentation(seed, 4);
        let red = build_mixed_complex_with(&p, 3, &common::weights(), BuildOptions { reduced: true }).map_err(|e| e.to_string())?;
        let unred = build_mixed_complex_with(&p, 3, &common::weights(), BuildOptions { reduced: false }).map_err(|e| e.to_string())?;
        let (a, b) = (hh(&red, 0..=3).unwrap(), hh(&unred, 0..=3).unwrap());
        ensure!(a == b, "seed {seed}: reduced {a:?}, unreduced {b:?}");
    }
    Ok(format!("{n} presentations agree on degrees 0..3"))
}

fn main() {
    let criteria: Vec<(&str, Box<dyn Fn() -> Check>)> = vec![
        ("mixed-complex identities", Box::new(identities_on_random_presentations)),
        ("ground field", Box::new(ground_field)),
        ("dual numbers", Box::new(dual_numbers)),
        ("Kronecker vs P1 over Q", Box::new(|| keller(RingSpec::Rationals))),
        ("Kronecker vs P1 over Z", Box::new(|| keller(RingSpec::Integers))),
        ("resolved Z/2 vs Koszul dga", Box::new(shukla)),
        ("flatness probe", Box::new(flatness)),
        ("tower conditions", Box::new(tower_conditions)),
        ("functor lifts", Box::new(lifts)),
        ("Mayer-Vietoris", Box::new(mayer_vietoris)),
        ("bar vs de Rham", Box::new(hkr_backends)),
        ("reduced vs unreduced", Box::new(reduced_vs_unreduced)),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        match result {
            Ok(note) => println!("criterion {}: PASS [{name}] {note}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL [{name}] {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
