use std::sync::Arc;

use mixhom::hochschild::{self, hc_minus_and_hp, HochschildError};
use mixhom::resolution::{check_resolution, flatness_probe, semifree_resolve, short_exact_test_complex, GeneratorKind};
use mixhom::scheme::{cech_homology, keller_compare, mayer_vietoris_check};

use crate::cover::load_cover;
use crate::job::{CoverArgs, FlatArgs, HomologyArgs, InputArgs, KellerArgs, PeriodicArgs, ResolveArgs};
use crate::report::{factors, yes_no, Report, Table};
use crate::run::{homology_setup, homology_table, input_meta, mixed_complex, mode, range_text, read_presentation, weight_set, JobError};

type Job = Result<Report, JobError>;

pub fn validate(a: &InputArgs) -> Job {
    let p = read_presentation(&a.input, a.ring.clone())?;
    let mut r = Report::new("validate");
    input_meta(&mut r, &a.input, &p);
    r.meta("objects", p.objects().len());
    let mut t = Table::new("basis", &["weight", "morphisms"]);
    for (w, n) in p.ranks_by_weight() {
        t.row(vec![w.to_string(), n.to_string()]);
    }
    r.tables.push(t);
    r.verdict("valid", "yes");
    r.verdict("free", yes_no(p.is_free()));
    Ok(r)
}

pub fn hh_cmd(a: &HomologyArgs, name: &str, cyclic: bool) -> Job {
    let (mut r, m) = homology_setup(a, name, None)?;
    let window = a.degrees.0..=a.degrees.1;
    let rep = if cyclic { hochschild::hc(&m, window)? } else { hochschild::hh(&m, window)? };
    r.tables.push(homology_table(&name.to_uppercase(), &rep));
    Ok(r)
}

pub fn hh(a: &HomologyArgs) -> Job {
    hh_cmd(a, "hh", false)
}

pub fn hc(a: &HomologyArgs) -> Job {
    hh_cmd(a, "hc", true)
}

pub fn hp(a: &PeriodicArgs) -> Job {
    let window = a.homology.degrees.0..=a.homology.degrees.1;
    let (mut r, mut m) = homology_setup(&a.homology, "hp", None)?;
    let c = match hc_minus_and_hp(&m, window.clone(), a.utrunc) {
        Err(HochschildError::WindowTooSmall { needed_cap, .. }) => {
            (r, m) = homology_setup(&a.homology, "hp", Some(needed_cap))?;
            hc_minus_and_hp(&m, window, a.utrunc)?
        }
        other => other?,
    };
    r.meta("utrunc", a.utrunc);
    for (name, rep, pick) in [("HC-", &c.hc_minus, 0usize), ("HP", &c.hp, 1)] {
        let mut t = Table::new(name, &["degree", "free rank", "invariant factors", "stabilized"]);
        for (d, h) in &rep.degrees {
            let s = c.stabilized.get(d).map(|f| if pick == 0 { f.0 } else { f.1 }).unwrap_or(false);
            t.row(vec![d.to_string(), h.free_rank.to_string(), factors(h), yes_no(s).into()]);
        }
        r.tables.push(t);
    }
    Ok(r)
}

pub fn resolve(a: &ResolveArgs) -> Job {
    let p = read_presentation(&a.input.input, a.input.ring.clone())?;
    let mut r = Report::new("resolve");
    input_meta(&mut r, &a.input.input, &p);
    r.meta("stages", a.stages);
    r.meta("degcap", a.degcap);
    r.meta("weights", range_text(a.weights));
    let t = semifree_resolve(Arc::new(p), a.stages, a.degcap, a.weights)?;
    let mut g = Table::new("generators", &["generator", "stage", "kind", "source", "target", "degree", "weight", "differential", "image"]);
    for gen in &t.generators {
        let s = &gen.spec;
        let top = t.top().pres();
        let kind = match gen.kind {
            GeneratorKind::Cocycle => "cocycle",
            GeneratorKind::Lift => "lift",
            GeneratorKind::Killer => "killer",
        };
        let d = top.display_lin(top.differential(top.find(&s.name).expect("generator in top stage")));
        g.row(vec![
            s.name.clone(),
            gen.stage.to_string(),
            kind.into(),
            top.objects()[s.source].clone(),
            top.objects()[s.target].clone(),
            s.degree.to_string(),
            s.weight.to_string(),
            d,
            t.target.display_lin(&gen.psi),
        ]);
    }
    r.tables.push(g);
    let mut l = Table::new("ledger", &["generator", "stage", "defect", "degree", "weight", "order", "witness"]);
    for e in &t.ledger {
        l.row(vec![
            e.generator.clone(),
            e.stage.to_string(),
            format!("{:?}", e.kind),
            e.cell.2.to_string(),
            e.cell.3.to_string(),
            e.order.to_string(),
            e.witness.clone(),
        ]);
    }
    r.tables.push(l);
    let (lo, hi) = a.check.unwrap_or((0, a.degcap - 1));
    let mut c = Table::new("check", &["stage", "surjective on cocycles", "quasi-isomorphic", "unresolved"]);
    let mut last = None;
    for s in 0..t.stages.len() {
        let rep = check_resolution(&t, s, lo..=hi)?;
        let bad: Vec<String> = rep.unresolved().map(|u| u.display.clone()).collect();
        c.row(vec![
            s.to_string(),
            yes_no(rep.surjective_on_cocycles()).into(),
            yes_no(rep.quasi_isomorphic()).into(),
            if bad.is_empty() { "-".into() } else { bad.join("; ") },
        ]);
        last = Some(rep.quasi_isomorphic());
    }
    r.tables.push(c);
    r.verdict("stable", yes_no(t.stable));
    r.verdict("resolved", yes_no(last.unwrap_or(false)));
    Ok(r)
}

pub fn probe_flat(a: &FlatArgs) -> Job {
    let p = read_presentation(&a.input.input, a.input.ring.clone())?;
    let mut r = Report::new("probe-flat");
    input_meta(&mut r, &a.input.input, &p);
    r.meta("modulus", a.modulus);
    r.meta("degrees", range_text(a.degrees));
    let n = short_exact_test_complex(p.ring(), a.modulus);
    let f = flatness_probe(&p, &n, a.degrees.0..=a.degrees.1)?;
    let mut t = Table::new("pairs", &["pair", "acyclic", "homology"]);
    for ((x, y), pf) in &f.pairs {
        let nonzero: Vec<String> = pf.homology.degrees.iter().filter(|(_, h)| !h.is_zero()).map(|(d, h)| format!("H{d}={h}")).collect();
        t.row(vec![format!("{x}->{y}"), yes_no(pf.acyclic).into(), if nonzero.is_empty() { "0".into() } else { nonzero.join(" ") }]);
    }
    r.tables.push(t);
    r.verdict("flat", yes_no(f.all_acyclic()));
    Ok(r)
}

fn cover_meta(r: &mut Report, a: &CoverArgs, ring: &mixhom::exactlin::RingSpec, weights: &std::collections::BTreeSet<i64>) {
    r.meta("cover", &a.cover);
    r.meta("ring", ring);
    let (lo, hi) = (weights.iter().next().copied().unwrap_or(0), weights.iter().next_back().copied().unwrap_or(0));
    r.meta("weights", range_text((lo, hi)));
    r.meta("degrees", range_text(a.degrees));
    r.meta("mode", format!("{:?}", mode(a.mode)).to_lowercase());
}

pub fn cech(a: &CoverArgs) -> Job {
    let c = load_cover(&a.cover, a.ring.clone(), a.weights, a.degrees.1)?;
    let mut r = Report::new("cech");
    cover_meta(&mut r, a, &c.ring, &c.weights);
    let rep = cech_homology(&c, a.degrees.0..=a.degrees.1, mode(a.mode))?;
    r.tables.push(homology_table("total", &rep.total));
    Ok(r)
}

pub fn mv(a: &CoverArgs) -> Job {
    let c = load_cover(&a.cover, a.ring.clone(), a.weights, a.degrees.1 + 1)?;
    let mut r = Report::new("mv");
    cover_meta(&mut r, a, &c.ring, &c.weights);
    let rep = mayer_vietoris_check(&c, a.degrees.0..=a.degrees.1, mode(a.mode))?;
    let mut t = Table::new("sequence", &["degree", "X", "V", "W", "V∩W", "rank restrict", "rank difference", "rank connecting", "exact"]);
    for (d, row) in &rep.rows {
        t.row(vec![
            d.to_string(),
            row.h_x.to_string(),
            row.h_v.to_string(),
            row.h_w.to_string(),
            row.h_vw.to_string(),
            row.rank_restrict.to_string(),
            row.rank_difference.to_string(),
            row.rank_connecting.to_string(),
            yes_no(row.exact).into(),
        ]);
    }
    r.tables.push(t);
    r.verdict("exact", yes_no(rep.exact()));
    Ok(r)
}

pub fn keller(a: &KellerArgs) -> Job {
    let p = read_presentation(&a.input, a.cover.ring.clone())?;
    let ring = p.ring().clone();
    let c = load_cover(&a.cover.cover, Some(ring.clone()), a.cover.weights, a.cover.degrees.1)?;
    let mut r = Report::new("keller");
    r.meta("input", a.input.display());
    cover_meta(&mut r, &a.cover, &ring, &c.weights);
    let weights = weight_set(&p, a.cat_weights);
    let m = mixed_complex(p, a.cover.degrees.1, &weights, false, a.stages, &mut r)?;
    let v = keller_compare(&m, &c, a.cover.degrees.0..=a.cover.degrees.1, mode(a.cover.mode))?;
    let mut t = Table::new("comparison", &["degree", "categorical", "scheme", "agree"]);
    for d in a.cover.degrees.0..=a.cover.degrees.1 {
        let (x, y) = (v.categorical.get(d), v.scheme.get(d));
        t.row(vec![d.to_string(), x.to_string(), y.to_string(), yes_no(x == y).into()]);
    }
    r.tables.push(t);
    r.verdict("keller", if v.pass { "PASS" } else { "FAIL" });
    r.verdict("weightwise", yes_no(v.weightwise));
    Ok(r)
}
