use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::lincomb::LinComb;
use super::presentation::DgPresentation;
use super::sign;
use crate::Coeff;

/// One failed axiom, with the basis morphisms that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NegativeDegree { morphism: String, degree: i64 },
    DifferentialGrading { morphism: String, term: String },
    ProductGrading { g: String, f: String, term: String },
    UnitNotClosed { object: String },
    /// A structure map is not well defined on a torsion summand.
    NotWellDefined { what: String },
    DSquared { morphism: String, value: String },
    Leibniz { g: String, f: String, defect: String },
    Associativity { h: String, g: String, f: String, defect: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NegativeDegree { morphism, degree } => {
                write!(f, "negative homological degree {degree} on {morphism}")
            }
            Violation::DifferentialGrading { morphism, term } => {
                write!(f, "d({morphism}) has ill-graded term {term}")
            }
            Violation::ProductGrading { g, f: ff, term } => write!(f, "{g}*{ff} has ill-graded term {term}"),
            Violation::UnitNotClosed { object } => write!(f, "unit of {object} is not a cycle"),
            Violation::NotWellDefined { what } => write!(f, "{what} is not well defined on torsion"),
            Violation::DSquared { morphism, value } => write!(f, "d(d({morphism})) = {value}"),
            Violation::Leibniz { g, f: ff, defect } => write!(f, "Leibniz fails on ({g},{ff}): defect {defect}"),
            Violation::Associativity { h, g, f: ff, defect } => {
                write!(f, "associativity fails on ({h},{g},{ff}): defect {defect}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the dg-category axioms on every basis element, pair and triple whose products
/// stay inside the presented window. Never aborts; returns all violations found.
pub fn validate_presentation(p: &DgPresentation) -> ValidationReport {
    let mut v = Vec::new();
    let n = p.basis().len();
    let name = |i: usize| p.morphism(i).name.clone();

    for (i, b) in p.basis().iter().enumerate() {
        if b.degree < 0 {
            v.push(Violation::NegativeDegree { morphism: b.name.clone(), degree: b.degree });
        }
        for t in p.differential(i).indices() {
            let c = p.morphism(t);
            if c.source != b.source || c.target != b.target || c.degree != b.degree - 1 || c.weight != b.weight {
                v.push(Violation::DifferentialGrading { morphism: b.name.clone(), term: c.name.clone() });
            }
        }
    }
    for (x, &u) in p.units().iter().enumerate() {
        if !p.differential(u).is_zero() {
            v.push(Violation::UnitNotClosed { object: p.objects()[x].clone() });
        }
    }
    for (&(g, f), val) in p.products() {
        let (bg, bf) = (p.morphism(g), p.morphism(f));
        for t in val.indices() {
            let c = p.morphism(t);
            if c.source != bf.source
                || c.target != bg.target
                || c.degree != bg.degree + bf.degree
                || c.weight != bg.weight + bf.weight
            {
                v.push(Violation::ProductGrading { g: name(g), f: name(f), term: c.name.clone() });
            }
        }
    }
    check_orders(p, &mut v);

    for i in 0..n {
        let dd = p.d_lin(p.differential(i));
        if !dd.is_zero() {
            v.push(Violation::DSquared { morphism: name(i), value: p.display_lin(&dd) });
        }
    }

    let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); p.objects().len()];
    for i in 0..n {
        by_source[p.morphism(i).source].push(i);
    }
    let in_range = |a: usize, b: usize| {
        let (ma, mb) = (p.morphism(a), p.morphism(b));
        p.in_range(ma.degree + mb.degree, ma.weight + mb.weight)
    };

    for f in 0..n {
        for &g in &by_source[p.morphism(f).target] {
            if p.is_unit(f) && p.is_unit(g) || !in_range(g, f) {
                continue;
            }
            let gf = p.compose(g, f).expect("in range");
            let lhs = p.d_lin(&gf);
            let mut rhs = p.compose_lin(p.differential(g), &LinComb::basis(f)).expect("lower degree");
            let right = p.compose_lin(&LinComb::basis(g), p.differential(f)).expect("lower degree");
            rhs.add_scaled(&right, &sign(p.morphism(g).degree));
            let defect = p.normalize_unchecked(&lhs.sub(&rhs));
            if !defect.is_zero() {
                v.push(Violation::Leibniz { g: name(g), f: name(f), defect: p.display_lin(&defect) });
            }
        }
    }

    for f in 0..n {
        if p.is_unit(f) {
            continue;
        }
        for &g in &by_source[p.morphism(f).target] {
            if p.is_unit(g) || !in_range(g, f) {
                continue;
            }
            let gf = p.compose(g, f).expect("in range");
            for &h in &by_source[p.morphism(g).target] {
                if p.is_unit(h) {
                    continue;
                }
                let (mh, mg, mf) = (p.morphism(h), p.morphism(g), p.morphism(f));
                if !p.in_range(mh.degree + mg.degree + mf.degree, mh.weight + mg.weight + mf.weight)
                    || !in_range(h, g)
                {
                    continue;
                }
                let left = p.compose_lin(&p.compose(h, g).expect("in range"), &LinComb::basis(f)).expect("in range");
                let right = p.compose_lin(&LinComb::basis(h), &gf).expect("in range");
                let defect = left.sub(&right);
                if !defect.is_zero() {
                    v.push(Violation::Associativity {
                        h: name(h),
                        g: name(g),
                        f: name(f),
                        defect: p.display_lin(&defect),
                    });
                }
            }
        }
    }
    ValidationReport { violations: v }
}

/// Every structure map must kill the relations of its inputs: `c·d(m) = 0` when `c·m = 0`,
/// and likewise for products and for morphisms next to torsion units.
fn check_orders(p: &DgPresentation, v: &mut Vec<Violation>) {
    let kills = |c: &BigInt, l: &LinComb| -> bool {
        c.is_zero() || p.normalize_unchecked(&l.scaled(&Coeff::from_integer(c.clone()))).is_zero()
    };
    for i in 0..p.basis().len() {
        let c = p.effective_order(i);
        if !kills(&c, p.differential(i)) {
            v.push(Violation::NotWellDefined { what: format!("d on {}", p.morphism(i).name) });
        }
        let b = p.morphism(i);
        // f = 1_Y f 1_X, so the unit orders annihilate f; gcd with 0 (free) is neutral
        let ends = p.effective_order(p.unit(b.source)).gcd(&p.effective_order(p.unit(b.target)));
        if !p.is_unit(i) && !kills(&ends, &LinComb::basis(i)) {
            v.push(Violation::NotWellDefined { what: format!("the unit action on {}", b.name) });
        }
    }
    for (&(g, f), val) in p.products() {
        let c = p.effective_order(g).gcd(&p.effective_order(f));
        if !kills(&c, val) {
            v.push(Violation::NotWellDefined {
                what: format!("{}*{}", p.morphism(g).name, p.morphism(f).name),
            });
        }
    }
}
