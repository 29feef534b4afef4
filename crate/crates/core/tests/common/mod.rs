#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use pseff_core::poly::{Exponents, Poly};
use pseff_core::rational::Rational;
use pseff_core::{BaseProfile, PtClass};

pub fn monomials(nvars: usize, degree: u32) -> Vec<Exponents> {
    if nvars == 1 {
        return vec![vec![degree]];
    }
    let mut out = Vec::new();
    for first in (0..=degree).rev() {
        for mut rest in monomials(nvars - 1, degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficients are drawn from a pool and consumed cyclically.
pub fn coeff_pool() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 48)
}

pub fn build_profile(nvars: usize, dim: u32, pool: &[(i64, i64)]) -> BaseProfile {
    let mut it = pool.iter().cycle();
    let mut next = || {
        let (n, d) = it.next().unwrap();
        q(*n, *d)
    };
    let basis: Vec<String> = (0..nvars).map(|i| format!("D{i}")).collect();
    let mut top = BTreeMap::new();
    for e in monomials(nvars, dim) {
        top.insert(e, next());
    }
    let chern = (1..=dim)
        .map(|j| Poly::from_terms(nvars, monomials(nvars, j).into_iter().map(|e| (e, next()))))
        .collect();
    BaseProfile::new("random", dim, basis, top, chern).unwrap()
}

pub fn build_class(profile: &BaseProfile, pool: &[(i64, i64)], skip: usize) -> PtClass {
    let n = profile.dim();
    let mut cls = PtClass::zero(profile);
    let mut it = pool.iter().cycle().skip(skip);
    for a in 0..=(2 * n - 1) {
        let rest = 2 * n - 1 - a;
        for e in monomials(profile.nvars(), rest) {
            let (num, den) = it.next().unwrap();
            cls.add_term(a, e, q(*num, *den));
        }
    }
    cls
}

#[derive(Clone, Debug)]
pub enum Ast {
    Num(u32),
    Frac(u32, u32),
    Sym(&'static str),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Pow(Box<Ast>, u32),
}

impl Ast {
    pub fn text(&self) -> String {
        match self {
            Ast::Num(n) => n.to_string(),
            Ast::Frac(a, b) => format!("({a}/{b})"),
            Ast::Sym(s) => s.to_string(),
            Ast::Add(a, b) => format!("({} + {})", a.text(), b.text()),
            Ast::Sub(a, b) => format!("({} - {})", a.text(), b.text()),
            Ast::Mul(a, b) => format!("{}*{}", a.text(), b.text()),
            Ast::Neg(a) => format!("-({})", a.text()),
            Ast::Pow(a, k) => format!("({})^{k}", a.text()),
        }
    }
}

pub fn ast() -> impl Strategy<Value = Ast> {
    let leaf = prop_oneof![
        (0u32..20).prop_map(Ast::Num),
        (1u32..9, 1u32..9).prop_map(|(a, b)| Ast::Frac(a, b)),
        prop::sample::select(vec!["z", "H", "E1", "E2", "E6", "K"]).prop_map(Ast::Sym),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ast::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ast::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ast::Mul(Box::new(a), Box::new(b))),
            inner.clone().prop_map(|a| Ast::Neg(Box::new(a))),
            (inner, 0u32..3).prop_map(|(a, k)| Ast::Pow(Box::new(a), k)),
        ]
    })
}
