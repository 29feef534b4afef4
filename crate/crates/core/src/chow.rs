//! Graded classes on the projectivized tangent bundle `pi: P(T_X) -> X` and
//! their degrees.
//!
//! `P(T_X)` is the Grothendieck projectivization (rank-one quotients), and
//! `z` denotes `c_1(O(1))`. Every degree in this crate is computed with the
//! single pushforward rule
//!
//! ```text
//! pi_*(z^(n-1+j) * pi^* a) = s_j(Omega_X) * a,      s(Omega_X) = 1 / c(Omega_X),
//! ```
//!
//! and `pi_*` of `z^m` with `m < n - 1` is zero. This fixes every sign: on a
//! cubic surface `z^3 = c_1^2 - c_2 = -6`, and on a del Pezzo threefold of
//! degree one with `b_3 = 42` it gives `z^5 = -78`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{add_exponents, total_degree, Exponents, Poly};
use crate::profile::BaseProfile;
use crate::rational::{self, Rational};

/// `s_0(Omega_X), ..., s_n(Omega_X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreVector {
    entries: Vec<Poly>,
}

impl SegreVector {
    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn get(&self, j: u32) -> &Poly {
        &self.entries[j as usize]
    }

    pub fn total(&self) -> Poly {
        self.entries
            .iter()
            .fold(Poly::zero(self.entries[0].nvars()), |acc, s| &acc + s)
    }
}

/// Inverts `c(Omega_X)` as a power series truncated at degree `n`.
pub fn segre_omega(profile: &BaseProfile) -> SegreVector {
    let n = profile.dim();
    let nvars = profile.nvars();
    // c_i(Omega) = (-1)^i c_i(T)
    let c_omega: Vec<Poly> = (0..=n)
        .map(|i| {
            let c = profile.chern(i);
            if i % 2 == 1 {
                -&c
            } else {
                c
            }
        })
        .collect();
    let mut entries = vec![Poly::one(nvars)];
    for j in 1..=n {
        let mut s = Poly::zero(nvars);
        for i in 1..=j {
            s = &s - &(&c_omega[i as usize] * &entries[(j - i) as usize]);
        }
        entries.push(s);
    }
    SegreVector { entries }
}

/// Key of one monomial `z^a * pi^*(x^e)`.
pub type PtKey = (u32, Exponents);

/// A polynomial in `z` and pulled-back divisor symbols, tied to one profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PtClass {
    profile_label: String,
    basis: Arc<[String]>,
    terms: BTreeMap<PtKey, Rational>,
}

impl PtClass {
    pub fn zero(profile: &BaseProfile) -> Self {
        PtClass {
            profile_label: profile.label().to_string(),
            basis: profile.basis().into(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(profile: &BaseProfile, c: Rational) -> Self {
        let mut out = PtClass::zero(profile);
        out.add_term(0, vec![0; profile.nvars()], c);
        out
    }

    /// `c_1(O_{P(T_X)}(1))`.
    pub fn zeta(profile: &BaseProfile) -> Self {
        PtClass::zeta_pow(profile, 1)
    }

    pub fn zeta_pow(profile: &BaseProfile, k: u32) -> Self {
        let mut out = PtClass::zero(profile);
        out.add_term(k, vec![0; profile.nvars()], Rational::one());
        out
    }

    pub fn pullback(profile: &BaseProfile, p: &Poly) -> Self {
        assert_eq!(p.nvars(), profile.nvars(), "polynomial from another ring");
        let mut out = PtClass::zero(profile);
        for (e, c) in p.terms() {
            out.add_term(0, e.clone(), c.clone());
        }
        out
    }

    /// `pi^*` of a named basis symbol.
    pub fn symbol(profile: &BaseProfile, name: &str) -> Result<Self> {
        let p = profile.symbol(name).ok_or_else(|| Error::UnknownSymbol {
            symbol: name.to_string(),
            profile: profile.label().to_string(),
        })?;
        Ok(PtClass::pullback(profile, &p))
    }

    pub fn profile_label(&self) -> &str {
        &self.profile_label
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PtKey, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, zeta_power: u32, base: &[u32]) -> Rational {
        self.terms
            .get(&(zeta_power, base.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, zeta_power: u32, base: Exponents, c: Rational) {
        assert_eq!(base.len(), self.basis.len(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        let key = (zeta_power, base);
        let sum = self.terms.remove(&key).unwrap_or_else(Rational::zero) + c;
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self
            .terms
            .keys()
            .map(|(a, e)| a + total_degree(e))
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Total degree if homogeneous; the zero class reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.empty_like();
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(k.clone(), v * c);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.empty_like();
        acc.add_term(0, vec![0; self.basis.len()], Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// For a degree-one class `a z + pi^* D`, returns `(a, D)`.
    pub fn split_linear(&self, profile: &BaseProfile) -> Result<(Rational, Poly)> {
        check_label(profile, self)?;
        let mut zeta = Rational::zero();
        let mut base = Poly::zero(profile.nvars());
        for ((a, e), c) in &self.terms {
            match (*a, total_degree(e)) {
                (1, 0) => zeta += c,
                (0, 1) => base.add_term(e.clone(), c.clone()),
                _ => {
                    return Err(Error::MalformedClass(format!(
                        "`{self}` is not a divisor class"
                    )))
                }
            }
        }
        Ok((zeta, base))
    }

    fn empty_like(&self) -> Self {
        PtClass {
            profile_label: self.profile_label.clone(),
            basis: self.basis.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn assert_same_ring(&self, other: &Self) {
        assert_eq!(
            self.profile_label, other.profile_label,
            "combining classes over different profiles"
        );
    }
}

impl Add<&PtClass> for &PtClass {
    type Output = PtClass;
    fn add(self, rhs: &PtClass) -> PtClass {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for ((a, e), c) in &rhs.terms {
            out.add_term(*a, e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &PtClass {
    type Output = PtClass;
    fn neg(self) -> PtClass {
        let mut out = self.empty_like();
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), -v);
        }
        out
    }
}

impl Sub<&PtClass> for &PtClass {
    type Output = PtClass;
    fn sub(self, rhs: &PtClass) -> PtClass {
        self + &(-rhs)
    }
}

impl Mul<&PtClass> for &PtClass {
    type Output = PtClass;
    fn mul(self, rhs: &PtClass) -> PtClass {
        self.assert_same_ring(rhs);
        let mut out = self.empty_like();
        for ((a1, e1), c1) in &self.terms {
            for ((a2, e2), c2) in &rhs.terms {
                out.add_term(a1 + a2, add_exponents(e1, e2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for PtClass {
            type Output = PtClass;
            fn $f(self, rhs: PtClass) -> PtClass {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&PtClass> for PtClass {
            type Output = PtClass;
            fn $f(self, rhs: &PtClass) -> PtClass {
                (&self).$f(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for PtClass {
    type Output = PtClass;
    fn neg(self) -> PtClass {
        -&self
    }
}

/// Renders e.g. `3z - H`, `z + 4/3*H`, `2z^2*H - E1^2`.
///
/// The output is accepted by the expression parser and parses back to an
/// equal class.
impl fmt::Display for PtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest z-power first, then the basis order
        let mut keys: Vec<&PtKey> = self.terms.keys().collect();
        keys.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| y.1.cmp(&x.1)));
        for (i, key) in keys.into_iter().enumerate() {
            let c = &self.terms[key];
            let negative = c < &Rational::zero();
            let mag = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = monomial_text(key.0, &key.1, &self.basis);
            if mono.is_empty() {
                f.write_str(&rational::format_short(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else if mag.is_integer() {
                write!(f, "{}{}", mag.numer(), mono)?;
            } else {
                write!(f, "{}/{}*{}", mag.numer(), mag.denom(), mono)?;
            }
        }
        Ok(())
    }
}

fn monomial_text(zeta_power: u32, base: &[u32], basis: &[String]) -> String {
    let mut parts = Vec::new();
    let mut push = |name: &str, k: u32| match k {
        0 => {}
        1 => parts.push(name.to_string()),
        k => parts.push(format!("{name}^{k}")),
    };
    push("z", zeta_power);
    for (name, k) in basis.iter().zip(base) {
        push(name, *k);
    }
    parts.join("*")
}

fn check_label(profile: &BaseProfile, cls: &PtClass) -> Result<()> {
    if cls.profile_label != profile.label() {
        return Err(Error::ProfileMismatch {
            expected: profile.label().to_string(),
            found: cls.profile_label.clone(),
        });
    }
    Ok(())
}

/// Degree of a top-dimensional class on `P(T_X)` (total degree `2n - 1`).
pub fn eval_top(profile: &BaseProfile, cls: &PtClass) -> Result<Rational> {
    check_label(profile, cls)?;
    let n = profile.dim();
    let top = 2 * n - 1;
    let degrees = cls.degrees();
    if degrees.iter().any(|d| *d != top) {
        return Err(Error::DegreeMismatch {
            expected: top,
            found: format!("{degrees:?}"),
        });
    }
    let segre = segre_omega(profile);
    let mut acc = Rational::zero();
    for ((a, e), c) in &cls.terms {
        if *a + 1 < n {
            continue;
        }
        let j = a + 1 - n;
        let mono = Poly::monomial(e.clone(), c.clone());
        acc += profile.integrate(&(segre.get(j) * &mono))?;
    }
    Ok(acc)
}

/// Degree of a product of classes whose degrees add up to `2n - 1`.
pub fn eval_product(profile: &BaseProfile, factors: &[PtClass]) -> Result<Rational> {
    for f in factors {
        check_label(profile, f)?;
    }
    let mut acc = PtClass::constant(profile, Rational::one());
    for f in factors {
        acc = &acc * f;
    }
    eval_top(profile, &acc)
}

/// Degree of `z + eps * pi^*H` on the section of `P(T_X|_l)` given by the
/// quotient `T_X|_l -> O(a_q)` of a line `l` with `H . l = 1`.
pub fn restrict_to_section(
    splitting: &[i64],
    quotient_index: usize,
    eps: &Rational,
) -> Result<Rational> {
    let a = splitting
        .get(quotient_index)
        .ok_or_else(|| Error::out_of_range("quotient index", quotient_index))?;
    Ok(rational::int(*a) + eps)
}

/// Class of the total dual VMRT: `deg_e * z - pi^*(e_* c_1)`.
pub fn dual_vmrt_generic(
    profile: &BaseProfile,
    deg_e: u32,
    pushforward_c1: &Poly,
) -> Result<PtClass> {
    if deg_e == 0 {
        return Err(Error::out_of_range("evaluation degree", 0));
    }
    if pushforward_c1.nvars() != profile.nvars() {
        return Err(Error::MalformedClass(
            "pushforward lives in the wrong ring".into(),
        ));
    }
    if !pushforward_c1.is_homogeneous_of(1) {
        return Err(Error::Inhomogeneous(
            pushforward_c1.degrees().into_iter().collect(),
        ));
    }
    let z = PtClass::zeta(profile).scale(&rational::int(deg_e as i64));
    Ok(&z - &PtClass::pullback(profile, pushforward_c1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::{int, rat};

    fn h(p: &BaseProfile) -> PtClass {
        PtClass::symbol(p, "H").unwrap()
    }

    #[test]
    fn segre_leading_terms() {
        let p = catalog::cubic_surface();
        let s = segre_omega(&p);
        assert_eq!(s.get(0), &Poly::one(p.nvars()));
        assert_eq!(s.get(1), &p.c1());
        assert_eq!(p.integrate(s.get(2)).unwrap(), int(-6));
    }

    #[test]
    fn segre_threefold_degree_one() {
        let p = catalog::del_pezzo_threefold(1, 42);
        assert_eq!(p.integrate(segre_omega(&p).get(3)).unwrap(), int(-78));
    }

    #[test]
    fn cubic_surface_ledger() {
        let p = catalog::cubic_surface();
        let z = PtClass::zeta(&p);
        let hh = h(&p);
        let f = PtClass::symbol(&p, "F").unwrap();
        assert_eq!(eval_top(&p, &z.pow(3)).unwrap(), int(-6));
        assert_eq!(eval_top(&p, &(&z.pow(2) * &hh)).unwrap(), int(3));
        assert_eq!(eval_top(&p, &(&z.pow(2) * &f)).unwrap(), int(2));
        assert_eq!(eval_top(&p, &(&(&z * &hh) * &f)).unwrap(), int(2));
    }

    #[test]
    fn threefold_triple_degree_one() {
        let p = catalog::del_pezzo_threefold(1, 42);
        let z = PtClass::zeta(&p);
        let hh = h(&p);
        let got: Vec<Rational> = (0..3)
            .map(|i| eval_top(&p, &(&z.pow(5 - i) * &hh.pow(i))).unwrap())
            .collect();
        assert_eq!(got, vec![int(-78), int(-8), int(2)]);
    }

    #[test]
    fn low_zeta_power_pushes_forward_to_zero() {
        let p = catalog::del_pezzo_threefold(2, 20);
        let cls = &PtClass::zeta(&p) * &h(&p).pow(4);
        assert_eq!(eval_top(&p, &cls).unwrap(), int(0));
    }

    #[test]
    fn eval_rejects_bad_degree_and_foreign_class() {
        let p = catalog::cubic_surface();
        let q = catalog::k3_quartic();
        match eval_top(&p, &PtClass::zeta(&p).pow(2)) {
            Err(Error::DegreeMismatch { expected: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            eval_top(&p, &PtClass::zeta(&q).pow(3)),
            Err(Error::ProfileMismatch { .. })
        ));
    }

    #[test]
    fn certificates_through_products() {
        let p1 = catalog::del_pezzo_threefold(1, 42);
        let z = PtClass::zeta(&p1);
        let lin = |l: Rational| &z + &h(&p1).scale(&l);
        let v = eval_product(
            &p1,
            &[
                z.clone(),
                lin(int(1)),
                lin(int(3)),
                lin(int(3)),
                lin(int(4)),
            ],
        )
        .unwrap();
        assert_eq!(v, int(-11));

        let p2 = catalog::del_pezzo_threefold(2, 20);
        let z = PtClass::zeta(&p2);
        let lin = |l: Rational| &z + &h(&p2).scale(&l);
        let w = eval_product(
            &p2,
            &[z.clone(), z.clone(), lin(int(2)), lin(int(2)), lin(int(2))],
        )
        .unwrap();
        assert_eq!(w, int(-8));
    }

    #[test]
    fn section_restriction() {
        let split = [2, 1, 1, -1];
        assert_eq!(restrict_to_section(&split, 3, &int(1)).unwrap(), int(0));
        assert!(restrict_to_section(&split, 3, &rat(9, 10)).unwrap() < int(0));
        assert_eq!(restrict_to_section(&[2, 1, 0], 2, &int(0)).unwrap(), int(0));
        assert_eq!(restrict_to_section(&[2, 1, 0], 0, &int(0)).unwrap(), int(2));
        assert!(restrict_to_section(&[2, 1, 0], 3, &int(0)).is_err());
    }

    #[test]
    fn dual_vmrt_from_pushforward() {
        let p = catalog::del_pezzo_threefold(5, 0);
        let hp = p.symbol("H").unwrap();
        // k = 3, r = 10, d = 5: push-forward (k - r/d) H = H
        let cls = dual_vmrt_generic(&p, 3, &hp).unwrap();
        assert_eq!(cls.to_string(), "3z - H");
        let bare = dual_vmrt_generic(&p, 1, &Poly::zero(1)).unwrap();
        assert_eq!(bare, PtClass::zeta(&p));
        let bad = &hp.pow(2) + &hp;
        assert!(matches!(
            dual_vmrt_generic(&p, 1, &bad),
            Err(Error::Inhomogeneous(_))
        ));
    }

    #[test]
    fn display_forms() {
        let p = catalog::del_pezzo_threefold(2, 20);
        let z = PtClass::zeta(&p);
        let cls = &z + &h(&p).scale(&rat(4, 3));
        assert_eq!(cls.to_string(), "z + 4/3*H");
        assert_eq!((-&z.pow(2)).to_string(), "-z^2");
        assert_eq!(PtClass::zero(&p).to_string(), "0");
        assert_eq!(PtClass::constant(&p, rat(-1, 2)).to_string(), "-1/2");
    }
}
