//! Del Pezzo surfaces as blow-ups of `P^2`: the Picard lattice, its
//! `(-1)`-curves and conic pencils, conic-bundle dual VMRT classes, and the
//! intersection certificates for degrees three, four and five.
//!
//! Coefficient vectors are written in the blow-up basis `(H, E_1, ..., E_r)`
//! with intersection form `diag(1, -1, ..., -1)`, so the canonical class is
//! `(-3, 1, ..., 1)` and a class `a_0 H - sum m_i E_i` has coefficients
//! `(a_0, -m_1, ..., -m_r)`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use crate::chow::{eval_top, PtClass};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::profile::BaseProfile;
use crate::rational::{int, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PicardLattice {
    degree: u32,
}

/// Integer divisor class in the blow-up basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CurveClass(pub Vec<i64>);

impl CurveClass {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }
}

impl std::ops::Add for &CurveClass {
    type Output = CurveClass;
    fn add(self, rhs: &CurveClass) -> CurveClass {
        CurveClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Sub for &CurveClass {
    type Output = CurveClass;
    fn sub(self, rhs: &CurveClass) -> CurveClass {
        CurveClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl PicardLattice {
    pub fn rank(&self) -> usize {
        10 - self.degree as usize
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of blown-up points.
    pub fn points(&self) -> usize {
        self.rank() - 1
    }

    pub fn canonical(&self) -> CurveClass {
        let mut k = vec![1; self.rank()];
        k[0] = -3;
        CurveClass(k)
    }

    pub fn hyperplane(&self) -> CurveClass {
        self.unit(0)
    }

    pub fn exceptional(&self, i: usize) -> CurveClass {
        assert!(i >= 1 && i <= self.points(), "no exceptional curve E{i}");
        self.unit(i)
    }

    fn unit(&self, i: usize) -> CurveClass {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        CurveClass(v)
    }

    pub fn dot(&self, a: &CurveClass, b: &CurveClass) -> i64 {
        debug_assert_eq!(a.0.len(), self.rank());
        debug_assert_eq!(b.0.len(), self.rank());
        a.0[0] * b.0[0]
            - a.0[1..]
                .iter()
                .zip(&b.0[1..])
                .map(|(x, y)| x * y)
                .sum::<i64>()
    }

    pub fn self_intersection(&self, a: &CurveClass) -> i64 {
        self.dot(a, a)
    }

    pub fn anticanonical_degree(&self, a: &CurveClass) -> i64 {
        -self.dot(&self.canonical(), a)
    }

    pub fn is_minus_one_curve(&self, c: &CurveClass) -> bool {
        self.self_intersection(c) == -1 && self.anticanonical_degree(c) == 1
    }

    pub fn is_conic(&self, c: &CurveClass) -> bool {
        self.self_intersection(c) == 0 && self.anticanonical_degree(c) == 2
    }

    pub fn scalar(&self, a: i64, c: &CurveClass) -> CurveClass {
        CurveClass(c.0.iter().map(|x| a * x).collect())
    }

    /// Simple roots `E_i - E_{i+1}` and, with at least three points,
    /// `H - E_1 - E_2 - E_3`.
    pub fn simple_roots(&self) -> Vec<CurveClass> {
        let r = self.points();
        let mut roots = Vec::new();
        for i in 1..r {
            roots.push(&self.unit(i) - &self.unit(i + 1));
        }
        if r >= 3 {
            let mut v = vec![0; self.rank()];
            v[0] = 1;
            v[1..=3].fill(-1);
            roots.push(CurveClass(v));
        }
        roots
    }

    /// Weyl reflection `C -> C + (C . alpha) alpha` in a root with `alpha^2 = -2`.
    pub fn reflect(&self, c: &CurveClass, root: &CurveClass) -> CurveClass {
        let t = self.dot(c, root);
        &self.scalar(t, root) + c
    }
}

pub fn surface_lattice(degree: u32) -> Result<PicardLattice> {
    if !(1..=7).contains(&degree) {
        return Err(Error::out_of_range("del Pezzo degree", degree));
    }
    Ok(PicardLattice { degree })
}

const MAX_H_DEGREE: i64 = 7;
const MIN_MULTIPLICITY: i64 = -1;
const MAX_MULTIPLICITY: i64 = 4;

/// All classes `a_0 H - sum m_i E_i` with `0 <= a_0 <= 7`, `-1 <= m_i <= 4`,
/// `C^2 = self_int` and `-K.C = anti_deg`, sorted lexicographically.
fn enumerate(lattice: &PicardLattice, self_int: i64, anti_deg: i64) -> Vec<CurveClass> {
    let r = lattice.points();
    let mut found = Vec::new();
    let mut mult = Vec::with_capacity(r);
    for a0 in 0..=MAX_H_DEGREE {
        // sum m_i = 3 a_0 - anti_deg,  sum m_i^2 = a_0^2 - self_int
        let sum = 3 * a0 - anti_deg;
        let sq = a0 * a0 - self_int;
        search(r, sum, sq, &mut mult, &mut |m: &[i64]| {
            let mut v = Vec::with_capacity(r + 1);
            v.push(a0);
            v.extend(m.iter().map(|x| -x));
            found.push(CurveClass(v));
        });
    }
    found.sort();
    found
}

fn search(slots: usize, sum: i64, sq: i64, prefix: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    if slots == 0 {
        if sum == 0 && sq == 0 {
            emit(prefix);
        }
        return;
    }
    let s = slots as i64;
    if sum < MIN_MULTIPLICITY * s || sum > MAX_MULTIPLICITY * s || sq < 0 {
        return;
    }
    // Cauchy-Schwarz: sq >= sum^2 / slots
    if sq * s < sum * sum || sq > MAX_MULTIPLICITY * MAX_MULTIPLICITY * s {
        return;
    }
    for m in MIN_MULTIPLICITY..=MAX_MULTIPLICITY {
        prefix.push(m);
        search(slots - 1, sum - m, sq - m * m, prefix, emit);
        prefix.pop();
    }
}

/// Classes with `C^2 = -1` and `K.C = -1`.
pub fn minus_one_curves(lattice: &PicardLattice) -> Vec<CurveClass> {
    enumerate(lattice, -1, 1)
}

/// Classes with `F^2 = 0` and `-K.F = 2`, for degree at least three.
pub fn conic_classes(lattice: &PicardLattice) -> Result<Vec<CurveClass>> {
    if lattice.degree < 3 {
        return Err(Error::out_of_range(
            "conic enumeration degree (needs >= 3)",
            lattice.degree,
        ));
    }
    Ok(enumerate(lattice, 0, 2))
}

fn check_conic(lattice: &PicardLattice, f: &CurveClass) -> Result<()> {
    if f.0.len() != lattice.rank() || !lattice.is_conic(f) {
        return Err(Error::NotConic(f.0.clone()));
    }
    Ok(())
}

/// Unordered pairs `(l_1, l_2)` of `(-1)`-curves with `l_1 + l_2 = F`,
/// each pair listed with `l_1 < l_2`.
pub fn degenerate_members(
    lattice: &PicardLattice,
    f: &CurveClass,
) -> Result<Vec<(CurveClass, CurveClass)>> {
    check_conic(lattice, f)?;
    let lines = minus_one_curves(lattice);
    let set: BTreeSet<&CurveClass> = lines.iter().collect();
    let mut pairs = Vec::new();
    for l1 in &lines {
        let l2 = f - l1;
        if l1 < &l2 && set.contains(&l2) {
            pairs.push((l1.clone(), l2));
        }
    }
    Ok(pairs)
}

/// Surface profile over the full lattice basis `H, E1, ..., Er`.
pub fn lattice_profile(lattice: &PicardLattice) -> BaseProfile {
    let rank = lattice.rank();
    let mut basis = vec!["H".to_string()];
    basis.extend((1..rank).map(|i| format!("E{i}")));
    let mut top = BTreeMap::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 2;
        top.insert(e, if i == 0 { int(1) } else { int(-1) });
    }
    let c1 = class_poly(lattice, &lattice.scalar(-1, &lattice.canonical()));
    // H^2 is a point
    let (_, euler) = surface_chern_numbers(lattice.degree).expect("degree checked");
    let mut h2 = vec![0; rank];
    h2[0] = 2;
    let c2 = Poly::monomial(h2, int(euler));
    BaseProfile::new(
        format!("dp-surface-d{}", lattice.degree),
        2,
        basis,
        top,
        vec![c1, c2],
    )
    .expect("lattice profile is well formed")
}

/// A lattice vector as a linear polynomial in the profile symbols.
pub fn class_poly(lattice: &PicardLattice, c: &CurveClass) -> Poly {
    let coeffs: Vec<Rational> = c.0.iter().map(|x| int(*x)).collect();
    debug_assert_eq!(coeffs.len(), lattice.rank());
    Poly::linear(&coeffs)
}

/// `z + pi^*(K + 2F)` on the lattice profile.
pub fn conic_vmrt_class(lattice: &PicardLattice, f: &CurveClass) -> Result<PtClass> {
    check_conic(lattice, f)?;
    let profile = lattice_profile(lattice);
    Ok(conic_vmrt_on(&profile, lattice, f))
}

fn conic_vmrt_on(profile: &BaseProfile, lattice: &PicardLattice, f: &CurveClass) -> PtClass {
    let rel = &lattice.canonical() + &lattice.scalar(2, f);
    &PtClass::zeta(profile) + &PtClass::pullback(profile, &class_poly(lattice, &rel))
}

/// The cubic-surface profile on the two symbols `H = -K` and a conic `F`:
/// `H^2 = 3`, `H.F = 2`, `F^2 = 0`, `c_1 = H`, `c_2 = 9`.
pub fn cubic_surface_profile() -> BaseProfile {
    let basis = vec!["H".to_string(), "F".to_string()];
    let top = BTreeMap::from([
        (vec![2, 0], int(3)),
        (vec![1, 1], int(2)),
        (vec![0, 2], int(0)),
    ]);
    let c1 = Poly::var(2, 0);
    // 9 points = 3 H^2
    let c2 = Poly::monomial(vec![2, 0], int(3));
    BaseProfile::new("cubic-surface", 2, basis, top, vec![c1, c2])
        .expect("cubic profile is well formed")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicCertificate {
    /// `z . [C] . (z + pi^*H)`
    pub a: Rational,
    /// `[C]^2 . (z + pi^*H)`
    pub b: Rational,
    /// `(z - 1/4 sum_i [C_i]) . l` for a fibre `l` of `pi`
    pub budget: Rational,
}

impl CubicCertificate {
    /// `(z - lambda [C]) . [C] . (z + pi^*H) = a - lambda b`.
    pub fn restricted_degree(&self, lambda: &Rational) -> Rational {
        &self.a - lambda * &self.b
    }
}

/// `(a, b)` for the conic bundle `F` on a given cubic-surface profile whose
/// anticanonical class is `h`.
fn cubic_ab(profile: &BaseProfile, vmrt: &PtClass, h: &Poly) -> Result<(Rational, Rational)> {
    let z = PtClass::zeta(profile);
    let nef = &z + &PtClass::pullback(profile, h);
    let a = eval_top(profile, &(&(&z * vmrt) * &nef))?;
    let b = eval_top(profile, &(&vmrt.pow(2) * &nef))?;
    Ok((a, b))
}

pub fn cubic_surface_certificate() -> Result<CubicCertificate> {
    let profile = cubic_surface_profile();
    let h = profile.symbol("H").expect("H");
    let f = profile.symbol("F").expect("F");
    // K + 2F with K = -H
    let rel = &f.scale(&int(2)) - &h;
    let vmrt = &PtClass::zeta(&profile) + &PtClass::pullback(&profile, &rel);
    let (a, b) = cubic_ab(&profile, &vmrt, &h)?;

    // budget over the 27 conic bundles of the full lattice, paired with a
    // fibre of pi, i.e. pi^* of a point (H^2 on the lattice profile)
    let lattice = surface_lattice(3)?;
    let full = lattice_profile(&lattice);
    let conics = conic_classes(&lattice)?;
    let mut divisor = PtClass::zeta(&full);
    for c in &conics {
        divisor = &divisor - &conic_vmrt_on(&full, &lattice, c).scale(&rat(1, 4));
    }
    let point = PtClass::pullback(&full, &class_poly(&lattice, &lattice.hyperplane()).pow(2));
    let budget = eval_top(&full, &(&divisor * &point))?;
    Ok(CubicCertificate { a, b, budget })
}

/// `(a, b)` recomputed on the full rank-7 lattice profile for every conic.
pub fn cubic_certificate_on_lattice() -> Result<Vec<(Rational, Rational)>> {
    let lattice = surface_lattice(3)?;
    let full = lattice_profile(&lattice);
    let anti = class_poly(&lattice, &lattice.scalar(-1, &lattice.canonical()));
    conic_classes(&lattice)?
        .iter()
        .map(|c| cubic_ab(&full, &conic_vmrt_on(&full, &lattice, c), &anti))
        .collect()
}

/// Pairs `(C, -K - C)` of the ten conic classes on a quartic del Pezzo.
pub fn degree4_pencil_pairs() -> Result<Vec<(CurveClass, CurveClass)>> {
    let lattice = surface_lattice(4)?;
    let anti = lattice.scalar(-1, &lattice.canonical());
    let conics = conic_classes(&lattice)?;
    let set: BTreeSet<&CurveClass> = conics.iter().collect();
    let mut pairs = Vec::new();
    for c in &conics {
        let partner = &anti - c;
        if !set.contains(&partner) {
            return Err(Error::IdentityViolated(format!(
                "conic {:?} has no partner",
                c.0
            )));
        }
        if c < &partner {
            pairs.push((c.clone(), partner));
        }
    }
    Ok(pairs)
}

/// Ten conics in five pairs, each pair summing to `-K`, and the dual VMRT
/// classes of each pair summing to `2z`.
pub fn degree4_pairing() -> Result<bool> {
    let lattice = surface_lattice(4)?;
    let profile = lattice_profile(&lattice);
    let pairs = degree4_pencil_pairs()?;
    let two_zeta = PtClass::zeta(&profile).scale(&int(2));
    let conic_count = conic_classes(&lattice)?.len();
    let mut ok = pairs.len() == 5 && conic_count == 10;
    for (c, c2) in &pairs {
        ok &= &conic_vmrt_on(&profile, &lattice, c) + &conic_vmrt_on(&profile, &lattice, c2)
            == two_zeta;
    }
    Ok(ok)
}

/// Five conics on a quintic del Pezzo with `sum C_i = -2K`, and
/// `z - pi^*(-K/5) = 1/5 sum [C_i]`.
pub fn degree5_sum() -> Result<bool> {
    let lattice = surface_lattice(5)?;
    let profile = lattice_profile(&lattice);
    let conics = conic_classes(&lattice)?;
    let total = conics
        .iter()
        .fold(CurveClass(vec![0; lattice.rank()]), |acc, c| &acc + c);
    let sum_ok = conics.len() == 5 && total == lattice.scalar(-2, &lattice.canonical());
    let vmrt_sum = degree5_vmrt_sum(&lattice, &profile, &conics);
    let k = PtClass::pullback(&profile, &class_poly(&lattice, &lattice.canonical()));
    let lhs = &PtClass::zeta(&profile) + &k.scale(&rat(1, 5));
    Ok(sum_ok && lhs == vmrt_sum.scale(&rat(1, 5)))
}

fn degree5_vmrt_sum(
    lattice: &PicardLattice,
    profile: &BaseProfile,
    conics: &[CurveClass],
) -> PtClass {
    conics.iter().fold(PtClass::zero(profile), |acc, c| {
        &acc + &conic_vmrt_on(profile, lattice, c)
    })
}

/// `sum [C_i]` over the five conic pencils of the quintic del Pezzo.
pub fn degree5_vmrt_total() -> Result<PtClass> {
    let lattice = surface_lattice(5)?;
    let profile = lattice_profile(&lattice);
    let conics = conic_classes(&lattice)?;
    Ok(degree5_vmrt_sum(&lattice, &profile, &conics))
}

fn check_surface_degree(degree: u32) -> Result<()> {
    if !(1..=9).contains(&degree) {
        return Err(Error::out_of_range("del Pezzo degree", degree));
    }
    Ok(())
}

/// `(c_1^2, c_2)` of `P^2` blown up in `9 - degree` points: each blow-up
/// lowers `K^2` by one and raises the topological Euler number by one.
pub fn surface_chern_numbers(degree: u32) -> Result<(i64, i64)> {
    check_surface_degree(degree)?;
    let points = 9 - degree as i64;
    Ok((9 - points, 3 + points))
}

/// `c_1^2 + c_2 = 12 chi(O_X) = 12`.
pub fn noether_check(degree: u32) -> Result<bool> {
    let (c1sq, c2) = surface_chern_numbers(degree)?;
    Ok(c1sq + c2 == 12)
}

/// `chi(X, Sym^m T_X)` by Hirzebruch-Riemann-Roch.
///
/// With Chern roots `a, b` of `T_X`, `Sym^m T_X` has roots `i a + (m - i) b`
/// for `0 <= i <= m`, so
/// `chi = ch_2 + ch_1 c_1 / 2 + (m + 1)(c_1^2 + c_2) / 12` where
/// `ch_1 = m(m+1)/2 c_1` and `ch_2 = 1/2 sum_i (i a + (m-i) b)^2`.
pub fn chi_sym_tangent_surface(degree: u32, m: u32) -> Result<Rational> {
    let (c1sq, c2) = surface_chern_numbers(degree)?;
    let (c1sq, c2) = (int(c1sq), int(c2));
    let m_ = m as i64;
    let mut sq_sum = Rational::zero();
    let mut mixed_sum = Rational::zero();
    for i in 0..=m_ {
        // (i a + (m - i) b)^2 = i^2 a^2 + (m-i)^2 b^2 + 2 i (m-i) ab; the
        // a^2, b^2 coefficients are symmetric under i <-> m - i
        sq_sum += int(i * i);
        mixed_sum += int(2 * i * (m_ - i));
    }
    // a^2 + b^2 = c_1^2 - 2 c_2,  ab = c_2
    let ch2 = (sq_sum * (&c1sq - int(2) * &c2) + mixed_sum * &c2) / int(2);
    let ch1_c1 = rat(m_ * (m_ + 1), 2) * &c1sq;
    let rank = int(m_ + 1);
    Ok(ch2 + ch1_c1 / int(2) + rank * (c1sq + c2) / int(12))
}

/// Coefficient of `m^3` in `chi(Sym^m T_X)`, i.e. `(c_1^2 - c_2) / 6`.
pub fn chi_sym_leading_coefficient(degree: u32) -> Result<Rational> {
    let (c1sq, c2) = surface_chern_numbers(degree)?;
    Ok(rat(c1sq - c2, 6))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_basics() {
        let l = surface_lattice(3).unwrap();
        assert_eq!(l.rank(), 7);
        assert_eq!(l.canonical().0, vec![-3, 1, 1, 1, 1, 1, 1]);
        assert_eq!(l.self_intersection(&l.canonical()), 3);
        assert_eq!(surface_lattice(1).unwrap().rank(), 9);
        let five = surface_lattice(5).unwrap();
        assert_eq!(five.self_intersection(&five.canonical()), 5);
        assert!(surface_lattice(0).is_err());
        assert!(surface_lattice(8).is_err());
    }

    #[test]
    fn curve_counts() {
        for (d, n) in [(1, 240), (2, 56), (3, 27), (4, 16), (5, 10), (6, 6), (7, 3)] {
            let l = surface_lattice(d).unwrap();
            assert_eq!(minus_one_curves(&l).len(), n, "degree {d}");
        }
        for (d, n) in [(3, 27), (4, 10), (5, 5)] {
            let l = surface_lattice(d).unwrap();
            assert_eq!(conic_classes(&l).unwrap().len(), n, "degree {d}");
        }
        assert!(conic_classes(&surface_lattice(2).unwrap()).is_err());
    }

    #[test]
    fn extremal_degree_one_class_present() {
        let l = surface_lattice(1).unwrap();
        let c = CurveClass(vec![6, -3, -2, -2, -2, -2, -2, -2, -2]);
        assert!(minus_one_curves(&l).contains(&c));
    }

    #[test]
    fn cubic_conics_are_residual_to_lines() {
        let l = surface_lattice(3).unwrap();
        let anti = l.scalar(-1, &l.canonical());
        let mut residual: Vec<CurveClass> =
            minus_one_curves(&l).iter().map(|e| &anti - e).collect();
        residual.sort();
        assert_eq!(residual, conic_classes(&l).unwrap());
    }

    #[test]
    fn degenerate_member_counts() {
        for d in 3..=5 {
            let l = surface_lattice(d).unwrap();
            for f in conic_classes(&l).unwrap() {
                let pairs = degenerate_members(&l, &f).unwrap();
                assert_eq!(pairs.len(), 8 - d as usize);
                for (a, b) in &pairs {
                    assert_eq!(l.dot(a, b), 1);
                }
            }
        }
        let l = surface_lattice(3).unwrap();
        assert!(matches!(
            degenerate_members(&l, &l.hyperplane()),
            Err(Error::NotConic(_))
        ));
    }

    #[test]
    fn quintic_conics_meet_once() {
        let l = surface_lattice(5).unwrap();
        let cs = conic_classes(&l).unwrap();
        for i in 0..cs.len() {
            for j in 0..cs.len() {
                if i != j {
                    assert_eq!(l.dot(&cs[i], &cs[j]), 1);
                }
            }
        }
    }

    #[test]
    fn cubic_certificate_values() {
        let cert = cubic_surface_certificate().unwrap();
        assert_eq!(cert.a, int(-1));
        assert_eq!(cert.b, int(-4));
        assert_eq!(cert.budget, rat(-23, 4));
        assert_eq!(cert.restricted_degree(&rat(1, 4)), int(0));
        assert!(cert.restricted_degree(&rat(1, 5)) < int(0));
        for (a, b) in cubic_certificate_on_lattice().unwrap() {
            assert_eq!((a, b), (int(-1), int(-4)));
        }
    }

    #[test]
    fn cubic_conic_relative_canonical_degree() {
        let l = surface_lattice(3).unwrap();
        let anti = l.scalar(-1, &l.canonical());
        for f in conic_classes(&l).unwrap() {
            let rel = &l.canonical() + &l.scalar(2, &f);
            assert_eq!(l.dot(&rel, &anti), 1);
        }
    }

    #[test]
    fn pairing_and_sum() {
        assert!(degree4_pairing().unwrap());
        assert!(degree5_sum().unwrap());
        let l = surface_lattice(5).unwrap();
        let p = lattice_profile(&l);
        let k = PtClass::pullback(&p, &class_poly(&l, &l.canonical()));
        let expected = &PtClass::zeta(&p).scale(&int(5)) + &k;
        assert_eq!(degree5_vmrt_total().unwrap(), expected);
    }

    #[test]
    fn riemann_roch() {
        for d in 1..=9 {
            assert_eq!(chi_sym_tangent_surface(d, 0).unwrap(), int(1));
            assert!(noether_check(d).unwrap());
        }
        // P^2 (degree 9): chi(T) = h^0(T) = 8
        assert_eq!(chi_sym_tangent_surface(9, 1).unwrap(), int(8));
        assert!(chi_sym_tangent_surface(10, 1).is_err());
    }
}
