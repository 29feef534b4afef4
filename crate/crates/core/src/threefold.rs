//! Del Pezzo threefolds of Picard rank one: `-K_X = 2H`, `d = H^3`.
//!
//! The profile needs only `d` and the third Betti number: `H . c_2 = 12`
//! and `c_3 = 4 - b_3`. From these, `z^5 = 8d - 44 - b_3`,
//! `z^4 H = 4d - 12` and `z^3 H^2 = 2d`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::chow::{eval_product, eval_top, PtClass};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::profile::BaseProfile;
use crate::rational::{self, int, rat, Rational};
use crate::surface::{minus_one_curves, surface_lattice};

/// Third Betti numbers used when the caller does not supply one.
///
/// Degrees 1 and 2 are the values the threefold certificates rely on;
/// degree 3 follows from the cubic-hypersurface Chern classes
/// (`c_3 = -6 = 4 - b_3`). Degrees 4 and 5 are standard literature values
/// and are never used by acceptance checks.
pub fn default_b3(d: u32) -> Option<u32> {
    match d {
        1 => Some(42),
        2 => Some(20),
        3 => Some(10),
        4 => Some(4),
        5 => Some(0),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreefoldSpec {
    pub d: u32,
    pub b3: u32,
    /// degree of the evaluation map of the family of lines
    pub k: u32,
    /// number of lines in a general member of `|H|`
    pub r: u32,
}

impl ThreefoldSpec {
    pub fn profile(&self) -> Result<BaseProfile> {
        threefold_profile(self.d, self.b3)
    }

    pub fn vmrt_class(&self) -> Result<PtClass> {
        vmrt_class_threefold(&self.profile()?, self.d, self.k, self.r)
    }
}

pub fn profile_label(d: u32, b3: u32) -> String {
    format!("dp3-degree{d}-b{b3}")
}

pub fn threefold_profile(d: u32, b3: u32) -> Result<BaseProfile> {
    if d == 0 {
        return Err(Error::out_of_range("del Pezzo threefold degree", d));
    }
    let d_ = d as i64;
    let c1 = Poly::monomial(vec![1], int(2));
    // H^3 = d, so H . c_2 = 12 means c_2 = (12/d) H^2
    let c2 = Poly::monomial(vec![2], rat(12, d_));
    let c3 = Poly::monomial(vec![3], rat(4 - b3 as i64, d_));
    BaseProfile::new(
        profile_label(d, b3),
        3,
        vec!["H".to_string()],
        BTreeMap::from([(vec![3], int(d_))]),
        vec![c1, c2, c3],
    )
}

/// `(z^5, z^4 H, z^3 H^2)` through the intersection engine.
pub fn threefold_triple(d: u32, b3: u32) -> Result<(Rational, Rational, Rational)> {
    let p = threefold_profile(d, b3)?;
    let z = PtClass::zeta(&p);
    let h = PtClass::symbol(&p, "H")?;
    Ok((
        eval_top(&p, &z.pow(5))?,
        eval_top(&p, &(&z.pow(4) * &h))?,
        eval_top(&p, &(&z.pow(3) * &h.pow(2)))?,
    ))
}

/// `k z + (r/d - k) pi^*H`.
pub fn vmrt_class_threefold(profile: &BaseProfile, d: u32, k: u32, r: u32) -> Result<PtClass> {
    if d == 0 || k == 0 || r == 0 {
        return Err(Error::out_of_range("(d, k, r)", format!("({d}, {k}, {r})")));
    }
    let coeff = rat(r as i64, d as i64) - int(k as i64);
    let z = PtClass::zeta(profile).scale(&int(k as i64));
    Ok(&z + &PtClass::symbol(profile, "H")?.scale(&coeff))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Exact(#[serde(with = "rational::pq")] Rational),
    AtLeast(#[serde(with = "rational::pq")] Rational),
}

impl Bound {
    pub fn lower(&self) -> &Rational {
        match self {
            Bound::Exact(v) | Bound::AtLeast(v) => v,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VmrtRow {
    pub d: u32,
    pub k: u32,
    /// lines in a general member of `|H|`; a lower bound when `h_coefficient`
    /// is a lower bound
    pub r: u32,
    pub h_coefficient: Bound,
    /// `k z + m pi^*H`, with `m` at its lower bound for interval rows
    pub class: PtClass,
    pub provenance: &'static str,
}

impl VmrtRow {
    pub fn is_interval(&self) -> bool {
        matches!(self.h_coefficient, Bound::AtLeast(_))
    }

    /// Class as printed in the table, e.g. `3z - H` or `60z + mH, m >= 180`.
    pub fn render(&self) -> String {
        match &self.h_coefficient {
            Bound::Exact(_) => self.class.to_string(),
            Bound::AtLeast(m) => format!("{}z + mH, m >= {}", self.k, rational::format_short(m)),
        }
    }

    /// The non-bigness certificate applies when the `H`-coefficient is
    /// non-negative; for interval rows, when its lower bound is.
    pub fn not_big(&self) -> bool {
        !self.h_coefficient.lower().is_negative()
    }
}

#[derive(Serialize)]
struct RowDoc<'a> {
    d: u32,
    k: u32,
    r: u32,
    r_is_lower_bound: bool,
    class: String,
    h_coefficient: &'a Bound,
    not_big: bool,
    provenance: &'a str,
}

/// Evaluation-map degrees `k` per degree `d`.
const K_BY_DEGREE: [(u32, u32); 5] = [(1, 60), (2, 12), (3, 6), (4, 4), (5, 3)];

pub fn vmrt_table() -> Result<BTreeMap<u32, VmrtRow>> {
    let mut rows = BTreeMap::new();
    for (d, k) in K_BY_DEGREE {
        // every line in a general D in |H| is a (-1)-curve of the del Pezzo
        // surface D; for d = 1 this is only a lower bound
        let r = minus_one_curves(&surface_lattice(d)?).len() as u32;
        let profile = threefold_profile(d, default_b3(d).expect("tabulated degree"))?;
        let class = vmrt_class_threefold(&profile, d, k, r)?;
        let m = rat(r as i64, d as i64) - int(k as i64);
        let (h_coefficient, provenance) = if d == 1 {
            (
                Bound::AtLeast(m),
                "r bounded below by the 240 (-1)-curves of a degree-1 del Pezzo surface",
            )
        } else {
            (
                Bound::Exact(m),
                "r equals the number of (-1)-curves of the del Pezzo surface of degree d",
            )
        };
        rows.insert(
            d,
            VmrtRow {
                d,
                k,
                r,
                h_coefficient,
                class,
                provenance,
            },
        );
    }
    Ok(rows)
}

pub fn vmrt_table_json(rows: &BTreeMap<u32, VmrtRow>) -> String {
    let docs: Vec<RowDoc<'_>> = rows
        .values()
        .map(|row| RowDoc {
            d: row.d,
            k: row.k,
            r: row.r,
            r_is_lower_bound: row.is_interval(),
            class: row.render(),
            h_coefficient: &row.h_coefficient,
            not_big: row.not_big(),
            provenance: row.provenance,
        })
        .collect();
    serde_json::to_string_pretty(&docs).expect("rows serialize")
}

/// For `k z + m pi^*H` with `k > 0`: true iff `m >= 0`.
pub fn not_big_certificate(profile: &BaseProfile, cls: &PtClass) -> Result<bool> {
    let (k, base) = cls.split_linear(profile)?;
    if !k.is_positive() {
        return Err(Error::MalformedClass(format!(
            "`{cls}` has no positive z-coefficient"
        )));
    }
    let h = profile
        .symbol_index("H")
        .ok_or_else(|| Error::MalformedClass(format!("profile `{}` has no H", profile.label())))?;
    let mut m = Rational::zero();
    for (e, c) in base.terms() {
        if e[h] != 1 {
            return Err(Error::MalformedClass(format!(
                "`{cls}` is not of the form kz + mH"
            )));
        }
        m = c.clone();
    }
    Ok(!m.is_negative())
}

fn linear(profile: &BaseProfile, lambda: Rational) -> Result<PtClass> {
    Ok(&PtClass::zeta(profile) + &PtClass::symbol(profile, "H")?.scale(&lambda))
}

/// `z (z + H) (z + 3H)^2 (z + 4H)` on the degree-1 threefold with `b_3 = 42`.
pub fn certificate_degree1() -> Result<Rational> {
    let p = threefold_profile(1, 42)?;
    let z = PtClass::zeta(&p);
    eval_product(
        &p,
        &[
            z,
            linear(&p, int(1))?,
            linear(&p, int(3))?,
            linear(&p, int(3))?,
            linear(&p, int(4))?,
        ],
    )
}

/// `z^2 (z + 2H)^3` on the degree-2 threefold with `b_3 = 20`.
pub fn certificate_degree2_modnef() -> Result<Rational> {
    let p = threefold_profile(2, 20)?;
    let z = PtClass::zeta(&p);
    eval_product(&p, &[z.pow(2), linear(&p, int(2))?.pow(3)])
}

/// `(z^2 (z + 2H)^3, z (z + H)(z + 4/3 H)(z + 3/2 H)^2)` on the degree-2
/// threefold with `b_3 = 20`.
pub fn certificate_degree2() -> Result<(Rational, Rational)> {
    let p = threefold_profile(2, 20)?;
    let z = PtClass::zeta(&p);
    let second = eval_product(
        &p,
        &[
            z,
            linear(&p, int(1))?,
            linear(&p, rat(4, 3))?,
            linear(&p, rat(3, 2))?.pow(2),
        ],
    )?;
    Ok((certificate_degree2_modnef()?, second))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K3QuarticData {
    pub profile: BaseProfile,
    /// class of the bitangent incidence divisor on `P(T_S)`
    pub u_class: PtClass,
    pub normalized: PtClass,
    pub zeta_cubed: Rational,
    pub zeta_sq_h: Rational,
    pub zeta_h_sq: Rational,
}

pub fn k3_quartic_data() -> Result<K3QuarticData> {
    let profile = crate::catalog::k3_quartic();
    let z = PtClass::zeta(&profile);
    let h = PtClass::symbol(&profile, "H")?;
    let u_class = &z.scale(&int(6)) + &h.scale(&int(8));
    let normalized = u_class.scale(&rat(1, 6));
    Ok(K3QuarticData {
        zeta_cubed: eval_top(&profile, &z.pow(3))?,
        zeta_sq_h: eval_top(&profile, &(&z.pow(2) * &h))?,
        zeta_h_sq: eval_top(&profile, &(&z * &h.pow(2)))?,
        u_class,
        normalized,
        profile,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypersurface::{hypersurface_profile, HypersurfaceSpec};

    #[test]
    fn triples() {
        assert_eq!(
            threefold_triple(1, 42).unwrap(),
            (int(-78), int(-8), int(2))
        );
        assert_eq!(
            threefold_triple(2, 20).unwrap(),
            (int(-48), int(-4), int(4))
        );
        assert_eq!(threefold_triple(3, 10).unwrap(), (int(-30), int(0), int(6)));
        assert!(threefold_profile(0, 0).is_err());
    }

    #[test]
    fn cubic_threefold_routes_agree() {
        let a = threefold_profile(3, 10).unwrap();
        let b = hypersurface_profile(HypersurfaceSpec::new(3, 3).unwrap());
        for i in 0..=5 {
            let ca = &PtClass::zeta(&a).pow(5 - i) * &PtClass::symbol(&a, "H").unwrap().pow(i);
            let cb = &PtClass::zeta(&b).pow(5 - i) * &PtClass::symbol(&b, "H").unwrap().pow(i);
            assert_eq!(
                eval_top(&a, &ca).unwrap(),
                eval_top(&b, &cb).unwrap(),
                "H^{i}"
            );
        }
    }

    #[test]
    fn vmrt_classes() {
        let p5 = threefold_profile(5, 0).unwrap();
        assert_eq!(
            vmrt_class_threefold(&p5, 5, 3, 10).unwrap().to_string(),
            "3z - H"
        );
        let p4 = threefold_profile(4, 4).unwrap();
        assert_eq!(
            vmrt_class_threefold(&p4, 4, 4, 16).unwrap().to_string(),
            "4z"
        );
        let p3 = threefold_profile(3, 10).unwrap();
        assert_eq!(
            vmrt_class_threefold(&p3, 3, 6, 27).unwrap().to_string(),
            "6z + 3H"
        );
        assert!(vmrt_class_threefold(&p3, 3, 0, 27).is_err());
    }

    #[test]
    fn table_rows() {
        let t = vmrt_table().unwrap();
        let rendered: Vec<String> = t.values().map(VmrtRow::render).collect();
        assert_eq!(
            rendered,
            ["60z + mH, m >= 180", "12z + 16H", "6z + 3H", "4z", "3z - H"]
        );
        let not_big: Vec<bool> = t.values().map(VmrtRow::not_big).collect();
        assert_eq!(not_big, [true, true, true, true, false]);
        assert_eq!(t[&1].h_coefficient, Bound::AtLeast(int(180)));
        let json = vmrt_table_json(&t);
        assert!(json.contains("\"at_least\": \"180/1\""));
    }

    #[test]
    fn not_big_on_classes() {
        let t = vmrt_table().unwrap();
        for (d, expected) in [(2, true), (3, true), (4, true), (5, false)] {
            let p = threefold_profile(d, default_b3(d).unwrap()).unwrap();
            assert_eq!(not_big_certificate(&p, &t[&d].class).unwrap(), expected);
        }
        let p = threefold_profile(2, 20).unwrap();
        let z = PtClass::zeta(&p);
        assert!(not_big_certificate(&p, &z.pow(2)).is_err());
        assert!(not_big_certificate(&p, &(-&z)).is_err());
    }

    #[test]
    fn certificates() {
        assert_eq!(certificate_degree1().unwrap(), int(-11));
        assert_eq!(certificate_degree2_modnef().unwrap(), int(-8));
        // expansion by elementary symmetric functions of {1, 4/3, 3/2, 3/2}:
        // -48 + (16/3)(-4) + (127/12)(4) + (37/4)(2) = -17/2
        assert_eq!(certificate_degree2().unwrap(), (int(-8), rat(-17, 2)));
    }

    #[test]
    fn k3_data() {
        let k3 = k3_quartic_data().unwrap();
        assert_eq!(k3.zeta_cubed, int(-24));
        assert_eq!(k3.zeta_sq_h, int(0));
        assert_eq!(k3.zeta_h_sq, int(4));
        assert_eq!(k3.u_class.to_string(), "6z + 8H");
        assert_eq!(k3.normalized.to_string(), "z + 4/3*H");
    }
}
