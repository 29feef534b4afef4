//! Dispatch from `op_binding` names to library calls.

use std::fmt;

use num_traits::Signed;
use pseff_core::hypersurface::{self, HypersurfaceSpec};
use pseff_core::rational::{self, int, parse_rational, Rational};
use pseff_core::schur::{self, Partition};
use pseff_core::surface::{self, CurveClass, PicardLattice};
use pseff_core::threefold::{self, Bound};
use pseff_core::{catalog, chow, expr, BaseProfile, Poly, PtClass};
use serde_json::{Map, Value as Json};

/// Every operation of the library modules, with the module it belongs to.
pub const MODULE_OPS: &[(&str, &str)] = &[
    ("chow-engine", "segre_omega"),
    ("chow-engine", "eval_top"),
    ("chow-engine", "eval_product"),
    ("chow-engine", "restrict_to_section"),
    ("chow-engine", "dual_vmrt_generic"),
    ("hypersurfaces", "hypersurface_profile"),
    ("hypersurfaces", "segre_closed_form"),
    ("hypersurfaces", "cubic_mnef_number"),
    ("hypersurfaces", "sum_positive_part"),
    ("hypersurfaces", "sum_negative_part"),
    ("hypersurfaces", "comb_identity_A"),
    ("hypersurfaces", "recursion_check_A"),
    ("delpezzo-surfaces", "surface_lattice"),
    ("delpezzo-surfaces", "minus_one_curves"),
    ("delpezzo-surfaces", "conic_classes"),
    ("delpezzo-surfaces", "degenerate_members"),
    ("delpezzo-surfaces", "conic_vmrt_class"),
    ("delpezzo-surfaces", "cubic_surface_certificate"),
    ("delpezzo-surfaces", "degree4_pairing"),
    ("delpezzo-surfaces", "degree5_sum"),
    ("delpezzo-surfaces", "chi_sym_tangent_surface"),
    ("delpezzo-surfaces", "noether_check"),
    ("delpezzo-threefolds", "threefold_profile"),
    ("delpezzo-threefolds", "vmrt_class_threefold"),
    ("delpezzo-threefolds", "vmrt_table"),
    ("delpezzo-threefolds", "not_big_certificate"),
    ("delpezzo-threefolds", "certificate_degree1"),
    ("delpezzo-threefolds", "certificate_degree2"),
    ("delpezzo-threefolds", "certificate_degree2_modnef"),
    ("delpezzo-threefolds", "k3_quartic_data"),
    ("schur-bott", "schur_dim"),
    ("schur-bott", "plethysm_rectangle_check"),
    ("schur-bott", "euler_char_forms"),
    ("schur-bott", "bott_vanishing"),
    ("schur-bott", "bridge_identity_check"),
];

/// Operations of the CLI itself that claims may also bind to.
pub const CLI_OPS: &[(&str, &str)] = &[
    ("verify-cli", "parse_expr"),
    ("verify-cli", "evaluate_expr"),
];

pub fn module_of(op: &str) -> Option<&'static str> {
    MODULE_OPS
        .iter()
        .chain(CLI_OPS)
        .find(|(_, name)| *name == op)
        .map(|(module, _)| *module)
}

/// A computed result.
#[derive(Clone, Debug)]
pub enum Value {
    Number(Rational),
    Bool(bool),
    /// a class together with the profile it lives on, so expected literals
    /// can be parsed in the same ring
    Class(PtClass, BaseProfile),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(q) => f.write_str(&rational::format_short(q)),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Class(c, _) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpError(pub String);

impl fmt::Display for OpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for OpError {}

impl From<pseff_core::Error> for OpError {
    fn from(e: pseff_core::Error) -> Self {
        OpError(e.to_string())
    }
}

type OpResult = Result<Value, OpError>;

fn fail<T>(msg: impl Into<String>) -> Result<T, OpError> {
    Err(OpError(msg.into()))
}

struct Args<'a>(&'a Map<String, Json>);

impl<'a> Args<'a> {
    fn get(&self, key: &str) -> Result<&'a Json, OpError> {
        self.0
            .get(key)
            .ok_or_else(|| OpError(format!("missing argument `{key}`")))
    }

    fn has(&self, key: &str) -> bool {
        self.0.contains_key(key)
    }

    fn i64(&self, key: &str) -> Result<i64, OpError> {
        self.get(key)?
            .as_i64()
            .ok_or_else(|| OpError(format!("argument `{key}` must be an integer")))
    }

    fn u32(&self, key: &str) -> Result<u32, OpError> {
        u32::try_from(self.i64(key)?)
            .map_err(|_| OpError(format!("argument `{key}` must be a non-negative integer")))
    }

    fn u32_or(&self, key: &str, default: u32) -> Result<u32, OpError> {
        if self.has(key) {
            self.u32(key)
        } else {
            Ok(default)
        }
    }

    fn str(&self, key: &str) -> Result<&'a str, OpError> {
        self.get(key)?
            .as_str()
            .ok_or_else(|| OpError(format!("argument `{key}` must be a string")))
    }

    fn str_or(&self, key: &str, default: &'a str) -> Result<&'a str, OpError> {
        if self.has(key) {
            self.str(key)
        } else {
            Ok(default)
        }
    }

    fn rational(&self, key: &str) -> Result<Rational, OpError> {
        match self.get(key)? {
            Json::Number(n) => n
                .as_i64()
                .map(int)
                .ok_or_else(|| OpError(format!("argument `{key}` must be an exact number"))),
            Json::String(s) => Ok(parse_rational(s)?),
            _ => fail(format!("argument `{key}` must be a rational")),
        }
    }

    fn list<T>(&self, key: &str, f: impl Fn(&Json) -> Option<T>) -> Result<Vec<T>, OpError> {
        self.get(key)?
            .as_array()
            .and_then(|items| items.iter().map(f).collect())
            .ok_or_else(|| OpError(format!("argument `{key}` has the wrong shape")))
    }
}

/// Profile by catalog label.
pub fn profile(label: &str) -> Result<BaseProfile, OpError> {
    Ok(catalog::by_label(label)?)
}

fn parse(p: &BaseProfile, text: &str) -> Result<PtClass, OpError> {
    Ok(expr::parse_expr(p, text)?)
}

/// The base polynomial of a class with no `z`.
fn base_poly(p: &BaseProfile, text: &str) -> Result<Poly, OpError> {
    let cls = parse(p, text)?;
    let mut terms = Vec::new();
    for ((a, e), c) in cls.terms() {
        if *a != 0 {
            return fail(format!("`{text}` involves z"));
        }
        terms.push((e.clone(), c.clone()));
    }
    Ok(Poly::from_terms(p.nvars(), terms))
}

fn class(cls: PtClass, p: &BaseProfile) -> OpResult {
    Ok(Value::Class(cls, p.clone()))
}

fn number(q: Rational) -> OpResult {
    Ok(Value::Number(q))
}

fn count(n: usize) -> OpResult {
    number(int(n as i64))
}

/// Runs one operation.
pub fn dispatch(op: &str, args: &Map<String, Json>) -> OpResult {
    let a = Args(args);
    match op {
        "segre_omega" => segre_omega(&a),
        "eval_top" => {
            let p = profile(a.str("profile")?)?;
            number(chow::eval_top(&p, &parse(&p, a.str("expr")?)?)?)
        }
        "eval_product" => {
            let p = profile(a.str("profile")?)?;
            let texts = a.list("factors", |v| v.as_str().map(str::to_owned))?;
            let factors = texts
                .iter()
                .map(|t| parse(&p, t))
                .collect::<Result<Vec<_>, _>>()?;
            number(chow::eval_product(&p, &factors)?)
        }
        "restrict_to_section" => {
            let splitting = a.list("splitting", Json::as_i64)?;
            let q = a.u32("quotient_index")? as usize;
            number(chow::restrict_to_section(
                &splitting,
                q,
                &a.rational("eps")?,
            )?)
        }
        "dual_vmrt_generic" => {
            let p = profile(a.str("profile")?)?;
            let push = base_poly(&p, a.str("pushforward")?)?;
            class(chow::dual_vmrt_generic(&p, a.u32("deg_e")?, &push)?, &p)
        }
        "hypersurface_profile" => hypersurface_profile(&a),
        "segre_closed_form" => {
            let spec = HypersurfaceSpec::new(a.u32("n")?, a.u32("d")?)?;
            number(hypersurface::segre_closed_form(spec, a.u32("l")?)?)
        }
        "cubic_mnef_number" => number(hypersurface::cubic_mnef_number(a.u32("n")?)?),
        "sum_positive_part" => number(hypersurface::sum_positive_part(a.u32("n")?)?),
        "sum_negative_part" => number(hypersurface::sum_negative_part(a.u32("n")?)?),
        "comb_identity_A" => {
            let (brute, closed) = hypersurface::comb_identity_a(a.u32("k")?, a.u32("n")?)?;
            match a.str_or("side", "brute")? {
                "brute" => number(brute),
                "closed" => closed
                    .map(Value::Number)
                    .ok_or_else(|| OpError("no closed form for this k".into())),
                "agree" => Ok(Value::Bool(closed.as_ref() == Some(&brute))),
                other => fail(format!("unknown side `{other}`")),
            }
        }
        "recursion_check_A" => {
            let k = a.u32("k")?;
            let (lo, hi) = range(&a, "n")?;
            let mut all = true;
            for n in lo..=hi {
                all &= hypersurface::recursion_check_a(k, n)?;
            }
            Ok(Value::Bool(all))
        }
        "surface_lattice" => {
            let l = surface::surface_lattice(a.u32("degree")?)?;
            match a.str("quantity")? {
                "rank" => count(l.rank()),
                "K2" => number(int(l.self_intersection(&l.canonical()))),
                other => fail(format!("unknown quantity `{other}`")),
            }
        }
        "minus_one_curves" => count(surface::minus_one_curves(&lattice(&a)?).len()),
        "conic_classes" => conic_classes(&a),
        "degenerate_members" => degenerate_members(&a),
        "conic_vmrt_class" => conic_vmrt_class(&a),
        "cubic_surface_certificate" => {
            let c = surface::cubic_surface_certificate()?;
            match a.str("field")? {
                "a" => number(c.a),
                "b" => number(c.b),
                "budget" => number(c.budget),
                "boundary" => number(c.restricted_degree(&a.rational("lambda")?)),
                other => fail(format!("unknown field `{other}`")),
            }
        }
        "degree4_pairing" => Ok(Value::Bool(surface::degree4_pairing()?)),
        "degree5_sum" => match a.str_or("output", "check")? {
            "check" => Ok(Value::Bool(surface::degree5_sum()?)),
            "vmrt_total" => {
                let p = surface::lattice_profile(&surface::surface_lattice(5)?);
                class(surface::degree5_vmrt_total()?, &p)
            }
            other => fail(format!("unknown output `{other}`")),
        },
        "chi_sym_tangent_surface" => {
            let d = a.u32("degree")?;
            match a.str_or("output", "chi")? {
                "chi" => number(surface::chi_sym_tangent_surface(d, a.u32("m")?)?),
                "leading_coefficient" => number(surface::chi_sym_leading_coefficient(d)?),
                "leading_positive" => Ok(Value::Bool(
                    surface::chi_sym_leading_coefficient(d)?.is_positive(),
                )),
                other => fail(format!("unknown output `{other}`")),
            }
        }
        "noether_check" => {
            let (lo, hi) = range(&a, "degree")?;
            let mut all = true;
            for d in lo..=hi {
                all &= surface::noether_check(d)?;
            }
            Ok(Value::Bool(all))
        }
        "threefold_profile" => {
            let p = threefold::threefold_profile(a.u32("d")?, a.u32("b3")?)?;
            number(chow::eval_top(&p, &parse(&p, a.str("expr")?)?)?)
        }
        "vmrt_class_threefold" => {
            let d = a.u32("d")?;
            let p = threefold::threefold_profile(d, 0)?;
            class(
                threefold::vmrt_class_threefold(&p, d, a.u32("k")?, a.u32("r")?)?,
                &p,
            )
        }
        "vmrt_table" => vmrt_table(&a),
        "not_big_certificate" => {
            let p = threefold::threefold_profile(a.u32("d")?, 0)?;
            Ok(Value::Bool(threefold::not_big_certificate(
                &p,
                &parse(&p, a.str("class")?)?,
            )?))
        }
        "certificate_degree1" => number(threefold::certificate_degree1()?),
        "certificate_degree2" => {
            let (first, second) = threefold::certificate_degree2()?;
            match a.u32("component")? {
                0 => number(first),
                1 => number(second),
                other => fail(format!("component {other} out of range")),
            }
        }
        "certificate_degree2_modnef" => number(threefold::certificate_degree2_modnef()?),
        "k3_quartic_data" => {
            let k3 = threefold::k3_quartic_data()?;
            match a.str("field")? {
                "u_class" => class(k3.u_class, &k3.profile),
                "normalized" => class(k3.normalized, &k3.profile),
                "zeta_cubed" => number(k3.zeta_cubed),
                "zeta_sq_h" => number(k3.zeta_sq_h),
                "zeta_h_sq" => number(k3.zeta_h_sq),
                other => fail(format!("unknown field `{other}`")),
            }
        }
        "schur_dim" => {
            let parts = a.list("partition", |v| {
                v.as_u64().and_then(|x| u32::try_from(x).ok())
            })?;
            let mu = Partition::new(parts)?;
            number(Rational::from_integer(schur::schur_dim(
                &mu,
                a.u32("dim")? as usize,
            )))
        }
        "plethysm_rectangle_check" => Ok(Value::Bool(schur::plethysm_rectangle_check(
            a.u32("n")?,
            a.u32("k")?,
        )?)),
        "euler_char_forms" => number(schur::euler_char_forms(
            a.u32("n")?,
            a.u32("p")?,
            a.i64("k")?,
        )?),
        "bott_vanishing" => Ok(Value::Bool(schur::bott_vanishing(
            a.u32("n")?,
            a.u32("r")?,
            a.u32("j")?,
        )?)),
        "bridge_identity_check" => {
            let (n, d, k) = (a.u32("n")?, a.u32("d")?, a.u32("k")?);
            match a.str_or("output", "check")? {
                "check" => Ok(Value::Bool(schur::bridge_identity_check(n, d, k)?)),
                "slope" => number(schur::bridge_sides(n, d, k)?.slope()),
                "rank" => number(Rational::from_integer(
                    schur::bridge_sides(n, d, k)?.rank_lhs,
                )),
                other => fail(format!("unknown output `{other}`")),
            }
        }
        "parse_expr" => {
            let p = profile(a.str("profile")?)?;
            let cls = parse(&p, a.str("expr")?)?;
            match a.str_or("output", "class")? {
                "class" => class(cls, &p),
                "round_trip" => Ok(Value::Bool(parse(&p, &cls.to_string())? == cls)),
                other => fail(format!("unknown output `{other}`")),
            }
        }
        "evaluate_expr" => {
            let p = profile(a.str("profile")?)?;
            number(expr::evaluate_expr(&p, a.str("expr")?)?)
        }
        other => fail(format!("unknown operation `{other}`")),
    }
}

/// `key` alone, or the inclusive range `key_from..=key_to`.
fn range(a: &Args<'_>, key: &str) -> Result<(u32, u32), OpError> {
    if a.has(key) {
        let v = a.u32(key)?;
        return Ok((v, v));
    }
    let lo = a.u32(&format!("{key}_from"))?;
    let hi = a.u32(&format!("{key}_to"))?;
    if lo > hi {
        return fail(format!("empty range for `{key}`"));
    }
    Ok((lo, hi))
}

fn lattice(a: &Args<'_>) -> Result<PicardLattice, OpError> {
    Ok(surface::surface_lattice(a.u32("degree")?)?)
}

fn segre_omega(a: &Args<'_>) -> OpResult {
    let p = profile(a.str("profile")?)?;
    let j = a.u32("j")?;
    let s = pseff_core::segre_omega(&p);
    let entry = s.get(j);
    let paired = if a.has("against") {
        entry * &base_poly(&p, a.str("against")?)?
    } else {
        entry.clone()
    };
    number(p.integrate(&paired)?)
}

fn hypersurface_profile(a: &Args<'_>) -> OpResult {
    let spec = HypersurfaceSpec::new(a.u32("n")?, a.u32("d")?)?;
    let p = hypersurface::hypersurface_profile(spec);
    let indices = a.list("chern", |v| v.as_u64().and_then(|x| u32::try_from(x).ok()))?;
    let mut product = Poly::one(p.nvars());
    for j in indices {
        product = &product * &p.chern(j);
    }
    if a.str_or("output", "integrate")? == "class" {
        return class(PtClass::pullback(&p, &product), &p);
    }
    if a.has("times") {
        product = &product * &base_poly(&p, a.str("times")?)?;
    }
    number(p.integrate(&product)?)
}

fn conic_classes(a: &Args<'_>) -> OpResult {
    let l = lattice(a)?;
    let conics = surface::conic_classes(&l)?;
    match a.str_or("output", "count")? {
        "count" => count(conics.len()),
        "pairwise_one" => {
            Ok(Value::Bool(conics.iter().enumerate().all(|(i, x)| {
                conics[i + 1..].iter().all(|y| l.dot(x, y) == 1)
            })))
        }
        "sum_is_minus_2k" => {
            let total = conics
                .iter()
                .fold(CurveClass(vec![0; l.rank()]), |acc, c| &acc + c);
            Ok(Value::Bool(total == l.scalar(-2, &l.canonical())))
        }
        "each_is_minus_k_minus_line" => {
            let lines = surface::minus_one_curves(&l);
            let k = l.canonical();
            Ok(Value::Bool(conics.iter().all(|f| {
                let residual = &l.scalar(-1, &k) - f;
                lines.iter().filter(|line| **line == residual).count() == 1
            })))
        }
        other => fail(format!("unknown output `{other}`")),
    }
}

fn pick_conic(l: &PicardLattice, a: &Args<'_>) -> Result<CurveClass, OpError> {
    let conics = surface::conic_classes(l)?;
    let i = a.u32_or("conic_index", 0)? as usize;
    conics.get(i).cloned().ok_or_else(|| {
        OpError(format!(
            "conic index {i} out of range ({} conics)",
            conics.len()
        ))
    })
}

fn degenerate_members(a: &Args<'_>) -> OpResult {
    let l = lattice(a)?;
    match a.str_or("output", "count")? {
        "count" if a.has("conic_index") => {
            count(surface::degenerate_members(&l, &pick_conic(&l, a)?)?.len())
        }
        // the common count over every conic class, or an error if they differ
        "count" => {
            let mut counts = Vec::new();
            for f in surface::conic_classes(&l)? {
                counts.push(surface::degenerate_members(&l, &f)?.len());
            }
            counts.dedup();
            match counts.as_slice() {
                [n] => count(*n),
                _ => fail(format!(
                    "degenerate member counts differ across pencils: {counts:?}"
                )),
            }
        }
        // lines met by the degenerate members of F and of -K - F together
        "pair_cover" => {
            let f = pick_conic(&l, a)?;
            let partner = &l.scalar(-1, &l.canonical()) - &f;
            let mut lines = Vec::new();
            for g in [&f, &partner] {
                for (x, y) in surface::degenerate_members(&l, g)? {
                    lines.push(x);
                    lines.push(y);
                }
            }
            lines.sort();
            lines.dedup();
            count(lines.len())
        }
        other => fail(format!("unknown output `{other}`")),
    }
}

fn conic_vmrt_class(a: &Args<'_>) -> OpResult {
    let l = lattice(a)?;
    let p = surface::lattice_profile(&l);
    let f = pick_conic(&l, a)?;
    match a.str_or("output", "class")? {
        "class" => class(surface::conic_vmrt_class(&l, &f)?, &p),
        "with_partner" => {
            let partner = &l.scalar(-1, &l.canonical()) - &f;
            let sum =
                &surface::conic_vmrt_class(&l, &f)? + &surface::conic_vmrt_class(&l, &partner)?;
            class(sum, &p)
        }
        // (K + 2F) . (-K)
        "base_anticanonical_degree" => {
            let base = &l.canonical() + &l.scalar(2, &f);
            number(int(l.anticanonical_degree(&base)))
        }
        other => fail(format!("unknown output `{other}`")),
    }
}

fn vmrt_table(a: &Args<'_>) -> OpResult {
    let rows = threefold::vmrt_table()?;
    let d = a.u32("d")?;
    let row = rows
        .get(&d)
        .ok_or_else(|| OpError(format!("no table row for d = {d}")))?;
    match a.str("field")? {
        "class" if row.is_interval() => fail("interval rows have no exact class"),
        "class" => {
            let b3 = threefold::default_b3(d).unwrap_or(0);
            class(row.class.clone(), &threefold::threefold_profile(d, b3)?)
        }
        "h_coefficient" => number(row.h_coefficient.lower().clone()),
        "is_interval" => Ok(Value::Bool(matches!(row.h_coefficient, Bound::AtLeast(_)))),
        "k" => number(int(row.k as i64)),
        "r" => number(int(row.r as i64)),
        "not_big" => Ok(Value::Bool(row.not_big())),
        other => fail(format!("unknown field `{other}`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn run(op: &str, args: Json) -> Value {
        dispatch(op, args.as_object().unwrap()).unwrap()
    }

    #[test]
    fn every_module_op_dispatches() {
        for (_, op) in MODULE_OPS.iter().chain(CLI_OPS) {
            let err = dispatch(op, &Map::new());
            if let Err(OpError(msg)) = err {
                assert!(!msg.starts_with("unknown operation"), "{op}");
            }
        }
        assert!(dispatch("nope", &Map::new())
            .unwrap_err()
            .0
            .starts_with("unknown operation"));
    }

    #[test]
    fn values() {
        let v = run(
            "eval_top",
            json!({"profile": "cubic-surface", "expr": "z^3"}),
        );
        assert_eq!(v.to_string(), "-6");
        let v = run("vmrt_table", json!({"d": 5, "field": "class"}));
        assert_eq!(v.to_string(), "3z - H");
        let v = run(
            "hypersurface_profile",
            json!({"n": 3, "d": 3, "chern": [2], "times": "H"}),
        );
        assert_eq!(v.to_string(), "12");
        let v = run(
            "hypersurface_profile",
            json!({"n": 3, "d": 3, "chern": [1], "output": "class"}),
        );
        assert_eq!(v.to_string(), "2H");
        let v = run(
            "segre_omega",
            json!({"profile": "cubic-surface", "j": 1, "against": "H"}),
        );
        assert_eq!(v.to_string(), "3");
    }

    #[test]
    fn degree4_cover() {
        let v = run(
            "degenerate_members",
            json!({"degree": 4, "output": "pair_cover"}),
        );
        assert_eq!(v.to_string(), "16");
        let v = run(
            "conic_vmrt_class",
            json!({"degree": 4, "output": "with_partner"}),
        );
        assert_eq!(v.to_string(), "2z");
    }
}
