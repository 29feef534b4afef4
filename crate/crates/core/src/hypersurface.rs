//! Smooth hypersurfaces `X` of degree `d` in `P^(n+1)`: Chern and Segre data,
//! the cubic intersection number `z^2 (z + H)^(2n-3)`, and the binomial
//! identities that evaluate it in closed form.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::chow::{eval_product, PtClass};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::profile::BaseProfile;
use crate::rational::{binomial, binomial_q, factorial, int, pow2, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HypersurfaceSpec {
    n: u32,
    d: u32,
}

impl HypersurfaceSpec {
    pub fn new(n: u32, d: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::out_of_range("hypersurface dimension", n));
        }
        if d == 0 {
            return Err(Error::out_of_range("hypersurface degree", d));
        }
        Ok(HypersurfaceSpec { n, d })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn label(&self) -> String {
        format!("hyp-n{}-d{}", self.n, self.d)
    }
}

/// Coefficient of `H^j` in `c(T_X) = (1 + H)^(n+2) / (1 + dH)`.
fn chern_coefficient(spec: HypersurfaceSpec, j: u32) -> BigInt {
    let d = BigInt::from(spec.d);
    (0..=j)
        .map(|i| {
            let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
            binomial(spec.n as i64 + 2, i as i64) * d.pow(j - i) * sign
        })
        .sum()
}

pub fn hypersurface_profile(spec: HypersurfaceSpec) -> BaseProfile {
    let n = spec.n;
    let chern = (1..=n)
        .map(|j| Poly::monomial(vec![j], Rational::from_integer(chern_coefficient(spec, j))))
        .collect();
    BaseProfile::new(
        spec.label(),
        n,
        vec!["H".to_string()],
        BTreeMap::from([(vec![n], int(spec.d as i64))]),
        chern,
    )
    .expect("hypersurface profile is well formed")
}

fn check_segre_index(spec: HypersurfaceSpec, l: u32) -> Result<()> {
    if l == 0 || l > spec.n {
        return Err(Error::out_of_range("Segre index", l));
    }
    Ok(())
}

fn sign(l: u32) -> Rational {
    if l % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// Coefficient of `H^l` in `s_l(T_X)`:
/// `(-1)^l (C(n+l+1, l) - d C(n+l, l-1))`.
pub fn segre_closed_form(spec: HypersurfaceSpec, l: u32) -> Result<Rational> {
    check_segre_index(spec, l)?;
    let (n, l_) = (spec.n as i64, l as i64);
    let unsigned = binomial_q(n + l_ + 1, l_) - int(spec.d as i64) * binomial_q(n + l_, l_ - 1);
    Ok(sign(l) * unsigned)
}

/// The same coefficient in factored form `(-1)^l C(n+l, l-1) ((n+1)/l - d + 1)`.
pub fn segre_factored_form(spec: HypersurfaceSpec, l: u32) -> Result<Rational> {
    check_segre_index(spec, l)?;
    let (n, l_) = (spec.n as i64, l as i64);
    let bracket = rat(n + 1, l_) - int(spec.d as i64) + int(1);
    Ok(sign(l) * binomial_q(n + l_, l_ - 1) * bracket)
}

/// `-9 * 2^n / (8 (2n-1)(n+1)) * C(2n, n)`.
pub fn cubic_mnef_closed_form(n: u32) -> Result<Rational> {
    check_cubic_range(n)?;
    let n_ = n as i64;
    Ok(int(-9) * pow2(n) * binomial_q(2 * n_, n_) / int(8 * (2 * n_ - 1) * (n_ + 1)))
}

fn check_cubic_range(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::out_of_range(
            "cubic hypersurface dimension (needs n >= 3)",
            n,
        ));
    }
    Ok(())
}

/// `z^2 (z + pi^*H)^(2n-3)` on a smooth cubic `n`-fold, evaluated by the
/// intersection engine and checked against the closed form.
pub fn cubic_mnef_number(n: u32) -> Result<Rational> {
    check_cubic_range(n)?;
    let profile = hypersurface_profile(HypersurfaceSpec::new(n, 3)?);
    let z = PtClass::zeta(&profile);
    let nef = &z + &PtClass::symbol(&profile, "H")?;
    let value = eval_product(&profile, &[z.pow(2), nef.pow(2 * n - 3)])?;
    let closed = cubic_mnef_closed_form(n)?;
    if value != closed {
        return Err(Error::IdentityViolated(format!(
            "cubic intersection number for n = {n}: engine {value}, closed form {closed}"
        )));
    }
    Ok(value)
}

/// `sum_{i=0}^{n} C(2n-3, i) C(2n-i+1, n-i)`.
pub fn sum_positive_part(n: u32) -> Result<Rational> {
    check_cubic_range(n)?;
    let n = n as i64;
    Ok((0..=n)
        .map(|i| binomial_q(2 * n - 3, i) * binomial_q(2 * n - i + 1, n - i))
        .sum())
}

/// `sum_{i=0}^{n-1} C(2n-3, i) C(2n-i, n-i-1)`.
pub fn sum_negative_part(n: u32) -> Result<Rational> {
    check_cubic_range(n)?;
    let n = n as i64;
    Ok((0..n)
        .map(|i| binomial_q(2 * n - 3, i) * binomial_q(2 * n - i, n - i - 1))
        .sum())
}

fn common_factor(n: i64) -> Rational {
    pow2(n as u32) * binomial_q(2 * n, n) / int(64 * (2 * n - 1) * (n + 1))
}

pub fn positive_part_closed_form(n: u32) -> Result<Rational> {
    check_cubic_range(n)?;
    let n = n as i64;
    Ok(int(3 * (27 * n * n + 9 * n - 14)) * common_factor(n))
}

pub fn negative_part_closed_form(n: u32) -> Result<Rational> {
    check_cubic_range(n)?;
    let n = n as i64;
    Ok(int(3 * (3 * n + 2) * (3 * n - 1)) * common_factor(n))
}

/// `A(k, n) = sum_{i=0}^{n} i^k / (i! (n-i)!)` by direct summation.
pub fn a_brute(k: u32, n: u32) -> Rational {
    (0..=n)
        .map(|i| Rational::new(BigInt::from(i).pow(k), factorial(i) * factorial(n - i)))
        .sum()
}

/// Closed form of `A(k, n)` for `k <= 4`.
pub fn a_closed(k: u32, n: u32) -> Option<Rational> {
    let m = n as i64;
    let base = pow2(n) / Rational::from_integer(factorial(n));
    let factor = match k {
        0 => int(1),
        1 => rat(m, 2),
        2 => rat(m * (m + 1), 4),
        3 => rat(m * m * (m + 3), 8),
        4 => rat(m * (m + 1) * (m * m + 5 * m - 2), 16),
        _ => return None,
    };
    Some(factor * base)
}

/// `(brute-force sum, closed form)`; the closed form is absent for `k > 4`.
pub fn comb_identity_a(k: u32, n: u32) -> Result<(Rational, Option<Rational>)> {
    if n == 0 {
        return Err(Error::out_of_range("A(k, n) index n", n));
    }
    Ok((a_brute(k, n), a_closed(k, n)))
}

/// `A(k, n) = n A(k-1, n) - A(k-1, n-1)`, every term by direct summation.
pub fn recursion_check_a(k: u32, n: u32) -> Result<bool> {
    if k == 0 {
        return Err(Error::out_of_range("recursion index k", k));
    }
    if n < 2 {
        return Err(Error::out_of_range("recursion index n", n));
    }
    let lhs = a_brute(k, n);
    let rhs = int(n as i64) * a_brute(k - 1, n) - a_brute(k - 1, n - 1);
    Ok(lhs == rhs)
}

/// `d * (positive - 3 * negative)`: the cubic number rebuilt from the two sums.
pub fn cubic_from_parts(n: u32) -> Result<Rational> {
    let pos = sum_positive_part(n)?;
    let neg = sum_negative_part(n)?;
    Ok(int(3) * (pos - int(3) * neg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::{eval_top, segre_omega};

    fn spec(n: u32, d: u32) -> HypersurfaceSpec {
        HypersurfaceSpec::new(n, d).unwrap()
    }

    #[test]
    fn cubic_threefold_chern_numbers() {
        // (1+H)^5/(1+3H): c_2 = (10 - 15 + 9) H^2 = 4H^2, c_3 = (10 - 30 + 45 - 27) H^3 = -2H^3
        let p = hypersurface_profile(spec(3, 3));
        let h = p.symbol("H").unwrap();
        assert_eq!(p.c1(), h.scale(&int(2)));
        assert_eq!(p.integrate(&(&h * &p.chern(2))).unwrap(), int(12));
        assert_eq!(p.integrate(&p.chern(3)).unwrap(), int(-6));
    }

    #[test]
    fn surface_chern_numbers() {
        let cubic = hypersurface_profile(spec(2, 3));
        assert_eq!(cubic.integrate(&cubic.c1().pow(2)).unwrap(), int(3));
        assert_eq!(cubic.integrate(&cubic.chern(2)).unwrap(), int(9));
        let k3 = hypersurface_profile(spec(2, 4));
        assert!(k3.c1().is_zero());
        assert_eq!(k3.integrate(&k3.chern(2)).unwrap(), int(24));
        let z = PtClass::zeta(&k3);
        assert_eq!(eval_top(&k3, &z.pow(3)).unwrap(), int(-24));
    }

    #[test]
    fn segre_examples() {
        assert_eq!(segre_closed_form(spec(3, 3), 2).unwrap(), int(0));
        assert_eq!(segre_closed_form(spec(2, 3), 1).unwrap(), int(-1));
        assert_eq!(segre_closed_form(spec(3, 3), 3).unwrap(), int(10));
        assert!(segre_closed_form(spec(3, 3), 0).is_err());
        assert!(segre_closed_form(spec(3, 3), 4).is_err());
    }

    #[test]
    fn segre_closed_form_matches_inversion() {
        for n in 1..=6 {
            for d in 1..=5 {
                let s = spec(n, d);
                let seg = segre_omega(&hypersurface_profile(s));
                for l in 1..=n {
                    let inv = seg.get(l).coeff(&[l]);
                    assert_eq!(segre_closed_form(s, l).unwrap(), sign(l) * inv);
                    assert_eq!(
                        segre_factored_form(s, l).unwrap(),
                        segre_closed_form(s, l).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn cubic_numbers() {
        assert_eq!(cubic_mnef_number(3).unwrap(), int(-9));
        assert_eq!(cubic_mnef_closed_form(4).unwrap(), int(-36));
        assert_eq!(cubic_mnef_number(4).unwrap(), int(-36));
        assert!(cubic_mnef_number(2).is_err());
    }

    #[test]
    fn binomial_sums() {
        assert_eq!(sum_positive_part(3).unwrap(), int(96));
        assert_eq!(sum_positive_part(4).unwrap(), int(681));
        assert_eq!(sum_negative_part(3).unwrap(), int(33));
        assert_eq!(positive_part_closed_form(3).unwrap(), int(96));
        assert_eq!(negative_part_closed_form(3).unwrap(), int(33));
        for n in 3..=12 {
            assert_eq!(
                cubic_from_parts(n).unwrap(),
                cubic_mnef_number(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn a_identities() {
        assert_eq!(comb_identity_a(1, 3).unwrap(), (int(2), Some(int(2))));
        assert_eq!(comb_identity_a(2, 3).unwrap(), (int(4), Some(int(4))));
        let (brute, closed) = comb_identity_a(5, 3).unwrap();
        assert!(closed.is_none());
        // 1/2 + 32/2 + 243/6
        assert_eq!(brute, int(57));
        assert!(recursion_check_a(1, 2).unwrap());
        assert!(recursion_check_a(1, 3).unwrap());
        assert!(recursion_check_a(0, 3).is_err());
    }
}
