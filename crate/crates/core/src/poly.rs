//! Sparse polynomials over a fixed list of divisor symbols.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Exponents = Vec<u32>;

pub fn total_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

pub(crate) fn add_exponents(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A polynomial in `nvars` commuting symbols with exact coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Poly::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: Exponents, c: Rational) -> Self {
        let mut p = Poly::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponents, Rational)>,
    ) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let sum = self.terms.remove(&e).unwrap_or_else(Rational::zero) + c;
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(|e| total_degree(e)).collect()
    }

    /// `Some(d)` if every term has total degree `d`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let ds = self.degrees();
        if ds.len() == 1 {
            ds.into_iter().next()
        } else {
            None
        }
    }

    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms.keys().all(|e| total_degree(e) == degree)
    }

    pub fn component(&self, degree: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| total_degree(e) == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate(&self, max_degree: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| total_degree(e) <= max_degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Product with all terms of degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &Poly, max_degree: u32) -> Poly {
        assert_eq!(self.nvars, other.nvars, "mixing polynomial rings");
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let da = total_degree(ea);
            for (eb, cb) in &other.terms {
                if da + total_degree(eb) > max_degree {
                    continue;
                }
                out.add_term(add_exponents(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "mixing polynomial rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_truncated(rhs, u32::MAX)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
