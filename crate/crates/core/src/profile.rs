//! Intersection profiles: the finite presentation of a smooth projective
//! variety that every computation on `P(T_X)` consumes.
//!
//! A profile records a list of divisor symbols, the degree of every
//! top-dimensional monomial in them, and the Chern classes `c_1..c_n` of the
//! tangent bundle written as polynomials in those symbols. Monomials absent
//! from the top form have degree zero.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{total_degree, Exponents, Poly};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseProfile {
    label: String,
    dim: u32,
    basis: Vec<String>,
    top_form: BTreeMap<Exponents, Rational>,
    chern: Vec<Poly>,
}

impl BaseProfile {
    pub fn new(
        label: impl Into<String>,
        dim: u32,
        basis: Vec<String>,
        top_form: BTreeMap<Exponents, Rational>,
        chern: Vec<Poly>,
    ) -> Result<Self> {
        let label = label.into();
        let bad = |msg: String| Err(Error::MalformedProfile(format!("{label}: {msg}")));
        if dim == 0 {
            return bad("dimension must be positive".into());
        }
        if basis.is_empty() {
            return bad("empty divisor basis".into());
        }
        for (i, name) in basis.iter().enumerate() {
            if !is_symbol(name) || name == "z" || name == "K" {
                return bad(format!("invalid basis symbol `{name}`"));
            }
            if basis[..i].contains(name) {
                return bad(format!("duplicate basis symbol `{name}`"));
            }
        }
        for e in top_form.keys() {
            if e.len() != basis.len() {
                return bad(format!("top_form exponent {e:?} has wrong length"));
            }
            if total_degree(e) != dim {
                return bad(format!("top_form exponent {e:?} is not of degree {dim}"));
            }
        }
        if chern.len() != dim as usize {
            return bad(format!("expected {dim} Chern classes, got {}", chern.len()));
        }
        for (j, c) in chern.iter().enumerate() {
            if c.nvars() != basis.len() {
                return bad(format!("c_{} lives in the wrong ring", j + 1));
            }
            if !c.is_homogeneous_of(j as u32 + 1) {
                return bad(format!(
                    "c_{} is not homogeneous of degree {}",
                    j + 1,
                    j + 1
                ));
            }
        }
        let top_form = top_form.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(BaseProfile {
            label,
            dim,
            basis,
            top_form,
            chern,
        })
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn nvars(&self) -> usize {
        self.basis.len()
    }

    pub fn top_form(&self) -> &BTreeMap<Exponents, Rational> {
        &self.top_form
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn symbol(&self, name: &str) -> Option<Poly> {
        self.symbol_index(name).map(|i| Poly::var(self.nvars(), i))
    }

    /// `c_j(T_X)` for `1 <= j <= n`; `c_0 = 1`.
    pub fn chern(&self, j: u32) -> Poly {
        match j {
            0 => Poly::one(self.nvars()),
            j if j <= self.dim => self.chern[j as usize - 1].clone(),
            _ => Poly::zero(self.nvars()),
        }
    }

    pub fn c1(&self) -> Poly {
        self.chern(1)
    }

    /// `K_X = -c_1(T_X)`.
    pub fn canonical(&self) -> Poly {
        -&self.chern(1)
    }

    /// Total Chern class of the cotangent bundle, `c_j(Omega) = (-1)^j c_j(T)`.
    pub fn chern_omega_total(&self) -> Poly {
        let mut total = Poly::one(self.nvars());
        for j in 1..=self.dim {
            let c = self.chern(j);
            total = if j % 2 == 0 { &total + &c } else { &total - &c };
        }
        total
    }

    /// Degree of a top-dimensional cycle class.
    pub fn integrate(&self, p: &Poly) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in p.terms() {
            if total_degree(e) != self.dim {
                return Err(Error::DegreeMismatch {
                    expected: self.dim,
                    found: total_degree(e).to_string(),
                });
            }
            if let Some(v) = self.top_form.get(e) {
                acc += c * v;
            }
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ProfileDoc::from(self)).expect("profile serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ProfileDoc =
            serde_json::from_str(text).map_err(|e| Error::MalformedProfile(e.to_string()))?;
        doc.try_into()
    }
}

pub(crate) fn is_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// One `{exponents, value}` entry of a serialized polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exponents: Vec<u32>,
    #[serde(with = "rational::pq")]
    pub value: Rational,
}

/// On-disk form of a [`BaseProfile`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDoc {
    pub label: String,
    pub dim: u32,
    pub basis: Vec<String>,
    pub top_form: Vec<TermDoc>,
    pub chern: Vec<Vec<TermDoc>>,
}

fn poly_doc(p: &Poly) -> Vec<TermDoc> {
    p.terms()
        .map(|(e, c)| TermDoc {
            exponents: e.clone(),
            value: c.clone(),
        })
        .collect()
}

impl From<&BaseProfile> for ProfileDoc {
    fn from(p: &BaseProfile) -> Self {
        ProfileDoc {
            label: p.label.clone(),
            dim: p.dim,
            basis: p.basis.clone(),
            top_form: p
                .top_form
                .iter()
                .map(|(e, v)| TermDoc {
                    exponents: e.clone(),
                    value: v.clone(),
                })
                .collect(),
            chern: p.chern.iter().map(poly_doc).collect(),
        }
    }
}

impl TryFrom<ProfileDoc> for BaseProfile {
    type Error = Error;

    fn try_from(doc: ProfileDoc) -> Result<Self> {
        let nvars = doc.basis.len();
        let check_len = |e: &Vec<u32>| {
            if e.len() == nvars {
                Ok(())
            } else {
                Err(Error::MalformedProfile(format!(
                    "{}: exponent vector {e:?} does not match basis of size {nvars}",
                    doc.label
                )))
            }
        };
        let mut top = BTreeMap::new();
        for t in &doc.top_form {
            check_len(&t.exponents)?;
            if top.insert(t.exponents.clone(), t.value.clone()).is_some() {
                return Err(Error::MalformedProfile(format!(
                    "{}: duplicate top_form entry {:?}",
                    doc.label, t.exponents
                )));
            }
        }
        let mut chern = Vec::with_capacity(doc.chern.len());
        for c in &doc.chern {
            for t in c {
                check_len(&t.exponents)?;
            }
            chern.push(Poly::from_terms(
                nvars,
                c.iter().map(|t| (t.exponents.clone(), t.value.clone())),
            ));
        }
        BaseProfile::new(doc.label, doc.dim, doc.basis, top, chern)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p2() -> BaseProfile {
        let h = Poly::var(1, 0);
        BaseProfile::new(
            "P2",
            2,
            vec!["H".into()],
            BTreeMap::from([(vec![2], int(1))]),
            vec![h.scale(&int(3)), h.pow(2).scale(&int(3))],
        )
        .unwrap()
    }

    #[test]
    fn json_round_trip_is_exact() {
        let p = p2();
        let text = p.to_json();
        assert!(text.contains("\"3/1\""));
        assert_eq!(BaseProfile::from_json(&text).unwrap(), p);
    }

    #[test]
    fn rejects_inhomogeneous_chern_class() {
        let h = Poly::var(1, 0);
        let err = BaseProfile::new(
            "bad",
            2,
            vec!["H".into()],
            BTreeMap::new(),
            vec![&h + &Poly::one(1), h.pow(2)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::MalformedProfile(_)));
    }

    #[test]
    fn rejects_reserved_symbols_and_wrong_arity() {
        let h = Poly::var(1, 0);
        assert!(
            BaseProfile::new("bad", 1, vec!["z".into()], BTreeMap::new(), vec![h.clone()]).is_err()
        );
        assert!(BaseProfile::new("bad", 2, vec!["H".into()], BTreeMap::new(), vec![h]).is_err());
        let doc = r#"{"label":"x","dim":1,"basis":["H"],"top_form":[{"exponents":[1,0],"value":"1/1"}],"chern":[[]]}"#;
        assert!(BaseProfile::from_json(doc).is_err());
    }

    #[test]
    fn integrate_reads_top_form() {
        let p = p2();
        let h = Poly::var(1, 0);
        assert_eq!(p.integrate(&h.pow(2).scale(&int(5))).unwrap(), int(5));
        assert!(p.integrate(&h).is_err());
        assert_eq!(p.canonical(), h.scale(&int(-3)));
    }
}
