//! The claim registry: a JSON document binding each checked number to one
//! operation call and its expected value.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value as Json};

/// Registry shipped with the binary.
pub const BUILTIN: &str = include_str!("../claims.json");

/// Operations that no claim exercises, with the reason. Kept in the repo so
/// the completeness check has something explicit to read.
pub const UNCOVERED: &str = include_str!("../docs/uncovered.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    /// number quoted verbatim from the source text
    Quoted,
    Trivial,
    Derived,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Quoted => "QUOTED",
            Provenance::Trivial => "TRIVIAL",
            Provenance::Derived => "DERIVED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpBinding {
    pub op: String,
    #[serde(default)]
    pub args: Map<String, Json>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    /// inclusive bounds as "p/q" or integer strings
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Rational(String),
    Integer(i64),
    Bool(bool),
    /// class literal in the expression grammar, e.g. `3z - H`
    Class(String),
    Interval(Interval),
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Rational(s) | Expected::Class(s) => f.write_str(s),
            Expected::Integer(n) => write!(f, "{n}"),
            Expected::Bool(b) => write!(f, "{b}"),
            Expected::Interval(Interval { min, max }) => match (min, max) {
                (Some(lo), Some(hi)) => write!(f, "[{lo}, {hi}]"),
                (Some(lo), None) => write!(f, ">= {lo}"),
                (None, Some(hi)) => write!(f, "<= {hi}"),
                (None, None) => f.write_str("any"),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Claim {
    pub id: String,
    pub description: String,
    /// where the number comes from, with a verbatim quote
    pub anchor: String,
    pub op_binding: OpBinding,
    pub expected: Expected,
    pub provenance: Provenance,
    /// when present the claim is reported as skipped
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skip: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Registry {
    pub claims: Vec<Claim>,
}

#[derive(Debug)]
pub enum RegistryError {
    Parse(serde_json::Error),
    DuplicateId(String),
    EmptyId,
}

impl fmt::Display for RegistryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegistryError::Parse(e) => write!(f, "registry does not parse: {e}"),
            RegistryError::DuplicateId(id) => write!(f, "duplicate claim id `{id}`"),
            RegistryError::EmptyId => f.write_str("claim with an empty id"),
        }
    }
}

impl std::error::Error for RegistryError {}

impl Registry {
    pub fn parse(text: &str) -> Result<Self, RegistryError> {
        let reg: Registry = serde_json::from_str(text).map_err(RegistryError::Parse)?;
        let mut seen = BTreeSet::new();
        for c in &reg.claims {
            if c.id.is_empty() {
                return Err(RegistryError::EmptyId);
            }
            if !seen.insert(c.id.as_str()) {
                return Err(RegistryError::DuplicateId(c.id.clone()));
            }
        }
        Ok(reg)
    }

    pub fn builtin() -> Self {
        Registry::parse(BUILTIN).expect("built-in registry is valid")
    }

    /// Claims whose id starts with `prefix`, in registry order.
    pub fn filtered<'a>(&'a self, prefix: Option<&'a str>) -> impl Iterator<Item = &'a Claim> {
        self.claims
            .iter()
            .filter(move |c| prefix.is_none_or(|p| c.id.starts_with(p)))
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct UncoveredOp {
    pub op: String,
    pub reason: String,
}

pub fn uncovered_ops() -> Vec<UncoveredOp> {
    serde_json::from_str(UNCOVERED).expect("uncovered list is valid")
}
