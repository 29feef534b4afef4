//! Batch verification of registry claims.

use std::time::Instant;

use pseff_core::expr::parse_expr;
use pseff_core::rational::{int, parse_rational};
use serde::Serialize;

use crate::ops::{self, Value};
use crate::registry::{Claim, Expected, Interval, Provenance, Registry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub id: String,
    pub module: String,
    pub op: String,
    pub status: Status,
    pub computed: Option<String>,
    pub expected: String,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
    /// wall time in microseconds; only recorded on request so that reports
    /// stay byte-identical between runs
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub claims: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub timings: bool,
}

/// Exact comparison; the error is the diagnostic for a failing claim.
pub fn compare(expected: &Expected, computed: &Value) -> Result<(), String> {
    let mismatch = || Err(format!("computed {computed}, expected {expected}"));
    match (expected, computed) {
        (Expected::Rational(s), Value::Number(q)) => {
            let want = parse_rational(s).map_err(|e| format!("bad expected value: {e}"))?;
            if *q == want {
                Ok(())
            } else {
                mismatch()
            }
        }
        (Expected::Integer(n), Value::Number(q)) => {
            if *q == int(*n) {
                Ok(())
            } else {
                mismatch()
            }
        }
        (Expected::Bool(b), Value::Bool(v)) => {
            if b == v {
                Ok(())
            } else {
                mismatch()
            }
        }
        (Expected::Class(text), Value::Class(cls, profile)) => {
            let want = parse_expr(profile, text).map_err(|e| format!("bad expected class: {e}"))?;
            if *cls == want {
                Ok(())
            } else {
                mismatch()
            }
        }
        (Expected::Interval(Interval { min, max }), Value::Number(q)) => {
            let bound =
                |s: &String| parse_rational(s).map_err(|e| format!("bad interval bound: {e}"));
            if let Some(lo) = min {
                if *q < bound(lo)? {
                    return mismatch();
                }
            }
            if let Some(hi) = max {
                if *q > bound(hi)? {
                    return mismatch();
                }
            }
            Ok(())
        }
        _ => Err(format!(
            "computed value {computed} has a different kind than expected {expected}"
        )),
    }
}

pub fn run_claim(claim: &Claim, opts: RunOptions) -> Record {
    let op = &claim.op_binding.op;
    let mut record = Record {
        id: claim.id.clone(),
        module: ops::module_of(op).unwrap_or("unknown").to_string(),
        op: op.clone(),
        status: Status::Skipped,
        computed: None,
        expected: claim.expected.to_string(),
        provenance: claim.provenance,
        diagnostic: None,
        elapsed_us: None,
    };
    if let Some(reason) = &claim.skip {
        record.diagnostic = Some(reason.clone());
        return record;
    }
    let start = Instant::now();
    let outcome = ops::dispatch(op, &claim.op_binding.args);
    if opts.timings {
        record.elapsed_us = Some(start.elapsed().as_micros() as u64);
    }
    match outcome {
        Ok(value) => {
            record.computed = Some(value.to_string());
            match compare(&claim.expected, &value) {
                Ok(()) => record.status = Status::Pass,
                Err(why) => {
                    record.status = Status::Fail;
                    record.diagnostic = Some(why);
                }
            }
        }
        Err(e) => {
            record.status = Status::Fail;
            record.diagnostic = Some(e.to_string());
        }
    }
    record
}

/// Runs every claim whose id starts with `filter`. Claims are independent,
/// so they are evaluated on scoped threads; results keep registry order.
pub fn run_claims(registry: &Registry, filter: Option<&str>, opts: RunOptions) -> Report {
    let selected: Vec<&Claim> = registry.filtered(filter).collect();
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(8);
    let chunk = selected.len().div_ceil(workers).max(1);
    let claims: Vec<Record> = std::thread::scope(|s| {
        let handles: Vec<_> = selected
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || part.iter().map(|c| run_claim(c, opts)).collect::<Vec<_>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("claim worker panicked"))
            .collect()
    });
    let mut summary = Summary::default();
    for r in &claims {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Report { claims, summary }
}
