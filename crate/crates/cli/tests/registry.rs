use std::collections::BTreeSet;

use pseff_cli::ops::{module_of, MODULE_OPS};
use pseff_cli::registry::{uncovered_ops, Expected, Registry};

#[test]
fn every_module_op_is_claimed_or_listed_as_uncovered() {
    let reg = Registry::builtin();
    let used: BTreeSet<&str> = reg
        .claims
        .iter()
        .map(|c| c.op_binding.op.as_str())
        .collect();
    let uncovered: BTreeSet<String> = uncovered_ops().into_iter().map(|u| u.op).collect();
    let missing: Vec<_> = MODULE_OPS
        .iter()
        .map(|(_, op)| *op)
        .filter(|op| !used.contains(op) && !uncovered.contains(*op))
        .collect();
    assert!(missing.is_empty(), "operations without claims: {missing:?}");
    for op in &uncovered {
        assert!(
            !used.contains(op.as_str()),
            "`{op}` is both claimed and listed as uncovered"
        );
    }
}

#[test]
fn every_claim_names_a_known_op() {
    for c in Registry::builtin().claims {
        assert!(module_of(&c.op_binding.op).is_some(), "{}", c.id);
    }
}

#[test]
fn claims_carry_anchors_and_exact_expectations() {
    for c in Registry::builtin().claims {
        assert!(!c.anchor.trim().is_empty(), "{}", c.id);
        assert!(!c.description.trim().is_empty(), "{}", c.id);
        if let Expected::Rational(s) = &c.expected {
            assert!(!s.contains('.'), "{}: decimal literal", c.id);
        }
    }
}

#[test]
fn degree4_surface_prefix_has_seven_claims() {
    let reg = Registry::builtin();
    assert_eq!(reg.filtered(Some("dp2.surface")).count(), 7);
    for c in reg.filtered(Some("dp2.surface")) {
        assert_eq!(
            c.op_binding
                .args
                .get("degree")
                .and_then(|d| d.as_u64())
                .unwrap_or(4),
            4,
            "{}",
            c.id
        );
    }
}
