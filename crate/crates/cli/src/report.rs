//! Report rendering.

use std::fmt::Write as _;

use pseff_core::rational::format_short;
use pseff_core::threefold::{vmrt_table, VmrtRow};

use crate::ops::{CLI_OPS, MODULE_OPS};
use crate::runner::{Report, Status};

pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn cell(text: &str) -> String {
    text.replace('|', "\\|")
}

fn module_order() -> Vec<&'static str> {
    let mut order: Vec<&str> = Vec::new();
    for (m, _) in MODULE_OPS.iter().chain(CLI_OPS) {
        if !order.contains(m) {
            order.push(m);
        }
    }
    order.push("unknown");
    order
}

/// Dual VMRT classes in the layout `d | k | r | class | not big`.
pub fn vmrt_markdown(rows: &[&VmrtRow]) -> String {
    let mut out = String::from("| d | k | r | class | T_X not big |\n|---|---|---|---|---|\n");
    for row in rows {
        let r = if row.is_interval() {
            format!(">= {}", row.r)
        } else {
            row.r.to_string()
        };
        let verdict = if row.not_big() { "yes" } else { "no" };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            row.d,
            row.k,
            r,
            cell(&row.render()),
            verdict
        );
    }
    out
}

pub fn to_markdown(report: &Report) -> String {
    let mut out = String::from("# Claim report\n");
    for module in module_order() {
        let records: Vec<_> = report
            .claims
            .iter()
            .filter(|r| r.module == module)
            .collect();
        if records.is_empty() {
            continue;
        }
        let _ = write!(out, "\n## {module}\n\n| claim | computed | expected | status | provenance |\n|---|---|---|---|---|\n");
        for r in &records {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            let computed = r.computed.as_deref().unwrap_or("-");
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                cell(&r.id),
                cell(computed),
                cell(&r.expected),
                status,
                r.provenance
            );
        }
        let notes: Vec<_> = records
            .iter()
            .filter_map(|r| r.diagnostic.as_ref().map(|d| (&r.id, d)))
            .collect();
        if !notes.is_empty() {
            out.push('\n');
            for (id, d) in notes {
                let _ = writeln!(out, "- `{id}`: {d}");
            }
        }
        if module == "delpezzo-threefolds" {
            if let Ok(rows) = vmrt_table() {
                out.push_str("\n### Dual VMRT classes\n\n");
                out.push_str(&vmrt_markdown(&rows.values().collect::<Vec<_>>()));
            }
        }
    }
    let s = &report.summary;
    let _ = write!(
        out,
        "\n**{} passed, {} failed, {} skipped**\n",
        s.pass, s.fail, s.skipped
    );
    out
}

/// Plain-text form of an H-coefficient bound, for the CLI.
pub fn bound_text(row: &VmrtRow) -> String {
    let m = format_short(row.h_coefficient.lower());
    if row.is_interval() {
        format!("m >= {m}")
    } else {
        format!("m = {m}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::Registry;
    use crate::runner::{run_claims, RunOptions};

    #[test]
    fn vmrt_rows_render_as_printed() {
        let rows = vmrt_table().unwrap();
        let md = vmrt_markdown(&rows.values().collect::<Vec<_>>());
        assert!(md.contains("| 5 | 3 | 10 | 3z - H | no |"));
        assert!(md.contains("| 4 | 4 | 16 | 4z | yes |"));
        assert!(md.contains("| 1 | 60 | >= 240 | 60z + mH, m >= 180 | yes |"));
        assert_eq!(bound_text(&rows[&1]), "m >= 180");
    }

    #[test]
    fn output_is_deterministic() {
        let reg = Registry::builtin();
        let a = run_claims(&reg, None, RunOptions::default());
        let b = run_claims(&reg, None, RunOptions::default());
        assert_eq!(to_json(&a), to_json(&b));
        assert_eq!(to_markdown(&a), to_markdown(&b));
    }

    #[test]
    fn one_table_per_module() {
        let reg = Registry::builtin();
        let md = to_markdown(&run_claims(&reg, None, RunOptions::default()));
        for m in [
            "chow-engine",
            "hypersurfaces",
            "delpezzo-surfaces",
            "delpezzo-threefolds",
            "schur-bott",
        ] {
            assert_eq!(md.matches(&format!("\n## {m}\n")).count(), 1, "{m}");
        }
    }
}
