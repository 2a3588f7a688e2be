//! One PASS/FAIL line per acceptance criterion. Every comparison is exact
//! (tolerance zero); criterion 10 compares reports byte for byte with the
//! wall time zeroed.
//!
//! Criteria 4 and 9 contain a literal statement that cannot hold (see the
//! detail lines printed for them). They are checked as stated and reported
//! as FAIL; the run fails if any other criterion fails, or if the
//! corrected statements that replace them do not hold.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::oracle::{s_word, GroupAlgebra, FROZEN};
use peakalg::combitypes::compositions;
use peakalg::peakcli::checks::Scope;
use peakalg::peakcli::report::{Check, RunReport};
use peakalg::peakcli::verify_report;
use peakalg::symcore::{internal_product, product_fast};

const KNOWN_UNATTAINABLE: [u8; 2] = [4, 9];

fn oracle_criterion() -> Result<usize, String> {
    let mut pairs = 0;
    for n in 1..=5 {
        let g = GroupAlgebra::new(n);
        let comps = compositions(n);
        for i in &comps {
            for j in &comps {
                let want = g.internal_product(i, j, FROZEN);
                let split = internal_product(&s_word(i), &s_word(j)).map_err(|e| e.to_string())?;
                if split != want {
                    return Err(format!("splitting formula differs at S^{i} * S^{j}"));
                }
                let fast = product_fast(&s_word(i), &s_word(j)).map_err(|e| e.to_string())?;
                if fast != want {
                    return Err(format!("P-basis route differs at S^{i} * S^{j}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(pairs)
}

fn summarize(checks: &[&Check]) -> (bool, String) {
    let failed: Vec<&&Check> = checks.iter().filter(|c| !c.passed).collect();
    if failed.is_empty() {
        return (true, format!("{} checks", checks.len()));
    }
    let first = failed[0];
    (
        false,
        format!(
            "{} of {} checks failed; first {}/{}: {}",
            failed.len(),
            checks.len(),
            first.section,
            first.id,
            first.detail.as_deref().unwrap_or("")
        ),
    )
}

fn passed(report: &RunReport, id: &str) -> bool {
    report.checks.iter().filter(|c| c.id.starts_with(id)).all(|c| c.passed)
        && report.checks.iter().any(|c| c.id.starts_with(id))
}

fn main() {
    let scope = Scope {
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..Scope::default()
    };
    let start = Instant::now();
    let first = verify_report(&scope);
    let second = verify_report(&Scope { jobs: 1, ..scope.clone() });
    eprintln!("two full runs in {:.1} s", start.elapsed().as_secs_f64());

    let mut failing = BTreeSet::new();
    for k in 1..=10u8 {
        let (ok, detail) = match k {
            5 => match oracle_criterion() {
                Ok(pairs) => (true, format!("{pairs} pairs, n <= 5")),
                Err(e) => (false, e),
            },
            10 => {
                let same = first.stable_json() == second.stable_json();
                (same, format!("{} bytes per report", first.stable_json().len()))
            }
            _ => {
                let checks: Vec<&Check> = first.checks.iter().filter(|c| c.criterion == Some(k)).collect();
                if checks.is_empty() {
                    (false, "no checks recorded".into())
                } else {
                    summarize(&checks)
                }
            }
        };
        println!("criterion {k:>2}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failing.insert(k);
        }
    }

    let unexpected: Vec<u8> = failing.iter().copied().filter(|k| !KNOWN_UNATTAINABLE.contains(k)).collect();
    assert!(unexpected.is_empty(), "criteria {unexpected:?} failed");

    // What replaces the two unattainable statements must hold.
    for id in ["cartan-support/", "cartan-dimensions/", "quiver/", "radical-powers/"] {
        assert!(passed(&first, id), "type A {id} failed");
    }
    for id in ["E-sum-is-root/", "E-idempotent/", "E-orthogonal/", "eta-idempotent/", "E-tilde-"] {
        assert!(passed(&first, id), "{id} failed");
    }
    // Only the literal statements themselves may fail.
    for c in first.checks.iter().filter(|c| !c.passed) {
        assert!(
            c.id.starts_with("cartan-formula/") || c.id.starts_with("E-sum-is-S-sharp/"),
            "{}/{} failed: {:?}",
            c.section,
            c.id,
            c.detail
        );
    }
}
