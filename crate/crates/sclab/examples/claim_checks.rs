//! Running the claim checkers. Claims are verified, never assumed: a
//! failing claim is reported as data with a concrete witness. The
//! order-preservation iff on Z6 is a case in point.
//!
//! Run with `cargo run --example claim_checks`.

use sclab::budget::Budgets;
use sclab::claims::{run_all_claims, ClaimId, ClaimStatus};
use sclab::families::{cyclic, symmetric};

fn main() {
    for (name, g) in [("Z6", cyclic(6)), ("S3", symmetric(3))] {
        let run = run_all_claims(&g, name, &ClaimId::ALL, &Budgets::default()).unwrap();
        let mut counts = std::collections::BTreeMap::new();
        for r in &run.reports {
            *counts.entry((r.claim.code(), r.status.to_string())).or_insert(0usize) += 1;
        }
        println!("{name}: {} claim instances", run.reports.len());
        for ((claim, status), count) in counts {
            println!("  {claim:<18} {status:<20} x{count}");
        }

        for r in run.reports.iter().filter(|r| r.status == ClaimStatus::Fails) {
            println!(
                "  counterexample: {} over H={} (lhs={:?}, rhs={:?})",
                r.claim.code(),
                r.subgroup.as_ref().map(|s| s.join(",")).unwrap_or_default(),
                r.lhs,
                r.rhs
            );
            if let Some(w) = &r.witness {
                println!("    witness: {}", serde_json::to_string(w).unwrap());
            }
        }
        println!();
    }
}
