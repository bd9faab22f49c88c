//! Building the small-group catalog and scanning it for non-R groups: the
//! empirical side of the question how many groups carry a nonabelian
//! subgroup whose sandwich family forms a group.
//!
//! Run with `cargo run --example catalog_scan`.

use sclab::budget::Budgets;
use sclab::catalog::build_catalog;
use sclab::report::{load_report, persist_report, scan_non_selfclass, ScanVerdict};

fn main() {
    let budgets = Budgets::default();
    let catalog = build_catalog(12, &budgets).unwrap();
    println!("catalog up to order 12 ({} entries):", catalog.entries.len());
    for e in &catalog.entries {
        println!("  order {:>2}  {}", e.order, e.name);
    }

    let report = scan_non_selfclass(&catalog, &budgets).unwrap();
    println!("\nnon-R scan:");
    for f in &report.findings {
        match f.verdict {
            Some(ScanVerdict::NonR) => println!(
                "  {:<10} non-R, witness subgroup of order {}, class group of order {}",
                f.group,
                f.witness_subgroup.as_ref().map(|w| w.len()).unwrap_or(0),
                f.class_group_order.unwrap()
            ),
            Some(ScanVerdict::NotNonR) => println!("  {:<10} nonabelian but not non-R", f.group),
            _ => {}
        }
    }

    let dir = std::env::temp_dir().join("sclab_example_scan.jsonl");
    persist_report(&report, &dir).unwrap();
    let reloaded = load_report(&dir).unwrap();
    println!(
        "\npersisted {} findings to {} and read them back identically: {}",
        report.findings.len(),
        dir.display(),
        reloaded == report
    );
    let _ = std::fs::remove_file(&dir);
}
