//! Classifying groups: faithful subgroups, R-group and non-R verdicts for
//! a handful of small groups.
//!
//! Run with `cargo run --example classify_groups`.

use sclab::budget::Deadline;
use sclab::classes::{faithful_subgroups, is_non_r_group, is_r_group};
use sclab::families::{cyclic, dihedral, quaternion, symmetric};
use sclab::group::Group;
use sclab::subgroup::enumerate_subgroups;

fn classify(name: &str, g: &Group) {
    let deadline = Deadline::after_ms(10_000);
    let subs = enumerate_subgroups(g, 200, deadline).unwrap();
    println!("{name} (order {}):", g.order());

    for v in faithful_subgroups(g, &subs).unwrap() {
        match (&v.class_group, &v.refusal) {
            (Some(cg), _) => println!(
                "  H = {:<26} faithful, class group of order {}",
                v.subgroup.set.render(g),
                cg.order()
            ),
            (None, Some(r)) => println!(
                "  H = {:<26} not faithful: {}",
                v.subgroup.set.render(g),
                r.render(g, &v.family)
            ),
            _ => {}
        }
    }

    let r = is_r_group(g, &subs, deadline).unwrap();
    match &r.witness {
        Some(w) => println!(
            "  R-group: yes, witness H = {} with class groups of order {}",
            w.subgroup.set.render(g),
            w.class_group.order()
        ),
        None => println!("  R-group: no"),
    }

    let non_r = is_non_r_group(g, &subs, deadline).unwrap();
    match &non_r.witness {
        Some(w) => println!(
            "  non-R: yes, witness H = {} with class group of order {}",
            w.subgroup.set.render(g),
            w.class_group.order()
        ),
        None => println!("  non-R: no"),
    }
    println!();
}

fn main() {
    classify("Z6", &cyclic(6));
    classify("S3", &symmetric(3));
    classify("D4", &dihedral(4));
    classify("Q8", &quaternion());
}
