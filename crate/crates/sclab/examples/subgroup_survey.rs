//! Enumerating subgroups with their structural flags, plus cosets and a
//! quotient.
//!
//! Run with `cargo run --example subgroup_survey`.

use sclab::budget::Deadline;
use sclab::families::{dihedral, symmetric};
use sclab::subgroup::{cosets, enumerate_subgroups, quotient, Side};

fn main() {
    for (name, g) in [("S3", symmetric(3)), ("D4", dihedral(4))] {
        println!("subgroups of {name}:");
        let subs = enumerate_subgroups(&g, 200, Deadline::none()).unwrap();
        for info in &subs {
            println!(
                "  id {:>2}  order {:>2}  {:<42} abelian={} normal={} central={}",
                info.id,
                info.set.len(),
                info.set.render(&g),
                info.is_abelian,
                info.is_normal,
                info.is_central
            );
        }
        println!();
    }

    // cosets of the rotation subgroup of D4, and the quotient by it
    let d4 = dihedral(4);
    let rotations = enumerate_subgroups(&d4, 200, Deadline::none())
        .unwrap()
        .into_iter()
        .find(|s| s.set.len() == 4 && s.set.contains(1))
        .unwrap()
        .set;
    println!("left cosets of {} in D4:", rotations.render(&d4));
    for c in cosets(&d4, &rotations, Side::Left).unwrap() {
        println!("  {}", c.render(&d4));
    }
    let (q, _) = quotient(&d4, &rotations).unwrap();
    println!("D4 / rotations is a {}", q);
}
