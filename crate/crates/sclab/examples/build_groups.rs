//! Constructing groups: builtin families, direct products, raw Cayley
//! tables, and permutation generators.
//!
//! Run with `cargo run --example build_groups`.

use sclab::budget::DEFAULT_ORDER_CAP;
use sclab::families::{cyclic, dicyclic, dihedral, direct_product, quaternion, symmetric};
use sclab::group::Group;
use sclab::parse::{from_permutation_generators, parse_group_expr};
use sclab::perm::Perm;

fn main() {
    for g in [cyclic(6), dihedral(4), symmetric(3), quaternion(), dicyclic(3)] {
        println!(
            "order {:>2}  {}  elements: {}",
            g.order(),
            if g.is_abelian() { "abelian   " } else { "nonabelian" },
            g.names().join(" ")
        );
    }

    // direct products compose componentwise
    let z2xz3 = direct_product(&cyclic(2), &cyclic(3), DEFAULT_ORDER_CAP).unwrap();
    println!("\nZ2 x Z3 has an element of order 6: {}", (0..6).any(|x| z2xz3.elem_order(x) == 6));

    // expressions evaluate through the same constructors
    let expr = parse_group_expr("Z2 x (D4 x Q8)").unwrap();
    println!("{} has order {}", expr, expr.order().unwrap());

    // raw tables are fully validated; the identity is normalized to index 0
    let z2 = Group::from_table(&[vec![1, 0], vec![0, 1]], None).unwrap();
    println!("\nfrom_table: order {}, identity at {}", z2.order(), z2.identity());
    let bad = Group::from_table(&[vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]], None);
    println!("a bad table is rejected: {}", bad.unwrap_err());

    // permutation closure, breadth-first from the identity
    let gens = vec![
        Perm::from_cycles(3, &[vec![0, 1]]).unwrap(),
        Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
    ];
    let s3 = from_permutation_generators(&gens, DEFAULT_ORDER_CAP).unwrap();
    println!("closure of (1 2) and (1 2 3): {}", s3);
}
