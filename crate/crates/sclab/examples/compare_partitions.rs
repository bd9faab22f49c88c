//! Comparing the four set constructions attached to one element: sandwich
//! class, conjugacy self-class, double coset, and full conjugacy class.
//!
//! Run with `cargo run --example compare_partitions`.

use sclab::classes::compare_classes;
use sclab::families::symmetric;
use sclab::subgroup::ElementSet;

fn main() {
    let g = symmetric(3);
    // H = {(), (2 3)} and a = (1 2)
    let h = ElementSet::new(&g, [0, 1]).unwrap();
    let a = g.index_of("(1 2)").unwrap();
    let cmp = compare_classes(&g, &h, a).unwrap();

    println!("G = S3, H = {}, a = {}", h.render(&g), g.name(a));
    println!("  sandwich class {{x a x}}:     {}", cmp.sandwich.render(&g));
    println!("  conjugacy self-class:       {}", cmp.conj.render(&g));
    println!("  double coset H a H:         {}", cmp.double_coset.render(&g));
    println!("  conjugacy class in G:       {}", cmp.conjugacy_class.render(&g));
    println!(
        "  sandwich class equals the double coset: {}",
        cmp.sandwich_eq_double_coset
    );

    // over H = G the conjugacy self-class is the ordinary conjugacy class
    let whole = ElementSet::whole_group(&g);
    let cmp = compare_classes(&g, &whole, a).unwrap();
    println!("\nover H = G:");
    println!("  conjugacy self-class:       {}", cmp.conj.render(&g));
    println!(
        "  equals the conjugacy class: {}",
        cmp.conj_eq_conjugacy_class
    );
}
