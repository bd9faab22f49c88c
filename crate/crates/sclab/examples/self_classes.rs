//! The self-class construction on the cyclic group of order 6: classes of
//! every element over two subgroups, the resulting families, and the class
//! group one of them forms.
//!
//! Run with `cargo run --example self_classes`.

use sclab::classes::{class_family, family_group, identity_class, sandwich_class, ClassKind};
use sclab::families::cyclic;
use sclab::subgroup::ElementSet;

fn main() {
    let g = cyclic(6);
    let h = ElementSet::new(&g, [0, 3]).unwrap(); // {e, a3}
    let k = ElementSet::new(&g, [0, 2, 4]).unwrap(); // {e, a2, a4}

    println!("classes over H = {}:", h.render(&g));
    for a in 0..g.order() {
        let class = sandwich_class(&g, &h, a).unwrap();
        println!("  g({}) = {}", g.name(a), class.render(&g));
    }

    println!("\nclasses over K = {}:", k.render(&g));
    for a in 0..g.order() {
        let class = sandwich_class(&g, &k, a).unwrap();
        println!("  g({}) = {}", g.name(a), class.render(&g));
    }

    let family = class_family(&g, &k, ClassKind::SelfClass).unwrap();
    println!(
        "\nfamily over K: {} distinct blocks, partition = {}",
        family.blocks.len(),
        family.is_partition
    );
    match family_group(&g, &family) {
        Ok(cg) => {
            println!("the blocks form a group of order {}:", cg.order());
            for i in 0..cg.order() {
                for j in 0..cg.order() {
                    println!(
                        "  {} * {} = {}",
                        cg.group.name(i),
                        cg.group.name(j),
                        cg.group.name(cg.group.mul(i, j))
                    );
                }
            }
        }
        Err(refusal) => println!("refused: {}", refusal.render(&g, &family)),
    }

    // the identity's class is the set of squares
    println!(
        "\nclass of the identity over K (the squares of K): {}",
        identity_class(&g, &k).unwrap().render(&g)
    );

    // conjugacy self-classes of an abelian group are singletons
    let conj = class_family(&g, &k, ClassKind::ConjSelfClass).unwrap();
    println!(
        "conjugacy self-class family over K: {} singleton blocks",
        conj.blocks.len()
    );
}
