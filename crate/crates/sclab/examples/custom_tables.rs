//! Reading groups from the two text formats: Cayley table files and
//! permutation generator files.
//!
//! Run with `cargo run --example custom_tables`.

use sclab::parse::{parse_cayley_file, parse_perm_gens};

fn main() {
    let table_text = "\
# the cyclic group of order 4, identity deliberately at index 2
order 4
names a a3 e a2
3 2 0 1
2 3 1 0
0 1 2 3
1 0 3 2
";
    let g = parse_cayley_file(table_text).unwrap();
    println!(
        "parsed table: order {}, identity normalized to index 0 (named {:?})",
        g.order(),
        g.name(0)
    );
    println!("element orders: {:?}", (0..4).map(|a| g.elem_order(a)).collect::<Vec<_>>());

    let perm_text = "\
# generators of the alternating group on 4 points
(1 2 3)
(2 3 4)
";
    let a4 = parse_perm_gens(perm_text).unwrap();
    println!("\nparsed generators: group of order {}", a4.order());
    println!("conjugacy class sizes: {:?}",
        a4.conjugacy_classes().iter().map(|c| c.len()).collect::<Vec<_>>());

    // malformed input is rejected with a line number
    let err = parse_cayley_file("order 3\n0 1 2\n").unwrap_err();
    println!("\nmalformed table file: {err}");
    let err = parse_perm_gens("(1 1 2)\n").unwrap_err();
    println!("malformed generator file: {err}");
}
