//! Builtin group families and direct products.
//!
//! Each family fixes a canonical element naming and puts the identity at
//! index 0. Cyclic groups use `e, a, a2, ..`; dihedral groups
//! `e, r, .., s, rs, ..`; symmetric and alternating groups use cycle
//! notation; the quaternion group uses `1, -1, i, -i, j, -j, k, -k`; and
//! dicyclic groups use `e, a, .., b, ab, ..`.

use crate::budget::{DEFAULT_ORDER_CAP, HARD_ORDER_CEILING};
use crate::error::GroupError;
use crate::group::Group;
use crate::perm::{all_perms, Perm};

/// A builtin family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    Dicyclic(usize),
}

impl Family {
    /// Order of the resulting group, or `None` on parameter overflow.
    pub fn order(&self) -> Option<usize> {
        match *self {
            Family::Cyclic(n) => Some(n),
            Family::Dihedral(n) => n.checked_mul(2),
            Family::Symmetric(n) => factorial(n),
            Family::Alternating(n) => factorial(n).map(|f| if n >= 2 { f / 2 } else { f }),
            Family::Quaternion => Some(8),
            Family::Dicyclic(m) => m.checked_mul(4),
        }
    }

    /// Canonical short name, e.g. `Z6`, `D4`, `S3`, `A4`, `Q8`, `Dic3`.
    pub fn name(&self) -> String {
        match *self {
            Family::Cyclic(n) => format!("Z{n}"),
            Family::Dihedral(n) => format!("D{n}"),
            Family::Symmetric(n) => format!("S{n}"),
            Family::Alternating(n) => format!("A{n}"),
            Family::Quaternion => "Q8".to_string(),
            Family::Dicyclic(m) => format!("Dic{m}"),
        }
    }

    /// Validates parameters and the order cap, then builds the group.
    pub fn build(&self, order_cap: usize) -> Result<Group, GroupError> {
        match *self {
            Family::Cyclic(n) if n < 1 => Err(GroupError::InvalidParameter { family: "cyclic", param: n }),
            Family::Dihedral(n) if n < 1 => {
                Err(GroupError::InvalidParameter { family: "dihedral", param: n })
            }
            Family::Symmetric(n) if !(1..=7).contains(&n) => {
                Err(GroupError::InvalidParameter { family: "symmetric", param: n })
            }
            Family::Alternating(n) if !(1..=7).contains(&n) => {
                Err(GroupError::InvalidParameter { family: "alternating", param: n })
            }
            Family::Dicyclic(m) if m < 2 => {
                Err(GroupError::InvalidParameter { family: "dicyclic", param: m })
            }
            _ => {
                let order = self.order().ok_or(GroupError::OrderCapExceeded {
                    order: usize::MAX,
                    cap: order_cap,
                })?;
                let cap = order_cap.min(HARD_ORDER_CEILING);
                if order > cap {
                    return Err(GroupError::OrderCapExceeded { order, cap });
                }
                Ok(match *self {
                    Family::Cyclic(n) => build_cyclic(n),
                    Family::Dihedral(n) => build_dihedral(n),
                    Family::Symmetric(n) => build_perm_group(all_perms(n)),
                    Family::Alternating(n) => {
                        build_perm_group(all_perms(n).into_iter().filter(Perm::is_even).collect())
                    }
                    Family::Quaternion => build_quaternion(),
                    Family::Dicyclic(m) => build_dicyclic(m),
                })
            }
        }
    }
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

fn finish(n: usize, table: Vec<u16>, names: Vec<String>) -> Group {
    Group::from_flat(n, table, names).expect("builtin family table must validate")
}

fn build_cyclic(n: usize) -> Group {
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = ((i + j) % n) as u16;
        }
    }
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a{i}"),
        })
        .collect();
    finish(n, table, names)
}

/// Elements are `r^k` at index `k` and `r^k s` at index `n + k`, with the
/// relation `s r = r^-1 s`.
fn build_dihedral(n: usize) -> Group {
    let order = 2 * n;
    let idx = |k: usize, f: usize| f * n + k;
    let mut table = vec![0u16; order * order];
    for k1 in 0..n {
        for f1 in 0..2 {
            for k2 in 0..n {
                for f2 in 0..2 {
                    let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2 % n) % n };
                    table[idx(k1, f1) * order + idx(k2, f2)] = idx(k, f1 ^ f2) as u16;
                }
            }
        }
    }
    let rot_name = |k: usize| match k {
        0 => "e".to_string(),
        1 => "r".to_string(),
        _ => format!("r{k}"),
    };
    let mut names: Vec<String> = (0..n).map(rot_name).collect();
    for k in 0..n {
        names.push(match k {
            0 => "s".to_string(),
            1 => "rs".to_string(),
            _ => format!("r{k}s"),
        });
    }
    finish(order, table, names)
}

fn build_perm_group(perms: Vec<Perm>) -> Group {
    let n = perms.len();
    let pos: std::collections::HashMap<&Perm, usize> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = pos[&perms[i].compose(&perms[j])] as u16;
        }
    }
    let names = perms.iter().map(Perm::cycle_notation).collect();
    finish(n, table, names)
}

/// Indices: `1, -1, i, -i, j, -j, k, -k`. Axis products follow the usual
/// rules `ij = k`, `jk = i`, `ki = j`, with squares of `i, j, k` equal to `-1`.
fn build_quaternion() -> Group {
    // (axis, sign): axis 0..4 for 1, i, j, k; sign 0 positive, 1 negative.
    let mul_axis = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, x) => (x, 0),
            (x, 0) => (x, 0),
            (1, 1) | (2, 2) | (3, 3) => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let idx = |axis: usize, sign: usize| 2 * axis + sign;
    let mut table = vec![0u16; 64];
    for a1 in 0..4 {
        for s1 in 0..2 {
            for a2 in 0..4 {
                for s2 in 0..2 {
                    let (axis, extra) = mul_axis(a1, a2);
                    table[idx(a1, s1) * 8 + idx(a2, s2)] = idx(axis, s1 ^ s2 ^ extra) as u16;
                }
            }
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    finish(8, table, names)
}

/// Order `4m`, generated by `a` of order `2m` and `b` with `b^2 = a^m` and
/// `b a b^-1 = a^-1`. Elements `a^k` at index `k`, `a^k b` at `2m + k`.
fn build_dicyclic(m: usize) -> Group {
    let n = 2 * m;
    let order = 4 * m;
    let idx = |k: usize, f: usize| f * n + k;
    let mut table = vec![0u16; order * order];
    for k1 in 0..n {
        for f1 in 0..2 {
            for k2 in 0..n {
                for f2 in 0..2 {
                    // (a^k1 b^f1)(a^k2 b^f2)
                    let (k, f) = match (f1, f2) {
                        (0, f2) => ((k1 + k2) % n, f2),
                        (1, 0) => ((k1 + n - k2 % n) % n, 1),
                        (1, 1) => ((k1 + n - k2 % n + m) % n, 0),
                        _ => unreachable!(),
                    };
                    table[idx(k1, f1) * order + idx(k2, f2)] = idx(k, f) as u16;
                }
            }
        }
    }
    let mut names: Vec<String> = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a{k}"),
        })
        .collect();
    for k in 0..n {
        names.push(match k {
            0 => "b".to_string(),
            1 => "ab".to_string(),
            _ => format!("a{k}b"),
        });
    }
    finish(order, table, names)
}

/// Componentwise product with elements ordered `(i, j) -> i * |g2| + j` and
/// named `x|y`.
pub fn direct_product(g1: &Group, g2: &Group, order_cap: usize) -> Result<Group, GroupError> {
    let cap = order_cap.min(HARD_ORDER_CEILING);
    let order = g1
        .order()
        .checked_mul(g2.order())
        .filter(|&o| o <= cap)
        .ok_or(GroupError::OrderCapExceeded {
            order: g1.order().saturating_mul(g2.order()),
            cap,
        })?;
    let n2 = g2.order();
    let idx = |i: usize, j: usize| i * n2 + j;
    let mut table = vec![0u16; order * order];
    for i1 in 0..g1.order() {
        for j1 in 0..n2 {
            for i2 in 0..g1.order() {
                for j2 in 0..n2 {
                    table[idx(i1, j1) * order + idx(i2, j2)] =
                        idx(g1.mul(i1, i2), g2.mul(j1, j2)) as u16;
                }
            }
        }
    }
    let mut names = Vec::with_capacity(order);
    for i in 0..g1.order() {
        for j in 0..n2 {
            names.push(format!("{}|{}", g1.name(i), g2.name(j)));
        }
    }
    Group::from_flat(order, table, names)
}

/// Convenience constructors for small fixtures; they panic only if the
/// family order exceeds the default construction cap.
pub fn cyclic(n: usize) -> Group {
    Family::Cyclic(n).build(DEFAULT_ORDER_CAP).expect("cyclic")
}

pub fn dihedral(n: usize) -> Group {
    Family::Dihedral(n).build(DEFAULT_ORDER_CAP).expect("dihedral")
}

pub fn symmetric(n: usize) -> Group {
    Family::Symmetric(n).build(DEFAULT_ORDER_CAP).expect("symmetric")
}

pub fn alternating(n: usize) -> Group {
    Family::Alternating(n).build(DEFAULT_ORDER_CAP).expect("alternating")
}

pub fn quaternion() -> Group {
    Family::Quaternion.build(DEFAULT_ORDER_CAP).expect("quaternion")
}

pub fn dicyclic(m: usize) -> Group {
    Family::Dicyclic(m).build(DEFAULT_ORDER_CAP).expect("dicyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_families_validate_up_to_order_48() {
        let mut built = 0;
        for n in 1..=48 {
            cyclic(n).validate().unwrap();
            built += 1;
        }
        for n in 1..=24 {
            dihedral(n).validate().unwrap();
            built += 1;
        }
        for n in 1..=4 {
            symmetric(n).validate().unwrap();
            alternating(n).validate().unwrap();
            built += 2;
        }
        for m in 2..=12 {
            dicyclic(m).validate().unwrap();
            built += 1;
        }
        quaternion().validate().unwrap();
        built += 1;
        assert!(built > 80);
    }

    #[test]
    fn cyclic_naming_and_identity() {
        let g = cyclic(6);
        assert_eq!(g.names(), &["e", "a", "a2", "a3", "a4", "a5"]);
        assert_eq!(g.identity(), 0);
        assert!(g.is_abelian());
    }

    #[test]
    fn trivial_cyclic_group() {
        let g = cyclic(1);
        assert_eq!(g.order(), 1);
        assert_eq!(g.mul(0, 0), 0);
    }

    #[test]
    fn symmetric_three_is_nonabelian_order_six() {
        let g = symmetric(3);
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.name(0), "()");
        // transpositions have order 2, 3-cycles order 3
        let mut orders: Vec<usize> = (0..6).map(|a| g.elem_order(a)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn dihedral_relations() {
        let g = dihedral(4);
        assert_eq!(g.names()[..4], ["e", "r", "r2", "r3"]);
        assert_eq!(g.names()[4..], ["s", "rs", "r2s", "r3s"]);
        let r = 1;
        let s = 4;
        // s r s = r^-1
        assert_eq!(g.mul(g.mul(s, r), s), g.inv(r));
        assert_eq!(g.center().elems(), &[0, 2]);
    }

    #[test]
    fn quaternion_relations() {
        let g = quaternion();
        let (i, j, k) = (2, 4, 6);
        let minus_one = 1;
        assert_eq!(g.mul(i, i), minus_one);
        assert_eq!(g.mul(i, j), k);
        assert_eq!(g.mul(j, i), g.inv(k));
        assert_eq!(g.center().elems(), &[0, 1]);
    }

    #[test]
    fn dicyclic_relations() {
        let g = dicyclic(3);
        assert_eq!(g.order(), 12);
        let a = 1;
        let b = 6;
        // b^2 = a^m
        assert_eq!(g.mul(b, b), g.power(a, 3));
        // b a b^-1 = a^-1
        assert_eq!(g.mul(g.mul(b, a), g.inv(b)), g.inv(a));
        // every element outside <a> has order 4
        for x in 6..12 {
            assert_eq!(g.elem_order(x), 4);
        }
    }

    #[test]
    fn direct_product_shape() {
        let g = direct_product(&cyclic(2), &cyclic(3), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.name(0), "e|e");
        // an order-6 element exists, so this is cyclic of order 6
        assert!((0..6).any(|x| g.elem_order(x) == 6));

        let h = direct_product(&symmetric(3), &cyclic(2), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(h.order(), 12);
        assert!(!h.is_abelian());
    }

    #[test]
    fn product_with_trivial_factor() {
        let g = symmetric(3);
        let p = direct_product(&cyclic(1), &g, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(p.order(), 6);
        let outcome =
            crate::iso::are_isomorphic(&p, &g, crate::budget::Deadline::after_ms(5000));
        assert!(outcome.witness().is_some());
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            Family::Cyclic(2001).build(DEFAULT_ORDER_CAP),
            Err(GroupError::OrderCapExceeded { .. })
        ));
        assert!(matches!(
            Family::Symmetric(8).build(usize::MAX),
            Err(GroupError::InvalidParameter { .. })
        ));
        assert!(matches!(
            Family::Dicyclic(1).build(DEFAULT_ORDER_CAP),
            Err(GroupError::InvalidParameter { .. })
        ));
        assert!(matches!(
            Family::Dihedral(0).build(DEFAULT_ORDER_CAP),
            Err(GroupError::InvalidParameter { .. })
        ));
    }
}
