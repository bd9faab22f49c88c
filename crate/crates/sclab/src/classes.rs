//! Sandwich and conjugacy self-class constructions.
//!
//! For a subgroup `H` of `G`, the class of `a` is either the sandwich set
//! `{x a x : x in H}` or the conjugation orbit `{x^-1 a x : x in H}`. The
//! collection of classes of all elements, deduplicated, is a *class family*.
//! When a family partitions the group and the setwise products of its
//! blocks land exactly on blocks, the blocks form a group of their own -
//! the *class group*. Classification of groups by when this happens
//! (faithful subgroups, self-class groups, R-groups, non-R groups) lives
//! here too.

use serde::Serialize;

use crate::budget::Deadline;
use crate::error::GroupError;
use crate::group::Group;
use crate::iso::{are_isomorphic, IsoOutcome, IsoWitness};
use crate::subgroup::{
    double_coset, is_abelian_set, is_subgroup, ElementSet, SubgroupInfo,
};

/// Which class construction to apply.
///
/// `SelfClass` is the sandwich construction restricted to abelian `H` (where
/// it is an equivalence relation); `SandwichClass` is the same formula over
/// any subgroup; `ConjSelfClass` is the conjugation orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    #[serde(rename = "self")]
    SelfClass,
    #[serde(rename = "sandwich")]
    SandwichClass,
    #[serde(rename = "conj")]
    ConjSelfClass,
}

impl std::fmt::Display for ClassKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassKind::SelfClass => write!(f, "self"),
            ClassKind::SandwichClass => write!(f, "sandwich"),
            ClassKind::ConjSelfClass => write!(f, "conj"),
        }
    }
}

/// The sandwich set `{x a x : x in H}`. Always contains `a`.
pub fn sandwich_class(g: &Group, h: &ElementSet, a: usize) -> Result<ElementSet, GroupError> {
    is_subgroup(g, h)?;
    g.check_index(a)?;
    Ok(sandwich_class_unchecked(g, h, a))
}

fn sandwich_class_unchecked(g: &Group, h: &ElementSet, a: usize) -> ElementSet {
    let mut out: Vec<usize> = h.elems().iter().map(|&x| g.sandwich(x, a)).collect();
    out.sort_unstable();
    out.dedup();
    ElementSet::from_sorted_unchecked(out)
}

/// The conjugation orbit `{x^-1 a x : x in H}`. Always contains `a`, and its
/// size divides `|H|`.
pub fn conj_self_class(g: &Group, h: &ElementSet, a: usize) -> Result<ElementSet, GroupError> {
    is_subgroup(g, h)?;
    g.check_index(a)?;
    Ok(conj_class_unchecked(g, h, a))
}

fn conj_class_unchecked(g: &Group, h: &ElementSet, a: usize) -> ElementSet {
    let mut out: Vec<usize> = h.elems().iter().map(|&x| g.conjugate(x, a)).collect();
    out.sort_unstable();
    out.dedup();
    ElementSet::from_sorted_unchecked(out)
}

/// The class of the identity: the squares `{x^2 : x in H}`.
pub fn identity_class(g: &Group, h: &ElementSet) -> Result<ElementSet, GroupError> {
    sandwich_class(g, h, g.identity())
}

/// The deduplicated collection of classes of every element of `G` over a
/// fixed `(H, kind)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFamily {
    pub kind: ClassKind,
    pub subgroup: ElementSet,
    /// Distinct blocks in lexicographic order of their element lists
    /// (equivalently, by minimum element).
    pub blocks: Vec<ElementSet>,
    /// For each element `a`, the ordinal of the block computed from `a`.
    pub class_of: Vec<usize>,
    pub is_partition: bool,
    /// An element sitting in two distinct blocks, when the family is not a
    /// partition: `(element, block, block)`.
    pub overlap_witness: Option<(usize, usize, usize)>,
}

impl ClassFamily {
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

/// Computes the class family of `G` over `H` for the requested kind.
///
/// `SelfClass` over a nonabelian `H` is rejected; use `SandwichClass` for
/// the unrestricted construction.
pub fn class_family(g: &Group, h: &ElementSet, kind: ClassKind) -> Result<ClassFamily, GroupError> {
    is_subgroup(g, h)?;
    if kind == ClassKind::SelfClass && !is_abelian_set(g, h) {
        return Err(GroupError::SelfClassOverNonabelianH);
    }
    let classes: Vec<ElementSet> = (0..g.order())
        .map(|a| match kind {
            ClassKind::SelfClass | ClassKind::SandwichClass => sandwich_class_unchecked(g, h, a),
            ClassKind::ConjSelfClass => conj_class_unchecked(g, h, a),
        })
        .collect();

    let mut blocks: Vec<ElementSet> = classes.clone();
    blocks.sort();
    blocks.dedup();

    let class_of = classes
        .iter()
        .map(|c| blocks.binary_search(c).expect("own class is a block"))
        .collect();

    let covered: usize = blocks.iter().map(|b| b.len()).sum();
    let is_partition = covered == g.order();
    let overlap_witness = if is_partition {
        None
    } else {
        first_overlap(g.order(), &blocks)
    };

    Ok(ClassFamily {
        kind,
        subgroup: h.clone(),
        blocks,
        class_of,
        is_partition,
        overlap_witness,
    })
}

/// First element belonging to two blocks, with the two block ordinals.
fn first_overlap(order: usize, blocks: &[ElementSet]) -> Option<(usize, usize, usize)> {
    let mut first_block = vec![usize::MAX; order];
    let mut best: Option<(usize, usize, usize)> = None;
    for (bi, b) in blocks.iter().enumerate() {
        for &x in b.elems() {
            if first_block[x] != usize::MAX {
                let cand = (x, first_block[x], bi);
                if best.is_none_or(|prev| cand < prev) {
                    best = Some(cand);
                }
            } else {
                first_block[x] = bi;
            }
        }
    }
    best
}

/// Elementwise product `{c d : c in B1, d in B2}`.
pub fn setwise_product(
    g: &Group,
    b1: &ElementSet,
    b2: &ElementSet,
) -> Result<ElementSet, GroupError> {
    if b1.is_empty() || b2.is_empty() {
        return Err(GroupError::EmptyBlock);
    }
    b1.check_range(g)?;
    b2.check_range(g)?;
    let mut out = Vec::with_capacity(b1.len() * b2.len());
    for &c in b1.elems() {
        for &d in b2.elems() {
            out.push(g.mul(c, d));
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(ElementSet::from_sorted_unchecked(out))
}

/// Why a family fails to form a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyRefusal {
    /// Blocks overlap; `(element, block, block)`.
    NotAPartition {
        element: usize,
        block_a: usize,
        block_b: usize,
    },
    /// The setwise product of two blocks is not a block; first failing pair.
    ProductNotABlock {
        left: usize,
        right: usize,
        product: ElementSet,
    },
    /// The induced table failed group validation (defensive; setwise
    /// associativity should make this unreachable).
    InvalidTable(GroupError),
}

impl FamilyRefusal {
    pub fn render(&self, g: &Group, fam: &ClassFamily) -> String {
        match self {
            FamilyRefusal::NotAPartition { element, block_a, block_b } => format!(
                "not a partition: {} lies in blocks {} and {}",
                g.name(*element),
                fam.blocks[*block_a].render(g),
                fam.blocks[*block_b].render(g)
            ),
            FamilyRefusal::ProductNotABlock { left, right, product } => format!(
                "{} * {} = {} is not a block",
                fam.blocks[*left].render(g),
                fam.blocks[*right].render(g),
                product.render(g)
            ),
            FamilyRefusal::InvalidTable(e) => format!("block table is not a group: {e}"),
        }
    }
}

/// A family whose blocks form a group under the setwise product.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    pub family: ClassFamily,
    /// The verified group over block ordinals; names render the blocks.
    pub group: Group,
    pub identity_block: usize,
}

impl ClassGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Re-derives every setwise product and checks it against the table;
    /// used by witness-replay tests.
    pub fn verify_products(&self, g: &Group) -> bool {
        let blocks = &self.family.blocks;
        for (i, bi) in blocks.iter().enumerate() {
            for (j, bj) in blocks.iter().enumerate() {
                match setwise_product(g, bi, bj) {
                    Ok(p) => {
                        if blocks.get(self.group.mul(i, j)) != Some(&p) {
                            return false;
                        }
                    }
                    Err(_) => return false,
                }
            }
        }
        true
    }
}

/// Tries to turn a family into a group: the family must be a partition,
/// every pairwise setwise product must equal a block exactly, and the
/// induced table must pass full group validation. Refusal is a value
/// carrying the first failure, not an error.
pub fn family_group(g: &Group, fam: &ClassFamily) -> Result<ClassGroup, FamilyRefusal> {
    if !fam.is_partition {
        let (element, block_a, block_b) = fam.overlap_witness.expect("non-partition has witness");
        return Err(FamilyRefusal::NotAPartition {
            element,
            block_a,
            block_b,
        });
    }
    let k = fam.blocks.len();
    let mut table = vec![0u16; k * k];
    for i in 0..k {
        for j in 0..k {
            let p = setwise_product(g, &fam.blocks[i], &fam.blocks[j])
                .expect("blocks are nonempty");
            match fam.blocks.binary_search(&p) {
                Ok(idx) => table[i * k + j] = idx as u16,
                Err(_) => {
                    return Err(FamilyRefusal::ProductNotABlock {
                        left: i,
                        right: j,
                        product: p,
                    })
                }
            }
        }
    }
    let names = fam.blocks.iter().map(|b| b.render(g)).collect();
    let group = Group::from_flat(k, table, names).map_err(FamilyRefusal::InvalidTable)?;
    // block 0 contains the identity, hence acts as the identity block
    Ok(ClassGroup {
        family: fam.clone(),
        group,
        identity_block: 0,
    })
}

/// Verdict for one abelian subgroup: does its self-class family form a group?
#[derive(Debug, Clone)]
pub struct FaithfulVerdict {
    pub subgroup: SubgroupInfo,
    pub faithful: bool,
    pub class_group: Option<ClassGroup>,
    pub refusal: Option<FamilyRefusal>,
    pub family: ClassFamily,
}

/// Classifies every abelian subgroup of `G` as faithful or not. Nonabelian
/// subgroups are excluded: the self-class construction is not defined over
/// them.
pub fn faithful_subgroups(
    g: &Group,
    subgroups: &[SubgroupInfo],
) -> Result<Vec<FaithfulVerdict>, GroupError> {
    let mut out = Vec::new();
    for info in subgroups.iter().filter(|s| s.is_abelian) {
        let family = class_family(g, &info.set, ClassKind::SelfClass)?;
        let verdict = match family_group(g, &family) {
            Ok(cg) => FaithfulVerdict {
                subgroup: info.clone(),
                faithful: true,
                class_group: Some(cg),
                refusal: None,
                family,
            },
            Err(refusal) => FaithfulVerdict {
                subgroup: info.clone(),
                faithful: false,
                class_group: None,
                refusal: Some(refusal),
                family,
            },
        };
        out.push(verdict);
    }
    Ok(out)
}

/// Whether the self-class family of `G` over the abelian subgroup `h` forms
/// a group, returning the class group when it does.
pub fn is_self_class_group(
    g: &Group,
    h: &ElementSet,
) -> Result<(bool, Option<ClassGroup>), GroupError> {
    is_subgroup(g, h)?;
    if !is_abelian_set(g, h) {
        return Err(GroupError::SelfClassOverNonabelianH);
    }
    let family = class_family(g, h, ClassKind::SelfClass)?;
    match family_group(g, &family) {
        Ok(cg) => Ok((true, Some(cg))),
        Err(_) => Ok((false, None)),
    }
}

/// Witness that `G` is an R-group: an abelian subgroup whose self-class
/// group is isomorphic to the sandwich-class group of `G` over itself.
#[derive(Debug, Clone)]
pub struct RGroupWitness {
    pub subgroup: SubgroupInfo,
    pub class_group: ClassGroup,
    pub iso: IsoWitness,
}

/// R-group verdict; `whole_group_classes` is the class group of the
/// sandwich family over `H = G` when it exists.
#[derive(Debug, Clone)]
pub struct RGroupVerdict {
    pub is_r_group: bool,
    pub whole_group_classes: Option<ClassGroup>,
    pub whole_group_refusal: Option<FamilyRefusal>,
    pub witness: Option<RGroupWitness>,
}

/// Decides whether `G` is an R-group.
///
/// The sandwich family over `H = G` must form a group `M`; then abelian
/// subgroups are searched in deterministic id order, proper subgroups
/// first, for one whose self-class family forms a group isomorphic to `M`.
pub fn is_r_group(
    g: &Group,
    subgroups: &[SubgroupInfo],
    deadline: Deadline,
) -> Result<RGroupVerdict, GroupError> {
    let whole = ElementSet::whole_group(g);
    let m_family = class_family(g, &whole, ClassKind::SandwichClass)?;
    let m_g = match family_group(g, &m_family) {
        Ok(cg) => cg,
        Err(refusal) => {
            return Ok(RGroupVerdict {
                is_r_group: false,
                whole_group_classes: None,
                whole_group_refusal: Some(refusal),
                witness: None,
            })
        }
    };
    let proper_first = subgroups
        .iter()
        .filter(|s| s.is_abelian && s.set.len() < g.order())
        .chain(subgroups.iter().filter(|s| s.is_abelian && s.set.len() == g.order()));
    for info in proper_first {
        deadline.check("R-group search")?;
        let family = class_family(g, &info.set, ClassKind::SelfClass)?;
        let Ok(k_h) = family_group(g, &family) else {
            continue;
        };
        match are_isomorphic(&k_h.group, &m_g.group, deadline) {
            IsoOutcome::Isomorphic(iso) => {
                return Ok(RGroupVerdict {
                    is_r_group: true,
                    whole_group_classes: Some(m_g),
                    whole_group_refusal: None,
                    witness: Some(RGroupWitness {
                        subgroup: info.clone(),
                        class_group: k_h,
                        iso,
                    }),
                })
            }
            IsoOutcome::NotIsomorphic => continue,
            IsoOutcome::BudgetExceeded => {
                return Err(GroupError::BudgetExceeded { what: "R-group isomorphism search" })
            }
        }
    }
    Ok(RGroupVerdict {
        is_r_group: false,
        whole_group_classes: Some(m_g),
        whole_group_refusal: None,
        witness: None,
    })
}

/// Witness that `G` is a non-R group: a nonabelian subgroup whose sandwich
/// family is a partition forming a group.
#[derive(Debug, Clone)]
pub struct NonRWitness {
    pub subgroup: SubgroupInfo,
    pub class_group: ClassGroup,
}

/// Non-R verdict, with per-subgroup refusal records for the nonabelian
/// subgroups that were examined and failed.
#[derive(Debug, Clone)]
pub struct NonRVerdict {
    pub is_non_r: bool,
    pub witness: Option<NonRWitness>,
    /// For each refused nonabelian subgroup: (subgroup, family was a
    /// partition, refusal).
    pub refusals: Vec<(SubgroupInfo, bool, FamilyRefusal)>,
}

/// Decides whether `G` is a non-R group by scanning nonabelian subgroups in
/// deterministic id order (so `G` itself, when nonabelian, comes last) for
/// a sandwich family that partitions the group and forms a class group.
pub fn is_non_r_group(
    g: &Group,
    subgroups: &[SubgroupInfo],
    deadline: Deadline,
) -> Result<NonRVerdict, GroupError> {
    let mut refusals = Vec::new();
    for info in subgroups.iter().filter(|s| !s.is_abelian) {
        deadline.check("non-R search")?;
        let family = class_family(g, &info.set, ClassKind::SandwichClass)?;
        match family_group(g, &family) {
            Ok(cg) => {
                return Ok(NonRVerdict {
                    is_non_r: true,
                    witness: Some(NonRWitness {
                        subgroup: info.clone(),
                        class_group: cg,
                    }),
                    refusals,
                })
            }
            Err(refusal) => refusals.push((info.clone(), family.is_partition, refusal)),
        }
    }
    Ok(NonRVerdict {
        is_non_r: false,
        witness: None,
        refusals,
    })
}

/// The four partitions-in-contention for one `(G, H, a)` instance, with
/// pairwise equality flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassComparison {
    /// Sandwich class (self-class when `H` is abelian).
    pub sandwich: ElementSet,
    pub conj: ElementSet,
    /// Double coset `H a H`.
    pub double_coset: ElementSet,
    /// Conjugacy class of `a` in the full group.
    pub conjugacy_class: ElementSet,
    pub sandwich_eq_conj: bool,
    pub sandwich_eq_double_coset: bool,
    pub sandwich_eq_conjugacy_class: bool,
    pub conj_eq_double_coset: bool,
    pub conj_eq_conjugacy_class: bool,
    pub double_coset_eq_conjugacy_class: bool,
}

/// Computes the sandwich class, conjugacy self-class, double coset `H a H`,
/// and full conjugacy class of `a`, with pairwise equality flags.
pub fn compare_classes(g: &Group, h: &ElementSet, a: usize) -> Result<ClassComparison, GroupError> {
    let sandwich = sandwich_class(g, h, a)?;
    let conj = conj_self_class(g, h, a)?;
    let dc = double_coset(g, h, a, h)?;
    let whole = ElementSet::whole_group(g);
    let cc = conj_class_unchecked(g, &whole, a);
    Ok(ClassComparison {
        sandwich_eq_conj: sandwich == conj,
        sandwich_eq_double_coset: sandwich == dc,
        sandwich_eq_conjugacy_class: sandwich == cc,
        conj_eq_double_coset: conj == dc,
        conj_eq_conjugacy_class: conj == cc,
        double_coset_eq_conjugacy_class: dc == cc,
        sandwich,
        conj,
        double_coset: dc,
        conjugacy_class: cc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budgets;
    use crate::families::{cyclic, dihedral, quaternion, symmetric};
    use crate::subgroup::enumerate_subgroups;

    fn set(g: &Group, elems: &[usize]) -> ElementSet {
        ElementSet::new(g, elems.iter().copied()).unwrap()
    }

    #[test]
    fn z6_selfclass_over_h_is_singletons() {
        let g = cyclic(6);
        let h = set(&g, &[0, 3]);
        for a in 0..6 {
            assert_eq!(sandwich_class(&g, &h, a).unwrap().elems(), &[a]);
        }
        let fam = class_family(&g, &h, ClassKind::SelfClass).unwrap();
        assert_eq!(fam.blocks.len(), 6);
        assert!(fam.is_partition);
    }

    #[test]
    fn z6_selfclass_over_k_has_two_blocks() {
        let g = cyclic(6);
        let k = set(&g, &[0, 2, 4]);
        // g(a) = {a, a5, a3}
        assert_eq!(sandwich_class(&g, &k, 1).unwrap().elems(), &[1, 3, 5]);
        // g(a2) = {e*a2*e, a2*a2*a2, a4*a2*a4} = {a2, e, a4}
        assert_eq!(sandwich_class(&g, &k, 2).unwrap().elems(), &[0, 2, 4]);
        let fam = class_family(&g, &k, ClassKind::SelfClass).unwrap();
        assert_eq!(fam.blocks.len(), 2);
        assert_eq!(fam.blocks[0].elems(), &[0, 2, 4]);
        assert_eq!(fam.blocks[1].elems(), &[1, 3, 5]);
        assert!(fam.is_partition);
        let cg = family_group(&g, &fam).unwrap();
        assert_eq!(cg.order(), 2);
        assert_eq!(cg.identity_block, 0);
    }

    #[test]
    fn z6_conj_classes_are_singletons() {
        let g = cyclic(6);
        for h in [set(&g, &[0, 3]), set(&g, &[0, 2, 4])] {
            let fam = class_family(&g, &h, ClassKind::ConjSelfClass).unwrap();
            assert_eq!(fam.blocks.len(), 6);
            assert!(fam.blocks.iter().all(|b| b.len() == 1));
        }
    }

    #[test]
    fn identity_class_is_squares() {
        let g = cyclic(6);
        assert_eq!(identity_class(&g, &set(&g, &[0, 3])).unwrap().elems(), &[0]);
        assert_eq!(
            identity_class(&g, &set(&g, &[0, 2, 4])).unwrap().elems(),
            &[0, 2, 4]
        );
        let d4 = dihedral(4);
        let whole = ElementSet::whole_group(&d4);
        assert_eq!(identity_class(&d4, &whole).unwrap().elems(), &[0, 2]);
    }

    #[test]
    fn s3_sandwich_family_over_itself() {
        let g = symmetric(3);
        let whole = ElementSet::whole_group(&g);
        // transpositions sit at indices 1, 2, 5; 3-cycles at 3, 4
        let fam = class_family(&g, &whole, ClassKind::SandwichClass).unwrap();
        assert_eq!(fam.blocks.len(), 2);
        assert_eq!(fam.blocks[0].elems(), &[0, 3, 4]);
        assert_eq!(fam.blocks[1].elems(), &[1, 2, 5]);
        let cg = family_group(&g, &fam).unwrap();
        assert_eq!(cg.order(), 2);
        assert!(cg.verify_products(&g));
    }

    #[test]
    fn selfclass_over_nonabelian_subgroup_is_rejected() {
        let g = symmetric(3);
        let whole = ElementSet::whole_group(&g);
        let err = class_family(&g, &whole, ClassKind::SelfClass).unwrap_err();
        assert_eq!(err, GroupError::SelfClassOverNonabelianH);
    }

    #[test]
    fn setwise_products() {
        let g = symmetric(3);
        let transpositions = set(&g, &[1, 2, 5]);
        let p = setwise_product(&g, &transpositions, &transpositions).unwrap();
        assert_eq!(p.elems(), &[0, 3, 4]);

        let z6 = cyclic(6);
        let odd = set(&z6, &[1, 3, 5]);
        assert_eq!(setwise_product(&z6, &odd, &odd).unwrap().elems(), &[0, 2, 4]);

        let e = set(&g, &[0]);
        assert_eq!(setwise_product(&g, &e, &transpositions).unwrap(), transpositions);

        let empty = ElementSet::new(&g, []).unwrap();
        assert_eq!(
            setwise_product(&g, &empty, &transpositions).unwrap_err(),
            GroupError::EmptyBlock
        );
    }

    #[test]
    fn s3_family_over_a3_refuses_on_singleton_products() {
        let g = symmetric(3);
        let a3 = set(&g, &[0, 3, 4]);
        let fam = class_family(&g, &a3, ClassKind::SelfClass).unwrap();
        // blocks {A3}, and singletons for each transposition
        assert!(fam.is_partition);
        assert_eq!(fam.block_sizes(), vec![3, 1, 1, 1]);
        let refusal = family_group(&g, &fam).unwrap_err();
        match refusal {
            FamilyRefusal::ProductNotABlock { left, right, product } => {
                // first failing pair: {(),(1 2 3),(1 3 2)} * itself is fine,
                // so the first failure involves two singleton transpositions
                assert_eq!((left, right), (0, 1));
                assert_eq!(product.len(), 3);
            }
            other => panic!("unexpected refusal {other:?}"),
        }
    }

    #[test]
    fn trivial_subgroup_family_reproduces_the_group() {
        for g in [cyclic(6), symmetric(3), quaternion()] {
            let e = set(&g, &[0]);
            let fam = class_family(&g, &e, ClassKind::SelfClass).unwrap();
            let cg = family_group(&g, &fam).unwrap();
            assert_eq!(cg.order(), g.order());
            let outcome = are_isomorphic(&cg.group, &g, Deadline::after_ms(5000));
            assert!(outcome.witness().is_some());
        }
    }

    #[test]
    fn s3_faithful_subgroups() {
        let g = symmetric(3);
        let subs = enumerate_subgroups(&g, 200, Deadline::none()).unwrap();
        let verdicts = faithful_subgroups(&g, &subs).unwrap();
        // S3 itself is nonabelian and excluded; 5 abelian subgroups remain
        assert_eq!(verdicts.len(), 5);
        let faithful: Vec<bool> = verdicts.iter().map(|v| v.faithful).collect();
        assert_eq!(faithful, vec![true, false, false, false, false]);
        assert!(verdicts[0].subgroup.set.len() == 1);
        for v in &verdicts[1..] {
            assert!(v.refusal.is_some());
        }
    }

    #[test]
    fn q8_faithful_subgroups() {
        let g = quaternion();
        let subs = enumerate_subgroups(&g, 200, Deadline::none()).unwrap();
        let verdicts = faithful_subgroups(&g, &subs).unwrap();
        // all subgroups of Q8 are abelian except Q8 itself
        assert_eq!(verdicts.len(), 5);
        let by_size: Vec<(usize, bool)> =
            verdicts.iter().map(|v| (v.subgroup.set.len(), v.faithful)).collect();
        assert_eq!(by_size, vec![(1, true), (2, true), (4, false), (4, false), (4, false)]);
    }

    #[test]
    fn z6_is_an_r_group_with_witness_k() {
        let g = cyclic(6);
        let subs = enumerate_subgroups(&g, 200, Deadline::none()).unwrap();
        let verdict = is_r_group(&g, &subs, Deadline::after_ms(5000)).unwrap();
        assert!(verdict.is_r_group);
        let w = verdict.witness.unwrap();
        assert_eq!(w.subgroup.set.elems(), &[0, 2, 4]);
        assert_eq!(w.class_group.order(), 2);
        assert_eq!(verdict.whole_group_classes.unwrap().order(), 2);
    }

    #[test]
    fn trivial_and_z2_are_r_groups() {
        for n in [1, 2] {
            let g = cyclic(n);
            let subs = enumerate_subgroups(&g, 200, Deadline::none()).unwrap();
            let verdict = is_r_group(&g, &subs, Deadline::after_ms(5000)).unwrap();
            assert!(verdict.is_r_group, "Z{n} should be an R-group");
        }
    }

    #[test]
    fn s3_is_not_an_r_group_but_is_non_r() {
        let g = symmetric(3);
        let subs = enumerate_subgroups(&g, 200, Deadline::none()).unwrap();
        let r = is_r_group(&g, &subs, Deadline::after_ms(5000)).unwrap();
        assert!(!r.is_r_group);
        // the sandwich family over S3 does form a group of order 2, but no
        // abelian subgroup matches it
        assert_eq!(r.whole_group_classes.unwrap().order(), 2);

        let non_r = is_non_r_group(&g, &subs, Deadline::after_ms(5000)).unwrap();
        assert!(non_r.is_non_r);
        let w = non_r.witness.unwrap();
        assert_eq!(w.subgroup.set.len(), 6);
        assert_eq!(w.class_group.order(), 2);
    }

    #[test]
    fn abelian_groups_are_never_non_r() {
        let g = cyclic(6);
        let subs = enumerate_subgroups(&g, 200, Deadline::none()).unwrap();
        let verdict = is_non_r_group(&g, &subs, Deadline::after_ms(5000)).unwrap();
        assert!(!verdict.is_non_r);
        assert!(verdict.refusals.is_empty());
    }

    #[test]
    fn d4_and_q8_are_non_r_with_class_groups_of_order_4() {
        for g in [dihedral(4), quaternion()] {
            let subs = enumerate_subgroups(&g, 200, Deadline::none()).unwrap();
            let verdict = is_non_r_group(&g, &subs, Deadline::after_ms(5000)).unwrap();
            assert!(verdict.is_non_r);
            let w = verdict.witness.unwrap();
            assert_eq!(w.subgroup.set.len(), 8);
            assert_eq!(w.class_group.order(), 4);
        }
    }

    #[test]
    fn compare_classes_on_s3() {
        let g = symmetric(3);
        // H = {(), (2 3)}, a = (1 2)
        let h = set(&g, &[0, 1]);
        let cmp = compare_classes(&g, &h, 2).unwrap();
        assert_eq!(cmp.sandwich.elems(), &[2, 5]);
        assert_eq!(cmp.double_coset.elems(), &[2, 3, 4, 5]);
        assert!(!cmp.sandwich_eq_double_coset);
        // over H = G, the conjugacy self-class is the conjugacy class
        let whole = ElementSet::whole_group(&g);
        let cmp = compare_classes(&g, &whole, 2).unwrap();
        assert!(cmp.conj_eq_conjugacy_class);
        assert_eq!(cmp.conj.elems(), &[1, 2, 5]);
    }

    #[test]
    fn compare_classes_over_trivial_subgroup() {
        let g = symmetric(3);
        let e = set(&g, &[0]);
        let cmp = compare_classes(&g, &e, 3).unwrap();
        assert_eq!(cmp.sandwich.elems(), &[3]);
        assert_eq!(cmp.conj.elems(), &[3]);
        assert_eq!(cmp.double_coset.elems(), &[3]);
        assert!(!cmp.sandwich_eq_conjugacy_class); // class of a 3-cycle is {3, 4}
    }

    #[test]
    fn self_class_group_verdicts() {
        let g = cyclic(6);
        let k = set(&g, &[0, 2, 4]);
        let (yes, cg) = is_self_class_group(&g, &k).unwrap();
        assert!(yes);
        assert_eq!(cg.unwrap().order(), 2);

        let s3 = symmetric(3);
        let h = set(&s3, &[0, 1]);
        let (no, cg) = is_self_class_group(&s3, &h).unwrap();
        assert!(!no);
        assert!(cg.is_none());

        // the trivial subgroup always works
        let e = set(&s3, &[0]);
        let (yes, cg) = is_self_class_group(&s3, &e).unwrap();
        assert!(yes);
        assert_eq!(cg.unwrap().order(), 6);

        // nonabelian H is rejected outright
        let whole = ElementSet::whole_group(&s3);
        assert_eq!(
            is_self_class_group(&s3, &whole).unwrap_err(),
            GroupError::SelfClassOverNonabelianH
        );
    }

    #[test]
    fn budgets_default_shape() {
        let b = Budgets::default();
        assert_eq!(b.order_cap, 2000);
        assert_eq!(b.enumeration_cap, 200);
    }
}
