//! Element sets, subgroups, cosets, quotients, and double cosets.

use std::collections::BTreeSet;

use crate::budget::Deadline;
use crate::error::GroupError;
use crate::group::Group;

/// A sorted, duplicate-free set of element indices relative to a parent group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    elems: Vec<usize>,
}

impl ElementSet {
    /// Sorts, deduplicates, and range-checks the given indices.
    pub fn new(g: &Group, elems: impl IntoIterator<Item = usize>) -> Result<Self, GroupError> {
        let mut v: Vec<usize> = elems.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&i| i >= g.order()) {
            return Err(GroupError::IndexOutOfRange {
                index: bad,
                order: g.order(),
            });
        }
        Ok(ElementSet { elems: v })
    }

    /// Wraps a vector that is already sorted, deduplicated, and in range.
    pub(crate) fn from_sorted_unchecked(elems: Vec<usize>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        ElementSet { elems }
    }

    pub fn singleton(i: usize) -> Self {
        ElementSet { elems: vec![i] }
    }

    pub fn whole_group(g: &Group) -> Self {
        ElementSet {
            elems: (0..g.order()).collect(),
        }
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.elems.iter().all(|&i| other.contains(i))
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            elems: self.elems.iter().copied().filter(|&i| other.contains(i)).collect(),
        }
    }

    pub fn check_range(&self, g: &Group) -> Result<(), GroupError> {
        match self.elems.last() {
            Some(&max) if max >= g.order() => Err(GroupError::IndexOutOfRange {
                index: max,
                order: g.order(),
            }),
            _ => Ok(()),
        }
    }

    /// Display names of the members, in index order.
    pub fn names(&self, g: &Group) -> Vec<String> {
        self.elems.iter().map(|&i| g.name(i).to_string()).collect()
    }

    /// Renders as `{a,b,c}` using element names.
    pub fn render(&self, g: &Group) -> String {
        format!("{{{}}}", self.names(g).join(","))
    }
}

/// A subgroup found by [`enumerate_subgroups`], with its structural flags and
/// its stable ordinal in the deterministic (size, then lexicographic) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupInfo {
    pub set: ElementSet,
    pub is_abelian: bool,
    pub is_normal: bool,
    /// Whether the subgroup is contained in the center.
    pub is_central: bool,
    pub id: usize,
}

/// Which side cosets are formed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Checks that `s` contains the identity and is closed under the product.
/// Inverses follow from finiteness.
pub fn is_subgroup(g: &Group, s: &ElementSet) -> Result<(), GroupError> {
    s.check_range(g)?;
    if !s.contains(g.identity()) {
        return Err(GroupError::SubgroupMissingIdentity);
    }
    for &a in s.elems() {
        for &b in s.elems() {
            let p = g.mul(a, b);
            if !s.contains(p) {
                return Err(GroupError::SubgroupNotClosed { a, b, product: p });
            }
        }
    }
    Ok(())
}

/// Whether every pair of members of `s` commutes.
pub fn is_abelian_set(g: &Group, s: &ElementSet) -> bool {
    let e = s.elems();
    for (i, &a) in e.iter().enumerate() {
        for &b in &e[i + 1..] {
            if g.mul(a, b) != g.mul(b, a) {
                return false;
            }
        }
    }
    true
}

/// Whether `x h x^-1` stays inside `h` for every group element `x`.
pub fn is_normal(g: &Group, h: &ElementSet) -> Result<bool, GroupError> {
    is_subgroup(g, h)?;
    Ok(normality_witness(g, h).is_none())
}

/// First `(x, h, x h x^-1)` with the conjugate escaping the set, if any.
pub fn normality_witness(g: &Group, h: &ElementSet) -> Option<(usize, usize, usize)> {
    for x in 0..g.order() {
        for &m in h.elems() {
            let c = g.mul(g.mul(x, m), g.inv(x));
            if !h.contains(c) {
                return Some((x, m, c));
            }
        }
    }
    None
}

/// Smallest subgroup containing `seed`; always contains the identity.
pub fn subgroup_generated(g: &Group, seed: &[usize]) -> Result<ElementSet, GroupError> {
    for &i in seed {
        g.check_index(i)?;
    }
    let mut in_set = vec![false; g.order()];
    in_set[g.identity()] = true;
    let mut members = vec![g.identity()];
    let mut frontier: Vec<usize> = Vec::new();
    for &s in seed {
        if !in_set[s] {
            in_set[s] = true;
            members.push(s);
            frontier.push(s);
        }
    }
    while let Some(x) = frontier.pop() {
        let snapshot = members.clone();
        for &y in &snapshot {
            for v in [g.mul(x, y), g.mul(y, x)] {
                if !in_set[v] {
                    in_set[v] = true;
                    members.push(v);
                    frontier.push(v);
                }
            }
        }
    }
    members.sort_unstable();
    Ok(ElementSet::from_sorted_unchecked(members))
}

/// All subgroups, by closing the cyclic subgroups under pairwise join.
///
/// The result is deterministic: ordered by (size, lexicographic element
/// list), with ids assigned in that order.
pub fn enumerate_subgroups(
    g: &Group,
    enumeration_cap: usize,
    deadline: Deadline,
) -> Result<Vec<SubgroupInfo>, GroupError> {
    if g.order() > enumeration_cap {
        return Err(GroupError::OrderCapExceeded {
            order: g.order(),
            cap: enumeration_cap,
        });
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..g.order() {
        found.insert(subgroup_generated(g, &[a])?.elems().to_vec());
    }
    // join pairs to a fixpoint
    let mut worklist: Vec<Vec<usize>> = found.iter().cloned().collect();
    while let Some(h) = worklist.pop() {
        deadline.check("subgroup enumeration")?;
        let others: Vec<Vec<usize>> = found.iter().cloned().collect();
        for k in others {
            let mut seed = h.clone();
            seed.extend_from_slice(&k);
            let join = subgroup_generated(g, &seed)?;
            if found.insert(join.elems().to_vec()) {
                worklist.push(join.elems().to_vec());
            }
        }
    }
    let mut sets: Vec<Vec<usize>> = found.into_iter().collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let center = g.center();
    let infos = sets
        .into_iter()
        .enumerate()
        .map(|(id, elems)| {
            let set = ElementSet::from_sorted_unchecked(elems);
            let is_abelian = is_abelian_set(g, &set);
            let is_normal = normality_witness(g, &set).is_none();
            let is_central = set.is_subset_of(&center);
            SubgroupInfo {
                set,
                is_abelian,
                is_normal,
                is_central,
                id,
            }
        })
        .collect();
    Ok(infos)
}

/// Cosets of `h`, in order of their minimal representative. They partition
/// the group and all have size `|H|`.
pub fn cosets(g: &Group, h: &ElementSet, side: Side) -> Result<Vec<ElementSet>, GroupError> {
    is_subgroup(g, h)?;
    let mut covered = vec![false; g.order()];
    let mut out = Vec::new();
    for rep in 0..g.order() {
        if covered[rep] {
            continue;
        }
        let mut c: Vec<usize> = h
            .elems()
            .iter()
            .map(|&m| match side {
                Side::Left => g.mul(rep, m),
                Side::Right => g.mul(m, rep),
            })
            .collect();
        c.sort_unstable();
        for &x in &c {
            covered[x] = true;
        }
        out.push(ElementSet::from_sorted_unchecked(c));
    }
    Ok(out)
}

/// Quotient by a normal subgroup: the coset group plus the projection from
/// element index to coset index. Coset 0 contains the identity.
pub fn quotient(g: &Group, n: &ElementSet) -> Result<(Group, Vec<usize>), GroupError> {
    is_subgroup(g, n)?;
    if let Some((x, m, c)) = normality_witness(g, n) {
        return Err(GroupError::NotNormal {
            conjugator: x,
            member: m,
            conjugate: c,
        });
    }
    let blocks = cosets(g, n, Side::Left)?;
    let mut proj = vec![0usize; g.order()];
    for (ci, c) in blocks.iter().enumerate() {
        for &x in c.elems() {
            proj[x] = ci;
        }
    }
    let k = blocks.len();
    let mut table = vec![0u16; k * k];
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate() {
            table[i * k + j] = proj[g.mul(bi.elems()[0], bj.elems()[0])] as u16;
        }
    }
    let names = blocks.iter().map(|b| b.render(g)).collect();
    let q = Group::from_flat(k, table, names)?;
    Ok((q, proj))
}

/// The set `{h * a * k : h in H, k in K}`.
pub fn double_coset(
    g: &Group,
    h: &ElementSet,
    a: usize,
    k: &ElementSet,
) -> Result<ElementSet, GroupError> {
    is_subgroup(g, h)?;
    is_subgroup(g, k)?;
    g.check_index(a)?;
    let mut out = Vec::with_capacity(h.len() * k.len());
    for &x in h.elems() {
        let xa = g.mul(x, a);
        for &y in k.elems() {
            out.push(g.mul(xa, y));
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(ElementSet::from_sorted_unchecked(out))
}

/// The setwise product `H K` as a set of elements.
pub fn product_set(g: &Group, h: &ElementSet, k: &ElementSet) -> ElementSet {
    let mut out = Vec::with_capacity(h.len() * k.len());
    for &x in h.elems() {
        for &y in k.elems() {
            out.push(g.mul(x, y));
        }
    }
    out.sort_unstable();
    out.dedup();
    ElementSet::from_sorted_unchecked(out)
}

/// Materializes a subgroup as a group in its own right.
///
/// Returns the group together with the map from its indices back to parent
/// indices (the parent identity, index 0, stays at index 0).
pub fn subgroup_as_group(g: &Group, h: &ElementSet) -> Result<(Group, Vec<usize>), GroupError> {
    is_subgroup(g, h)?;
    let members = h.elems().to_vec();
    let mut pos = vec![usize::MAX; g.order()];
    for (i, &m) in members.iter().enumerate() {
        pos[m] = i;
    }
    let k = members.len();
    let mut table = vec![0u16; k * k];
    for i in 0..k {
        for j in 0..k {
            table[i * k + j] = pos[g.mul(members[i], members[j])] as u16;
        }
    }
    let names = members.iter().map(|&m| g.name(m).to_string()).collect();
    let sub = Group::from_flat(k, table, names)?;
    Ok((sub, members))
}
