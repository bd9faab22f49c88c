//! Group isomorphism testing by backtracking over generator images.
//!
//! The search prunes with cheap invariants first (order profile, abelian
//! flag, center size, conjugacy-class size multiset) and then backtracks
//! over images of a small generating set, extending each candidate
//! assignment to a full map by closure. A returned mapping is always
//! re-verified multiplicatively before it is handed out.

use crate::budget::Deadline;
use crate::error::GroupError;
use crate::group::Group;

/// A verified isomorphism: `mapping[i]` is the image of element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub mapping: Vec<usize>,
}

impl IsoWitness {
    /// Checks that the mapping is a multiplicative bijection from `g1` to `g2`.
    pub fn verify(&self, g1: &Group, g2: &Group) -> bool {
        if g1.order() != g2.order() || self.mapping.len() != g1.order() {
            return false;
        }
        let mut seen = vec![false; g2.order()];
        for &v in &self.mapping {
            if v >= g2.order() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for i in 0..g1.order() {
            for j in 0..g1.order() {
                if self.mapping[g1.mul(i, j)] != g2.mul(self.mapping[i], self.mapping[j]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut mapping = vec![0; self.mapping.len()];
        for (i, &v) in self.mapping.iter().enumerate() {
            mapping[v] = i;
        }
        IsoWitness { mapping }
    }
}

/// Outcome of an isomorphism search. Exhausting the budget is reported as
/// its own case, never conflated with a negative answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic(IsoWitness),
    NotIsomorphic,
    BudgetExceeded,
}

impl IsoOutcome {
    pub fn witness(&self) -> Option<&IsoWitness> {
        match self {
            IsoOutcome::Isomorphic(w) => Some(w),
            _ => None,
        }
    }
}

/// Multiset of conjugacy class sizes, sorted.
fn class_size_profile(g: &Group) -> Vec<usize> {
    let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    sizes
}

/// Decides whether two groups are isomorphic, returning a verified witness
/// when they are.
pub fn are_isomorphic(g1: &Group, g2: &Group, deadline: Deadline) -> IsoOutcome {
    if g1.order() != g2.order() {
        return IsoOutcome::NotIsomorphic;
    }
    if g1.order_profile() != g2.order_profile() {
        return IsoOutcome::NotIsomorphic;
    }
    if g1.is_abelian() != g2.is_abelian() {
        return IsoOutcome::NotIsomorphic;
    }
    if g1.center().len() != g2.center().len() {
        return IsoOutcome::NotIsomorphic;
    }
    if class_size_profile(g1) != class_size_profile(g2) {
        return IsoOutcome::NotIsomorphic;
    }

    let gens = g1.generating_set();
    if gens.is_empty() {
        // trivial group
        return IsoOutcome::Isomorphic(IsoWitness { mapping: vec![0] });
    }

    // candidate images per generator: matching element order and
    // conjugacy-class size
    let class_size_of = |g: &Group| -> Vec<usize> {
        let classes = g.conjugacy_classes();
        let mut out = vec![0; g.order()];
        for c in &classes {
            for &x in c.elems() {
                out[x] = c.len();
            }
        }
        out
    };
    let cs1 = class_size_of(g1);
    let cs2 = class_size_of(g2);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&gen| {
            let o = g1.elem_order(gen);
            (0..g2.order())
                .filter(|&x| g2.elem_order(x) == o && cs2[x] == cs1[gen])
                .collect()
        })
        .collect();

    let mut images = vec![0usize; gens.len()];
    match extend(g1, g2, &gens, &candidates, &mut images, 0, &deadline) {
        Ok(Some(witness)) => {
            debug_assert!(witness.verify(g1, g2));
            IsoOutcome::Isomorphic(witness)
        }
        Ok(None) => IsoOutcome::NotIsomorphic,
        Err(_) => IsoOutcome::BudgetExceeded,
    }
}

/// Depth-first assignment of generator images.
fn extend(
    g1: &Group,
    g2: &Group,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
    deadline: &Deadline,
) -> Result<Option<IsoWitness>, GroupError> {
    deadline.check("isomorphism search")?;
    if depth == gens.len() {
        return Ok(build_full_map(g1, g2, gens, images));
    }
    for &cand in &candidates[depth] {
        images[depth] = cand;
        // partial consistency: the map restricted to the subgroup generated
        // by the first depth+1 generators must already be an isomorphism
        if partial_map(g1, g2, &gens[..=depth], &images[..=depth]).is_some() {
            if let Some(w) = extend(g1, g2, gens, candidates, images, depth + 1, deadline)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Maps the subgroup generated by `gens` under the proposed images, checking
/// injectivity and multiplicativity as it grows. Returns the partial map on
/// success.
fn partial_map(g1: &Group, g2: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<(usize, usize)>> {
    let n = g1.order();
    let mut map = vec![usize::MAX; n];
    let mut rev = vec![usize::MAX; g2.order()];
    map[0] = 0;
    rev[0] = 0;
    let mut members = vec![0usize];
    for (&gen, &img) in gens.iter().zip(images) {
        if map[gen] == usize::MAX {
            if rev[img] != usize::MAX {
                return None;
            }
            map[gen] = img;
            rev[img] = gen;
            members.push(gen);
        } else if map[gen] != img {
            return None;
        }
    }
    // close under products, propagating images
    let mut frontier: Vec<usize> = members.clone();
    while let Some(x) = frontier.pop() {
        let snapshot = members.clone();
        for &y in &snapshot {
            for (p, q) in [(x, y), (y, x)] {
                let prod = g1.mul(p, q);
                let img = g2.mul(map[p], map[q]);
                if map[prod] == usize::MAX {
                    if rev[img] != usize::MAX {
                        return None; // not injective
                    }
                    map[prod] = img;
                    rev[img] = prod;
                    members.push(prod);
                    frontier.push(prod);
                } else if map[prod] != img {
                    return None; // not well-defined
                }
            }
        }
    }
    Some(members.into_iter().map(|m| (m, map[m])).collect())
}

fn build_full_map(g1: &Group, g2: &Group, gens: &[usize], images: &[usize]) -> Option<IsoWitness> {
    let pairs = partial_map(g1, g2, gens, images)?;
    if pairs.len() != g1.order() {
        return None;
    }
    let mut mapping = vec![0usize; g1.order()];
    for (from, to) in pairs {
        mapping[from] = to;
    }
    let witness = IsoWitness { mapping };
    if witness.verify(g1, g2) {
        Some(witness)
    } else {
        None
    }
}
