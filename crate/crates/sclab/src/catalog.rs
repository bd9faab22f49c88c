//! A deterministic, family-generated catalog of small groups.
//!
//! The catalog contains the cyclic, dihedral (n >= 3), symmetric (n >= 3),
//! alternating (n >= 4), and dicyclic families up to the requested order,
//! plus all direct products of those bases that stay under the cap. Entries
//! are deduplicated up to isomorphism, preferring base families over
//! products, and sorted by (order, name). It is *not* an exhaustive list of
//! isomorphism classes; it is a reproducible sample.

use crate::budget::Budgets;
use crate::error::GroupError;
use crate::families::Family;
use crate::group::Group;
use crate::iso::{are_isomorphic, IsoOutcome};
use crate::parse::GroupExpr;

/// Hard ceiling on catalog construction.
pub const MAX_CATALOG_ORDER: usize = 200;

/// One catalog entry. The name is a canonical expression string that
/// re-parses to an isomorphic group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub expr: GroupExpr,
    pub order: usize,
    /// False when an isomorphism comparison for this entry ran out of
    /// budget, so the entry might duplicate another one.
    pub dedup_verified: bool,
}

impl CatalogEntry {
    pub fn build(&self, order_cap: usize) -> Result<Group, GroupError> {
        self.expr.build(order_cap)
    }
}

/// The generated catalog, with any dedup comparisons that could not be
/// completed flagged rather than silently dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub max_order: usize,
    pub entries: Vec<CatalogEntry>,
    /// Pairs of entry names whose isomorphism test exceeded its budget.
    pub unverified_pairs: Vec<(String, String)>,
}

/// Family precedence for deduplication: when two generated groups are
/// isomorphic the entry from the earlier family survives.
fn precedence(f: &Family) -> usize {
    match f {
        Family::Cyclic(_) => 0,
        Family::Symmetric(_) => 1,
        Family::Alternating(_) => 2,
        Family::Dihedral(_) => 3,
        Family::Quaternion | Family::Dicyclic(_) => 4,
    }
}

fn base_families(max_order: usize) -> Vec<Family> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(Family::Cyclic(n));
    }
    for n in 3..=7 {
        if Family::Symmetric(n).order().is_some_and(|o| o <= max_order) {
            out.push(Family::Symmetric(n));
        }
    }
    for n in 4..=7 {
        if Family::Alternating(n).order().is_some_and(|o| o <= max_order) {
            out.push(Family::Alternating(n));
        }
    }
    for n in 3..=max_order / 2 {
        out.push(Family::Dihedral(n));
    }
    if max_order >= 8 {
        out.push(Family::Quaternion);
        for m in 3..=max_order / 4 {
            out.push(Family::Dicyclic(m));
        }
    }
    out.sort_by_key(|f| (precedence(f), f.order(), f.name()));
    out
}

struct Candidate {
    name: String,
    expr: GroupExpr,
    group: Group,
}

/// Builds the catalog for all generated groups of order at most `max_order`.
pub fn build_catalog(max_order: usize, budgets: &Budgets) -> Result<Catalog, GroupError> {
    if max_order > MAX_CATALOG_ORDER {
        return Err(GroupError::OrderCapExceeded {
            order: max_order,
            cap: MAX_CATALOG_ORDER,
        });
    }
    let mut kept: Vec<Candidate> = Vec::new();
    let mut flags: Vec<bool> = Vec::new(); // dedup_verified per kept entry
    let mut unverified_pairs = Vec::new();

    let consider = |cand: Candidate,
                        kept: &mut Vec<Candidate>,
                        flags: &mut Vec<bool>,
                        unverified: &mut Vec<(String, String)>| {
        let mut verified = true;
        for (i, existing) in kept.iter().enumerate() {
            if existing.group.order() != cand.group.order() {
                continue;
            }
            match are_isomorphic(&existing.group, &cand.group, budgets.deadline()) {
                IsoOutcome::Isomorphic(_) => return, // duplicate; earlier entry wins
                IsoOutcome::NotIsomorphic => {}
                IsoOutcome::BudgetExceeded => {
                    verified = false;
                    flags[i] = false;
                    unverified.push((existing.name.clone(), cand.name.clone()));
                }
            }
        }
        kept.push(cand);
        flags.push(verified);
    };

    // base families, in precedence order
    let bases = base_families(max_order);
    for family in bases {
        let group = family.build(max_order.max(1))?;
        consider(
            Candidate {
                name: family.name(),
                expr: GroupExpr::Family(family),
                group,
            },
            &mut kept,
            &mut flags,
            &mut unverified_pairs,
        );
    }

    // direct products: multisets of surviving base entries of order >= 2
    let base_count = kept.len();
    let mut factor_refs: Vec<usize> = (0..base_count)
        .filter(|&i| kept[i].group.order() >= 2)
        .collect();
    factor_refs.sort_by(|&a, &b| {
        (kept[a].group.order(), kept[a].name.as_str())
            .cmp(&(kept[b].group.order(), kept[b].name.as_str()))
    });
    let mut multisets: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    collect_multisets(&kept, &factor_refs, max_order, 0, 1, &mut stack, &mut multisets);

    let mut products: Vec<Candidate> = Vec::new();
    for ms in multisets {
        // factors ordered by (order descending, name ascending)
        let mut factors: Vec<usize> = ms.clone();
        factors.sort_by(|&a, &b| {
            kept[b]
                .group
                .order()
                .cmp(&kept[a].group.order())
                .then_with(|| kept[a].name.cmp(&kept[b].name))
        });
        let name = factors
            .iter()
            .map(|&i| kept[i].name.clone())
            .collect::<Vec<_>>()
            .join(" x ");
        let mut expr = kept[factors[0]].expr.clone();
        let mut group = kept[factors[0]].group.clone();
        for &i in &factors[1..] {
            expr = GroupExpr::Product(Box::new(expr), Box::new(kept[i].expr.clone()));
            group = crate::families::direct_product(&group, &kept[i].group, MAX_CATALOG_ORDER)?;
        }
        products.push(Candidate { name, expr, group });
    }
    products.sort_by(|a, b| {
        (a.group.order(), a.name.as_str()).cmp(&(b.group.order(), b.name.as_str()))
    });
    for cand in products {
        consider(cand, &mut kept, &mut flags, &mut unverified_pairs);
    }

    let mut entries: Vec<CatalogEntry> = kept
        .into_iter()
        .zip(flags)
        .map(|(c, dedup_verified)| CatalogEntry {
            name: c.name,
            expr: c.expr,
            order: c.group.order(),
            dedup_verified,
        })
        .collect();
    entries.sort_by(|a, b| (a.order, a.name.as_str()).cmp(&(b.order, b.name.as_str())));
    unverified_pairs.sort();
    Ok(Catalog {
        max_order,
        entries,
        unverified_pairs,
    })
}

/// Nondecreasing index sequences over `factor_refs` whose orders multiply
/// to at most `max_order`, with at least two factors.
fn collect_multisets(
    kept: &[Candidate],
    factor_refs: &[usize],
    max_order: usize,
    start: usize,
    acc_order: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    for (pos, &idx) in factor_refs.iter().enumerate().skip(start) {
        let order = kept[idx].group.order();
        let Some(total) = acc_order.checked_mul(order) else { continue };
        if total > max_order {
            continue;
        }
        stack.push(idx);
        if stack.len() >= 2 {
            out.push(stack.clone());
        }
        collect_multisets(kept, factor_refs, max_order, pos, total, stack, out);
        stack.pop();
    }
}
