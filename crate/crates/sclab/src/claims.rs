//! Mechanical checkers for the structural claims about class families.
//!
//! Each checker evaluates one claim on a concrete instance and reports
//! holds / fails / precondition-unmet with a replayable witness. Claims are
//! never assumed: a failing claim is data, not a bug.

use serde::Serialize;

use crate::budget::{Budgets, Deadline};
use crate::classes::{class_family, family_group, identity_class, sandwich_class, ClassKind};
use crate::error::GroupError;
use crate::group::Group;
use crate::iso::{are_isomorphic, IsoOutcome};
use crate::subgroup::{
    enumerate_subgroups, is_subgroup, normality_witness, product_set, quotient, subgroup_as_group,
    ElementSet, SubgroupInfo,
};

/// Identifiers for the checkable claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    /// Sandwich class sizes lie in `[1, |H|]`.
    CardinalitySandwich,
    /// Conjugacy self-class sizes lie in `[1, |H|]`.
    CardinalityConj,
    /// Self-class family forms a group iff `H` is central.
    SetwiseIffSelf,
    /// Conjugacy self-class family forms a group iff `H` is central.
    SetwiseIffConj,
    /// A self-class group is a quotient of `G` by some normal subgroup.
    QuotientTheorem,
    /// For abelian `G`, the squares form a normal subgroup.
    IdentityClassNormal,
    /// Second isomorphism theorem with `N` taken as the squares of `K`.
    SecondIso,
    /// Third isomorphism theorem with `N` taken as the squares of `K`.
    ThirdIso,
    /// Sandwiching preserves element orders iff `H` is central and all
    /// elements outside `H` are involutions.
    OrderLemma,
    /// Conjugacy self-classes over `H = G` are the conjugacy classes.
    ConjSpecialization,
    /// Sandwich classes differ from double cosets.
    DoubleCosetDifference,
}

impl ClaimId {
    pub const ALL: [ClaimId; 11] = [
        ClaimId::CardinalitySandwich,
        ClaimId::CardinalityConj,
        ClaimId::SetwiseIffSelf,
        ClaimId::SetwiseIffConj,
        ClaimId::QuotientTheorem,
        ClaimId::IdentityClassNormal,
        ClaimId::SecondIso,
        ClaimId::ThirdIso,
        ClaimId::OrderLemma,
        ClaimId::ConjSpecialization,
        ClaimId::DoubleCosetDifference,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            ClaimId::CardinalitySandwich => "L3.1",
            ClaimId::CardinalityConj => "L3.2",
            ClaimId::SetwiseIffSelf => "L3.3",
            ClaimId::SetwiseIffConj => "L3.4",
            ClaimId::QuotientTheorem => "T3.5",
            ClaimId::IdentityClassNormal => "L3.6",
            ClaimId::SecondIso => "L3.7",
            ClaimId::ThirdIso => "L3.8",
            ClaimId::OrderLemma => "L3.9",
            ClaimId::ConjSpecialization => "C4.1-conjspecial",
            ClaimId::DoubleCosetDifference => "C1-doublecoset",
        }
    }

    pub fn from_code(code: &str) -> Option<ClaimId> {
        ClaimId::ALL.iter().copied().find(|c| c.code() == code)
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Outcome of checking one claim instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Holds,
    Fails,
    PreconditionUnmet,
    BudgetExceeded,
}

impl std::fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClaimStatus::Holds => write!(f, "holds"),
            ClaimStatus::Fails => write!(f, "fails"),
            ClaimStatus::PreconditionUnmet => write!(f, "precondition-unmet"),
            ClaimStatus::BudgetExceeded => write!(f, "budget-exceeded"),
        }
    }
}

/// Concrete evidence for a verdict, stated with element names so it can be
/// replayed through the core operations.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ClaimWitness {
    /// `|class(elem)|` escaped `[1, bound]`.
    CardinalityOutOfRange { elem: String, class_size: usize, bound: usize },
    /// The family refused to form a group.
    FamilyRefused { detail: String },
    /// `x` and `a` do not commute.
    NonCommuting { x: String, a: String },
    /// An element outside `H` that is neither the identity nor an involution.
    NotInvolutionOutside { elem: String, order: usize },
    /// Sandwiching `a` by `x` changed its order.
    OrderChanged {
        x: String,
        a: String,
        sandwiched: String,
        order_before: usize,
        order_after: usize,
    },
    /// A conjugate escaping the set: the set is not normal.
    NotNormal { conjugator: String, member: String, conjugate: String },
    /// The set is not a subgroup.
    NotASubgroup { detail: String },
    /// Normal subgroup realizing the claimed quotient.
    QuotientWitness { normal_subgroup: Vec<String>, quotient_order: usize },
    /// No normal subgroup realizes the quotient.
    NoQuotientWitness { normal_subgroups_tried: usize },
    /// The two constructed sides are not isomorphic.
    SidesNotIsomorphic { left_order: usize, right_order: usize },
    /// The squares of `K` do not sit inside `H`.
    NotContained { outlier: String },
    /// Two block collections differ.
    BlocksDiffer { family_block: Vec<String>, class_block: Vec<String> },
    /// Element whose sandwich class and double coset differ.
    SetsDiffer { elem: String, sandwich: Vec<String>, double_coset: Vec<String> },
}

/// Structured verdict for one claim on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    #[serde(serialize_with = "serialize_claim_id")]
    pub claim: ClaimId,
    pub group: String,
    pub subgroup: Option<Vec<String>>,
    pub second_subgroup: Option<Vec<String>>,
    pub status: ClaimStatus,
    /// Left-hand truth value, recorded for iff-shaped claims.
    pub lhs: Option<bool>,
    /// Right-hand truth value, recorded for iff-shaped claims.
    pub rhs: Option<bool>,
    pub witness: Option<ClaimWitness>,
    pub notes: String,
}

fn serialize_claim_id<S: serde::Serializer>(c: &ClaimId, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(c.code())
}

impl ClaimReport {
    fn new(claim: ClaimId, group: &str) -> ClaimReport {
        ClaimReport {
            claim,
            group: group.to_string(),
            subgroup: None,
            second_subgroup: None,
            status: ClaimStatus::Holds,
            lhs: None,
            rhs: None,
            witness: None,
            notes: String::new(),
        }
    }

    fn with_subgroup(mut self, g: &Group, h: &ElementSet) -> ClaimReport {
        self.subgroup = Some(h.names(g));
        self
    }
}

/// Whether every member of `h` commutes with every element of the group,
/// with the first non-commuting pair as witness.
fn centrality(g: &Group, h: &ElementSet) -> (bool, Option<(usize, usize)>) {
    for &x in h.elems() {
        for a in 0..g.order() {
            if g.mul(x, a) != g.mul(a, x) {
                return (false, Some((x, a)));
            }
        }
    }
    (true, None)
}

/// Claim: every class over `H` has between 1 and `|H|` elements.
pub fn check_cardinality(g: &Group, gname: &str, h: &ElementSet, kind: ClassKind) -> ClaimReport {
    let claim = if kind == ClassKind::ConjSelfClass {
        ClaimId::CardinalityConj
    } else {
        ClaimId::CardinalitySandwich
    };
    let mut report = ClaimReport::new(claim, gname).with_subgroup(g, h);
    let family = match class_family(g, h, kind) {
        Ok(f) => f,
        Err(e) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = e.to_string();
            return report;
        }
    };
    for a in 0..g.order() {
        let size = family.blocks[family.class_of[a]].len();
        if size < 1 || size > h.len() {
            report.status = ClaimStatus::Fails;
            report.witness = Some(ClaimWitness::CardinalityOutOfRange {
                elem: g.name(a).to_string(),
                class_size: size,
                bound: h.len(),
            });
            return report;
        }
    }
    report.notes = format!("all {} class sizes lie in [1, {}]", g.order(), h.len());
    report
}

/// Claim: the class family over `H` forms a group iff every member of `H`
/// commutes with every element of `G`.
pub fn check_setwise_iff(g: &Group, gname: &str, h: &ElementSet, kind: ClassKind) -> ClaimReport {
    let claim = if kind == ClassKind::ConjSelfClass {
        ClaimId::SetwiseIffConj
    } else {
        ClaimId::SetwiseIffSelf
    };
    let mut report = ClaimReport::new(claim, gname).with_subgroup(g, h);
    let family = match class_family(g, h, kind) {
        Ok(f) => f,
        Err(e) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = e.to_string();
            return report;
        }
    };
    let (central, non_commuting) = centrality(g, h);
    let forms_group = match family_group(g, &family) {
        Ok(_) => {
            report.lhs = Some(true);
            true
        }
        Err(refusal) => {
            report.lhs = Some(false);
            report.notes = refusal.render(g, &family);
            false
        }
    };
    report.rhs = Some(central);
    if forms_group == central {
        report.status = ClaimStatus::Holds;
    } else {
        report.status = ClaimStatus::Fails;
        report.witness = match non_commuting {
            Some((x, a)) => Some(ClaimWitness::NonCommuting {
                x: g.name(x).to_string(),
                a: g.name(a).to_string(),
            }),
            None => Some(ClaimWitness::FamilyRefused {
                detail: report.notes.clone(),
            }),
        };
    }
    report
}

/// Claim: when the self-class family over abelian `H` forms a group `K`,
/// some normal subgroup `N` of `G` has `K` isomorphic to `G/N`. The squares
/// of `H` are tried first, then all normal subgroups in id order.
pub fn check_quotient_theorem(
    g: &Group,
    gname: &str,
    h: &ElementSet,
    subgroups: &[SubgroupInfo],
    deadline: Deadline,
) -> ClaimReport {
    let mut report = ClaimReport::new(ClaimId::QuotientTheorem, gname).with_subgroup(g, h);
    let family = match class_family(g, h, ClassKind::SelfClass) {
        Ok(f) => f,
        Err(e) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = e.to_string();
            return report;
        }
    };
    let class_group = match family_group(g, &family) {
        Ok(cg) => cg,
        Err(refusal) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = format!(
                "self-class family does not form a group: {}",
                refusal.render(g, &family)
            );
            return report;
        }
    };
    // candidate normal subgroups: squares of H first, then id order
    let squares = identity_class(g, h).expect("H is a subgroup");
    let mut candidates: Vec<&ElementSet> = Vec::new();
    if is_subgroup(g, &squares).is_ok() && normality_witness(g, &squares).is_none() {
        candidates.push(&squares);
    }
    let mut tried = 0;
    for info in subgroups.iter().filter(|s| s.is_normal) {
        if info.set != squares {
            candidates.push(&info.set);
        }
    }
    for n in candidates {
        if deadline.expired() {
            report.status = ClaimStatus::BudgetExceeded;
            report.notes = "quotient search ran out of time".into();
            return report;
        }
        tried += 1;
        let Ok((q, _)) = quotient(g, n) else { continue };
        if q.order() != class_group.order() {
            continue;
        }
        match are_isomorphic(&class_group.group, &q, deadline) {
            IsoOutcome::Isomorphic(_) => {
                report.status = ClaimStatus::Holds;
                report.witness = Some(ClaimWitness::QuotientWitness {
                    normal_subgroup: n.names(g),
                    quotient_order: q.order(),
                });
                return report;
            }
            IsoOutcome::NotIsomorphic => continue,
            IsoOutcome::BudgetExceeded => {
                report.status = ClaimStatus::BudgetExceeded;
                report.notes = "isomorphism search ran out of time".into();
                return report;
            }
        }
    }
    report.status = ClaimStatus::Fails;
    report.witness = Some(ClaimWitness::NoQuotientWitness {
        normal_subgroups_tried: tried,
    });
    report
}

/// Claim: for abelian `G`, the squares of `G` form a normal subgroup.
/// Nonabelian input reports precondition-unmet, with the squares still
/// examined informationally.
pub fn check_identity_class_normal(g: &Group, gname: &str) -> ClaimReport {
    let mut report = ClaimReport::new(ClaimId::IdentityClassNormal, gname);
    let whole = ElementSet::whole_group(g);
    let squares = identity_class(g, &whole).expect("whole group is a subgroup");
    let subgroup_ok = is_subgroup(g, &squares);
    let normal_ok = subgroup_ok.is_ok() && normality_witness(g, &squares).is_none();
    if !g.is_abelian() {
        report.status = ClaimStatus::PreconditionUnmet;
        report.notes = format!(
            "group is nonabelian; informationally, its squares {} {} a normal subgroup",
            squares.render(g),
            if normal_ok { "do form" } else { "do not form" }
        );
        return report;
    }
    match subgroup_ok {
        Ok(()) => match normality_witness(g, &squares) {
            None => {
                report.status = ClaimStatus::Holds;
                report.notes = format!("squares {} form a normal subgroup", squares.render(g));
            }
            Some((x, m, c)) => {
                report.status = ClaimStatus::Fails;
                report.witness = Some(ClaimWitness::NotNormal {
                    conjugator: g.name(x).to_string(),
                    member: g.name(m).to_string(),
                    conjugate: g.name(c).to_string(),
                });
            }
        },
        Err(e) => {
            report.status = ClaimStatus::Fails;
            report.witness = Some(ClaimWitness::NotASubgroup { detail: e.to_string() });
        }
    }
    report
}

/// Claim: with `N` the squares of `K`, `H/(H n N)` is isomorphic to `HN/N`.
/// The preconditions (N a subgroup; HN a subgroup; N normal in HN; H n N
/// normal in H) are verified and reported when unmet.
pub fn check_second_iso(
    g: &Group,
    gname: &str,
    h: &ElementSet,
    k: &ElementSet,
    deadline: Deadline,
) -> ClaimReport {
    let mut report = ClaimReport::new(ClaimId::SecondIso, gname).with_subgroup(g, h);
    report.second_subgroup = Some(k.names(g));
    let n = match identity_class(g, k) {
        Ok(n) => n,
        Err(e) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = e.to_string();
            return report;
        }
    };
    if let Err(e) = is_subgroup(g, &n) {
        report.status = ClaimStatus::PreconditionUnmet;
        report.notes = format!("squares of K are not a subgroup: {e}");
        return report;
    }
    let hn = product_set(g, h, &n);
    if let Err(e) = is_subgroup(g, &hn) {
        report.status = ClaimStatus::PreconditionUnmet;
        report.notes = format!("HN is not a subgroup: {e}");
        return report;
    }
    // quotients inside the subgroups HN and H
    let (hn_group, hn_back) = subgroup_as_group(g, &hn).expect("HN verified");
    let n_in_hn = relabel_into(&hn_back, &n);
    let (h_group, h_back) = subgroup_as_group(g, h).expect("H verified");
    let h_cap_n = h.intersect(&n);
    let h_cap_n_in_h = relabel_into(&h_back, &h_cap_n);
    let left = match quotient(&h_group, &h_cap_n_in_h) {
        Ok((q, _)) => q,
        Err(e) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = format!("H n N is not normal in H: {e}");
            return report;
        }
    };
    let right = match quotient(&hn_group, &n_in_hn) {
        Ok((q, _)) => q,
        Err(e) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = format!("N is not normal in HN: {e}");
            return report;
        }
    };
    finish_iso_claim(report, &left, &right, deadline)
}

/// Claim: with `N` the squares of `K`, `G/H` is isomorphic to `(G/N)/(H/N)`.
/// Requires `N` inside `H` and both normal in `G`.
pub fn check_third_iso(
    g: &Group,
    gname: &str,
    h: &ElementSet,
    k: &ElementSet,
    deadline: Deadline,
) -> ClaimReport {
    let mut report = ClaimReport::new(ClaimId::ThirdIso, gname).with_subgroup(g, h);
    report.second_subgroup = Some(k.names(g));
    let n = match identity_class(g, k) {
        Ok(n) => n,
        Err(e) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = e.to_string();
            return report;
        }
    };
    if let Err(e) = is_subgroup(g, &n) {
        report.status = ClaimStatus::PreconditionUnmet;
        report.notes = format!("squares of K are not a subgroup: {e}");
        return report;
    }
    if let Some(&outlier) = n.elems().iter().find(|&&x| !h.contains(x)) {
        report.status = ClaimStatus::PreconditionUnmet;
        report.witness = Some(ClaimWitness::NotContained {
            outlier: g.name(outlier).to_string(),
        });
        report.notes = "squares of K do not sit inside H".into();
        return report;
    }
    let left = match quotient(g, h) {
        Ok((q, _)) => q,
        Err(e) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = format!("H is not normal in G: {e}");
            return report;
        }
    };
    let (gn, proj) = match quotient(g, &n) {
        Ok(x) => x,
        Err(e) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = format!("N is not normal in G: {e}");
            return report;
        }
    };
    // image of H in G/N
    let h_image = ElementSet::new(&gn, h.elems().iter().map(|&x| proj[x]))
        .expect("projection stays in range");
    let right = match quotient(&gn, &h_image) {
        Ok((q, _)) => q,
        Err(e) => {
            report.status = ClaimStatus::PreconditionUnmet;
            report.notes = format!("H/N is not normal in G/N: {e}");
            return report;
        }
    };
    finish_iso_claim(report, &left, &right, deadline)
}

fn finish_iso_claim(
    mut report: ClaimReport,
    left: &Group,
    right: &Group,
    deadline: Deadline,
) -> ClaimReport {
    match are_isomorphic(left, right, deadline) {
        IsoOutcome::Isomorphic(_) => {
            report.status = ClaimStatus::Holds;
            report.notes = format!("both sides have order {}", left.order());
        }
        IsoOutcome::NotIsomorphic => {
            report.status = ClaimStatus::Fails;
            report.witness = Some(ClaimWitness::SidesNotIsomorphic {
                left_order: left.order(),
                right_order: right.order(),
            });
        }
        IsoOutcome::BudgetExceeded => {
            report.status = ClaimStatus::BudgetExceeded;
            report.notes = "isomorphism search ran out of time".into();
        }
    }
    report
}

const ORDER_LEMMA_READING: &str = "reading: LHS = sandwiching by members of H preserves element \
orders; RHS = H is central and every element outside H squares to the identity";

/// Claim, under a documented reading: order preservation under sandwiching
/// holds iff `H` is central and everything outside `H` is an involution or
/// the identity.
pub fn check_order_lemma(g: &Group, gname: &str, h: &ElementSet) -> ClaimReport {
    let mut report = ClaimReport::new(ClaimId::OrderLemma, gname).with_subgroup(g, h);
    if let Err(e) = is_subgroup(g, h) {
        report.status = ClaimStatus::PreconditionUnmet;
        report.notes = e.to_string();
        return report;
    }
    // LHS: orders preserved for every (a, x)
    let mut lhs_witness = None;
    'outer: for a in 0..g.order() {
        for &x in h.elems() {
            let s = g.sandwich(x, a);
            if g.elem_order(s) != g.elem_order(a) {
                lhs_witness = Some((x, a, s));
                break 'outer;
            }
        }
    }
    let lhs = lhs_witness.is_none();
    // RHS: centrality plus involutions outside H
    let (central, non_commuting) = centrality(g, h);
    let outside_involution = (0..g.order())
        .find(|&b| !h.contains(b) && g.elem_order(b) > 2);
    let rhs = central && outside_involution.is_none();
    report.lhs = Some(lhs);
    report.rhs = Some(rhs);
    report.notes = ORDER_LEMMA_READING.to_string();
    if lhs == rhs {
        report.status = ClaimStatus::Holds;
    } else {
        report.status = ClaimStatus::Fails;
        report.witness = if let Some((x, a, s)) = lhs_witness {
            Some(ClaimWitness::OrderChanged {
                x: g.name(x).to_string(),
                a: g.name(a).to_string(),
                sandwiched: g.name(s).to_string(),
                order_before: g.elem_order(a),
                order_after: g.elem_order(s),
            })
        } else if let Some((x, a)) = non_commuting {
            Some(ClaimWitness::NonCommuting {
                x: g.name(x).to_string(),
                a: g.name(a).to_string(),
            })
        } else {
            outside_involution.map(|b| ClaimWitness::NotInvolutionOutside {
                elem: g.name(b).to_string(),
                order: g.elem_order(b),
            })
        };
    }
    report
}

/// Claim: the conjugacy self-class family over `H = G` coincides with the
/// conjugacy classes, block for block.
pub fn check_conj_specialization(g: &Group, gname: &str) -> ClaimReport {
    let mut report = ClaimReport::new(ClaimId::ConjSpecialization, gname);
    let whole = ElementSet::whole_group(g);
    let family = class_family(g, &whole, ClassKind::ConjSelfClass).expect("whole group");
    let mut classes = g.conjugacy_classes();
    classes.sort();
    if family.blocks == classes {
        report.status = ClaimStatus::Holds;
        report.notes = format!("{} blocks on both sides", classes.len());
    } else {
        report.status = ClaimStatus::Fails;
        let family_block = family
            .blocks
            .iter()
            .find(|b| !classes.contains(b))
            .map(|b| b.names(g))
            .unwrap_or_default();
        let class_block = classes
            .iter()
            .find(|c| !family.blocks.contains(c))
            .map(|c| c.names(g))
            .unwrap_or_default();
        report.witness = Some(ClaimWitness::BlocksDiffer { family_block, class_block });
    }
    report
}

/// Claim: the sandwich-class construction over `H` is distinguishable from
/// double cosets, i.e. some element has sandwich class different from
/// `H a H`. Reports fails on instances where the two coincide everywhere
/// (for example over the trivial subgroup).
pub fn check_double_coset_difference(g: &Group, gname: &str, h: &ElementSet) -> ClaimReport {
    let mut report = ClaimReport::new(ClaimId::DoubleCosetDifference, gname).with_subgroup(g, h);
    if let Err(e) = is_subgroup(g, h) {
        report.status = ClaimStatus::PreconditionUnmet;
        report.notes = e.to_string();
        return report;
    }
    for a in 0..g.order() {
        let sandwich = sandwich_class(g, h, a).expect("validated");
        let dc = crate::subgroup::double_coset(g, h, a, h).expect("validated");
        if sandwich != dc {
            report.status = ClaimStatus::Holds;
            report.witness = Some(ClaimWitness::SetsDiffer {
                elem: g.name(a).to_string(),
                sandwich: sandwich.names(g),
                double_coset: dc.names(g),
            });
            return report;
        }
    }
    report.status = ClaimStatus::Fails;
    report.notes = "sandwich class equals the double coset H a H for every element".into();
    report
}

/// Everything run_all_claims produced, with a marker when the time budget
/// cut the run short.
#[derive(Debug, Clone, PartialEq)]
pub struct ClaimRun {
    pub reports: Vec<ClaimReport>,
    pub truncated: bool,
}

/// Runs the selected checkers over every applicable subgroup of `G` (and a
/// capped, deterministic sample of subgroup pairs for the isomorphism
/// theorems), in a fixed order.
pub fn run_all_claims(
    g: &Group,
    gname: &str,
    claims: &[ClaimId],
    budgets: &Budgets,
) -> Result<ClaimRun, GroupError> {
    let deadline = budgets.deadline();
    let subgroups = enumerate_subgroups(g, budgets.enumeration_cap, deadline)?;
    let mut reports = Vec::new();
    let mut truncated = false;
    let wants = |c: ClaimId| claims.contains(&c);

    for info in &subgroups {
        if deadline.expired() {
            truncated = true;
            break;
        }
        if wants(ClaimId::CardinalitySandwich) && info.is_abelian {
            reports.push(check_cardinality(g, gname, &info.set, ClassKind::SelfClass));
        }
        if wants(ClaimId::CardinalityConj) {
            reports.push(check_cardinality(g, gname, &info.set, ClassKind::ConjSelfClass));
        }
        if wants(ClaimId::SetwiseIffSelf) && info.is_abelian {
            reports.push(check_setwise_iff(g, gname, &info.set, ClassKind::SelfClass));
        }
        if wants(ClaimId::SetwiseIffConj) {
            reports.push(check_setwise_iff(g, gname, &info.set, ClassKind::ConjSelfClass));
        }
        if wants(ClaimId::QuotientTheorem) && info.is_abelian {
            reports.push(check_quotient_theorem(g, gname, &info.set, &subgroups, deadline));
        }
        if wants(ClaimId::OrderLemma) {
            reports.push(check_order_lemma(g, gname, &info.set));
        }
        if wants(ClaimId::DoubleCosetDifference) {
            reports.push(check_double_coset_difference(g, gname, &info.set));
        }
    }
    if wants(ClaimId::IdentityClassNormal) && !deadline.expired() {
        reports.push(check_identity_class_normal(g, gname));
    }
    if wants(ClaimId::ConjSpecialization) && !deadline.expired() {
        reports.push(check_conj_specialization(g, gname));
    }
    if wants(ClaimId::SecondIso) || wants(ClaimId::ThirdIso) {
        let mut pairs = 0;
        'pairs: for h in &subgroups {
            for k in &subgroups {
                if pairs >= budgets.pair_cap {
                    break 'pairs;
                }
                if deadline.expired() {
                    truncated = true;
                    break 'pairs;
                }
                pairs += 1;
                if wants(ClaimId::SecondIso) {
                    reports.push(check_second_iso(g, gname, &h.set, &k.set, deadline));
                }
                if wants(ClaimId::ThirdIso) {
                    reports.push(check_third_iso(g, gname, &h.set, &k.set, deadline));
                }
            }
        }
    }
    if deadline.expired() {
        truncated = true;
    }
    // deterministic order: claim code, then subgroup, then second subgroup
    reports.sort_by(|a, b| {
        a.claim
            .cmp(&b.claim)
            .then_with(|| a.subgroup.cmp(&b.subgroup))
            .then_with(|| a.second_subgroup.cmp(&b.second_subgroup))
    });
    Ok(ClaimRun { reports, truncated })
}

/// Rebases parent-group indices into subgroup-local indices via the map
/// returned by `subgroup_as_group`.
fn relabel_into(back: &[usize], subset: &ElementSet) -> ElementSet {
    let mut out: Vec<usize> = subset
        .elems()
        .iter()
        .map(|&x| back.iter().position(|&m| m == x).expect("subset of view"))
        .collect();
    out.sort_unstable();
    ElementSet::from_sorted_unchecked(out)
}
