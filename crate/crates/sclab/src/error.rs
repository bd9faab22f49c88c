//! Error types shared across the crate.

use thiserror::Error;

/// Row/column axis of a multiplication table, used in Latin-square witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Col,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axis::Row => write!(f, "row"),
            Axis::Col => write!(f, "column"),
        }
    }
}

/// Failures of group construction, validation, and the operations built on top.
///
/// Every structural failure carries a concrete witness so callers can replay it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table entry at ({row}, {col}) is {value}, outside 0..{order}")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("{axis} {index} is not a permutation: value {value} appears at positions {first} and {second}")]
    NotLatinSquare {
        axis: Axis,
        index: usize,
        value: usize,
        first: usize,
        second: usize,
    },

    #[error("associativity fails: ({a} * {b}) * {c} != {a} * ({b} * {c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("no two-sided identity element")]
    NoIdentity,

    #[error("element {elem} has no two-sided inverse")]
    NoInverse { elem: usize },

    #[error("element name {name:?} is empty or duplicated")]
    BadName { name: String },

    #[error("expected {expected} element names, got {got}")]
    NameCountMismatch { expected: usize, got: usize },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("not a subgroup: identity is missing from the set")]
    SubgroupMissingIdentity,

    #[error("not a subgroup: {a} * {b} = {product} falls outside the set")]
    SubgroupNotClosed { a: usize, b: usize, product: usize },

    #[error("subgroup is not normal: {conjugator}^-1 would map {member} to {conjugate}, outside the set")]
    NotNormal {
        conjugator: usize,
        member: usize,
        conjugate: usize,
    },

    #[error("self-class families require an abelian subgroup")]
    SelfClassOverNonabelianH,

    #[error("setwise product of an empty block")]
    EmptyBlock,

    #[error("order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("invalid parameter {param} for {family}")]
    InvalidParameter { family: &'static str, param: usize },

    #[error("{what} exceeded its time budget")]
    BudgetExceeded { what: &'static str },
}
