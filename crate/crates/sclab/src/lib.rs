//! sclab: a laboratory for finite groups and their sandwich class partitions.
//!
//! A finite group is an order-`n` Cayley table ([`Group`]). Over a subgroup
//! `H`, every element `a` gets a *sandwich class* `{x a x : x in H}` (the
//! *self-class* when `H` is abelian) and a *conjugacy self-class*
//! `{x^-1 a x : x in H}`. The deduplicated collection of classes is a
//! [`ClassFamily`]; when its blocks multiply setwise back onto blocks, they
//! form a [`ClassGroup`], which drives the classification of subgroups as
//! faithful and of groups as R-groups or non-R groups.
//!
//! The crate also ships mechanical checkers for the structural claims about
//! these constructions ([`claims`]), a deterministic small-group catalog
//! with scan reports ([`catalog`], [`report`]), parsers for group
//! expressions and table/permutation files ([`parse`]), and a thin CLI
//! ([`cli`]). The `examples/` directory demonstrates each capability as a
//! runnable program.
//!
//! Everything is immutable after construction and all operations are pure
//! functions, so values can be shared freely across threads.

pub mod budget;
pub mod catalog;
pub mod claims;
pub mod classes;
pub mod cli;
pub mod error;
pub mod families;
pub mod group;
pub mod iso;
pub mod parse;
pub mod perm;
pub mod report;
pub mod subgroup;

pub use budget::{Budgets, Deadline};
pub use classes::{ClassFamily, ClassGroup, ClassKind, FamilyRefusal};
pub use error::GroupError;
pub use group::Group;
pub use iso::{are_isomorphic, IsoOutcome, IsoWitness};
pub use parse::{parse_cayley_file, parse_group_expr, parse_perm_gens, GroupExpr};
pub use subgroup::{ElementSet, Side, SubgroupInfo};
