//! Finite group toolkit: build concrete groups from a small spec language,
//! enumerate their subgroup lattices, construct intersection graphs (vertices
//! are the proper nontrivial subgroups, edges join subgroups sharing a
//! non-identity element), and search those graphs for complete bipartite or
//! complete subgraphs with explicit witnesses.
//!
//! The [`catalog`] module ties everything together: it generates every member
//! of the catalog of K33-free group families up to an order bound, classifies
//! each one, and checks a curated corpus of groups expected to contain K3,3.

pub mod arith;
pub mod bitset;
pub mod build;
pub mod catalog;
pub mod error;
pub mod forbidden;
pub mod group;
pub mod igraph;
pub mod iso;
pub mod lattice;
pub mod spec;

pub use bitset::ElemSet;
pub use error::Error;
pub use forbidden::{find_clique, find_complete_bipartite, is_k33_free, PatternWitness};
pub use group::FiniteGroup;
pub use igraph::IntersectionGraph;
pub use lattice::{Subgroup, SubgroupLattice};
pub use spec::GroupSpec;

/// Resource guards. Exceeding a guard is an explicit error, never silent
/// truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order that may be built.
    pub max_group_order: usize,
    /// Largest number of subgroups a lattice enumeration may produce.
    pub max_subgroups: usize,
    /// Largest order accepted by the isomorphism backtracker.
    pub max_iso_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: 5000,
            max_subgroups: 20_000,
            max_iso_order: 512,
        }
    }
}
