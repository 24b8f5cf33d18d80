//! Cyclic graphs, commuting graphs, and enhanced power graphs of finite
//! groups, with an enumerator for Z-groups (groups whose Sylow subgroups are
//! all cyclic) and an executable checker for the structural theorems that
//! relate the cyclic graph of a Z-group to its center, its Frobenius
//! structure, and its dominating vertices.
//!
//! Groups are multiplication tables ([`FiniteGroup`]); graphs are bit-row
//! adjacency matrices over element indices ([`Graph`]).

pub mod arith;
pub mod bitset;
pub mod cli;
pub mod graphs;
pub mod io;
pub mod kernel;
pub mod structure;
pub mod verifier;
pub mod zgen;

pub use graphs::{DiameterResult, Graph, GraphKind};
pub use kernel::{Elem, ElemSet, FiniteGroup, GroupConfig, PairMode, Permutation, IDENTITY};
pub use structure::FrobeniusResult;
pub use verifier::{GroupReport, SuiteReport, TheoremId};
pub use zgen::ZParams;
