//! Solvers, kernels and instance transformers for *secluded* graph problems.
//!
//! A secluded solution is a vertex set whose neighborhood is small: either the
//! closed neighborhood `N[S]` fits a budget `k`, or (for the *small secluded*
//! variants) `|S| <= k` and the open neighborhood `N(S)` fits a second budget
//! `ell`. The crate covers separators, q-dominating sets, F-free vertex
//! deletion, feedback vertex set and independent set, and ships an exhaustive
//! oracle for every problem so each solver and kernel can be cross-checked at
//! desk scale.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod connectivity;
pub mod domset;
pub mod error;
pub mod ffvd;
pub mod fvs;
pub mod graph;
pub mod hitting_set;
pub mod oracle;
pub mod reductions;
pub mod report;
pub mod separator;
mod subsets;

pub use error::Error;
pub use graph::{Graph, VertexSet};
pub use report::{Answer, KernelOutcome, SolutionReport, Verdict};

pub type Result<T, E = Error> = core::result::Result<T, E>;
