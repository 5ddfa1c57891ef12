//! Exact algorithms for the network untangling problems on temporal graphs.
//!
//! Given a temporal graph (a vertex set with one edge set per time step), an
//! activity timeline assigns at most `k` time intervals to every vertex so
//! that each time-edge has an endpoint active at its time step. Two
//! objectives bound the interval lengths: the maximum length
//! ([`ObjectiveKind::MaxLen`]) or the total length ([`ObjectiveKind::SumLen`]).
//!
//! Solvers:
//! - [`oracle`]: exhaustive edge-driven search, the reference for everything else.
//! - [`dp`]: layer-by-layer dynamic programs for both objectives.
//! - [`branch`]: bounded search tree for the max objective.
//! - [`layerzero`]: integer feasibility search for zero-length intervals,
//!   plus the bridge to `(a:b)`-colorings.
//! - [`patterns`]: long-interval pattern enumeration with a zero-length completion.
//! - [`reductions`]: instance constructions between related problems.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod branch;
pub mod dp;
mod error;
pub mod graph;
pub mod layerzero;
pub mod oracle;
pub mod patterns;
pub mod reductions;
pub mod timeline;

pub use crate::error::Error;
pub use crate::graph::{permute_layers, Edge, StaticGraph, TemporalGraph, Vertex};
pub use crate::timeline::{
    objective_value, verify_timeline, BudgetSpec, Interval, Objective, ObjectiveKind,
    SolveOutcome, Timeline, Verdict, Violation,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
