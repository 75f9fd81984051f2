//! Inverse graph partitioning for room allocation.
//!
//! Every node of an undirected relation network is placed into one of `K`
//! rooms of uniform capacity `S = ⌈|V|/K⌉` so that the number of links with
//! both endpoints in the same room (intra-room links) is as small as
//! possible.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the record
//! CSV reader and the command-line front end live in the `roomalloc` crate.
//!
//! Room indices are 0-based throughout this crate; the IO layer renders them
//! 1-based.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod graph;
pub mod instances;
pub mod partition;
pub mod solvers;

pub use error::Error;
pub use graph::{build_graph, stats, AvgDegree, Graph, GraphStats};
pub use partition::{
    capacity_for, delta_move, neighbors_in_room, objective, validate, Assignment, MoveDelta,
    ObjectiveReport, RoomState, Violation,
};
pub use solvers::{
    curve, exact, exact_with_bound, hfa, lga, random_baseline, AdjustPlan, CurvePoint,
    ExactOutcome, LgaOutcome, MoveRecord, SolverConfig, SolverOutcome, StopReason,
    DEFAULT_EXACT_BOUND,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
