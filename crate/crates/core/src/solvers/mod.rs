//! Room allocation solvers.
//!
//! * [`hfa`]: hub-first global assignment.
//! * [`lga`]: budgeted local greedy relocation from an existing assignment,
//!   and [`curve`], which samples the objective after every move.
//! * [`exact`]: exhaustive optimum for small instances.
//! * [`random_baseline`]: a random balanced assignment.
//!
//! All randomness comes from a ChaCha8 stream seeded by the caller, so a run
//! is fully determined by its inputs.

mod baseline;
mod exact;
mod hfa;
mod lga;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use alloc::vec::Vec;

use crate::partition::Assignment;
pub use crate::partition::MoveRecord;
pub use baseline::random_baseline;
pub use exact::{exact, exact_with_bound, ExactOutcome, DEFAULT_EXACT_BOUND};
pub use hfa::hfa;
pub use lga::{curve, lga, LgaOutcome, StopReason};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub rooms: usize,
    /// Seed for tie-breaking.
    pub seed: u64,
}

impl SolverConfig {
    pub fn new(rooms: usize, seed: u64) -> Self {
        SolverConfig { rooms, seed }
    }
}

/// Budget and stopping policy for [`lga`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjustPlan {
    /// Maximum number of relocations; also the queue length.
    pub budget: usize,
    /// Stop once the best queued move would not reduce the objective.
    pub stop_on_no_gain: bool,
    /// Let nodes that were already moved re-enter the queue.
    pub allow_reentry: bool,
}

impl AdjustPlan {
    pub fn new(budget: usize) -> Self {
        AdjustPlan {
            budget,
            stop_on_no_gain: true,
            allow_reentry: false,
        }
    }
}

/// Objective after a number of relocations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    pub adjustments_done: usize,
    pub objective: usize,
}

/// A finished assignment together with the step-by-step log that built it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverOutcome {
    pub assignment: Assignment,
    pub moves: Vec<MoveRecord>,
}

pub(crate) fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Minimum by key with a uniform random choice among equal keys. Ties are
/// collected and one draw is made at the end; a unique minimum uses no
/// randomness. `clear` keeps the allocation for reuse.
pub(crate) struct RandomArgMin<T> {
    key: i64,
    ties: Vec<T>,
}

impl<T: Copy> RandomArgMin<T> {
    pub(crate) fn new() -> Self {
        RandomArgMin {
            key: i64::MAX,
            ties: Vec::new(),
        }
    }

    pub(crate) fn clear(&mut self) {
        self.key = i64::MAX;
        self.ties.clear();
    }

    pub(crate) fn offer(&mut self, key: i64, item: T) {
        if self.ties.is_empty() || key < self.key {
            self.key = key;
            self.ties.clear();
            self.ties.push(item);
        } else if key == self.key {
            self.ties.push(item);
        }
    }

    pub(crate) fn pick<R: Rng>(&self, rng: &mut R) -> Option<(i64, T)> {
        let i = match self.ties.len() {
            0 => return None,
            1 => 0,
            len => rng.gen_range(0..len),
        };
        Some((self.key, self.ties[i]))
    }
}
