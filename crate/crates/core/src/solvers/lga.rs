use alloc::vec::Vec;

use super::{seeded_rng, AdjustPlan, CurvePoint, RandomArgMin};
use crate::graph::Graph;
use crate::partition::{validate, Assignment, MoveRecord, RoomState};
use crate::{Error, Result};

/// Why an [`lga`] run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    /// All `budget` relocations were executed.
    BudgetExhausted,
    /// The best queued relocation would not lower the objective.
    NoImprovingMove,
    /// Every room a queued node could move to is full.
    NoFeasibleMove,
    /// No candidates left to queue.
    QueueEmpty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LgaOutcome {
    pub assignment: Assignment,
    pub moves: Vec<MoveRecord>,
    pub stop: StopReason,
    pub initial_objective: usize,
    pub final_objective: usize,
}

/// Local greedy assignment: at most `plan.budget` single-node relocations
/// from a feasible starting assignment.
///
/// A queue holds the `budget` nodes with the most same-room neighbors. Each
/// step evaluates every queued node against every other room with free
/// capacity and executes the relocation with the smallest
/// `|Γ_target(v)| - |Γ_source(v)|` (ties broken at random). The moved node
/// leaves the queue and the node with the most same-room neighbors among
/// those neither queued nor moved (identifier order on ties) takes its place.
///
/// A step costs `O(Σ_{v∈Q} deg(v) + |Q|·K + |V|)`.
pub fn lga(g: &Graph, start: &Assignment, plan: &AdjustPlan, seed: u64) -> Result<LgaOutcome> {
    let violations = validate(g, start);
    if !violations.is_empty() {
        return Err(Error::InvalidAssignment(violations));
    }
    let mut st = RoomState::new(g, start)?;
    let initial_objective = st.intra_links();
    let mut rng = seeded_rng(seed);
    let n = g.node_count();
    let rooms = st.room_count();
    let mut moves = Vec::new();

    let mut queue: Vec<usize> = (0..n).collect();
    queue.sort_by(|&a, &b| {
        st.internal_degree(b)
            .cmp(&st.internal_degree(a))
            .then(a.cmp(&b))
    });
    queue.truncate(plan.budget.min(n));
    let mut queued = alloc::vec![false; n];
    for &v in &queue {
        queued[v] = true;
    }
    let mut retired = alloc::vec![false; n];
    let mut counts = alloc::vec![0usize; rooms];
    let mut open = Vec::with_capacity(rooms);
    let mut best = RandomArgMin::new();

    let stop = loop {
        if moves.len() >= plan.budget {
            break StopReason::BudgetExhausted;
        }
        if queue.is_empty() {
            break StopReason::QueueEmpty;
        }
        open.clear();
        open.extend((0..rooms).filter(|&k| !st.is_full(k)));

        best.clear();
        for (slot, &v) in queue.iter().enumerate() {
            let from = st.room_of(v);
            if open.iter().all(|&k| k == from) {
                continue;
            }
            for &w in g.neighbors(v) {
                counts[st.room_of(w)] += 1;
            }
            let own = st.internal_degree(v) as i64;
            for &k in &open {
                if k != from {
                    best.offer(counts[k] as i64 - own, (slot, v, k));
                }
            }
            for &w in g.neighbors(v) {
                counts[st.room_of(w)] = 0;
            }
        }

        let (delta, (slot, v, room)) = match best.pick(&mut rng) {
            None => break StopReason::NoFeasibleMove,
            Some((d, _)) if plan.stop_on_no_gain && d >= 0 => break StopReason::NoImprovingMove,
            Some(b) => b,
        };
        let record = st.apply(v, room)?;
        debug_assert_eq!(record.delta, delta);
        moves.push(record);

        queue.remove(slot);
        queued[v] = false;
        if !plan.allow_reentry {
            retired[v] = true;
        }
        let refill = (0..n)
            .filter(|&u| !queued[u] && !retired[u])
            .min_by(|&a, &b| {
                st.internal_degree(b)
                    .cmp(&st.internal_degree(a))
                    .then(a.cmp(&b))
            });
        if let Some(u) = refill {
            queued[u] = true;
            queue.push(u);
        }
    };

    Ok(LgaOutcome {
        assignment: st.to_assignment(),
        final_objective: st.intra_links(),
        initial_objective,
        moves,
        stop,
    })
}

/// Objective after each relocation of a single [`lga`] run with budget
/// `max_moves`, starting with the point `(0, f(start))`.
pub fn curve(
    g: &Graph,
    start: &Assignment,
    max_moves: usize,
    seed: u64,
) -> Result<Vec<CurvePoint>> {
    let out = lga(g, start, &AdjustPlan::new(max_moves), seed)?;
    let mut f = out.initial_objective as i64;
    let mut points = Vec::with_capacity(out.moves.len() + 1);
    points.push(CurvePoint {
        adjustments_done: 0,
        objective: out.initial_objective,
    });
    for (i, m) in out.moves.iter().enumerate() {
        f += m.delta;
        points.push(CurvePoint {
            adjustments_done: i + 1,
            objective: f as usize,
        });
    }
    Ok(points)
}
